//! Small integer utilities: binomials, primality, and factorization of
//! polynomial contents into prime atoms.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller–Rabin with the first twelve prime bases. Deterministic below
/// 3.3·10^24, which covers every content this crate meets in practice.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in SMALL_PRIMES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'bases: for a in SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a positive integer, primes listed with
/// multiplicity in ascending order. `1` factors as the empty list.
pub fn factor_integer(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut rest = n.clone();
    let mut p = 2u32;
    while p < 10_000 && !rest.is_one() {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            out.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        split_large(rest, &mut out);
    }
    out.sort();
    out
}

fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(&n);
    split_large(&n / &d, out);
    split_large(d, out);
}

// Brent's variant; `n` is composite and odd with no factor below 10^4.
fn pollard_rho(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

pub(crate) fn small_primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&k| {
        let k = BigUint::from(k);
        is_prime(&k) && k.to_u64().is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 1), BigUint::from(4u32));
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0u32..2000 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(&BigUint::from(n)), trial, "n = {n}");
        }
    }

    #[test]
    fn factors_reassemble() {
        for n in [1u64, 6, 360, 1_000_003 * 999_983, 2u64.pow(40) * 3] {
            let f = factor_integer(&BigUint::from(n));
            let prod = f.iter().fold(BigUint::one(), |a, b| a * b);
            assert_eq!(prod, BigUint::from(n));
            assert!(f.iter().all(is_prime));
        }
    }
}
