//! Factorization over `Z`: content primes, Yun squarefree decomposition,
//! Berlekamp modulo a small prime, Hensel lifting and Zassenhaus subset
//! recombination.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{Fp, PolyP};
use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::integer::{factor_integer, small_primes_from};

/// Complete factorization `sign · ∏ primes · ∏ irreducibles` of a nonzero
/// integer polynomial. Both multisets are sorted in canonical order and
/// repeat entries according to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit_sign: Sign,
    pub content_primes: Vec<BigUint>,
    pub irreducible_factors: Vec<IntPolynomial>,
}

impl Factorization {
    pub fn product(&self) -> IntPolynomial {
        let mut c = BigInt::from_biguint(Sign::Plus, self.content_primes.iter().product());
        if self.unit_sign == Sign::Minus {
            c = -c;
        }
        self.irreducible_factors
            .iter()
            .fold(IntPolynomial::constant(c), |acc, f| &acc * f)
    }

    pub fn is_empty(&self) -> bool {
        self.content_primes.is_empty() && self.irreducible_factors.is_empty()
    }
}

/// Factorization of an element of the monoid `C`. Zero and polynomials
/// with negative leading coefficient are rejected rather than negated.
pub fn factor_in_c(p: &IntPolynomial) -> Result<Factorization> {
    if !p.in_c() {
        return Err(Error::NotInC(format!("{p}")));
    }
    factor(p)
}

/// Factorization of any nonzero polynomial.
pub fn factor(p: &IntPolynomial) -> Result<Factorization> {
    let (content, unit_sign, prim) = p.content_primitive()?;
    let content_primes = factor_integer(&content);
    let mut irreducible_factors = Vec::new();
    if prim.degree().is_some_and(|d| d > 0) {
        for (part, mult) in squarefree_decomposition(&prim) {
            for g in factor_squarefree(&part) {
                irreducible_factors.extend(core::iter::repeat_n(g, mult));
            }
        }
    }
    irreducible_factors.sort();
    Ok(Factorization { unit_sign, content_primes, irreducible_factors })
}

impl IntPolynomial {
    pub fn is_irreducible(&self) -> bool {
        factor(self)
            .is_ok_and(|f| f.irreducible_factors.len() + f.content_primes.len() == 1)
    }
}

/// Yun's algorithm on a primitive polynomial with positive leading
/// coefficient: returns `(g_i, i)` with `f = ∏ g_i^i`, each `g_i`
/// squarefree, primitive and nonconstant.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.clone(), i));
        }
        let next_b = b.div_exact(&a).expect("gcd divides b");
        let next_c = d.div_exact(&a).expect("gcd divides d");
        d = &next_c - &next_b.derivative();
        b = next_b;
        i += 1;
    }
    out
}

const PRIME_CANDIDATES: usize = 5;

fn factor_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.leading().cloned().unwrap_or_default();

    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes_from(3) {
        if tried == PRIME_CANDIDATES {
            break;
        }
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp { p };
        let fbar = fp.reduce(f);
        if !fp.is_squarefree(&fbar) {
            continue;
        }
        tried += 1;
        let modular = fp.berlekamp(&fp.monic(&fbar));
        if best.as_ref().is_none_or(|(_, b)| modular.len() < b.len()) {
            best = Some((fp, modular));
        }
        if best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (fp, modular) = best.expect("some prime keeps f squarefree");
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Factor coefficients are bounded by sqrt(n+1)·2^n·max|f_i|; the extra lc
    // accounts for the leading coefficient multiplied into each candidate.
    let max_coeff = f.coeffs().iter().map(|c| c.magnitude().clone()).max().unwrap_or_default();
    let sqrt = BigUint::from(n + 1).sqrt() + 1u32;
    let bound = sqrt * (BigUint::one() << n) * max_coeff * lc.magnitude();
    let p_big = BigUint::from(fp.p);
    let mut k = 1u32;
    let mut modulus = p_big.clone();
    while modulus <= &bound * 2u32 {
        modulus *= &p_big;
        k += 1;
    }
    let modulus = BigInt::from_biguint(Sign::Plus, modulus);

    let lifted = hensel_lift(f, &modular, fp, k, &modulus);
    recombine(f, lifted, &modulus)
}

fn to_int(a: &[u64]) -> IntPolynomial {
    IntPolynomial::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

fn reduce_mod(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric_mod(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f ≡ lc(f) · ∏ factors (mod p)` to monic factors modulo `p^k`.
fn hensel_lift(
    f: &IntPolynomial,
    factors: &[PolyP],
    fp: Fp,
    k: u32,
    modulus: &BigInt,
) -> Vec<IntPolynomial> {
    let mut out = Vec::with_capacity(factors.len());
    let mut rest = reduce_mod(f, modulus);
    for (i, g0) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            let lc = rest.leading().cloned().unwrap_or_default();
            out.push(reduce_mod(&rest.scale(&mod_inverse(&lc, modulus)), modulus));
            break;
        }
        let lc_bar = fp.reduce(&IntPolynomial::constant(rest.leading().cloned().unwrap_or_default()));
        let h0 = factors[i + 1..]
            .iter()
            .fold(lc_bar, |acc, u| fp.mul(&acc, u));
        let (g, h) = lift_pair(&rest, g0, &h0, fp, k, modulus);
        out.push(g);
        rest = h;
    }
    out
}

// Linear lifting one p-adic digit at a time; `g0` monic, `f ≡ g0·h0 (mod p)`.
fn lift_pair(
    f: &IntPolynomial,
    g0: &[u64],
    h0: &[u64],
    fp: Fp,
    k: u32,
    modulus: &BigInt,
) -> (IntPolynomial, IntPolynomial) {
    let (s, t) = fp.bezout(g0, h0);
    let mut g = to_int(g0);
    let mut h = to_int(h0);
    let p = BigInt::from(fp.p);
    let mut pj = p.clone();
    for _ in 1..k {
        let diff = f - &(&g * &h);
        let e_int = IntPolynomial::new(diff.coeffs().iter().map(|c| c / &pj).collect());
        let e = fp.reduce(&e_int);
        if !e.is_empty() {
            let (q, r) = fp.div_rem(&fp.mul(&t, &e), g0);
            let dh = fp.add(&fp.mul(&e, &s), &fp.mul(&q, h0));
            g = &g + &to_int(&r).scale(&pj);
            h = &h + &to_int(&dh).scale(&pj);
        }
        pj *= &p;
    }
    (reduce_mod(&g, modulus), reduce_mod(&h, modulus))
}

fn recombine(f: &IntPolynomial, lifted: Vec<IntPolynomial>, modulus: &BigInt) -> Vec<IntPolynomial> {
    let mut remaining: Vec<IntPolynomial> = lifted;
    let mut current = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = current.leading().cloned().unwrap_or_default();
        for subset in Subsets::new(remaining.len(), size) {
            let prod = subset
                .iter()
                .fold(IntPolynomial::constant(lc.clone()), |acc, &i| &acc * &remaining[i]);
            let candidate = symmetric_mod(&prod, modulus);
            let Ok(candidate) = candidate.primitive_part() else {
                continue;
            };
            if let Some(quot) = current.div_exact(&candidate) {
                found.push(candidate);
                current = quot;
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.degree().is_some_and(|d| d > 0) {
        found.push(current.primitive_part().expect("nonzero"));
    }
    found
}

/// Lexicographic enumeration of `size`-subsets of `0..n`.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, size: usize) -> Self {
        Subsets { n, idx: (0..size).collect(), done: size > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
