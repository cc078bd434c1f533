//! `(k,0)` Hodge numbers of smooth projective varieties and the measure `Ψ_h`.
//!
//! Only the first column `h^{0,0}, …, h^{d,0}` of the Hodge diamond is kept;
//! it is all that `Ψ_h(X) = Σ h^{k,0}(X) t^k` needs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::integer::binomial;
use crate::intpoly::IntPolynomial;
use crate::monoid_ring::{embed_poly, MonoidWord};

/// `(h^{0,0}, …, h^{d,0})` of a connected smooth projective variety of
/// dimension `d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HodgeVector {
    h: Vec<BigUint>,
}

impl HodgeVector {
    pub fn new(h: Vec<BigUint>) -> Result<Self> {
        if h.first().is_none_or(|h0| !h0.is_one()) {
            return Err(Error::InvalidArgument("h^{0,0} must be 1".into()));
        }
        Ok(HodgeVector { h })
    }

    pub fn from_u64s(h: &[u64]) -> Result<Self> {
        Self::new(h.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn point() -> Self {
        HodgeVector { h: vec![BigUint::one()] }
    }

    pub fn projective(n: usize) -> Self {
        let mut h = vec![BigUint::zero(); n + 1];
        h[0] = BigUint::one();
        HodgeVector { h }
    }

    pub fn curve(genus: u64) -> Self {
        HodgeVector { h: vec![BigUint::one(), BigUint::from(genus)] }
    }

    pub fn surface(q: u64, pg: u64) -> Self {
        HodgeVector { h: vec![BigUint::one(), BigUint::from(q), BigUint::from(pg)] }
    }

    pub fn dim(&self) -> usize {
        self.h.len() - 1
    }

    pub fn h(&self) -> &[BigUint] {
        &self.h
    }

    /// `Σ_k h^{k,0} t^k`, an element of `C`.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.h.iter().map(|x| BigInt::from(x.clone())).collect())
    }
}

impl fmt::Display for HodgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.h.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Hodge vector of `X × Y`: convolution of the two vectors.
pub fn kunneth_product(a: &HodgeVector, b: &HodgeVector) -> HodgeVector {
    let mut h = vec![BigUint::zero(); a.h.len() + b.h.len() - 1];
    for (i, x) in a.h.iter().enumerate() {
        for (j, y) in b.h.iter().enumerate() {
            h[i + j] += x * y;
        }
    }
    HodgeVector { h }
}

/// `(k,0)` Hodge numbers of the symmetric power `X^(n)`: invariants of
/// `S_n` on `H^{•,0}(X^n)`, with the action twisted by the sign in odd
/// degrees. Computed as the coefficient of `s^n` in
/// `∏_{k even} (1 - t^k s)^{-h_k} · ∏_{k odd} (1 + t^k s)^{h_k}`.
pub fn sym_power(a: &HodgeVector, n: usize) -> HodgeVector {
    let d = a.dim();
    let width = n * d + 1;
    // table[j][k]: coefficient of s^j t^k
    let mut table = vec![vec![BigUint::zero(); width]; n + 1];
    table[0][0] = BigUint::one();
    for (k, hk) in a.h.iter().enumerate() {
        if hk.is_zero() {
            continue;
        }
        let hk = u64::try_from(hk).expect("Hodge numbers fit in u64 for symmetric powers");
        let factor: Vec<BigUint> = (0..=n as u64)
            .map(|i| if k % 2 == 0 { binomial(hk + i - 1, i) } else { binomial(hk, i) })
            .collect();
        let mut next = vec![vec![BigUint::zero(); width]; n + 1];
        for j in 0..=n {
            for t in 0..width {
                if table[j][t].is_zero() {
                    continue;
                }
                for (i, f) in factor.iter().enumerate().take(n - j + 1) {
                    if f.is_zero() {
                        continue;
                    }
                    let deg = t + k * i;
                    if deg < width {
                        next[j + i][deg] += &table[j][t] * f;
                    }
                }
            }
        }
        table = next;
    }
    HodgeVector { h: table.swap_remove(n) }
}

/// Largest `n` the permutation-sum oracle accepts.
pub const ORACLE_MAX_N: usize = 4;

/// Independent evaluation of [`sym_power`] by summing over all of `S_n`:
/// a permutation with cycle lengths `ℓ_1, …` contributes `∏ p_ℓ(t)` where
/// `p_ℓ(t) = Σ_k ε h_k t^{kℓ}` and `ε = (-1)^{ℓ-1}` in odd degree `k`.
pub fn brute_force_sym_invariants(a: &HodgeVector, n: usize) -> Result<HodgeVector> {
    if n > ORACLE_MAX_N {
        return Err(Error::BudgetExceeded { what: "oracle symmetric power", max: ORACLE_MAX_N, got: n });
    }
    let power_sum = |len: usize| -> IntPolynomial {
        let mut c = vec![BigInt::zero(); a.dim() * len + 1];
        for (k, hk) in a.h.iter().enumerate() {
            let mut v = BigInt::from(hk.clone());
            if k % 2 == 1 && len.is_multiple_of(2) {
                v = -v;
            }
            c[k * len] += v;
        }
        IntPolynomial::new(c)
    };
    let mut total = IntPolynomial::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    for_each_permutation(&mut perm, 0, &mut |p| {
        count += 1;
        let mut seen = vec![false; n];
        let mut term = IntPolynomial::one();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
                len += 1;
            }
            term = &term * &power_sum(len);
        }
        total = &total + &term;
    });
    let order = BigInt::from(count);
    let mut h: Vec<BigUint> = total
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!((c % &order).is_zero());
            (c / &order).to_biguint().expect("invariant dimensions are nonnegative")
        })
        .collect();
    h.resize(a.dim() * n + 1, BigUint::zero());
    Ok(HodgeVector { h })
}

fn for_each_permutation(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        for_each_permutation(p, k + 1, f);
        p.swap(k, i);
    }
}

/// `Ψ_h(X)`: the factored basis word of `1 + h^{1,0} t + … + h^{d,0} t^d`.
pub fn psi_h(a: &HodgeVector) -> MonoidWord {
    embed_poly(&a.polynomial()).expect("Hodge polynomials have constant term 1 and lie in C")
}

/// Geometric genus `P_g = h^{d,0}`.
pub fn pg(a: &HodgeVector) -> BigUint {
    a.h[a.dim()].clone()
}

/// `P_g(X^(n)) = C(r+n-1, r-1)` for `r = P_g(X)`. For `r = 0` this is `1`
/// at `n = 0` and `0` otherwise, matching the generating function.
pub fn pg_sym_formula(r: u64, n: u64) -> BigUint {
    if r == 0 {
        return if n == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(r + n - 1, r - 1)
}

/// `(k,0)` Hodge numbers of the Hilbert scheme `X^[n]` of a surface. Only
/// the summand of the partition `1^n` contributes `(k,0)` classes after the
/// Tate twists, so this equals [`sym_power`].
pub fn hilbert_scheme_h0(a: &HodgeVector, n: usize) -> Result<HodgeVector> {
    if a.dim() != 2 {
        return Err(Error::NotASurface(a.dim()));
    }
    Ok(sym_power(a, n))
}
