//! Univariate polynomials over `Z` and their factorization.
//!
//! An [`IntPolynomial`] stores ascending coefficients with no trailing zeros.
//! The ordering on polynomials (degree first, then coefficients compared
//! from the constant term up) is the canonical order used for polynomial
//! atoms of the monoid `C`.

mod factor;
mod modp;
mod text;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::{factor, factor_in_c, squarefree_decomposition, Factorization};

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &IntPolynomial, b: &IntPolynomial, op: PolyOp) -> IntPolynomial {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Membership in the monoid `C`: nonzero with positive leading coefficient.
    pub fn in_c(&self) -> bool {
        self.leading().is_some_and(Signed::is_positive)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// gcd of the coefficients, always nonnegative.
    pub fn content(&self) -> BigUint {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
            .magnitude()
            .clone()
    }

    /// Splits `p = sign · content · primitive` with a primitive part of
    /// positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(BigUint, Sign, IntPolynomial)> {
        let lead = self.leading().ok_or(Error::ZeroContent)?;
        let content = self.content();
        let mut div = BigInt::from_biguint(Sign::Plus, content.clone());
        let sign = lead.sign();
        if sign == Sign::Minus {
            div = -div;
        }
        let prim = Self::new(self.coeffs.iter().map(|c| c / &div).collect());
        Ok((content, sign, prim))
    }

    pub fn primitive_part(&self) -> Result<IntPolynomial> {
        self.content_primitive().map(|(_, _, p)| p)
    }

    /// Exact division over `Z[t]`. Returns `None` if `d` does not divide
    /// `self` or `d` is zero.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = d.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^(deg self - deg d + 1) · self mod d`.
    fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let Some(dd) = d.degree() else {
            return self.clone();
        };
        let lead = d.leading().cloned().unwrap_or_default();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.coeffs[rd].clone();
            let shifted = Self::monomial(top, rd - dd);
            rem = &rem.scale(&lead) - &(&shifted * d);
        }
        rem
    }

    /// Greatest common divisor in `Z[t]`, normalized to a positive leading
    /// coefficient. Primitive remainder sequence.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let c = BigInt::from(self.content().gcd(&other.content()));
        let mut a = self.primitive_part().unwrap_or_default();
        let mut b = other.primitive_part().unwrap_or_default();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part().unwrap_or_default() };
        }
        a.scale(&c).normalize_sign()
    }

    fn normalize_sign(&self) -> IntPolynomial {
        if self.leading().is_some_and(Signed::is_negative) {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}
