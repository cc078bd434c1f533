use alloc::sync::Arc;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::atom::Alphabet;
use super::ring::{Assignment, RingElement, RingOp};
use super::word::MonoidWord;
use crate::error::{Error, Result};

/// An element of the fraction field of `Z[G]`.
///
/// Fractions are reduced by the integer content and by the common word
/// factor of numerator and denominator only; no multivariate gcd is taken.
/// Equality is decided by cross-multiplication, so unreduced representatives
/// of the same fraction compare equal.
#[derive(Clone, Debug)]
pub struct FieldElement {
    num: RingElement,
    den: RingElement,
}

impl FieldElement {
    pub fn new(num: RingElement, den: RingElement) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        num.try_add(&RingElement::zero(den.alphabet().clone()))?;
        Ok(Self::normalized(num, den))
    }

    pub fn from_ring(r: RingElement) -> Self {
        let den = RingElement::one(r.alphabet().clone());
        FieldElement { num: r, den }
    }

    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        Self::from_ring(RingElement::zero(alphabet))
    }

    pub fn one(alphabet: Arc<Alphabet>) -> Self {
        Self::from_ring(RingElement::one(alphabet))
    }

    pub fn numerator(&self) -> &RingElement {
        &self.num
    }

    pub fn denominator(&self) -> &RingElement {
        &self.den
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.num.alphabet()
    }

    /// Zero iff the numerator is zero; `Z[C]` has no zero divisors.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The ring element this fraction equals, if the denominator divides the
    /// numerator.
    pub fn to_ring(&self) -> Option<RingElement> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            super::exact_divide(&self.num, &self.den).ok()
        }
    }

    fn normalized(num: RingElement, den: RingElement) -> Self {
        if num.is_zero() {
            return FieldElement { den: RingElement::one(num.alphabet().clone()), num };
        }
        let content = BigInt::from_biguint(Sign::Plus, {
            let g = num.content();
            num_integer::Integer::gcd(&g, &den.content())
        });
        let word = match (num.word_gcd(), den.word_gcd()) {
            (Some(a), Some(b)) => a.gcd(&b),
            _ => MonoidWord::one(),
        };
        let (mut num, mut den) = if content.is_one() && word.is_one() {
            (num, den)
        } else {
            (num.divide_monomial(&content, &word), den.divide_monomial(&content, &word))
        };
        if den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        FieldElement { num, den }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.den == other.den {
            return Ok(Self::normalized(self.num.try_add(&other.num)?, self.den.clone()));
        }
        let num = self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?;
        Ok(Self::normalized(num, self.den.try_mul(&other.den)?))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(Self::normalized(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.num.try_mul(&other.den)?, self.den.try_mul(&other.num)?))
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational> {
        let d = self.den.evaluate(assignment)?;
        if d.is_zero() {
            return Err(Error::UnluckyEvaluation);
        }
        Ok(self.num.evaluate(assignment)? / d)
    }
}

pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Ring(RingOp::Add) => a.try_add(b),
        FieldOp::Ring(RingOp::Sub) => a.try_sub(b),
        FieldOp::Ring(RingOp::Mul) => a.try_mul(b),
        FieldOp::Div => a.try_div(b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Ring(RingOp),
    Div,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (self.num.try_mul(&other.den), other.num.try_mul(&self.den)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl From<RingElement> for FieldElement {
    fn from(r: RingElement) -> Self {
        FieldElement::from_ring(r)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.len() > 1 {
            write!(f, " / ({})", self.den)
        } else {
            write!(f, " / {}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::IntPolynomial;
    use crate::monoid_ring::Atom;
    use alloc::string::ToString;

    fn basis(coeffs: &[i64]) -> FieldElement {
        let a = Atom::poly(IntPolynomial::from_i64s(coeffs)).unwrap();
        RingElement::from_word(Arc::new(Alphabet::MonoidC), MonoidWord::atom(a))
            .unwrap()
            .into()
    }

    fn one() -> FieldElement {
        FieldElement::one(Arc::new(Alphabet::MonoidC))
    }

    #[test]
    fn field_arith_examples() {
        let x = basis(&[1, 1]);
        let y = basis(&[-1, 1]);
        let q = field_arith(&x, &x, FieldOp::Div).unwrap();
        assert!(q.to_ring().unwrap().is_one());
        let inv_x = one().try_div(&x).unwrap();
        let two_over_x = inv_x.try_add(&inv_x).unwrap();
        assert_eq!(two_over_x.to_string(), "2 / [1+t]");
        let xy = x.try_div(&y).unwrap().try_mul(&y.try_div(&x).unwrap()).unwrap();
        assert!(xy.to_ring().unwrap().is_one());
        assert_eq!(field_arith(&x, &FieldElement::zero(x.alphabet().clone()), FieldOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn zero_tests() {
        let x = basis(&[1, 1]);
        let y = basis(&[-1, 1]);
        assert!(FieldElement::zero(x.alphabet().clone()).is_zero());
        assert!(!x.is_zero());
        let d = x.try_sub(&x).unwrap().try_div(&y).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn cross_multiplication_equality() {
        let x = basis(&[1, 1]);
        let y = basis(&[-1, 1]);
        let s = x.try_add(&y).unwrap();
        // (x + y)/(x·y)  ==  1/y + 1/x, though neither is gcd-reduced
        let lhs = s.try_div(&x.try_mul(&y).unwrap()).unwrap();
        let rhs = one().try_div(&y).unwrap().try_add(&one().try_div(&x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // (x^2 - y^2)/(x - y) == x + y by cross-multiplication only
        let num = x.try_mul(&x).unwrap().try_sub(&y.try_mul(&y).unwrap()).unwrap();
        let lhs = num.try_div(&x.try_sub(&y).unwrap()).unwrap();
        assert_eq!(lhs, s);
        assert_eq!(lhs.to_ring(), s.to_ring());
        assert!(one().try_div(&x).unwrap().to_ring().is_none());
    }

    #[test]
    fn denominator_sign_is_normalized() {
        let x = basis(&[1, 1]);
        let minus_x = x.neg();
        let f = one().try_div(&minus_x).unwrap();
        assert!(f.denominator().leading_term().unwrap().1.is_positive());
        assert_eq!(f.to_string(), "-1 / [1+t]");
    }
}
