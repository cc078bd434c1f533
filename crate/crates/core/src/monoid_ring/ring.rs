use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::atom::{Alphabet, Atom};
use super::word::MonoidWord;
use crate::error::{Error, Result};

/// Rational values for atoms, used by [`RingElement::evaluate`].
pub type Assignment = BTreeMap<Atom, BigRational>;

/// An element of `Z[G]`: a finite integer combination of words.
///
/// Terms are kept in a `BTreeMap` under the graded word order, so the last
/// entry is the leading term. Arithmetic through the `std::ops` traits
/// panics on alphabet mismatch; the `try_*` methods report it instead.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingElement {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<MonoidWord, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

pub fn ring_arith(a: &RingElement, b: &RingElement, op: RingOp) -> Result<RingElement> {
    match op {
        RingOp::Add => a.try_add(b),
        RingOp::Sub => a.try_sub(b),
        RingOp::Mul => a.try_mul(b),
    }
}

impl RingElement {
    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        RingElement { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Arc<Alphabet>) -> Self {
        Self::from_int(alphabet, BigInt::one())
    }

    pub fn from_int(alphabet: Arc<Alphabet>, c: impl Into<BigInt>) -> Self {
        let mut r = Self::zero(alphabet);
        r.add_term(MonoidWord::one(), c.into());
        r
    }

    pub fn from_word(alphabet: Arc<Alphabet>, w: MonoidWord) -> Result<Self> {
        Self::term(alphabet, BigInt::one(), w)
    }

    pub fn term(alphabet: Arc<Alphabet>, c: BigInt, w: MonoidWord) -> Result<Self> {
        w.check(&alphabet)?;
        let mut r = Self::zero(alphabet);
        r.add_term(w, c);
        Ok(r)
    }

    pub fn from_terms(
        alphabet: Arc<Alphabet>,
        terms: impl IntoIterator<Item = (MonoidWord, BigInt)>,
    ) -> Result<Self> {
        let mut r = Self::zero(alphabet);
        for (w, c) in terms {
            w.check(&r.alphabet)?;
            r.add_term(w, c);
        }
        Ok(r)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.first_key_value().is_some_and(|(w, c)| w.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MonoidWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &MonoidWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&MonoidWord, &BigInt)> {
        self.terms.last_key_value()
    }

    /// The single word of a basis element `1·[w]`, if that is what this is.
    pub fn as_word(&self) -> Option<&MonoidWord> {
        match self.terms.first_key_value() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.terms.keys().flat_map(|w| w.atoms().cloned()).collect()
    }

    fn add_term(&mut self, w: MonoidWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_alphabet(&self, other: &RingElement) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!("{:?} vs {:?}", self.alphabet, other.alphabet)))
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_alphabet(other)?;
        let mut out = RingElement::zero(self.alphabet.clone());
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa * wb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        let mut out = RingElement::zero(self.alphabet.clone());
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect();
        out
    }

    pub fn mul_word(&self, w: &MonoidWord) -> RingElement {
        RingElement {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(v, c)| (v * w, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> RingElement {
        let mut acc = RingElement::one(self.alphabet.clone());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// gcd of all coefficients; zero for the zero element.
    pub fn content(&self) -> BigUint {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
            .magnitude()
            .clone()
    }

    /// Componentwise minimum of the exponent vectors of all terms.
    pub fn word_gcd(&self) -> Option<MonoidWord> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |g, w| g.gcd(w)))
    }

    /// Divides every coefficient by `c` and every word by `w`; both must
    /// divide exactly.
    pub(crate) fn divide_monomial(&self, c: &BigInt, w: &MonoidWord) -> RingElement {
        RingElement {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(v, a)| (v.checked_div(w).expect("word divides"), a / c))
                .collect(),
        }
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational> {
        let mut cache: BTreeMap<&Atom, &BigRational> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (w, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (a, e) in w.iter() {
                let x = match cache.get(a) {
                    Some(x) => *x,
                    None => {
                        let x = assignment
                            .get(a)
                            .ok_or_else(|| Error::MissingAssignment(format!("{a}")))?;
                        cache.insert(a, x);
                        x
                    }
                };
                let e = i32::try_from(e).map_err(|_| Error::InvalidArgument(format!("exponent {e}")))?;
                v *= num_traits::pow::Pow::pow(x, e);
            }
            total += v;
        }
        Ok(total)
    }
}

/// Exact quotient `a / b` in `Z[G]` by multivariate division under the graded
/// word order. Fails if `b` is zero or does not divide `a`.
pub fn exact_divide(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.same_alphabet(b)?;
    let (lead_w, lead_c) = b.leading_term().ok_or(Error::DivisionByZero)?;
    if let Some(w) = b.as_word() {
        if w.is_one() {
            return Ok(a.clone());
        }
    }
    let mut rem = a.clone();
    let mut quot = RingElement::zero(a.alphabet.clone());
    while let Some((rw, rc)) = rem.leading_term() {
        let w = rw
            .checked_div(lead_w)
            .ok_or_else(|| Error::InexactDivision(format!("{rw} not divisible by {lead_w}")))?;
        let (c, r) = rc.div_rem(lead_c);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("{rc} not divisible by {lead_c}")));
        }
        let step = b.mul_word(&w).scale(&c);
        rem = &rem - &step;
        quot.add_term(w, c);
    }
    Ok(quot)
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring alphabets agree")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.try_sub(rhs).expect("ring alphabets agree")
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring alphabets agree")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RingElement {
            type Output = RingElement;
            fn $m(self, rhs: RingElement) -> RingElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// Canonical ASCII form, leading term first: `3*[1+t]^2*[2] - 1`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::IntPolynomial;
    use alloc::string::ToString;

    fn c() -> Arc<Alphabet> {
        Arc::new(Alphabet::MonoidC)
    }

    fn basis(coeffs: &[i64]) -> RingElement {
        let a = Atom::poly(IntPolynomial::from_i64s(coeffs)).unwrap();
        RingElement::from_word(c(), MonoidWord::atom(a)).unwrap()
    }

    fn int(k: i64) -> RingElement {
        RingElement::from_int(c(), k)
    }

    #[test]
    fn ring_arith_examples() {
        let x = basis(&[1, 1]);
        let y = basis(&[-1, 1]);
        let xy = ring_arith(&x, &y, RingOp::Mul).unwrap();
        assert_eq!(xy.as_word().unwrap().degree(), 2);
        assert!(ring_arith(&x, &-&x, RingOp::Add).unwrap().is_zero());
        let a = &x.scale(&BigInt::from(2)) + &int(1);
        let b = &x.scale(&BigInt::from(2)) - &int(1);
        let prod = &a * &b;
        assert_eq!(prod, &x.pow(2).scale(&BigInt::from(4)) - &int(1));
        assert_eq!(prod.to_string(), "4*[1+t]^2 - 1");
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let l = RingElement::from_word(
            Arc::new(Alphabet::symbols(&["L"])),
            MonoidWord::atom(Atom::symbol("L").unwrap()),
        )
        .unwrap();
        assert!(matches!(basis(&[1, 1]).try_add(&l), Err(Error::AlphabetMismatch(_))));
        assert!(RingElement::from_word(c(), MonoidWord::atom(Atom::symbol("L").unwrap())).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let x = basis(&[1, 1]);
        let xa = Atom::poly(IntPolynomial::from_i64s(&[1, 1])).unwrap();
        let mut asg = Assignment::new();
        asg.insert(xa.clone(), BigRational::from_integer(3.into()));
        assert_eq!(x.pow(2).evaluate(&asg).unwrap(), BigRational::from_integer(9.into()));
        asg.insert(xa, BigRational::new(1.into(), 2.into()));
        let four_x2_minus_1 = &x.pow(2).scale(&BigInt::from(4)) - &int(1);
        assert!(four_x2_minus_1.evaluate(&asg).unwrap().is_zero());
        assert!(int(1).evaluate(&Assignment::new()).unwrap().is_one());
        assert!(matches!(basis(&[1, 2]).evaluate(&asg), Err(Error::MissingAssignment(_))));
    }

    #[test]
    fn exact_divide_examples() {
        let x = basis(&[1, 1]);
        let y = basis(&[-1, 1]);
        let two = BigInt::from(2);
        let a = &x.pow(2).scale(&BigInt::from(4)) - &int(1);
        let b = &x.scale(&two) - &int(1);
        assert_eq!(exact_divide(&a, &b).unwrap(), &x.scale(&two) + &int(1));
        assert_eq!(exact_divide(&a, &int(1)).unwrap(), a);
        // (x^2 y - x y^2) / (x - y) = xy; oracle: multiply back.
        let num = &(&x.pow(2) * &y) - &(&x * &y.pow(2));
        let q = exact_divide(&num, &(&x - &y)).unwrap();
        assert_eq!(&q * &(&x - &y), num);
        assert_eq!(q, &x * &y);
        assert!(matches!(exact_divide(&x, &y), Err(Error::InexactDivision(_))));
        assert!(matches!(exact_divide(&x, &int(0)), Err(Error::DivisionByZero)));
        assert!(exact_divide(&x, &int(2)).is_err());
    }

    #[test]
    fn display_of_constants_and_words() {
        let two = RingElement::from_word(c(), MonoidWord::atom(Atom::prime(2u32).unwrap())).unwrap();
        let x = basis(&[1, 1]);
        let e = &(&x.pow(2) * &two).scale(&BigInt::from(3)) - &int(1);
        assert_eq!(e.to_string(), "3*[2]*[1+t]^2 - 1");
        assert_eq!(int(0).to_string(), "0");
        let v = [(-&x).to_string()];
        assert_eq!(v[0], "-[1+t]");
    }
}
