use alloc::collections::BTreeMap;
use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;

use super::atom::{Alphabet, Atom};
use crate::error::{Error, Result};
use crate::intpoly::{factor_in_c, IntPolynomial};

/// An element of a free commutative monoid: atoms with positive exponents.
/// The empty word is the identity.
///
/// Words are ordered graded-lexicographically: total degree first, then the
/// exponent of the smallest atom (in canonical atom order), and so on. This
/// is a monomial order, which exact division relies on.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MonoidWord {
    exps: BTreeMap<Atom, u64>,
}

impl MonoidWord {
    pub fn one() -> Self {
        MonoidWord::default()
    }

    pub fn atom(a: Atom) -> Self {
        Self::atom_pow(a, 1)
    }

    pub fn atom_pow(a: Atom, e: u64) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(a, e);
        }
        MonoidWord { exps }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Atom, u64)>) -> Self {
        let mut w = MonoidWord::one();
        for (a, e) in pairs {
            if e > 0 {
                *w.exps.entry(a).or_insert(0) += e;
            }
        }
        w
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, a: &Atom) -> u64 {
        self.exps.get(a).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, u64)> {
        self.exps.iter().map(|(a, &e)| (a, e))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.exps.keys()
    }

    pub fn has_symbols(&self) -> bool {
        self.exps.keys().any(Atom::is_symbol)
    }

    pub fn has_arithmetic(&self) -> bool {
        self.exps.keys().any(|a| !a.is_symbol())
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        match self.exps.keys().find(|a| !alphabet.allows(a)) {
            Some(a) => Err(Error::AlphabetMismatch(format!("atom {a} not in {alphabet:?}"))),
            None => Ok(()),
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        if k == 0 {
            return MonoidWord::one();
        }
        MonoidWord { exps: self.exps.iter().map(|(a, &e)| (a.clone(), e * k)).collect() }
    }

    pub fn divides(&self, other: &MonoidWord) -> bool {
        self.exps.iter().all(|(a, &e)| other.exponent(a) >= e)
    }

    /// `self / d` when `d` divides `self`.
    pub fn checked_div(&self, d: &MonoidWord) -> Option<MonoidWord> {
        if !d.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (a, &e) in &d.exps {
            let slot = exps.get_mut(a).expect("divisibility checked");
            *slot -= e;
            if *slot == 0 {
                exps.remove(a);
            }
        }
        Some(MonoidWord { exps })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &MonoidWord) -> MonoidWord {
        MonoidWord {
            exps: self
                .exps
                .iter()
                .filter_map(|(a, &e)| {
                    let m = e.min(other.exponent(a));
                    (m > 0).then(|| (a.clone(), m))
                })
                .collect(),
        }
    }

    /// The polynomial in `C` this word represents. Fails on symbol atoms.
    pub fn to_polynomial(&self) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::one();
        for (a, &e) in &self.exps {
            let base = match a {
                Atom::Prime(p) => IntPolynomial::constant(BigInt::from(p.clone())),
                Atom::Poly(p) => p.clone(),
                Atom::Symbol(s) => {
                    return Err(Error::AlphabetMismatch(format!("symbol {s} has no polynomial")))
                }
            };
            let e = u32::try_from(e).map_err(|_| Error::InvalidArgument(format!("exponent {e}")))?;
            acc = &acc * &base.pow(e);
        }
        Ok(acc)
    }
}

/// Monoid product of two words drawn from `alphabet`.
pub fn word_mul(a: &MonoidWord, b: &MonoidWord, alphabet: &Alphabet) -> Result<MonoidWord> {
    a.check(alphabet)?;
    b.check(alphabet)?;
    Ok(a * b)
}

/// The basis word `[p]` of `Z[C]` for `p ∈ C`, in factored form.
pub fn embed_poly(p: &IntPolynomial) -> Result<MonoidWord> {
    let f = factor_in_c(p)?;
    Ok(MonoidWord::from_pairs(
        f.content_primes
            .into_iter()
            .map(|q| (Atom::Prime(q), 1))
            .chain(f.irreducible_factors.into_iter().map(|g| (Atom::Poly(g), 1))),
    ))
}

impl Mul for &MonoidWord {
    type Output = MonoidWord;
    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add
    fn mul(self, rhs: &MonoidWord) -> MonoidWord {
        let mut exps = self.exps.clone();
        for (a, &e) in &rhs.exps {
            *exps.entry(a.clone()).or_insert(0) += e;
        }
        MonoidWord { exps }
    }
}

impl Mul for MonoidWord {
    type Output = MonoidWord;
    fn mul(self, rhs: MonoidWord) -> MonoidWord {
        &self * &rhs
    }
}

impl PartialOrd for MonoidWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonoidWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((aa, ae)), Some((ba, be))) => match aa.cmp(ba) {
                    // `self` has an atom that `other` lacks, so a larger exponent there
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        let c = ae.cmp(be);
                        if c != Ordering::Equal {
                            return c;
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, (a, &e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{e}")?;
            }
        }
        Ok(())
    }
}
