use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::integer::is_prime;
use crate::intpoly::IntPolynomial;

/// A free generator of the monoid. The derived order (primes, then
/// polynomials by degree and coefficients, then symbols) is the canonical
/// atom order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    Prime(BigUint),
    Poly(IntPolynomial),
    Symbol(String),
}

impl Atom {
    pub fn prime(value: impl Into<BigUint>) -> Result<Atom> {
        let value = value.into();
        if !is_prime(&value) {
            return Err(Error::InvalidAtom(format!("{value} is not prime")));
        }
        Ok(Atom::Prime(value))
    }

    /// A polynomial atom; must be primitive, irreducible, of positive degree
    /// and with positive leading coefficient.
    pub fn poly(p: IntPolynomial) -> Result<Atom> {
        if !p.in_c() || p.degree() == Some(0) {
            return Err(Error::InvalidAtom(format!("{p} is not a nonconstant element of C")));
        }
        if !p.content_primitive().is_ok_and(|(c, _, _)| c == BigUint::from(1u32)) {
            return Err(Error::InvalidAtom(format!("{p} is not primitive")));
        }
        if !p.is_irreducible() {
            return Err(Error::InvalidAtom(format!("{p} is reducible")));
        }
        Ok(Atom::Poly(p))
    }

    pub fn symbol(name: &str) -> Result<Atom> {
        let ok = !name.is_empty()
            && name.len() <= 16
            && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::InvalidAtom(format!("bad symbol name {name:?}")));
        }
        Ok(Atom::Symbol(name.to_string()))
    }

    pub fn is_symbol(&self) -> bool {
        matches!(self, Atom::Symbol(_))
    }

    /// Degree of the polynomial this atom stands for in `C`; symbols have none.
    pub fn poly_degree(&self) -> Option<usize> {
        match self {
            Atom::Prime(_) => Some(0),
            Atom::Poly(p) => p.degree(),
            Atom::Symbol(_) => None,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Prime(p) => write!(f, "[{p}]"),
            Atom::Poly(p) => write!(f, "[{p}]"),
            Atom::Symbol(s) => f.write_str(s),
        }
    }
}

/// Which atoms a ring instance admits.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Alphabet {
    /// Prime and polynomial atoms: the monoid ring `Z[C]`.
    MonoidC,
    /// Only the declared symbols.
    Symbols(Vec<String>),
    /// Both arithmetic atoms and the declared symbols.
    Mixed(Vec<String>),
}

impl Alphabet {
    pub fn symbols(names: &[&str]) -> Alphabet {
        Alphabet::Symbols(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn allows(&self, atom: &Atom) -> bool {
        match (self, atom) {
            (Alphabet::MonoidC, Atom::Symbol(_)) => false,
            (Alphabet::MonoidC, _) => true,
            (Alphabet::Symbols(names), Atom::Symbol(s)) => names.contains(s),
            (Alphabet::Symbols(_), _) => false,
            (Alphabet::Mixed(names), Atom::Symbol(s)) => names.contains(s),
            (Alphabet::Mixed(_), _) => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_validation() {
        assert!(Atom::prime(7u32).is_ok());
        assert!(Atom::prime(9u32).is_err());
        assert!(Atom::poly(IntPolynomial::from_i64s(&[1, 1])).is_ok());
        assert!(Atom::poly(IntPolynomial::from_i64s(&[2, 2])).is_err());
        assert!(Atom::poly(IntPolynomial::from_i64s(&[-1, 0, 1])).is_err());
        assert!(Atom::poly(IntPolynomial::from_i64s(&[1, -1])).is_err());
        assert!(Atom::symbol("L").is_ok());
        assert!(Atom::symbol("1L").is_err());
    }

    #[test]
    fn canonical_order() {
        let two = Atom::prime(2u32).unwrap();
        let lin = Atom::poly(IntPolynomial::from_i64s(&[1, 1])).unwrap();
        let quad = Atom::poly(IntPolynomial::from_i64s(&[1, 1, 1])).unwrap();
        let sym = Atom::symbol("E").unwrap();
        assert!(two < lin && lin < quad && quad < sym);
    }

    #[test]
    fn alphabet_policy() {
        let le = Alphabet::symbols(&["L", "E"]);
        assert!(le.allows(&Atom::symbol("L").unwrap()));
        assert!(!le.allows(&Atom::symbol("X").unwrap()));
        assert!(!le.allows(&Atom::prime(2u32).unwrap()));
        assert!(!Alphabet::MonoidC.allows(&Atom::symbol("L").unwrap()));
    }
}
