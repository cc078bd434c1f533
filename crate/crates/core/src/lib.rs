//! Exact kernels for motivic zeta functions under the Hodge measure.
//!
//! Everything in this crate is pure and allocation-only (`no_std + alloc`):
//!
//! - [`intpoly`]: univariate integer polynomials, their text form, and complete
//!   factorization over `Z` (content primes plus primitive irreducibles).
//! - [`monoid_ring`]: the free commutative monoid of atoms, the monoid ring
//!   `Z[G]` over it and the fraction field used as the measure's target.
//! - [`hodge`]: `(k,0)` Hodge vectors, Künneth products, sign-twisted symmetric
//!   powers, the measure `Ψ_h` and geometric genus formulas.
//! - [`zeta`]: truncated zeta series, rational-form verification, Hankel
//!   matrices, exact and probabilistic determinants, rationality scans.
//! - [`irrationality`]: permutation expansion of Hankel determinants and the
//!   certificate generator for surfaces with geometric genus at least two.

#![no_std]
// dense matrix and table code reads more clearly with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod error;
pub mod hodge;
pub mod integer;
pub mod intpoly;
pub mod irrationality;
pub mod monoid_ring;
pub mod zeta;

pub use error::{Error, Result};
pub use hodge::HodgeVector;
pub use irrationality::IrrationalityCertificate;
pub use zeta::{HankelReport, ZetaSeries};

pub use intpoly::{Factorization, IntPolynomial};
pub use monoid_ring::{Alphabet, Atom, FieldElement, MonoidWord, RingElement};

