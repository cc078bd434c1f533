//! Monoid rings `Z[G]` over free commutative monoids of atoms, and their
//! fraction fields.
//!
//! The monoid `C` of integer polynomials with positive leading coefficient
//! is free on the prime integers and the primitive irreducible polynomials,
//! so its elements are [`MonoidWord`]s over [`Atom`]s. Named symbol atoms
//! support the small `Z[L, E]` ring used for the identity-measure examples.

mod atom;
mod field;
mod ring;
mod word;

pub use atom::{Alphabet, Atom};
pub use field::{field_arith, FieldElement, FieldOp};
pub use ring::{exact_divide, ring_arith, Assignment, RingElement, RingOp};
pub use word::{embed_poly, word_mul, MonoidWord};
