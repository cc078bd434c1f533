use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hodge::{hilbert_scheme_h0, psi_h, sym_power, HodgeVector};
use crate::monoid_ring::{Alphabet, Atom, MonoidWord, RingElement};

/// Which builder produced a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// `μ_h([C^(n)])` for a smooth curve; exact.
    Curve { genus: u64 },
    /// Leading-term model of `μ_h([X^(n)])` for a surface: the basis element of
    /// `Ψ_h(X^[n])`. Not the exact measure of the singular symmetric product.
    SurfaceLeadingTerm { q: u64, pg: u64 },
    /// Universal measure examples in `Z[L, E]`.
    Identity(IdExample),
    /// Anything assembled by a caller.
    Custom(String),
}

/// Truncated power series `a_0 + a_1 t + … + a_N t^N` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaSeries {
    pub kind: SeriesKind,
    coeffs: Vec<RingElement>,
}

impl ZetaSeries {
    /// `coeffs` must be nonempty and share one alphabet.
    pub fn new(kind: SeriesKind, coeffs: Vec<RingElement>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::InvalidArgument("empty series".into()))?;
        if let Some(bad) = coeffs.iter().find(|c| c.alphabet() != first.alphabet()) {
            return Err(Error::AlphabetMismatch(format!("coefficient {bad} uses another alphabet")));
        }
        Ok(ZetaSeries { kind, coeffs })
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&RingElement> {
        self.coeffs
            .get(n)
            .ok_or(Error::TruncationExceeded { needed: n, available: self.order() })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.coeffs[0].alphabet()
    }

    pub fn label(&self) -> String {
        match &self.kind {
            SeriesKind::Curve { genus } => format!("hodge:curve({genus})"),
            SeriesKind::SurfaceLeadingTerm { q, pg } => {
                format!("hodge:surface({q},{pg}) [leading-term model]")
            }
            SeriesKind::Identity(ex) => format!("id-symbolic:{}", ex.name()),
            SeriesKind::Custom(s) => s.clone(),
        }
    }

    pub fn is_leading_term_model(&self) -> bool {
        matches!(self.kind, SeriesKind::SurfaceLeadingTerm { .. })
    }
}

fn hodge_basis(alphabet: &Arc<Alphabet>, h: &HodgeVector) -> RingElement {
    RingElement::from_word(alphabet.clone(), psi_h(h)).expect("Ψ_h lands in Z[C]")
}

/// `ζ_{μ_h}(C, t)` for a smooth curve of genus `g`; symmetric products of
/// curves are smooth, so each coefficient is the single basis element
/// `[Ψ_h(C^(n))]`.
pub fn curve_zeta(genus: u64, order: usize) -> ZetaSeries {
    let alphabet = Arc::new(Alphabet::MonoidC);
    let c = HodgeVector::curve(genus);
    let coeffs = (0..=order).map(|n| hodge_basis(&alphabet, &sym_power(&c, n))).collect();
    ZetaSeries { kind: SeriesKind::Curve { genus }, coeffs }
}

/// Leading-term model of `ζ_{μ_h}(X, t)` for a surface with `h^{1,0} = q`
/// and `h^{2,0} = pg`: coefficient `n` is `[Ψ_h(X^[n])]`. The true
/// `μ_h([X^(n)])` differs from this by classes of dimension below `2n`, which
/// do not affect top geometric genus arguments.
pub fn surface_leading_zeta(q: u64, pg: u64, order: usize) -> ZetaSeries {
    let alphabet = Arc::new(Alphabet::MonoidC);
    let s = HodgeVector::surface(q, pg);
    let coeffs = (0..=order)
        .map(|n| hodge_basis(&alphabet, &hilbert_scheme_h0(&s, n).expect("dimension 2")))
        .collect();
    ZetaSeries { kind: SeriesKind::SurfaceLeadingTerm { q, pg }, coeffs }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdExample {
    P1,
    P2,
    Elliptic,
}

impl IdExample {
    pub fn name(self) -> &'static str {
        match self {
            IdExample::P1 => "p1",
            IdExample::P2 => "p2",
            IdExample::Elliptic => "elliptic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "p1" | "P1" => Some(IdExample::P1),
            "p2" | "P2" => Some(IdExample::P2),
            "elliptic" | "E" => Some(IdExample::Elliptic),
            _ => None,
        }
    }
}

/// The ring `Z[L, E]` of the universal-measure examples.
pub fn symbol_alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::symbols(&["L", "E"]))
}

fn sym(alphabet: &Arc<Alphabet>, name: &str, e: u64) -> RingElement {
    let w = MonoidWord::atom_pow(Atom::symbol(name).expect("valid symbol"), e);
    RingElement::from_word(alphabet.clone(), w).expect("symbol in alphabet")
}

/// `Σ_e c_e L^e` scaled by `E^k`.
fn l_polynomial(alphabet: &Arc<Alphabet>, e_power: u64, counts: impl IntoIterator<Item = (u64, u64)>) -> RingElement {
    let l = Atom::symbol("L").expect("valid symbol");
    let e = Atom::symbol("E").expect("valid symbol");
    let terms = counts.into_iter().filter(|&(_, c)| c > 0).map(|(i, c)| {
        let w = MonoidWord::from_pairs([(l.clone(), i), (e.clone(), e_power)].into_iter().filter(|p| p.1 > 0));
        (w, BigInt::from(c))
    });
    RingElement::from_terms(alphabet.clone(), terms).expect("symbols in alphabet")
}

/// Coefficients of `ζ_id` for `P^1`, `P^2` and an elliptic curve, as
/// elements of `Z[L, E]` with `L = [A^1]`.
pub fn id_measure_series(example: IdExample, order: usize) -> ZetaSeries {
    let alphabet = symbol_alphabet();
    let coeffs = (0..=order as u64)
        .map(|n| match example {
            IdExample::P1 => l_polynomial(&alphabet, 0, (0..=n).map(|i| (i, 1))),
            IdExample::Elliptic if n == 0 => RingElement::one(alphabet.clone()),
            IdExample::Elliptic => l_polynomial(&alphabet, 1, (0..n).map(|i| (i, 1))),
            // complete homogeneous sum of degree n in {1, L, L^2}: L^e occurs
            // once for each k with j = e - 2k ≥ 0 and j + k ≤ n
            IdExample::P2 => l_polynomial(
                &alphabet,
                0,
                (0..=2 * n).map(|e| (e, (e / 2 + 1).saturating_sub(e.saturating_sub(n)))),
            ),
        })
        .collect();
    ZetaSeries { kind: SeriesKind::Identity(example), coeffs }
}

/// `P(t) / Q(t)` with polynomial coefficients over the series' ring.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalForm {
    pub numerator: Vec<RingElement>,
    pub denominator: Vec<RingElement>,
}

fn one_minus(alphabet: &Arc<Alphabet>, c: RingElement) -> Vec<RingElement> {
    vec![RingElement::one(alphabet.clone()), -&c]
}

fn poly_mul(a: &[RingElement], b: &[RingElement]) -> Vec<RingElement> {
    let alphabet = a[0].alphabet().clone();
    let mut out = vec![RingElement::zero(alphabet); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// The closed forms `1/((1-t)(1-Lt))`, `(1 + (E-1-L)t + Lt²)/((1-t)(1-Lt))`
/// and `1/((1-t)(1-Lt)(1-L²t))`.
pub fn id_rational_form(example: IdExample) -> RationalForm {
    let a = symbol_alphabet();
    let one = RingElement::one(a.clone());
    let l = sym(&a, "L", 1);
    let base = poly_mul(&one_minus(&a, one.clone()), &one_minus(&a, l.clone()));
    match example {
        IdExample::P1 => RationalForm { numerator: vec![one], denominator: base },
        IdExample::Elliptic => {
            let middle = &(&sym(&a, "E", 1) - &one) - &l;
            RationalForm { numerator: vec![one, middle, l], denominator: base }
        }
        IdExample::P2 => RationalForm {
            numerator: vec![one],
            denominator: poly_mul(&base, &one_minus(&a, sym(&a, "L", 2))),
        },
    }
}

/// Rational form of `ζ_{μ_h}` for a curve of genus `g`: coefficients are
/// `[(1+t)^g]` from `n = g` on, so `Q = 1 - t`.
pub fn curve_rational_form(genus: u64) -> RationalForm {
    let s = curve_zeta(genus, genus as usize + 1);
    let a = s.alphabet().clone();
    let head: Vec<RingElement> = s.coeffs()[..=genus as usize].to_vec();
    let mut numerator = poly_mul(&head, &one_minus(&a, RingElement::one(a.clone())));
    // (1 - t) Σ_{n≤g} a_n t^n leaves -a_g t^{g+1}; the geometric tail adds it back
    numerator.truncate(genus as usize + 1);
    RationalForm { numerator, denominator: one_minus(&a, RingElement::one(a.clone())) }
}

/// Whether `Q · S ≡ P (mod t^{N+1})` holds exactly. `Q` must have a unit
/// constant term.
pub fn rational_check_mul(s: &ZetaSeries, p: &[RingElement], q: &[RingElement]) -> Result<bool> {
    let q0 = q.first().ok_or_else(|| Error::InvalidArgument("empty denominator".into()))?;
    if !(q0.is_one() || (-q0).is_one()) {
        return Err(Error::InvalidArgument(format!("denominator constant term {q0} is not a unit")));
    }
    let alphabet = s.alphabet();
    let zero = RingElement::zero(alphabet.clone());
    for k in 0..=s.order() {
        let mut acc = zero.clone();
        for (i, qi) in q.iter().enumerate().take(k + 1) {
            acc = acc.try_add(&qi.try_mul(&s.coeffs[k - i])?)?;
        }
        let target = p.get(k).unwrap_or(&zero);
        if acc.try_sub(target)? != zero {
            return Ok(false);
        }
    }
    Ok(true)
}
