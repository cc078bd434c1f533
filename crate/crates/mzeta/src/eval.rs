//! Evaluation of [`VarietyExpr`] trees under the Hodge measure and under the
//! symbolic universal-measure backend.

use std::sync::Arc;

use mzeta_core::hodge::{hilbert_scheme_h0, psi_h, sym_power};
use mzeta_core::zeta::{
    curve_rational_form, curve_zeta, id_measure_series, id_rational_form, surface_leading_zeta,
    symbol_alphabet, IdExample, RationalForm, SeriesKind, ZetaSeries,
};
use mzeta_core::{Alphabet, Atom, HodgeVector, MonoidWord, RingElement};

use crate::dsl::{Leaf, VarietyExpr};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    /// `μ_h` with values in `Z[C]`.
    Hodge,
    /// Classes in `Z[L, E]`, covering only the closed-form examples.
    IdSymbolic,
}

impl std::str::FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "hodge" => Ok(Measure::Hodge),
            "id-symbolic" => Ok(Measure::IdSymbolic),
            _ => Err(Error::Usage(format!("unknown measure '{s}' (expected hodge or id-symbolic)"))),
        }
    }
}

fn hodge_alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::MonoidC)
}

fn basis(h: &HodgeVector) -> RingElement {
    RingElement::from_word(hodge_alphabet(), psi_h(h)).expect("Ψ_h lands in Z[C]")
}

fn hodge_leaf(leaf: Leaf) -> RingElement {
    let a = hodge_alphabet();
    match leaf {
        Leaf::Point | Leaf::P(_) | Leaf::A(0) => RingElement::one(a),
        Leaf::L | Leaf::A(_) => RingElement::zero(a),
        Leaf::E => basis(&HodgeVector::curve(1)),
        Leaf::Curve(g) => basis(&HodgeVector::curve(g)),
        Leaf::Surface { q, pg } => basis(&HodgeVector::surface(q, pg)),
    }
}

/// `μ_h` of the `n`-th symmetric power. For surfaces this is the leading-term
/// model: the basis element of the Hilbert scheme of points.
fn hodge_sym(leaf: Leaf, n: u64) -> Result<RingElement, Error> {
    let n = usize::try_from(n).map_err(|_| Error::Usage("symmetric power too large".into()))?;
    Ok(match leaf {
        // symmetric products of projective spaces are rational
        Leaf::P(_) => RingElement::one(hodge_alphabet()),
        Leaf::E => basis(&sym_power(&HodgeVector::curve(1), n)),
        Leaf::Curve(g) => basis(&sym_power(&HodgeVector::curve(g), n)),
        Leaf::Surface { q, pg } => basis(&hilbert_scheme_h0(&HodgeVector::surface(q, pg), n)?),
        other => return Err(unsupported_sym(other)),
    })
}

fn unsupported_sym(leaf: Leaf) -> Error {
    Error::Unsupported(format!(
        "sym({leaf}, n): symmetric powers are only supported for curve, E, P(n) and surface leaves"
    ))
}

/// `μ_h` of an expression, as an element of `Z[C]`.
pub fn eval_mu_h(e: &VarietyExpr) -> Result<RingElement, Error> {
    eval_with(e, &|l| Ok(hodge_leaf(l)), &hodge_sym)
}

fn symbol(name: &str, e: u64) -> RingElement {
    let w = MonoidWord::atom_pow(Atom::symbol(name).expect("valid symbol"), e);
    RingElement::from_word(symbol_alphabet(), w).expect("symbol in alphabet")
}

/// `[P^n] = 1 + L + … + L^n`.
fn projective(n: u64) -> RingElement {
    (0..=n).fold(RingElement::zero(symbol_alphabet()), |acc, i| &acc + &symbol("L", i))
}

fn id_leaf(leaf: Leaf) -> Result<RingElement, Error> {
    Ok(match leaf {
        Leaf::Point => RingElement::one(symbol_alphabet()),
        Leaf::L => symbol("L", 1),
        Leaf::A(n) => symbol("L", n),
        Leaf::P(n) => projective(n),
        Leaf::Curve(0) => projective(1),
        Leaf::E | Leaf::Curve(1) => symbol("E", 1),
        other => {
            return Err(Error::Unsupported(format!(
                "{other} has no class in the symbolic backend (only point, L, A(n), P(n), E)"
            )))
        }
    })
}

fn id_example(leaf: Leaf) -> Option<IdExample> {
    match leaf {
        Leaf::P(1) | Leaf::Curve(0) => Some(IdExample::P1),
        Leaf::P(2) => Some(IdExample::P2),
        Leaf::E | Leaf::Curve(1) => Some(IdExample::Elliptic),
        _ => None,
    }
}

fn id_sym(leaf: Leaf, n: u64) -> Result<RingElement, Error> {
    let n = usize::try_from(n).map_err(|_| Error::Usage("symmetric power too large".into()))?;
    if leaf == Leaf::P(0) {
        return Ok(RingElement::one(symbol_alphabet()));
    }
    let ex = id_example(leaf).ok_or_else(|| {
        Error::Unsupported(format!("sym({leaf}, n) is not one of the closed-form symbolic examples"))
    })?;
    Ok(id_measure_series(ex, n).coeff(n)?.clone())
}

/// Class of an expression in `Z[L, E]`.
pub fn eval_id_symbolic(e: &VarietyExpr) -> Result<RingElement, Error> {
    eval_with(e, &id_leaf, &id_sym)
}

pub fn eval(e: &VarietyExpr, measure: Measure) -> Result<RingElement, Error> {
    match measure {
        Measure::Hodge => eval_mu_h(e),
        Measure::IdSymbolic => eval_id_symbolic(e),
    }
}

fn eval_with(
    e: &VarietyExpr,
    leaf: &dyn Fn(Leaf) -> Result<RingElement, Error>,
    sym: &dyn Fn(Leaf, u64) -> Result<RingElement, Error>,
) -> Result<RingElement, Error> {
    let go = |x: &VarietyExpr| eval_with(x, leaf, sym);
    Ok(match e {
        VarietyExpr::Leaf(l) => leaf(*l)?,
        VarietyExpr::Sym(l, n) if l.supports_sym() => sym(*l, *n)?,
        VarietyExpr::Sym(l, _) => return Err(unsupported_sym(*l)),
        VarietyExpr::Add(a, b) => go(a)?.try_add(&go(b)?)?,
        VarietyExpr::Sub(a, b) => go(a)?.try_sub(&go(b)?)?,
        VarietyExpr::Mul(a, b) => go(a)?.try_mul(&go(b)?)?,
        VarietyExpr::Pow(a, k) => go(a)?.pow(*k),
    })
}

/// Zeta series `Σ μ([X^(n)]) t^n` of a single leaf up to `t^order`, with its
/// closed rational form when one is known.
pub fn zeta_series(
    leaf: Leaf,
    measure: Measure,
    order: usize,
) -> Result<(ZetaSeries, Option<RationalForm>), Error> {
    let geometric = |label: String, ratio: RingElement| -> Result<(ZetaSeries, Option<RationalForm>), Error> {
        let a = ratio.alphabet().clone();
        let mut coeffs = vec![RingElement::one(a.clone())];
        for _ in 0..order {
            let next = coeffs.last().expect("nonempty") * &ratio;
            coeffs.push(next);
        }
        let form = RationalForm {
            numerator: vec![RingElement::one(a.clone())],
            denominator: if ratio.is_zero() {
                vec![RingElement::one(a)]
            } else {
                vec![RingElement::one(a), -&ratio]
            },
        };
        Ok((ZetaSeries::new(SeriesKind::Custom(label), coeffs)?, Some(form)))
    };
    match measure {
        Measure::Hodge => match leaf {
            Leaf::Curve(g) => Ok((curve_zeta(g, order), Some(curve_rational_form(g)))),
            Leaf::E => Ok((curve_zeta(1, order), Some(curve_rational_form(1)))),
            Leaf::Surface { q, pg } => Ok((surface_leading_zeta(q, pg, order), None)),
            other => geometric(format!("hodge:{other}"), hodge_leaf(other)),
        },
        Measure::IdSymbolic => match (id_example(leaf), leaf) {
            (Some(ex), _) => Ok((id_measure_series(ex, order), Some(id_rational_form(ex)))),
            (None, Leaf::Point | Leaf::P(0) | Leaf::L | Leaf::A(_)) => {
                geometric(format!("id-symbolic:{leaf}"), id_leaf(leaf)?)
            }
            _ => Err(Error::Unsupported(format!(
                "no symbolic zeta function for {leaf} (supported: point, L, A(n), P(0..2), E)"
            ))),
        },
    }
}
