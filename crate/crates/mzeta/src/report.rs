//! JSON, CSV and TeX renderings of series, scans and certificates.

use std::fmt::Write as _;

use mzeta_core::irrationality::IrrationalityCertificate;
use mzeta_core::zeta::{Classification, HankelReport, RationalForm, ZetaSeries};
use mzeta_core::{Atom, MonoidWord, RingElement};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct RationalFormJson {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    /// Whether `Q · ζ ≡ P` was confirmed up to the truncation order.
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct ZetaReport {
    pub series: String,
    pub measure: String,
    #[serde(rename = "N")]
    pub order: usize,
    pub leading_term_model: bool,
    pub coefficients: Vec<String>,
    pub rational_form: Option<RationalFormJson>,
}

fn strings(v: &[RingElement]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl ZetaReport {
    pub fn new(s: &ZetaSeries, measure: &str, form: Option<(&RationalForm, bool)>) -> Self {
        ZetaReport {
            series: s.label(),
            measure: measure.to_string(),
            order: s.order(),
            leading_term_model: s.is_leading_term_model(),
            coefficients: strings(s.coeffs()),
            rational_form: form.map(|(f, verified)| RationalFormJson {
                numerator: strings(&f.numerator),
                denominator: strings(&f.denominator),
                verified,
            }),
        }
    }
}

pub fn zeta_csv(s: &ZetaSeries) -> String {
    let mut out = String::from("n,coefficient\n");
    for (n, c) in s.coeffs().iter().enumerate() {
        let text = c.to_string();
        if text.contains([',', '"']) {
            let _ = writeln!(out, "{n},\"{}\"", text.replace('"', "\"\""));
        } else {
            let _ = writeln!(out, "{n},{text}");
        }
    }
    out
}

fn atom_tex(a: &Atom) -> String {
    match a {
        Atom::Prime(p) => format!("[{p}]"),
        Atom::Poly(p) => format!("[{p}]"),
        Atom::Symbol(s) if s == "L" => r"\mathbb{L}".to_string(),
        Atom::Symbol(s) => s.clone(),
    }
}

fn word_tex(w: &MonoidWord) -> String {
    w.iter()
        .map(|(a, e)| if e == 1 { atom_tex(a) } else { format!("{}^{{{e}}}", atom_tex(a)) })
        .collect::<Vec<_>>()
        .join(r"\,")
}

/// TeX for a ring element, leading term first.
pub fn ring_tex(r: &RingElement) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in r.terms().rev().enumerate() {
        let negative = c < &BigInt::ZERO;
        let mag = if negative { -c } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if w.is_one() {
            let _ = write!(out, "{mag}");
        } else if mag == BigInt::from(1) {
            out.push_str(&word_tex(w));
        } else {
            let _ = write!(out, r"{mag}\,{}", word_tex(w));
        }
    }
    out
}

struct PolyStyle {
    coeff: fn(&RingElement) -> String,
    power: fn(usize) -> String,
    open: &'static str,
    close: &'static str,
    join: &'static str,
}

fn series_poly(coeffs: &[RingElement], style: &PolyStyle) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = (style.power)(k);
        let body = (style.coeff)(c);
        parts.push(if k == 0 {
            body
        } else if c.is_one() {
            power
        } else if c.len() == 1 && !body.starts_with('-') {
            format!("{body}{}{power}", style.join)
        } else {
            format!("{}{body}{}{power}", style.open, style.close)
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// TeX for `Σ c_k t^k` with ring coefficients.
pub fn series_poly_tex(coeffs: &[RingElement]) -> String {
    series_poly(
        coeffs,
        &PolyStyle {
            coeff: ring_tex,
            power: |k| match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{{{k}}}"),
            },
            open: r"\left(",
            close: r"\right)",
            join: r"\,",
        },
    )
}

/// Plain-text form of `Σ c_k t^k`, e.g. `1 + (-L - 1)t + L*t^2`.
pub fn series_poly_text(coeffs: &[RingElement]) -> String {
    series_poly(
        coeffs,
        &PolyStyle {
            coeff: |c| c.to_string(),
            power: |k| match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            },
            open: "(",
            close: ")",
            join: "*",
        },
    )
}

pub fn zeta_tex(s: &ZetaSeries, form: Option<&RationalForm>, terms_shown: usize) -> String {
    let mut out = format!("% {}\n", s.label());
    if s.is_leading_term_model() {
        out.push_str("% leading-term model: coefficients are Hilbert-scheme basis elements\n");
    }
    let shown = &s.coeffs()[..s.coeffs().len().min(terms_shown + 1)];
    let _ = write!(out, r"\zeta(t) = {} + O(t^{{{}}})", series_poly_tex(shown), shown.len());
    if let Some(f) = form {
        let _ = write!(
            out,
            "\n\\zeta(t) = \\frac{{{}}}{{{}}}",
            series_poly_tex(&f.numerator),
            series_poly_tex(&f.denominator)
        );
    }
    out.push('\n');
    out
}

#[derive(Debug, Serialize)]
pub struct ScanJson {
    pub n: usize,
    pub m_from: usize,
    pub m_to: usize,
    pub verdicts: Vec<&'static str>,
    pub n0: Option<usize>,
    pub classification: &'static str,
}

#[derive(Debug, Serialize)]
pub struct HankelJson {
    pub series: String,
    #[serde(rename = "N")]
    pub order: usize,
    pub leading_term_model: bool,
    /// Seed of the sampling RNG, when sampling was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub scans: Vec<ScanJson>,
}

impl HankelJson {
    pub fn new(s: &ZetaSeries, reports: &[HankelReport], seed: Option<u64>) -> Self {
        HankelJson {
            series: s.label(),
            order: s.order(),
            leading_term_model: s.is_leading_term_model(),
            seed,
            scans: reports
                .iter()
                .map(|r| ScanJson {
                    n: r.n,
                    m_from: r.m_from,
                    m_to: r.m_to,
                    verdicts: r.verdicts.iter().map(|v| v.as_str()).collect(),
                    n0: r.n0,
                    classification: match r.classification {
                        Classification::ConsistentWithRational { .. } => "consistent-with-rational",
                        Classification::NoVanishingTail => "no-vanishing-tail",
                    },
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SurfaceJson {
    pub q: u64,
    pub r: u64,
}

#[derive(Debug, Serialize)]
pub struct CompetitorJson {
    pub permutation: Vec<usize>,
    pub multiset: Vec<usize>,
    pub hamming_distance: usize,
}

#[derive(Debug, Serialize)]
pub struct MultisetJson {
    pub n: usize,
    pub permutations_enumerated: usize,
    pub multiset: Vec<usize>,
    pub unique: bool,
    pub nearest_competitor: CompetitorJson,
}

#[derive(Debug, Serialize)]
pub struct WindowJson {
    pub n: usize,
    pub m_from: u64,
    pub m_to: u64,
    pub claim_checks: usize,
    pub all_passed: bool,
}

#[derive(Debug, Serialize)]
pub struct VerdictJson {
    pub n: usize,
    pub m: u64,
    pub dimension: u64,
    /// Decimal string; the value routinely exceeds 64 bits.
    pub identity_top_pg: String,
    pub claim_holds: bool,
    pub nonzero: bool,
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub surface: SurfaceJson,
    pub n_checked: Vec<usize>,
    pub identity_multisets: Vec<MultisetJson>,
    pub windows: Vec<WindowJson>,
    pub verdicts: Vec<VerdictJson>,
    pub conclusion: String,
}

impl From<&IrrationalityCertificate> for CertificateJson {
    fn from(c: &IrrationalityCertificate) -> Self {
        CertificateJson {
            surface: SurfaceJson { q: c.q, r: c.r },
            n_checked: c.n_checked.clone(),
            identity_multisets: c
                .uniqueness
                .iter()
                .map(|u| MultisetJson {
                    n: u.n,
                    permutations_enumerated: u.permutations_enumerated,
                    multiset: u.identity_multiset.clone(),
                    unique: u.unique,
                    nearest_competitor: CompetitorJson {
                        permutation: u.nearest_competitor.clone(),
                        multiset: u.nearest_competitor_multiset.clone(),
                        hamming_distance: u.hamming_distance,
                    },
                })
                .collect(),
            windows: c
                .windows
                .iter()
                .map(|w| WindowJson {
                    n: w.n,
                    m_from: w.m_from,
                    m_to: w.m_to,
                    claim_checks: w.claim_checks,
                    all_passed: w.all_passed,
                })
                .collect(),
            verdicts: c
                .verdicts
                .iter()
                .map(|v| VerdictJson {
                    n: v.n,
                    m: v.m,
                    dimension: v.dimension,
                    identity_top_pg: v.identity_top_pg.to_string(),
                    claim_holds: v.claim_holds,
                    nonzero: v.nonzero,
                })
                .collect(),
            conclusion: c.conclusion.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mzeta_core::zeta::{curve_zeta, id_measure_series, id_rational_form, IdExample};

    #[test]
    fn tex_rendering() {
        let f = id_rational_form(IdExample::Elliptic);
        assert_eq!(series_poly_tex(&f.denominator), r"1 + \left(-\mathbb{L} - 1\right)t + \mathbb{L}\,t^{2}");
        assert_eq!(series_poly_tex(&f.numerator), r"1 + \left(E - \mathbb{L} - 1\right)t + \mathbb{L}\,t^{2}");
        let s = id_measure_series(IdExample::P1, 4);
        let tex = zeta_tex(&s, Some(&id_rational_form(IdExample::P1)), 2);
        assert!(tex.contains(r"O(t^{3})"));
        assert!(tex.contains(r"\frac{1}"));
        let f = id_rational_form(IdExample::Elliptic);
        assert_eq!(series_poly_text(&f.numerator), "1 + (E - L - 1)t + L*t^2");
    }

    #[test]
    fn csv_quotes_commas() {
        let csv = zeta_csv(&curve_zeta(2, 3));
        assert!(csv.starts_with("n,coefficient\n0,1\n1,[1+2t]\n"));
    }
}
