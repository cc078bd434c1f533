use alloc::vec::Vec;
use core::ops::RangeInclusive;

use rand::Rng;

use super::matrix::{det_exact, det_probabilistic, hankel_matrix, ProbabilisticVerdict};
use super::series::ZetaSeries;
use crate::error::{Error, Result};

/// Outcome for one Hankel determinant. A `Zero` verdict always comes from
/// exact elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    NonzeroExact,
    NonzeroProbabilistic { trials: usize },
}

impl Verdict {
    pub fn is_zero(self) -> bool {
        self == Verdict::Zero
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Zero => "zero",
            Verdict::NonzeroExact => "nonzero-exact",
            Verdict::NonzeroProbabilistic { .. } => "nonzero-probabilistic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// All determinants of this size vanish for `n0 < m ≤ m_to`.
    ConsistentWithRational { n: usize, n0: usize },
    NoVanishingTail,
}

/// Verdicts for Hankel determinants of size `n + 1` over a window of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelReport {
    pub n: usize,
    pub m_from: usize,
    pub m_to: usize,
    /// One verdict per `m` in `m_from..=m_to`, in order.
    pub verdicts: Vec<Verdict>,
    /// Least `n0` with every determinant zero for `n0 < m ≤ m_to`.
    pub n0: Option<usize>,
    pub classification: Classification,
}

impl HankelReport {
    pub fn verdict_at(&self, m: usize) -> Option<Verdict> {
        m.checked_sub(self.m_from).and_then(|i| self.verdicts.get(i).copied())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    /// Random evaluations tried before falling back to exact elimination.
    pub trials: usize,
    /// Confirm nonzero determinants exactly instead of by sampling.
    pub exact_nonzero: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { trials: 3, exact_nonzero: false }
    }
}

/// Scans `n = 1..=n_max` over `m = 0..=m_max`.
pub fn rationality_scan<R: Rng + ?Sized>(
    s: &ZetaSeries,
    n_max: usize,
    m_max: usize,
    rng: &mut R,
) -> Result<Vec<HankelReport>> {
    scan_window(s, 1..=n_max, 0..=m_max, ScanOptions::default(), rng)
}

/// Determinant verdicts for every `(n, m)` in the window. Sampling is tried
/// first; anything that looks like zero is settled by [`det_exact`].
///
/// A vanishing tail is only reported as consistent with rationality when it
/// covers at least `n + 1` consecutive values of `m`.
pub fn scan_window<R: Rng + ?Sized>(
    s: &ZetaSeries,
    ns: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
    opts: ScanOptions,
    rng: &mut R,
) -> Result<Vec<HankelReport>> {
    let (m_from, m_to) = (*ms.start(), *ms.end());
    if m_from > m_to {
        return Err(Error::InvalidArgument("empty m window".into()));
    }
    if let Some(n_max) = ns.clone().last() {
        let needed = m_to + 2 * n_max;
        if needed > s.order() {
            return Err(Error::TruncationExceeded { needed, available: s.order() });
        }
    }
    let mut reports = Vec::new();
    for n in ns {
        let mut verdicts = Vec::with_capacity(m_to - m_from + 1);
        for m in m_from..=m_to {
            let h = hankel_matrix(s, m, n)?;
            let sampled = if opts.exact_nonzero {
                ProbabilisticVerdict::PossiblyZero
            } else {
                match det_probabilistic(&h, opts.trials, rng) {
                    Ok(v) => v,
                    Err(Error::UnluckyEvaluation) => ProbabilisticVerdict::PossiblyZero,
                    Err(e) => return Err(e),
                }
            };
            let v = match sampled {
                ProbabilisticVerdict::NonzeroCertified { .. } => {
                    Verdict::NonzeroProbabilistic { trials: opts.trials }
                }
                ProbabilisticVerdict::PossiblyZero => {
                    if det_exact(&h)?.is_zero() {
                        Verdict::Zero
                    } else {
                        Verdict::NonzeroExact
                    }
                }
            };
            verdicts.push(v);
        }
        let tail = verdicts.iter().rev().take_while(|v| v.is_zero()).count();
        // a window that vanishes from m = 0 on reports n0 = 0, the least
        // value the criterion uses
        let n0 = (tail > 0).then(|| (m_to + 1 - tail).saturating_sub(1));
        let classification = match n0 {
            Some(n0) if tail > n => Classification::ConsistentWithRational { n, n0 },
            _ => Classification::NoVanishingTail,
        };
        reports.push(HankelReport { n, m_from, m_to, verdicts, n0, classification });
    }
    Ok(reports)
}
