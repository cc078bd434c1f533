//! Truncated zeta series, Hankel matrices and their determinants.

mod matrix;
mod scan;
mod series;

pub use matrix::{
    det_exact, det_exact_field, det_probabilistic, det_rational, hankel_matrix, Evaluable,
    ProbabilisticVerdict, SquareMatrix, SAMPLE_BOUND,
};
pub use scan::{
    rationality_scan, scan_window, Classification, HankelReport, ScanOptions, Verdict,
};
pub use series::{
    curve_rational_form, curve_zeta, id_measure_series, id_rational_form, rational_check_mul,
    surface_leading_zeta, symbol_alphabet, IdExample, RationalForm, SeriesKind, ZetaSeries,
};
