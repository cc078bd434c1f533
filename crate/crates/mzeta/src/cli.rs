//! The `mzeta` command-line driver.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use mzeta_core::hodge::{pg, psi_h, sym_power};
use mzeta_core::intpoly::factor_in_c;
use mzeta_core::irrationality::certify_irrational;
use mzeta_core::zeta::{
    id_measure_series, id_rational_form, rational_check_mul, scan_window, IdExample, ScanOptions,
};
use mzeta_core::{HodgeVector, IntPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dsl::{parse, Leaf, VarietyExpr};
use crate::eval::{zeta_series, Measure};
use crate::report::{series_poly_text, zeta_csv, zeta_tex, CertificateJson, HankelJson, ZetaReport};
use crate::Error;

/// Environment variable holding the seed for probabilistic determinants.
pub const SEED_VAR: &str = "MZETA_SEED";

#[derive(Debug, Parser)]
#[command(name = "mzeta", version, about = "Motivic zeta functions under the Hodge measure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZetaFormat {
    Json,
    Csv,
    Tex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MeasureArg {
    Hodge,
    IdSymbolic,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Hodge => Measure::Hodge,
            MeasureArg::IdSymbolic => Measure::IdSymbolic,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Truncated zeta series of a single variety.
    Zeta {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value = "hodge")]
        measure: MeasureArg,
        #[arg(long, value_enum, default_value = "json")]
        out: ZetaFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Hankel determinant scan of a zeta series.
    Hankel {
        #[arg(long)]
        expr: String,
        /// Determinant sizes n+1 for n in this range, written A..B.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Start indices m, written C..D.
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "hodge")]
        measure: MeasureArg,
        /// Confirm nonzero determinants exactly rather than by sampling.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Irrationality certificate for a surface with P_g >= 2.
    Certify {
        /// Written q=Q,pg=R.
        #[arg(long, value_parser = parse_surface)]
        surface: (u64, u64),
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_parser = parse_range)]
        mwindow: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value = "json")]
        out: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify the closed forms of the universal-measure examples.
    Examples {
        #[arg(long, value_delimiter = ',', default_value = "p1,p2,elliptic")]
        check: Vec<String>,
        #[arg(long, default_value_t = 50)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        out: ReportFormat,
    },
    /// Factor a polynomial with positive leading coefficient into atoms.
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        out: ReportFormat,
    },
    /// (k,0) Hodge numbers of a symmetric power.
    Symhodge {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        out: ReportFormat,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("'{x}': {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

fn parse_surface(s: &str) -> Result<(u64, u64), String> {
    let (mut q, mut r) = (None, None);
    for part in s.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got '{part}'"))?;
        let v: u64 = v.trim().parse().map_err(|e| format!("'{v}': {e}"))?;
        match k.trim() {
            "q" => q = Some(v),
            "pg" | "r" => r = Some(v),
            other => return Err(format!("unknown surface key '{other}'")),
        }
    }
    Ok((q.ok_or("missing q")?, r.ok_or("missing pg")?))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Core(mzeta_core::Error::CheckFailed(_)) => 1,
        _ => 2,
    }
}

/// Runs the driver on `argv` (including the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(text: &str, output: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn single_leaf(src: &str) -> Result<Leaf, Error> {
    match parse(src)? {
        VarietyExpr::Leaf(l) => Ok(l),
        other => Err(Error::Unsupported(format!(
            "zeta functions are computed for a single variety, not for {other}"
        ))),
    }
}

fn rng_from_env() -> Result<(u64, ChaCha8Rng), Error> {
    let seed = match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Usage(format!("{SEED_VAR}='{v}' is not a u64")))?,
        Err(_) => rand::thread_rng().gen(),
    };
    Ok((seed, ChaCha8Rng::seed_from_u64(seed)))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, Error> {
    match cmd {
        Command::Zeta { expr, terms, measure, out: format, output } => {
            let leaf = single_leaf(&expr)?;
            let measure = Measure::from(measure);
            let (s, form) = zeta_series(leaf, measure, terms)?;
            let verified = match &form {
                Some(f) => Some(rational_check_mul(&s, &f.numerator, &f.denominator)?),
                None => None,
            };
            let text = match format {
                ZetaFormat::Json => {
                    let name = if measure == Measure::Hodge { "hodge" } else { "id-symbolic" };
                    to_json(&ZetaReport::new(&s, name, form.as_ref().zip(verified)))
                }
                ZetaFormat::Csv => zeta_csv(&s),
                ZetaFormat::Tex => zeta_tex(&s, form.as_ref(), terms.min(8)),
            };
            emit(&text, output, out)?;
            if verified == Some(false) {
                writeln!(err, "rational form does not match the series")?;
            }
            Ok(verified != Some(false))
        }
        Command::Hankel { expr, n, m, measure, exact, output } => {
            if *n.start() == 0 {
                return Err(Error::Usage("--n must start at 1".into()));
            }
            let leaf = single_leaf(&expr)?;
            let order = m.end() + 2 * n.end();
            let (s, _) = zeta_series(leaf, measure.into(), order)?;
            let (seed, mut rng) = rng_from_env()?;
            let opts = ScanOptions { exact_nonzero: exact, ..ScanOptions::default() };
            let reports = scan_window(&s, n, m, opts, &mut rng)?;
            let report = HankelJson::new(&s, &reports, (!exact).then_some(seed));
            emit(&to_json(&report), output, out)?;
            Ok(true)
        }
        Command::Certify { surface: (q, r), nmax, mwindow, out: format, output } => {
            let window = *mwindow.start() as u64..=*mwindow.end() as u64;
            let cert = certify_irrational(q, r, nmax, window)?;
            let text = match format {
                ReportFormat::Json => to_json(&CertificateJson::from(&cert)),
                ReportFormat::Text => format!("{cert}\n"),
            };
            emit(&text, output, out)?;
            Ok(cert.is_valid())
        }
        Command::Examples { check, terms, out: format } => run_examples(&check, terms, format, out),
        Command::Factor { poly, out: format } => {
            let p: IntPolynomial = poly.parse().map_err(Error::Core)?;
            let f = factor_in_c(&p)?;
            let mut atoms: Vec<(String, usize)> = Vec::new();
            let names = f
                .content_primes
                .iter()
                .map(|p| p.to_string())
                .chain(f.irreducible_factors.iter().map(|g| format!("({g})")));
            for name in names {
                match atoms.last_mut() {
                    Some((last, k)) if *last == name => *k += 1,
                    _ => atoms.push((name, 1)),
                }
            }
            match format {
                ReportFormat::Text => {
                    let parts: Vec<String> = atoms
                        .iter()
                        .map(|(a, k)| if *k == 1 { a.clone() } else { format!("{a}^{k}") })
                        .collect();
                    writeln!(out, "{{{}}}", parts.join(", "))?;
                }
                ReportFormat::Json => {
                    let v: Vec<_> = atoms
                        .iter()
                        .map(|(a, k)| serde_json::json!({"atom": a.trim_matches(|c| c == '(' || c == ')'), "multiplicity": k}))
                        .collect();
                    write!(out, "{}", to_json(&serde_json::json!({"input": p.to_string(), "factors": v})))?;
                }
            }
            Ok(true)
        }
        Command::Symhodge { expr, n, out: format } => {
            let leaf = single_leaf(&expr)?;
            let (h, label) = match leaf {
                Leaf::Curve(g) => (HodgeVector::curve(g), None),
                Leaf::E => (HodgeVector::curve(1), None),
                Leaf::P(k) => (HodgeVector::projective(k as usize), None),
                Leaf::Surface { q, pg } => (HodgeVector::surface(q, pg), Some("leading-term model")),
                other => {
                    return Err(Error::Unsupported(format!(
                        "symhodge needs a curve, E, P(n) or surface leaf, got {other}"
                    )))
                }
            };
            let s = sym_power(&h, n);
            let word = psi_h(&s);
            match format {
                ReportFormat::Text => {
                    writeln!(out, "sym({leaf}, {n}): h^(k,0) = {s}")?;
                    writeln!(out, "Psi_h = {word}")?;
                    writeln!(out, "P_g = {}", pg(&s))?;
                    if let Some(l) = label {
                        writeln!(out, "note: measure of the symmetric product uses the {l}")?;
                    }
                }
                ReportFormat::Json => {
                    let v = serde_json::json!({
                        "variety": leaf.to_string(),
                        "n": n,
                        "hodge": s.h().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "psi_h": word.to_string(),
                        "pg": pg(&s).to_string(),
                        "leading_term_model": label.is_some(),
                    });
                    write!(out, "{}", to_json(&v))?;
                }
            }
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct ExampleResult {
    example: &'static str,
    terms: usize,
    identity: String,
    holds: bool,
}

fn run_examples(check: &[String], terms: usize, format: ReportFormat, out: &mut dyn Write) -> Result<bool, Error> {
    let mut results = Vec::new();
    for name in check {
        let ex = IdExample::from_name(name.trim())
            .ok_or_else(|| Error::Usage(format!("unknown example '{name}' (expected p1, p2, elliptic)")))?;
        let s = id_measure_series(ex, terms);
        let f = id_rational_form(ex);
        let holds = rational_check_mul(&s, &f.numerator, &f.denominator)?;
        let identity = format!(
            "({}) * zeta = {}",
            series_poly_text(&f.denominator),
            series_poly_text(&f.numerator)
        );
        results.push(ExampleResult { example: ex.name(), terms, identity, holds });
    }
    let all = results.iter().all(|r| r.holds);
    match format {
        ReportFormat::Json => write!(out, "{}", to_json(&results))?,
        ReportFormat::Text => {
            for r in &results {
                let status = if r.holds { "confirmed" } else { "FAILED" };
                writeln!(out, "{}: {} mod t^{} {status}", r.example, r.identity, r.terms + 1)?;
            }
        }
    }
    Ok(all)
}
