//! Command-line front end. `RunConfig` is the parsed command line; [`run`]
//! turns it into a [`Report`] plus an exit status, and [`render`] writes the
//! report as JSON or CSV.
//!
//! `λ` is always given in the coordinate where `ρ = d(n+1)/2` and
//! `c_P(ρ) = 1`; no other normalization is accepted.

mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

pub use report::{
    render, CpResult, CpRow, ErrorInfo, PolesResult, Report, ReportBody, SignatureInfo, SpectrumResult, SpectrumRow,
    Status, VerifyResult, SCHEMA_VERSION,
};

use crate::error::{Error, Result};
use crate::spectral::{c_p, enumerate_ktypes, eta, nu, omega, singular_points, FieldTag, GrassmannSignature, KType};
use crate::verify::{run_suite, Suite, Tolerances, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "coslambda", version, about = "K-spectra of the Cos^λ and Sin^λ transforms on Grassmannians")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,

    /// Worker threads for parallel numerics (defaults to all cores).
    #[arg(long, env = "COSLAMBDA_WORKERS", global = true)]
    #[serde(skip)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Command {
    /// η_μ(λ), ν_μ(λ) (when p = q) and ω(μ) for every K-type up to a degree.
    Spectrum(SpectrumArgs),
    /// c_P(λ) on a grid of λ, annotated with Gamma-factor poles.
    Cp(CpArgs),
    /// Run verification suites and report measured errors.
    Verify(VerifyArgs),
    /// Points on a λ-line where Gamma factors of c_P or η_μ are singular.
    Poles(PolesArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SignatureArgs {
    /// R, C or H.
    #[arg(long)]
    pub field: FieldTag,
    /// Grassmannian of p-planes in K^{n+1}.
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: u32,
}

impl SignatureArgs {
    fn signature(&self) -> Result<GrassmannSignature> {
        GrassmannSignature::new(self.n, self.p, self.field)
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpectrumArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub sig: SignatureArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub lambda_im: f64,
    /// Largest Σ|m_j|.
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CpArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub sig: SignatureArgs,
    /// Real part of the first grid point.
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub lambda_im: f64,
    /// Real part of the last grid point; a single point when omitted.
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_end: Option<f64>,
    /// Number of intervals between `--lambda` and `--lambda-end`.
    #[arg(long, default_value_t = 10)]
    pub steps: u32,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Monte Carlo samples per estimate.
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    /// Gauss–Legendre order of the S² grid.
    #[arg(long, default_value_t = 64)]
    pub grid_order: usize,
    /// Override a tolerance, `name=value`; repeatable.
    #[arg(long = "tolerance", value_name = "NAME=VALUE")]
    pub tolerances: Vec<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PolesArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub sig: SignatureArgs,
    /// K-type as comma-separated entries; the poles of c_P when omitted.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub mu: Option<Vec<i64>>,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub lambda_im: f64,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Cp(_) => "cp",
            Command::Verify(_) => "verify",
            Command::Poles(_) => "poles",
        }
    }
}

/// Runs the command inside a pool of `config.workers` threads, if set.
pub fn run(config: &RunConfig) -> (i32, Report) {
    let workers = config.workers.unwrap_or_else(rayon::current_num_threads);
    if workers == 0 {
        let err = Error::Config("--workers must be at least 1".into());
        return (EXIT_CONFIG, Report::error(config, workers, &err));
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(p) => p,
        Err(e) => {
            let err = Error::Config(format!("cannot start {workers} workers: {e}"));
            return (EXIT_CONFIG, Report::error(config, workers, &err));
        }
    };
    match pool.install(|| dispatch(&config.command)) {
        Ok(body) => {
            let failed = matches!(&body, ReportBody::Verify(v) if !v.passed);
            let (code, status) = if failed { (EXIT_VERIFY_FAILED, Status::Failed) } else { (EXIT_OK, Status::Ok) };
            (code, Report::new(config, workers, status, body))
        }
        Err(e) => (EXIT_CONFIG, Report::error(config, workers, &e)),
    }
}

fn dispatch(cmd: &Command) -> Result<ReportBody> {
    match cmd {
        Command::Spectrum(a) => spectrum(a).map(ReportBody::Spectrum),
        Command::Cp(a) => cp(a).map(ReportBody::Cp),
        Command::Verify(a) => verify(a).map(ReportBody::Verify),
        Command::Poles(a) => poles(a).map(ReportBody::Poles),
    }
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Config(format!("{name} must be finite, got {x}")))
    }
}

fn spectrum(a: &SpectrumArgs) -> Result<SpectrumResult> {
    let sig = a.sig.signature()?;
    check_finite("--lambda", a.lambda)?;
    check_finite("--lambda-im", a.lambda_im)?;
    let l = Complex64::new(a.lambda, a.lambda_im);
    let rows = enumerate_ktypes(&sig, a.max_degree)
        .into_iter()
        .map(|mu| {
            Ok(SpectrumRow {
                degree: mu.degree(),
                omega: omega(&sig, &mu)?,
                eta: eta(&sig, &mu, l)?,
                nu: if sig.is_square() { Some(nu(&sig, &mu, l)?) } else { None },
                mu,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SpectrumResult { signature: SignatureInfo::from(&sig), lambda: l.into(), max_degree: a.max_degree, rows })
}

fn cp(a: &CpArgs) -> Result<CpResult> {
    let sig = a.sig.signature()?;
    check_finite("--lambda", a.lambda)?;
    check_finite("--lambda-im", a.lambda_im)?;
    let grid: Vec<f64> = match a.lambda_end {
        None => vec![a.lambda],
        Some(end) => {
            check_finite("--lambda-end", end)?;
            if a.steps == 0 {
                return Err(Error::Config("--steps must be at least 1".into()));
            }
            let h = (end - a.lambda) / a.steps as f64;
            (0..=a.steps).map(|i| if i == a.steps { end } else { a.lambda + h * i as f64 }).collect()
        }
    };
    let (lo, hi) = grid.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    let points = singular_points(&sig, None, lo, hi, a.lambda_im)?;
    let rows = grid
        .iter()
        .map(|&x| {
            let l = Complex64::new(x, a.lambda_im);
            let singular = points
                .iter()
                .find(|s| a.lambda_im == 0.0 && (s.lambda - x).abs() <= 1e-9)
                .map(|s| s.hits.clone())
                .unwrap_or_default();
            Ok(CpRow { lambda: l.into(), c_p: c_p(&sig, l)?, singular })
        })
        .collect::<Result<_>>()?;
    Ok(CpResult { signature: SignatureInfo::from(&sig), rows, singular_points: points })
}

fn verify(a: &VerifyArgs) -> Result<VerifyResult> {
    let suites: Vec<Suite> = if a.suite == "all" { Suite::ALL.to_vec() } else { vec![a.suite.parse()?] };
    if a.samples < 2 {
        return Err(Error::Config("--samples must be at least 2".into()));
    }
    if a.grid_order == 0 {
        return Err(Error::Config("--grid-order must be positive".into()));
    }
    let mut tolerances = Tolerances::default();
    for t in &a.tolerances {
        let (key, value) =
            t.split_once('=').ok_or_else(|| Error::Config(format!("tolerance override {t:?} is not NAME=VALUE")))?;
        let value: f64 =
            value.trim().parse().map_err(|_| Error::Config(format!("tolerance {key} has bad value {value:?}")))?;
        tolerances.set(key.trim(), value)?;
    }
    let opts = VerifyOptions { seed: a.seed, samples: a.samples, grid_order: a.grid_order, tolerances };
    let reports = suites.into_iter().map(|s| run_suite(s, &opts)).collect::<Result<Vec<_>>>()?;
    Ok(VerifyResult {
        seed: opts.seed,
        samples: opts.samples,
        grid_order: opts.grid_order,
        tolerances: opts.tolerances,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    })
}

fn poles(a: &PolesArgs) -> Result<PolesResult> {
    let sig = a.sig.signature()?;
    for (name, x) in [("--from", a.from), ("--to", a.to), ("--lambda-im", a.lambda_im)] {
        check_finite(name, x)?;
    }
    if a.from > a.to {
        return Err(Error::Config(format!("--from {} is above --to {}", a.from, a.to)));
    }
    let mu = a.mu.clone().map(KType::new);
    let points = singular_points(&sig, mu.as_ref(), a.from, a.to, a.lambda_im)?;
    Ok(PolesResult {
        signature: SignatureInfo::from(&sig),
        mu,
        from: a.from,
        to: a.to,
        lambda_im: a.lambda_im,
        singular_points: points,
    })
}

/// Parses `args` (program name first), runs, and returns the exit code with
/// the rendered report. Help and version requests come back as exit 0 with
/// clap's text.
pub fn main_with_args<I, T>(args: I) -> (i32, String, Option<PathBuf>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let config = match RunConfig::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (EXIT_OK, e.to_string(), None);
            }
            let format = sniff_format(&args);
            let report = Report::usage_error(&e.render().to_string());
            return (EXIT_CONFIG, render(&report, format), None);
        }
    };
    let (code, report) = run(&config);
    (code, render(&report, config.format), config.output.clone())
}

/// `--format` as written on a command line that failed to parse.
fn sniff_format(args: &[std::ffi::OsString]) -> Format {
    let mut it = args.iter().filter_map(|a| a.to_str());
    while let Some(a) = it.next() {
        if a == "--format=csv" || (a == "--format" && it.next() == Some("csv")) {
            return Format::Csv;
        }
    }
    Format::Json
}
