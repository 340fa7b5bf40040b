//! Report documents and their JSON/CSV renderings. The JSON layout is
//! described by `schema/report.schema.json`; CSV columns per command are
//! fixed:
//!
//! | command  | columns |
//! |----------|---------|
//! | spectrum | `mu,degree,omega,eta_tag,eta_re,eta_im,eta_order,nu_tag,nu_re,nu_im,nu_order` |
//! | cp       | `lambda_re,lambda_im,tag,re,im,order,singular_factors` |
//! | verify   | `suite,check,cases,measured,tolerance,passed` |
//! | poles    | `lambda,tag,re,im,order,factor,numerator,j,k` (one row per factor hit) |
//! | errors   | `kind,message` |

use num_complex::Complex64;
use serde::Serialize;

use super::{Format, RunConfig};
use crate::error::Error;
use crate::spectral::{FactorHit, FieldTag, GrassmannSignature, KType, SingularPoint, SpectralValue};
use crate::verify::{SuiteReport, Tolerances};

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignatureInfo {
    pub field: FieldTag,
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub d: u32,
    pub rho: f64,
}

impl From<&GrassmannSignature> for SignatureInfo {
    fn from(s: &GrassmannSignature) -> Self {
        SignatureInfo { field: s.field(), n: s.n(), p: s.p(), q: s.q(), d: s.d(), rho: s.rho() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub mu: KType,
    pub degree: i64,
    pub omega: f64,
    pub eta: SpectralValue,
    /// Present only when `p = q`.
    pub nu: Option<SpectralValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub signature: SignatureInfo,
    pub lambda: ComplexJson,
    pub max_degree: u32,
    pub rows: Vec<SpectrumRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CpRow {
    pub lambda: ComplexJson,
    pub c_p: SpectralValue,
    /// Gamma-factor entries singular at this grid point.
    pub singular: Vec<FactorHit>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CpResult {
    pub signature: SignatureInfo,
    pub rows: Vec<CpRow>,
    /// Every singular point between the smallest and largest grid value.
    pub singular_points: Vec<SingularPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyResult {
    pub seed: u64,
    pub samples: u64,
    pub grid_order: usize,
    pub tolerances: Tolerances,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolesResult {
    pub signature: SignatureInfo,
    pub mu: Option<KType>,
    pub from: f64,
    pub to: f64,
    pub lambda_im: f64,
    pub singular_points: Vec<SingularPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ReportBody {
    Spectrum(SpectrumResult),
    Cp(CpResult),
    Verify(VerifyResult),
    Poles(PolesResult),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        let kind = match e {
            Error::Pole { .. } => "pole",
            Error::InvalidSignature(_) => "invalid_signature",
            Error::InvalidKType { .. } => "invalid_ktype",
            Error::Domain(_) => "domain",
            Error::NonConvergence(_) => "non_convergence",
            Error::Config(_) => "config",
        };
        ErrorInfo { kind: kind.into(), message: e.to_string() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    /// `None` when the command line did not parse.
    pub command: Option<&'static str>,
    pub status: Status,
    pub workers: Option<usize>,
    pub config: Option<super::Command>,
    pub result: Option<ReportBody>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    fn blank(status: Status) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: None,
            status,
            workers: None,
            config: None,
            result: None,
            error: None,
        }
    }

    pub(super) fn new(config: &RunConfig, workers: usize, status: Status, body: ReportBody) -> Self {
        Report {
            command: Some(config.command.name()),
            workers: Some(workers),
            config: Some(config.command.clone()),
            result: Some(body),
            ..Report::blank(status)
        }
    }

    pub(super) fn error(config: &RunConfig, workers: usize, e: &Error) -> Self {
        Report {
            command: Some(config.command.name()),
            workers: Some(workers),
            config: Some(config.command.clone()),
            error: Some(e.into()),
            ..Report::blank(Status::Error)
        }
    }

    pub(super) fn usage_error(message: &str) -> Self {
        Report {
            error: Some(ErrorInfo { kind: "usage".into(), message: message.trim_end().into() }),
            ..Report::blank(Status::Error)
        }
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
    }
}

/// Shortest round-trip form, exponent notation for tiny and huge values.
fn num(x: f64) -> String {
    match serde_json::Number::from_f64(x) {
        Some(n) => n.to_string(),
        None if x.is_nan() => "nan".into(),
        None => if x > 0.0 { "inf" } else { "-inf" }.into(),
    }
}

/// `tag, re, im, order` cells.
fn value_cells(v: Option<&SpectralValue>) -> [String; 4] {
    match v {
        None => Default::default(),
        Some(SpectralValue::Finite { re, im }) => ["finite".into(), num(*re), num(*im), String::new()],
        Some(SpectralValue::Pole { order }) => ["pole".into(), String::new(), String::new(), order.to_string()],
        Some(SpectralValue::Zero { order }) => ["zero".into(), String::new(), String::new(), order.to_string()],
    }
}

fn describe_hit(h: &FactorHit) -> String {
    let side = if h.numerator { "num" } else { "den" };
    format!("{side}:{}[j={},k={}]", h.factor, h.j, h.k)
}

fn render_csv(report: &Report) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let mut rows: Vec<Vec<String>> = Vec::new();
    match (&report.result, &report.error) {
        (_, Some(e)) => {
            rows.push(vec!["kind".into(), "message".into()]);
            rows.push(vec![e.kind.clone(), e.message.clone()]);
        }
        (Some(ReportBody::Spectrum(s)), None) => {
            rows.push(
                "mu,degree,omega,eta_tag,eta_re,eta_im,eta_order,nu_tag,nu_re,nu_im,nu_order"
                    .split(',')
                    .map(String::from)
                    .collect(),
            );
            for r in &s.rows {
                let mut row = vec![r.mu.to_string(), r.degree.to_string(), num(r.omega)];
                row.extend(value_cells(Some(&r.eta)));
                row.extend(value_cells(r.nu.as_ref()));
                rows.push(row);
            }
        }
        (Some(ReportBody::Cp(c)), None) => {
            rows.push("lambda_re,lambda_im,tag,re,im,order,singular_factors".split(',').map(String::from).collect());
            for r in &c.rows {
                let mut row = vec![num(r.lambda.re), num(r.lambda.im)];
                row.extend(value_cells(Some(&r.c_p)));
                row.push(r.singular.iter().map(describe_hit).collect::<Vec<_>>().join(";"));
                rows.push(row);
            }
        }
        (Some(ReportBody::Verify(v)), None) => {
            rows.push("suite,check,cases,measured,tolerance,passed".split(',').map(String::from).collect());
            for s in &v.suites {
                for c in &s.checks {
                    rows.push(vec![
                        s.suite.to_string(),
                        c.name.clone(),
                        c.cases.to_string(),
                        num(c.measured),
                        num(c.tolerance),
                        c.passed.to_string(),
                    ]);
                }
            }
        }
        (Some(ReportBody::Poles(p)), None) => {
            rows.push("lambda,tag,re,im,order,factor,numerator,j,k".split(',').map(String::from).collect());
            for s in &p.singular_points {
                for h in &s.hits {
                    let mut row = vec![num(s.lambda)];
                    row.extend(value_cells(Some(&s.value)));
                    row.extend([h.factor.clone(), h.numerator.to_string(), h.j.to_string(), h.k.to_string()]);
                    rows.push(row);
                }
            }
        }
        (None, None) => {}
    }
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}
