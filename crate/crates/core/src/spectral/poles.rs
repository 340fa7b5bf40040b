//! Singular hyperplanes of the Gamma factors met along a horizontal line in
//! the `λ`-plane.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eigen::{c_p_factors, eta_factors};
use super::{c_p, eta, GrassmannSignature, KType, SpectralValue};
use crate::error::{Error, Result};

/// One Gamma factor entry sitting on a pole.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorHit {
    /// Argument of the `Γ_{p,d}` factor, e.g. `(λ+ρ)/2`.
    pub factor: String,
    pub numerator: bool,
    /// 1-based index `j` of the entry inside `Γ_{p,d}`.
    pub j: usize,
    /// The entry equals `−k`.
    pub k: u64,
}

/// A real `λ` where at least one factor is singular, and what the full
/// product does there (pole, zero, or a removable finite value).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub lambda: f64,
    pub hits: Vec<FactorHit>,
    pub value: SpectralValue,
}

const MERGE_TOL: f64 = 1e-9;

/// Walks `λ = x + i·im`, `x ∈ [lo, hi]`, and lists every point where a
/// `Γ_{p,d}` factor of `c_P` (when `mu` is `None`) or of `η_μ` has a pole.
///
/// The factors' arguments have real slopes, so nothing is hit off the real
/// axis.
pub fn singular_points(
    sig: &GrassmannSignature,
    mu: Option<&KType>,
    lo: f64,
    hi: f64,
    im: f64,
) -> Result<Vec<SingularPoint>> {
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::Domain(format!("bad λ range [{lo}, {hi}]")));
    }
    if let Some(mu) = mu {
        mu.validate(sig)?;
    }
    if im != 0.0 {
        return Ok(Vec::new());
    }
    let factors = match mu {
        Some(mu) => eta_factors(sig, mu),
        None => c_p_factors(sig),
    };
    let mut raw: Vec<(f64, FactorHit)> = Vec::new();
    for f in &factors {
        for j in 0..f.len() {
            for (x, k) in f.poles_between(sig.d(), j, lo, hi) {
                raw.push((x, FactorHit { factor: f.label.clone(), numerator: f.numerator, j: j + 1, k }));
            }
        }
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.factor.cmp(&b.1.factor)).then(a.1.j.cmp(&b.1.j)));

    let mut out: Vec<SingularPoint> = Vec::new();
    for (x, hit) in raw {
        match out.last_mut() {
            Some(last) if (last.lambda - x).abs() <= MERGE_TOL * x.abs().max(1.0) => last.hits.push(hit),
            _ => out.push(SingularPoint { lambda: x + 0.0, hits: vec![hit], value: SpectralValue::Zero { order: 0 } }),
        }
    }
    for point in &mut out {
        let l = Complex64::new(point.lambda, 0.0);
        point.value = match mu {
            Some(mu) => eta(sig, mu, l)?,
            None => c_p(sig, l)?,
        };
    }
    Ok(out)
}
