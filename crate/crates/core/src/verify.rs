//! Verification suites comparing the closed forms against each other and
//! against independent numerics. Each suite returns measured errors next to
//! pinned tolerances; nothing here depends on wall-clock time, so reports are
//! reproducible for a fixed seed.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{alpha_p, cos_angle, haar_sample, torus_point};
use crate::spectral::{
    c_p, enumerate_ktypes, eta, eta_by_recursion, nu, sphere_eta, FieldTag, GrassmannSignature, KType, SpectralValue,
};
use crate::transform::{
    cos_transform_sphere, funk_hecke_1d, mc_c_p, mc_transform_ktype, selberg_closed, selberg_oracle,
    sin_transform_numeric, zonal, SphereGrid,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Recursion,
    FunctionalEquation,
    Normalization,
    Sphere,
    Quadrature,
    MonteCarlo,
    HigherRank,
    Selberg,
    Sin,
    Geometry,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Recursion,
        Suite::FunctionalEquation,
        Suite::Normalization,
        Suite::Sphere,
        Suite::Quadrature,
        Suite::MonteCarlo,
        Suite::HigherRank,
        Suite::Selberg,
        Suite::Sin,
        Suite::Geometry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recursion => "recursion",
            Suite::FunctionalEquation => "functional-equation",
            Suite::Normalization => "normalization",
            Suite::Sphere => "sphere",
            Suite::Quadrature => "quadrature",
            Suite::MonteCarlo => "monte-carlo",
            Suite::HigherRank => "higher-rank",
            Suite::Selberg => "selberg",
            Suite::Sin => "sin",
            Suite::Geometry => "geometry",
        }
    }

    fn stream(self) -> u64 {
        Suite::ALL.iter().position(|s| *s == self).unwrap() as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Config(format!("unknown suite {s:?} (expected one of {} or all)", names.join(", ")))
        })
    }
}

/// Tolerances used by the suites. Relative unless noted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub recursion: f64,
    pub functional_equation: f64,
    /// Absolute.
    pub normalization: f64,
    pub sphere_closed: f64,
    pub sphere_quadrature: f64,
    /// Absolute, on zonal harmonics with sup norm 1.
    pub grid_transform: f64,
    /// Absolute.
    pub odd_annihilation: f64,
    /// Estimates must land within this many standard errors.
    pub mc_sigmas: f64,
    /// Largest allowed `stderr / |value|` for `c_P` estimates.
    pub mc_relative_stderr: f64,
    pub selberg: f64,
    pub sin_sign: f64,
    /// Absolute.
    pub cos_alpha: f64,
    /// Absolute.
    pub alpha_symmetry: f64,
    /// Absolute.
    pub torus: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            recursion: 1e-10,
            functional_equation: 1e-11,
            normalization: 1e-13,
            sphere_closed: 1e-12,
            sphere_quadrature: 1e-7,
            grid_transform: 1e-4,
            odd_annihilation: 1e-10,
            mc_sigmas: 3.0,
            mc_relative_stderr: 0.01,
            selberg: 1e-6,
            sin_sign: 1e-12,
            cos_alpha: 1e-10,
            alpha_symmetry: 1e-12,
            torus: 1e-12,
        }
    }
}

impl Tolerances {
    /// Overrides one field by its snake-case name.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Config(format!("tolerance {key} must be positive, got {value}")));
        }
        let slot = match key {
            "recursion" => &mut self.recursion,
            "functional_equation" => &mut self.functional_equation,
            "normalization" => &mut self.normalization,
            "sphere_closed" => &mut self.sphere_closed,
            "sphere_quadrature" => &mut self.sphere_quadrature,
            "grid_transform" => &mut self.grid_transform,
            "odd_annihilation" => &mut self.odd_annihilation,
            "mc_sigmas" => &mut self.mc_sigmas,
            "mc_relative_stderr" => &mut self.mc_relative_stderr,
            "selberg" => &mut self.selberg,
            "sin_sign" => &mut self.sin_sign,
            "cos_alpha" => &mut self.cos_alpha,
            "alpha_symmetry" => &mut self.alpha_symmetry,
            "torus" => &mut self.torus,
            other => return Err(Error::Config(format!("unknown tolerance {other:?}"))),
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Monte Carlo sample count per estimate.
    pub samples: u64,
    /// Gauss–Legendre order of the `S²` grid.
    pub grid_order: usize,
    pub tolerances: Tolerances,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 42, samples: 1_000_000, grid_order: 64, tolerances: Tolerances::default() }
    }
}

/// One comparison: `measured` must not exceed `tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, cases: u64, measured: f64, tolerance: f64) -> Self {
        Check { name: name.into(), cases, measured, tolerance, passed: measured <= tolerance }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

fn finite(v: SpectralValue) -> Option<Complex64> {
    match v {
        SpectralValue::Finite { .. } => Some(v.unwrap_finite()),
        _ => None,
    }
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-8.0..12.0), rng.random_range(-5.0..5.0))
}

/// Tracks the worst error over many cases.
#[derive(Default)]
struct Worst {
    cases: u64,
    err: f64,
}

impl Worst {
    fn push(&mut self, e: f64) {
        self.cases += 1;
        // NaN must fail the check, not vanish in max().
        self.err = if e.is_nan() || self.err.is_nan() { f64::NAN } else { self.err.max(e) };
    }

    fn check(&self, name: &str, tol: f64) -> Check {
        let measured = if self.err.is_nan() { f64::INFINITY } else { self.err };
        Check::new(name, self.cases, measured, tol)
    }
}

/// A finite/finite comparison, or equality of pole/zero markers.
fn compare(w: &mut Worst, a: SpectralValue, b: SpectralValue) {
    match (finite(a), finite(b)) {
        (Some(x), Some(y)) => w.push(rel(x, y)),
        _ => w.push(if a == b { 0.0 } else { f64::INFINITY }),
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(suite.stream());
    let tol = &opts.tolerances;
    let checks = match suite {
        Suite::Recursion => recursion(&mut rng, tol)?,
        Suite::FunctionalEquation => functional_equation(&mut rng, tol)?,
        Suite::Normalization => normalization(tol)?,
        Suite::Sphere => sphere(&mut rng, tol)?,
        Suite::Quadrature => quadrature(opts)?,
        Suite::MonteCarlo => monte_carlo(opts)?,
        Suite::HigherRank => higher_rank(opts)?,
        Suite::Selberg => selberg(&mut rng, tol)?,
        Suite::Sin => sin(&mut rng, opts)?,
        Suite::Geometry => geometry(&mut rng, tol)?,
    };
    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport { suite, passed, checks })
}

fn recursion(rng: &mut ChaCha8Rng, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut w = Worst::default();
    for sig in GrassmannSignature::all_up_to(6) {
        for mu in enumerate_ktypes(&sig, 12) {
            for _ in 0..10 {
                let l = random_lambda(rng);
                compare(&mut w, eta_by_recursion(&sig, &mu, l)?, eta(&sig, &mu, l)?);
            }
        }
    }
    Ok(vec![w.check("eta_by_recursion vs eta", tol.recursion)])
}

fn random_case(rng: &mut ChaCha8Rng, max_n: u32) -> (GrassmannSignature, KType) {
    let sigs = GrassmannSignature::all_up_to(max_n);
    let sig = sigs[rng.random_range(0..sigs.len())];
    let types = enumerate_ktypes(&sig, 12);
    let mu = types[rng.random_range(0..types.len())].clone();
    (sig, mu)
}

fn functional_equation(rng: &mut ChaCha8Rng, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut w = Worst::default();
    while w.cases < 200 {
        let (sig, mu) = random_case(rng, 6);
        let l = random_lambda(rng);
        let parts =
            (finite(eta(&sig, &mu, l)?), finite(eta(&sig, &mu, -l)?), finite(c_p(&sig, l)?), finite(c_p(&sig, -l)?));
        if let (Some(a), Some(b), Some(c), Some(d)) = parts {
            w.push(rel(a * b, c * d));
        }
    }
    Ok(vec![w.check("eta(λ)eta(-λ) vs c_P(λ)c_P(-λ)", tol.functional_equation)])
}

fn normalization(tol: &Tolerances) -> Result<Vec<Check>> {
    let mut w = Worst::default();
    for sig in GrassmannSignature::all_up_to(8) {
        match c_p(&sig, Complex64::new(sig.rho(), 0.0))? {
            SpectralValue::Finite { re, im } => w.push(Complex64::new(re - 1.0, im).norm()),
            _ => w.push(f64::INFINITY),
        }
    }
    Ok(vec![w.check("|c_P(rho) - 1|", tol.normalization)])
}

fn sphere(rng: &mut ChaCha8Rng, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut closed = Worst::default();
    let mut quad = Worst::default();
    for n in 2..=4u32 {
        let sig = GrassmannSignature::sphere(n)?;
        let rho = sig.rho();
        for m in [0i64, 2, 4, 6] {
            let mut lambdas: Vec<Complex64> = [0.5, 1.0, 2.5].iter().map(|s| Complex64::new(rho + s, 0.0)).collect();
            lambdas.extend((0..5).map(|_| random_lambda(rng)));
            for (i, &l) in lambdas.iter().enumerate() {
                let s = sphere_eta(n, m, l)?;
                compare(&mut closed, s, eta(&sig, &KType::new(vec![m]), l)?);
                if i < 3 {
                    match finite(s) {
                        Some(v) => quad.push(rel(funk_hecke_1d(n, m, l)?, v)),
                        None => quad.push(f64::INFINITY),
                    }
                }
            }
        }
    }
    Ok(vec![
        closed.check("sphere_eta vs eta", tol.sphere_closed),
        quad.check("funk_hecke_1d vs sphere_eta", tol.sphere_quadrature),
    ])
}

fn quadrature(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = &opts.tolerances;
    let grid = SphereGrid::new(2, opts.grid_order)?;
    let l = Complex64::new(1.5 + 2.0, 0.0);
    let pole = {
        let v = [0.3f64, -0.5, 0.81];
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.map(|x| x / r)
    };
    let zonal_values = |m: u32| -> Vec<Complex64> {
        grid.points
            .iter()
            .map(|x| Complex64::new(zonal(2, m, x.iter().zip(&pole).map(|(a, b)| a * b).sum()), 0.0))
            .collect()
    };
    let mut even = Worst::default();
    for m in [0u32, 2, 4] {
        let f = zonal_values(m);
        let eig = sphere_eta(2, m as i64, l)?.value().unwrap_or(Complex64::new(f64::NAN, 0.0));
        let out = cos_transform_sphere(2, l, &f, &grid)?;
        for (y, v) in f.iter().zip(&out) {
            even.push((v - eig * y).norm());
        }
    }
    let mut odd = Worst::default();
    for m in [1u32, 3, 5] {
        let f = zonal_values(m);
        for v in cos_transform_sphere(2, l, &f, &grid)? {
            odd.push(v.norm());
        }
    }
    Ok(vec![
        even.check("grid transform of zonal m=0,2,4 vs sphere_eta", tol.grid_transform),
        odd.check("odd harmonics annihilated", tol.odd_annihilation),
    ])
}

/// `|estimate − value| / stderr` and `stderr / |value|`.
fn mc_checks(
    name: &str,
    est: crate::transform::McEstimate,
    value: Complex64,
    tol: &Tolerances,
    rel_stderr: bool,
) -> Vec<Check> {
    let dev = (est.mean - value).norm();
    let sigmas = if est.stderr > 0.0 {
        dev / est.stderr
    } else if dev == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let mut out = vec![Check::new(format!("{name}: deviation in stderr units"), est.samples, sigmas, tol.mc_sigmas)];
    if rel_stderr {
        out.push(Check::new(
            format!("{name}: stderr / |value|"),
            est.samples,
            est.stderr / value.norm(),
            tol.mc_relative_stderr,
        ));
    }
    out
}

fn monte_carlo(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let cases =
        [(2, 1, FieldTag::Real), (3, 2, FieldTag::Real), (3, 2, FieldTag::Complex), (3, 2, FieldTag::Quaternion)];
    let mut out = Vec::new();
    for (i, (n, p, f)) in cases.into_iter().enumerate() {
        let sig = GrassmannSignature::new(n, p, f)?;
        let l = Complex64::new(sig.rho() + 1.0, 0.0);
        let est = mc_c_p(&sig, l, opts.samples, opts.seed.wrapping_add(i as u64))?;
        let value = c_p(&sig, l)?.unwrap_finite();
        out.extend(mc_checks(&format!("c_P on {sig}"), est, value, &opts.tolerances, true));
    }
    Ok(out)
}

fn higher_rank(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let sig = GrassmannSignature::new(3, 2, FieldTag::Real)?;
    let mu = KType::first_step(2);
    let l = Complex64::new(sig.rho() + 2.0, 0.0);
    let est = mc_transform_ktype(&sig, l, &mu, opts.samples, opts.seed.wrapping_add(100))?;
    let value = eta(&sig, &mu, l)?.unwrap_finite();
    Ok(mc_checks(&format!("eta_{mu} on {sig}"), est, value, &opts.tolerances, false))
}

fn selberg(rng: &mut ChaCha8Rng, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in 1..=2u32 {
        let mut w = Worst::default();
        for _ in 0..20 {
            let a = rng.random_range(0.25..2.0);
            let g1 = rng.random_range(1.0..4.0);
            let g2 = rng.random_range(1.0..4.0);
            let closed = selberg_closed(p, Complex64::new(a, 0.0), Complex64::new(g1, 0.0), Complex64::new(g2, 0.0))?;
            match finite(closed) {
                Some(v) => w.push(rel(Complex64::new(selberg_oracle(p, a, g1, g2, 8)?, 0.0), v)),
                None => w.push(f64::INFINITY),
            }
        }
        out.push(w.check(&format!("selberg_closed vs quadrature, p={p}"), tol.selberg));
    }
    Ok(out)
}

fn sin(rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let tol = &opts.tolerances;
    let mut out = Vec::new();
    for (i, (n, p)) in [(1u32, 1u32), (3, 2)].into_iter().enumerate() {
        let sig = GrassmannSignature::new(n, p, FieldTag::Real)?;
        let mu = KType::first_step(p as usize);
        let l = Complex64::new(sig.rho() + 2.0, 0.0);
        let est = sin_transform_numeric(&sig, l, &mu, opts.samples, opts.seed.wrapping_add(200 + i as u64))?;
        let value = nu(&sig, &mu, l)?.unwrap_finite();
        out.extend(mc_checks(&format!("nu_{mu} on {sig}"), est, value, tol, false));
    }
    let mut sign = Worst::default();
    for sig in GrassmannSignature::all_up_to(7).into_iter().filter(|s| s.is_square()) {
        for mu in enumerate_ktypes(&sig, 12) {
            for _ in 0..3 {
                let l = random_lambda(rng);
                let e = eta(&sig, &mu, l)?;
                let flipped = match e {
                    SpectralValue::Finite { re, im } if mu.degree().rem_euclid(4) == 2 => {
                        SpectralValue::Finite { re: -re, im: -im }
                    }
                    other => other,
                };
                compare(&mut sign, nu(&sig, &mu, l)?, flipped);
            }
        }
    }
    out.push(sign.check("nu vs (-1)^{|mu|/2} eta", tol.sin_sign));
    Ok(out)
}

fn geometry(rng: &mut ChaCha8Rng, tol: &Tolerances) -> Result<Vec<Check>> {
    let mut cos_alpha = Worst::default();
    let mut symmetry = Worst::default();
    let mut torus = Worst::default();
    for f in FieldTag::ALL {
        let sigs: Vec<GrassmannSignature> =
            GrassmannSignature::all_up_to(5).into_iter().filter(|s| s.field() == f).collect();
        for i in 0..1000 {
            let sig = sigs[i % sigs.len()];
            let k = haar_sample(&sig, rng);
            let h = haar_sample(&sig, rng);
            let a = cos_angle(&k.base_image(), &h.base_image());
            let b = alpha_p(&sig, &h.inverse().compose(&k));
            cos_alpha.push((a - b).abs());
            symmetry.push((alpha_p(&sig, &k) - alpha_p(&sig, &k.inverse())).abs());
            let t: Vec<f64> =
                (0..sig.p()).map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();
            let want: f64 = t.iter().map(|x| x.cos().abs()).product();
            torus.push((alpha_p(&sig, &torus_point(&sig, &t)?) - want).abs());
        }
    }
    Ok(vec![
        cos_alpha.check("cos_angle(k b_o, h b_o) vs alpha_p(h^-1 k)", tol.cos_alpha),
        symmetry.check("alpha_p(k) vs alpha_p(k^-1)", tol.alpha_symmetry),
        torus.check("alpha_p(torus_point(t)) vs prod |cos t_j|", tol.torus),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.set("selberg", 1e-3).unwrap();
        assert_eq!(t.selberg, 1e-3);
        assert!(t.set("nope", 1.0).is_err());
        assert!(t.set("selberg", -1.0).is_err());
    }

    #[test]
    fn fast_suites_pass() {
        let opts = VerifyOptions::default();
        for s in [Suite::FunctionalEquation, Suite::Normalization, Suite::Selberg] {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn nan_fails_a_check() {
        let mut w = Worst::default();
        w.push(0.0);
        w.push(f64::NAN);
        w.push(0.0);
        assert!(!w.check("x", 1.0).passed);
    }
}
