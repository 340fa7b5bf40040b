use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{chebyshev_t, gauss_legendre, gegenbauer, integrate_adaptive, log_gamma};

/// Quadrature on `S^1` or `S^2` for the normalized rotation-invariant
/// measure. Every grid is symmetric under `x ↦ −x` with matching weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    pub n: u32,
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

impl SphereGrid {
    /// `S^1`: `2·order` equally spaced angles. `S^2`: Gauss–Legendre of the
    /// given order in `cos θ` times `2·order` equally spaced longitudes.
    pub fn new(n: u32, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("grid order must be positive".into()));
        }
        let mut points = Vec::new();
        let mut weights = Vec::new();
        match n {
            1 => {
                let m = 2 * order;
                for k in 0..m {
                    let phi = 2.0 * PI * (k as f64 + 0.5) / m as f64;
                    points.push(vec![phi.cos(), phi.sin()]);
                    weights.push(1.0 / m as f64);
                }
            }
            2 => {
                let rule = gauss_legendre(order);
                let m = 2 * order;
                for (z, w) in rule.iter() {
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    for k in 0..m {
                        let phi = 2.0 * PI * (k as f64 + 0.5) / m as f64;
                        points.push(vec![r * phi.cos(), r * phi.sin(), z]);
                        weights.push(w / (2.0 * m as f64));
                    }
                }
            }
            _ => return Err(Error::Domain(format!("sphere grids exist for n = 1, 2 only, got {n}"))),
        }
        Ok(SphereGrid { n, points, weights })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_lambda(rho: f64, lambda: Complex64) -> Result<()> {
    if lambda.re < rho || !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::Domain(format!("the transform integral needs Re λ >= ρ = {rho}, got λ = {lambda}")));
    }
    Ok(())
}

/// `|t|^s`, with `0^0 = 1` and `0^s = 0` for `Re s > 0`.
pub(crate) fn abs_pow(t: f64, s: Complex64) -> Complex64 {
    let a = t.abs();
    if s == Complex64::new(0.0, 0.0) {
        Complex64::new(1.0, 0.0)
    } else if a == 0.0 {
        Complex64::new(0.0, 0.0)
    } else if s.im == 0.0 && s.re.fract() == 0.0 && s.re.abs() <= 64.0 {
        Complex64::new(a.powi(s.re as i32), 0.0)
    } else if s.im == 0.0 {
        Complex64::new(a.powf(s.re), 0.0)
    } else {
        (s * a.ln()).exp()
    }
}

/// `(C^λ f)(ω_i) = Σ_j w_j |⟨x_j, ω_i⟩|^{λ−ρ} f(x_j)` at every grid node,
/// `ρ = (n+1)/2`. `f` holds the values of the function at the grid points.
pub fn cos_transform_sphere(n: u32, lambda: Complex64, f: &[Complex64], grid: &SphereGrid) -> Result<Vec<Complex64>> {
    if grid.n != n {
        return Err(Error::Domain(format!("grid is on S^{}, transform asked on S^{n}", grid.n)));
    }
    if f.len() != grid.len() {
        return Err(Error::Domain(format!("{} function values for {} grid points", f.len(), grid.len())));
    }
    let rho = (n + 1) as f64 / 2.0;
    check_lambda(rho, lambda)?;
    let s = lambda - rho;
    let weighted: Vec<Complex64> = f.iter().zip(&grid.weights).map(|(v, w)| v * *w).collect();
    let dim = n as usize + 1;
    let flat: Vec<f64> = grid.points.iter().flatten().copied().collect();
    Ok(grid
        .points
        .par_iter()
        .map(|omega| {
            flat.chunks_exact(dim)
                .zip(&weighted)
                .map(|(x, fw)| {
                    let t: f64 = x.iter().zip(omega).map(|(a, b)| a * b).sum();
                    abs_pow(t, s) * fw
                })
                .sum()
        })
        .collect())
}

/// Normalized zonal polynomial of degree `m` on `S^n`: `C_m^{(n−1)/2}(t)`
/// divided by its value at `1` (`cos(m·arccos t)` on the circle).
pub fn zonal(n: u32, m: u32, t: f64) -> f64 {
    if n == 1 {
        chebyshev_t(m, t)
    } else {
        let nu = (n as f64 - 1.0) / 2.0;
        gegenbauer(m, nu, t) / gegenbauer(m, nu, 1.0)
    }
}

const FUNK_HECKE_TOL: f64 = 1e-13;

/// Eigenvalue of the Cos^λ transform on degree-`m` harmonics of `S^n` as a
/// one-dimensional integral
///
/// `c_n ∫_{−1}^{1} |t|^{λ−ρ} Z_m(t) (1 − t²)^{(n−2)/2} dt`
///
/// with `Z_m` the normalized zonal polynomial and `c_n` making the `m = 0`,
/// `λ = ρ` value `1`. Evaluated as `t = cos θ`, split at `t = 0`.
pub fn funk_hecke_1d(n: u32, m: i64, lambda: Complex64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::Domain("sphere dimension must be >= 1".into()));
    }
    if m < 0 || m % 2 != 0 {
        return Err(Error::InvalidKType { mu: vec![m], reason: "degree must be even and nonnegative".into() });
    }
    let rho = (n + 1) as f64 / 2.0;
    check_lambda(rho, lambda)?;
    let s = lambda - rho;
    // The integrand is even in t, so twice the integral over θ ∈ [0, π/2].
    let half = integrate_adaptive(
        |theta| {
            let t = theta.cos();
            abs_pow(t, s) * zonal(n, m as u32, t) * theta.sin().powi(n as i32 - 1)
        },
        0.0,
        PI / 2.0,
        FUNK_HECKE_TOL,
    )?;
    // ∫_0^π sin^{n−1}θ dθ = √π Γ(n/2) / Γ((n+1)/2)
    let total = (0.5 * PI.ln() + log_gamma(Complex64::new(n as f64 / 2.0, 0.0))?.re
        - log_gamma(Complex64::new((n + 1) as f64 / 2.0, 0.0))?.re)
        .exp();
    Ok(2.0 * half / total)
}
