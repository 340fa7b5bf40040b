use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::{gauss_jacobi, QuadratureRule1D};
use crate::spectral::{LeadingTerm, SpectralValue};

/// Selberg's integral in closed form:
///
/// `S_p(α, γ₁, γ₂) = Π_{j=1}^p Γ(αj+1) Γ(α(j−1)+γ₁) Γ(α(j−1)+γ₂) / (Γ(α+1) Γ(α(p+j−2)+γ₁+γ₂))`.
pub fn selberg_closed(p: u32, alpha: Complex64, g1: Complex64, g2: Complex64) -> Result<SpectralValue> {
    if p == 0 {
        return Err(Error::Domain("Selberg integral needs p >= 1".into()));
    }
    let mut acc = LeadingTerm::ONE;
    for j in 1..=p {
        let j = j as f64;
        acc = acc
            * LeadingTerm::gamma(1.0, alpha * j + 1.0)?
            * LeadingTerm::gamma(1.0, alpha * (j - 1.0) + g1)?
            * LeadingTerm::gamma(1.0, alpha * (j - 1.0) + g2)?
            / LeadingTerm::gamma(1.0, alpha + 1.0)?
            / LeadingTerm::gamma(1.0, alpha * (p as f64 + j - 2.0) + g1 + g2)?;
    }
    acc.evaluate()
}

/// Gauss–Jacobi rule on `[0, 1]` for the weight `u^c (1 − u)^e`.
fn unit_jacobi(order: usize, c: f64, e: f64) -> Result<QuadratureRule1D> {
    let rule = gauss_jacobi(order, e, c)?;
    let scale = 2f64.powf(-(c + e + 1.0));
    Ok(QuadratureRule1D {
        nodes: rule.nodes.iter().map(|x| 0.5 * (x + 1.0)).collect(),
        weights: rule.weights.iter().map(|w| w * scale).collect(),
    })
}

fn selberg_at_order(p: u32, alpha: f64, g1: f64, g2: f64, order: usize) -> Result<f64> {
    match p {
        1 => Ok(unit_jacobi(order, g1 - 1.0, g2 - 1.0)?.weights.iter().sum()),
        _ => {
            // Over t₁ < t₂ with t₂ = v, t₁ = uv, doubled by symmetry:
            // 2 ∫∫ u^{γ₁−1}(1−u)^{2α} v^{2γ₁−1+2α}(1−v)^{γ₂−1} (1−uv)^{γ₂−1} du dv.
            let ru = unit_jacobi(order, g1 - 1.0, 2.0 * alpha)?;
            let rv = unit_jacobi(order, 2.0 * g1 - 1.0 + 2.0 * alpha, g2 - 1.0)?;
            let mut sum = 0.0;
            for (u, wu) in ru.iter() {
                for (v, wv) in rv.iter() {
                    sum += wu * wv * (1.0 - u * v).powf(g2 - 1.0);
                }
            }
            Ok(2.0 * sum)
        }
    }
}

const SELBERG_AGREEMENT: f64 = 1e-7;
const SELBERG_MAX_ORDER: usize = 1024;

/// Selberg's integral by tensor Gauss–Jacobi quadrature, `p ∈ {1, 2}`. The
/// order starts at `order` and doubles until two successive estimates agree
/// to `1e−7` (relative).
pub fn selberg_oracle(p: u32, alpha: f64, g1: f64, g2: f64, order: usize) -> Result<f64> {
    if !(1..=2).contains(&p) {
        return Err(Error::Domain(format!("quadrature oracle covers p = 1, 2, got {p}")));
    }
    if !(alpha > 0.0 && g1 > 0.0 && g2 > 0.0) {
        return Err(Error::Domain(format!("need α, γ₁, γ₂ > 0, got {alpha}, {g1}, {g2}")));
    }
    let mut order = order.max(2);
    let mut prev = selberg_at_order(p, alpha, g1, g2, order)?;
    while order < SELBERG_MAX_ORDER {
        order *= 2;
        let next = selberg_at_order(p, alpha, g1, g2, order)?;
        if (next - prev).abs() <= SELBERG_AGREEMENT * next.abs() {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NonConvergence(format!(
        "Selberg quadrature still moving at order {order} (α={alpha}, γ₁={g1}, γ₂={g2})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn beta_case() {
        let v = selberg_closed(1, c(0.7), c(2.0), c(3.0)).unwrap().unwrap_finite();
        assert!((v - 1.0 / 12.0).norm() < 1e-15);
        assert!((selberg_oracle(1, 0.7, 2.0, 3.0, 4).unwrap() - 1.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn two_dimensional_reference() {
        // α = 1/2, γ₁ = γ₂ = 1: ∫∫ |t₁ − t₂| = 1/3
        let closed = selberg_closed(2, c(0.5), c(1.0), c(1.0)).unwrap().unwrap_finite();
        assert!((closed - 1.0 / 3.0).norm() < 1e-14);
        let oracle = selberg_oracle(2, 0.5, 1.0, 1.0, 8).unwrap();
        assert!((oracle - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn symmetric_in_gammas() {
        for (a, g1, g2) in [(0.3, 1.2, 2.9), (1.7, 0.4, 3.3), (0.5, 2.5, 2.5)] {
            for p in 1..5 {
                let x = selberg_closed(p, c(a), c(g1), c(g2)).unwrap().unwrap_finite();
                let y = selberg_closed(p, c(a), c(g2), c(g1)).unwrap().unwrap_finite();
                assert!((x - y).norm() < 1e-13 * x.norm());
            }
        }
    }

    #[test]
    fn oracle_decreases_in_gamma1() {
        let mut last = f64::INFINITY;
        for g1 in [1.0, 1.5, 2.0, 3.0, 4.0] {
            let v = selberg_oracle(2, 0.8, g1, 2.0, 8).unwrap();
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn pole_marker() {
        assert_eq!(selberg_closed(1, c(0.5), c(0.0), c(1.0)).unwrap(), SpectralValue::Pole { order: 1 });
        assert!(selberg_oracle(3, 1.0, 1.0, 1.0, 4).is_err());
    }
}
