use num_complex::Complex64;

use super::gamma::log_gamma;
use crate::error::{Error, Result};

/// Nodes and weights of a one-dimensional rule on `[-1, 1]`.
///
/// Nodes are strictly increasing. For Gauss–Legendre the weights sum to 2;
/// for Gauss–Jacobi they sum to the integral of the Jacobi weight.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule1D {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule1D {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `(node, weight)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Integrates `f` over `[a, b]` with the rule affinely mapped.
    pub fn integrate<F: Fn(f64) -> Complex64>(&self, a: f64, b: f64, f: F) -> Complex64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.iter().map(|(x, w)| w * f(mid + half * x)).sum::<Complex64>() * half
    }
}

/// Gauss–Legendre rule of the given order, exact for polynomials of degree
/// `2·order − 1`. Nodes by Newton iteration on `P_order`.
pub fn gauss_legendre(order: usize) -> QuadratureRule1D {
    assert!(order >= 1, "quadrature order must be positive");
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    QuadratureRule1D { nodes, weights }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Jacobi rule for the weight `(1 − x)^a (1 + x)^b` on `[-1, 1]`,
/// `a, b > −1`, by Golub–Welsch.
pub fn gauss_jacobi(order: usize, a: f64, b: f64) -> Result<QuadratureRule1D> {
    if order == 0 || a <= -1.0 || b <= -1.0 {
        return Err(Error::Domain(format!("Gauss-Jacobi needs order >= 1 and a, b > -1 (got {order}, {a}, {b})")));
    }
    let n = order;
    let ab = a + b;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    diag[0] = (b - a) / (ab + 2.0);
    for (k, d) in diag.iter_mut().enumerate().skip(1) {
        let k = k as f64;
        let s = 2.0 * k + ab;
        *d = (b * b - a * a) / (s * (s + 2.0));
    }
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        let beta = if k == 1 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        off[k - 1] = beta.sqrt();
    }
    let log_mu0 = (ab + 1.0) * std::f64::consts::LN_2
        + log_gamma(Complex64::new(a + 1.0, 0.0))?.re
        + log_gamma(Complex64::new(b + 1.0, 0.0))?.re
        - log_gamma(Complex64::new(ab + 2.0, 0.0))?.re;
    let mu0 = log_mu0.exp();

    let mut first_row = vec![0.0; n];
    first_row[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut off, &mut first_row)?;

    let mut pairs: Vec<(f64, f64)> = diag.into_iter().zip(first_row).map(|(x, z)| (x, mu0 * z * z)).collect();
    pairs.sort_by(|l, r| l.0.total_cmp(&r.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule1D { nodes, weights })
}

/// Implicit QL on a symmetric tridiagonal matrix, accumulating only the first
/// row of the eigenvector matrix. `off[i]` couples `i` and `i + 1`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 200 {
                return Err(Error::NonConvergence("tridiagonal QL".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

const ADAPTIVE_ORDER: usize = 16;
const ADAPTIVE_MAX_DEPTH: u32 = 60;

/// Adaptive Gauss–Legendre on `[a, b]`: a panel is accepted when its
/// 16-point estimate agrees with the sum over its two halves to within
/// `tol` (absolute, scaled by the panel's share of the interval).
pub fn integrate_adaptive<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Result<Complex64> {
    let rule = gauss_legendre(ADAPTIVE_ORDER);
    let whole = rule.integrate(a, b, &f);
    adaptive_panel(&rule, &f, a, b, whole, tol, 0, b - a)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_panel<F: Fn(f64) -> Complex64>(
    rule: &QuadratureRule1D,
    f: &F,
    a: f64,
    b: f64,
    whole: Complex64,
    tol: f64,
    depth: u32,
    span: f64,
) -> Result<Complex64> {
    let mid = 0.5 * (a + b);
    let left = rule.integrate(a, mid, f);
    let right = rule.integrate(mid, b, f);
    let refined = left + right;
    let budget = tol * ((b - a) / span).max(1e-3);
    if (refined - whole).norm() <= budget {
        return Ok(refined);
    }
    if depth >= ADAPTIVE_MAX_DEPTH {
        return Err(Error::NonConvergence(format!(
            "adaptive panel [{a}, {b}] still off by {:e}",
            (refined - whole).norm()
        )));
    }
    Ok(adaptive_panel(rule, f, a, mid, left, tol, depth + 1, span)?
        + adaptive_panel(rule, f, mid, b, right, tol, depth + 1, span)?)
}
