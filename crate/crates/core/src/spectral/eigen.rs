//! Closed forms for `c_P(λ)`, `η_μ(λ)`, `ν_μ(λ)` and the spectrum-generating
//! recursion.
//!
//! All Gamma products are accumulated as [`LeadingTerm`]s in the direction of
//! `λ`, so removable singularities (a Gamma pole in the numerator cancelled
//! by one in the denominator) evaluate to their limits.

use num_complex::Complex64;

use super::value::{LeadingTerm, SpectralValue};
use super::{GrassmannSignature, KType};
use crate::error::{Error, Result};

/// Argument of one Gamma factor as an affine function of `λ`:
/// `slope · λ + intercept`.
#[derive(Debug, Clone, Copy)]
struct Affine {
    slope: f64,
    intercept: f64,
}

impl Affine {
    fn constant(c: f64) -> Self {
        Affine { slope: 0.0, intercept: c }
    }

    fn at(&self, lambda: Complex64) -> Complex64 {
        lambda * self.slope + self.intercept
    }
}

/// `Γ_{p,d}` evaluated on the vector whose `j`-th argument is `args[j]`,
/// i.e. `Π_j Γ(args_j(λ) − d(j−1)/2)`.
fn gindikin_term(d: u32, args: &[Affine], lambda: Complex64) -> Result<LeadingTerm> {
    let mut acc = LeadingTerm::ONE;
    for (j, a) in args.iter().enumerate() {
        let z = a.at(lambda) - 0.5 * d as f64 * j as f64;
        // Constant arguments never sit on a pole for valid signatures, but a
        // zero slope must not produce a residue.
        let slope = if a.slope == 0.0 { 1.0 } else { a.slope };
        acc = acc * LeadingTerm::gamma(slope, z)?;
    }
    Ok(acc)
}

/// Gindikin Gamma function `Γ_{p,d}(v) = Π_j Γ(v_j − (d/2)(j−1))`.
///
/// A factor on a pole contributes a simple pole, so the result is
/// `Pole { order }` with `order` the number of singular factors.
pub fn gindikin_gamma(p: usize, d: u32, v: &[Complex64]) -> Result<SpectralValue> {
    if p == 0 || v.len() != p {
        return Err(Error::Domain(format!("need p >= 1 arguments, got p={p}, len={}", v.len())));
    }
    if !matches!(d, 1 | 2 | 4) {
        return Err(Error::Domain(format!("d must be 1, 2 or 4, got {d}")));
    }
    let mut acc = LeadingTerm::ONE;
    for (j, &vj) in v.iter().enumerate() {
        acc = acc * LeadingTerm::gamma(1.0, vj - 0.5 * d as f64 * j as f64)?;
    }
    Ok(acc.evaluate()?.real_if(v.iter().all(|z| z.im == 0.0)))
}

/// `ρ_𝔨`: the `j`-th entry (0-based) is `ρ − d·j − 1`.
pub fn rho_k(sig: &GrassmannSignature) -> Vec<f64> {
    let rho = sig.rho();
    let d = sig.d() as f64;
    (0..sig.p()).map(|j| rho - d * j as f64 - 1.0).collect()
}

/// Laplace eigenvalue on the K-type `μ`:
/// `ω(μ) = pq/(2(n+1)) Σ_j (m_j² + 2 m_j (ρ − d(j−1) − 1))`.
pub fn omega(sig: &GrassmannSignature, mu: &KType) -> Result<f64> {
    mu.validate(sig)?;
    Ok(omega_unchecked(sig, mu))
}

fn omega_unchecked(sig: &GrassmannSignature, mu: &KType) -> f64 {
    let scale = sig.root_scale() / 2.0;
    let s: f64 = mu
        .entries()
        .iter()
        .zip(rho_k(sig))
        .map(|(&m, r)| {
            let m = m as f64;
            m * m + 2.0 * m * r
        })
        .sum();
    scale * s
}

fn constant_prefactor(sig: &GrassmannSignature) -> Result<LeadingTerm> {
    let p = sig.p() as usize;
    let d = sig.d();
    let num = vec![Affine::constant(sig.rho()); p];
    let den = vec![Affine::constant(d as f64 * p as f64 / 2.0); p];
    Ok(gindikin_term(d, &num, Complex64::new(0.0, 0.0))? / gindikin_term(d, &den, Complex64::new(0.0, 0.0))?)
}

/// One `Γ_{p,d}` factor of a closed form, as a function of `λ`.
#[derive(Debug, Clone)]
pub(crate) struct GammaFactor {
    /// Human-readable argument, e.g. `(λ+ρ)/2`.
    pub label: String,
    pub numerator: bool,
    args: Vec<Affine>,
}

impl GammaFactor {
    fn new(label: &str, numerator: bool, args: Vec<Affine>) -> Self {
        GammaFactor { label: label.to_string(), numerator, args }
    }

    /// Real `λ` at which entry `j` (0-based) of this factor hits the pole
    /// `−k`, for `k = 0, 1, …`, restricted to `[lo, hi]`. Empty for constant
    /// entries.
    pub fn poles_between(&self, d: u32, j: usize, lo: f64, hi: f64) -> Vec<(f64, u64)> {
        let a = self.args[j];
        if a.slope == 0.0 {
            return Vec::new();
        }
        // slope·λ + intercept − d·j/2 = −k
        let c = a.intercept - 0.5 * d as f64 * j as f64;
        let k_at = |x: f64| -(a.slope * x + c);
        let (k0, k1) = {
            let (u, v) = (k_at(lo), k_at(hi));
            (u.min(v), u.max(v))
        };
        let first = k0.ceil().max(0.0);
        let mut out = Vec::new();
        let mut k = first;
        while k <= k1 {
            out.push(((-k - c) / a.slope, k as u64));
            k += 1.0;
        }
        out.sort_by(|l, r| l.0.total_cmp(&r.0));
        out
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    fn term(&self, d: u32, lambda: Complex64) -> Result<LeadingTerm> {
        let t = gindikin_term(d, &self.args, lambda)?;
        Ok(if self.numerator { t } else { t.inv() })
    }
}

/// `λ`-dependent Gamma factors of `c_P`.
pub(crate) fn c_p_factors(sig: &GrassmannSignature) -> Vec<GammaFactor> {
    let p = sig.p() as usize;
    let rho = sig.rho();
    let dp = (sig.d() * sig.p()) as f64;
    vec![
        GammaFactor::new("(λ-ρ+dp)/2", true, vec![Affine { slope: 0.5, intercept: (dp - rho) / 2.0 }; p]),
        GammaFactor::new("(λ+ρ)/2", false, vec![Affine { slope: 0.5, intercept: rho / 2.0 }; p]),
    ]
}

/// `λ`-dependent Gamma factors of `η_μ`.
pub(crate) fn eta_factors(sig: &GrassmannSignature, mu: &KType) -> Vec<GammaFactor> {
    let rho = sig.rho();
    let shifted = |slope: f64| -> Vec<Affine> {
        mu.entries().iter().map(|&m| Affine { slope, intercept: (rho + m as f64) / 2.0 }).collect()
    };
    let mut out = c_p_factors(sig);
    out.truncate(1);
    out.push(GammaFactor::new("(-λ+ρ+μ)/2", true, shifted(-0.5)));
    out.push(GammaFactor::new("(-λ+ρ)/2", false, vec![Affine { slope: -0.5, intercept: rho / 2.0 }; mu.len()]));
    out.push(GammaFactor::new("(λ+ρ+μ)/2", false, shifted(0.5)));
    out
}

fn product(sig: &GrassmannSignature, factors: &[GammaFactor], lambda: Complex64) -> Result<LeadingTerm> {
    let mut acc = LeadingTerm::ONE;
    for f in factors {
        acc = acc * f.term(sig.d(), lambda)?;
    }
    Ok(acc)
}

fn c_p_term(sig: &GrassmannSignature, lambda: Complex64) -> Result<LeadingTerm> {
    Ok(constant_prefactor(sig)? * product(sig, &c_p_factors(sig), lambda)?)
}

/// `c_P(λ) = Γ_{p,d}(d(n+1)/2) / Γ_{p,d}(dp/2) · Γ_{p,d}((λ−ρ+dp)/2) / Γ_{p,d}((λ+ρ)/2)`,
/// the transform of the constant function. `c_P(ρ) = 1`.
pub fn c_p(sig: &GrassmannSignature, lambda: Complex64) -> Result<SpectralValue> {
    Ok(c_p_term(sig, lambda)?.evaluate()?.real_if(lambda.im == 0.0))
}

fn eta_term(sig: &GrassmannSignature, mu: &KType, lambda: Complex64) -> Result<LeadingTerm> {
    mu.validate(sig)?;
    Ok(LeadingTerm::sign(mu.degree() / 2) * constant_prefactor(sig)? * product(sig, &eta_factors(sig, mu), lambda)?)
}

/// Eigenvalue of the Cos^λ transform on the K-type `μ`:
///
/// `η_μ(λ) = (−1)^{|μ|/2} Γ_{p,d}(d(n+1)/2)/Γ_{p,d}(dp/2)
///   · Γ_{p,d}((λ−ρ+dp)/2) Γ_{p,d}((−λ+ρ+μ)/2) / (Γ_{p,d}((−λ+ρ)/2) Γ_{p,d}((λ+ρ+μ)/2))`
///
/// where `(z+μ)/2` is the vector `((z+m_j)/2)_j`.
pub fn eta(sig: &GrassmannSignature, mu: &KType, lambda: Complex64) -> Result<SpectralValue> {
    Ok(eta_term(sig, mu, lambda)?.evaluate()?.real_if(lambda.im == 0.0))
}

/// `η_{μ+2ε_j}(λ) / η_μ(λ) = (λ − m_j − ρ + d(j−1)) / (λ + m_j + ρ − d(j−1))`
/// for 0-based `j`, defined when `μ + 2ε_j` is again a K-type.
pub fn eta_step_ratio(sig: &GrassmannSignature, mu: &KType, j: usize, lambda: Complex64) -> Result<SpectralValue> {
    mu.validate(sig)?;
    if j >= mu.len() || !mu.step(j, 1).is_in_lattice(sig) {
        return Err(Error::InvalidKType {
            mu: mu.entries().to_vec(),
            reason: format!("μ + 2ε_{} leaves the lattice", j + 1),
        });
    }
    let shift = mu.entries()[j] as f64 + sig.rho() - (sig.d() as f64) * j as f64;
    let scale = lambda.norm() + shift.abs();
    let num = LeadingTerm::affine(1.0, lambda - shift, scale);
    let den = LeadingTerm::affine(1.0, lambda + shift, scale);
    Ok((num / den).evaluate()?.real_if(lambda.im == 0.0))
}

/// The monotone lattice path `0 → m_1ε_1 → m_1ε_1 + m_2ε_2 → … → μ` in steps
/// of `±2ε_j`.
pub fn canonical_path(mu: &KType) -> Vec<KType> {
    let mut path = vec![KType::trivial(mu.len())];
    let mut cur = KType::trivial(mu.len());
    for (j, &m) in mu.entries().iter().enumerate() {
        let sign = m.signum();
        for _ in 0..(m.abs() / 2) {
            cur = cur.step(j, sign);
            path.push(cur.clone());
        }
    }
    path
}

/// Ratio `η_σ/η_μ = (2r − ω(σ) + ω(μ)) / (2r + ω(σ) − ω(μ))`, `r = λ·pq/(n+1)`.
fn recursion_ratio(sig: &GrassmannSignature, from: &KType, to: &KType, lambda: Complex64) -> LeadingTerm {
    let two_r_slope = 2.0 * sig.root_scale();
    let gap = omega_unchecked(sig, to) - omega_unchecked(sig, from);
    let two_r = lambda * two_r_slope;
    let scale = two_r.norm() + gap.abs();
    LeadingTerm::affine(two_r_slope, two_r - gap, scale) / LeadingTerm::affine(two_r_slope, two_r + gap, scale)
}

/// `η_μ` obtained from `η_0 = c_P` by multiplying the spectrum-generating
/// ratios along a lattice path ending at `μ`.
///
/// Every path entry must be a K-type and consecutive entries must differ by
/// `±2ε_j`.
pub fn eta_along_path(sig: &GrassmannSignature, path: &[KType], lambda: Complex64) -> Result<SpectralValue> {
    let first = path.first().ok_or_else(|| Error::Domain("empty lattice path".into()))?;
    if !first.is_trivial() {
        return Err(Error::Domain(format!("lattice path must start at 0, got {first}")));
    }
    for mu in path {
        mu.validate(sig)?;
    }
    let mut acc = c_p_term(sig, lambda)?;
    for w in path.windows(2) {
        let diff: Vec<i64> = w[1].entries().iter().zip(w[0].entries()).map(|(a, b)| a - b).collect();
        let nonzero: Vec<i64> = diff.iter().copied().filter(|&x| x != 0).collect();
        if nonzero.len() != 1 || nonzero[0].abs() != 2 {
            return Err(Error::Domain(format!("{} → {} is not a ±2ε_j step", w[0], w[1])));
        }
        acc = acc * recursion_ratio(sig, &w[0], &w[1], lambda);
    }
    Ok(acc.evaluate()?.real_if(lambda.im == 0.0))
}

/// [`eta_along_path`] on the [`canonical_path`].
pub fn eta_by_recursion(sig: &GrassmannSignature, mu: &KType, lambda: Complex64) -> Result<SpectralValue> {
    mu.validate(sig)?;
    eta_along_path(sig, &canonical_path(mu), lambda)
}

fn require_square(sig: &GrassmannSignature) -> Result<()> {
    if sig.is_square() {
        Ok(())
    } else {
        Err(Error::Domain(format!("the Sin^λ transform needs p = q, got {sig}")))
    }
}

/// Eigenvalue of the Sin^λ transform (`p = q`, so `ρ = dp`), from its own
/// closed form
///
/// `ν_μ(λ) = Γ_{p,d}(ρ)/Γ_{p,d}(ρ/2) · Γ_{p,d}(λ/2) Γ_{p,d}((−λ+μ+ρ)/2)
///   / (Γ_{p,d}((−λ+ρ)/2) Γ_{p,d}((λ+μ+ρ)/2))`.
pub fn nu(sig: &GrassmannSignature, mu: &KType, lambda: Complex64) -> Result<SpectralValue> {
    require_square(sig)?;
    mu.validate(sig)?;
    let p = sig.p() as usize;
    let d = sig.d();
    let rho = sig.rho();
    let zero = Complex64::new(0.0, 0.0);
    let prefactor = gindikin_term(d, &vec![Affine::constant(rho); p], zero)?
        / gindikin_term(d, &vec![Affine::constant(rho / 2.0); p], zero)?;
    let half_lambda = gindikin_term(d, &vec![Affine { slope: 0.5, intercept: 0.0 }; p], lambda)?;
    let ktype = product(sig, &eta_factors(sig, mu)[1..], lambda)?;
    Ok((prefactor * half_lambda * ktype).evaluate()?.real_if(lambda.im == 0.0))
}

/// `ν_μ(λ) = (−1)^{|μ|/2} η_μ(λ)`.
pub fn nu_from_eta(sig: &GrassmannSignature, mu: &KType, lambda: Complex64) -> Result<SpectralValue> {
    require_square(sig)?;
    Ok((LeadingTerm::sign(mu.degree() / 2) * eta_term(sig, mu, lambda)?).evaluate()?.real_if(lambda.im == 0.0))
}

/// Eigenvalue of the Cos^λ transform on degree-`m` harmonics of `S^n`
/// (`ρ = (n+1)/2`), written with the polynomial
/// `Γ((−λ+ρ+m)/2)/Γ((−λ+ρ)/2) = 2^{−m/2} Π_{k<m/2} (−λ+ρ+2k)`:
///
/// `(−1)^{m/2} Γ(ρ)/Γ(1/2) · Γ((λ−ρ+1)/2)/Γ((λ+ρ+m)/2) · 2^{−m/2} Π_k (−λ+ρ+2k)`.
pub fn sphere_eta(n: u32, m: i64, lambda: Complex64) -> Result<SpectralValue> {
    if n == 0 {
        return Err(Error::InvalidSignature("sphere dimension must be >= 1".into()));
    }
    if m < 0 || m % 2 != 0 {
        return Err(Error::InvalidKType { mu: vec![m], reason: "sphere degree must be even and nonnegative".into() });
    }
    let rho = (n + 1) as f64 / 2.0;
    let mut acc = LeadingTerm::sign(m / 2) * LeadingTerm::gamma(1.0, Complex64::new(rho, 0.0))?
        / LeadingTerm::gamma(1.0, Complex64::new(0.5, 0.0))?
        * LeadingTerm::gamma(0.5, (lambda - rho + 1.0) / 2.0)?
        / LeadingTerm::gamma(0.5, (lambda + rho + m as f64) / 2.0)?;
    let scale = lambda.norm() + rho + m as f64;
    for k in 0..(m / 2) {
        let v = -lambda + rho + 2.0 * k as f64;
        acc = acc * LeadingTerm::constant(Complex64::new(0.5, 0.0)) * LeadingTerm::affine(-1.0, v, scale);
    }
    Ok(acc.evaluate()?.real_if(lambda.im == 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{enumerate_ktypes, FieldTag};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sig(n: u32, p: u32, f: FieldTag) -> GrassmannSignature {
        GrassmannSignature::new(n, p, f).unwrap()
    }

    fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(a.norm()).max(1e-300)
    }

    #[test]
    fn gindikin_examples() {
        let one = c(1.0, 0.0);
        let g = gindikin_gamma(1, 1, &[c(2.0, 0.0)]).unwrap().unwrap_finite();
        assert!((g - one).norm() < 1e-15);
        let g = gindikin_gamma(2, 2, &[c(2.0, 0.0), c(2.0, 0.0)]).unwrap().unwrap_finite();
        assert!((g - one).norm() < 1e-15);
        assert_eq!(gindikin_gamma(2, 1, &[c(0.5, 0.0), c(0.5, 0.0)]).unwrap(), SpectralValue::Pole { order: 1 });
        assert!(gindikin_gamma(2, 3, &[one, one]).is_err());
    }

    #[test]
    fn gindikin_poles_exactly_on_lattice() {
        // Scan integer/half-integer lattice arguments: pole iff some
        // v_j − (d/2)(j−1) ∈ {0, −1, −2, …}.
        for d in [1u32, 2, 4] {
            for a in -8..=6 {
                for b in -8..=6 {
                    let v = [c(a as f64 / 2.0, 0.0), c(b as f64 / 2.0, 0.0)];
                    let singular =
                        [v[0].re, v[1].re - d as f64 / 2.0].iter().filter(|x| **x <= 0.0 && x.fract() == 0.0).count()
                            as u32;
                    let got = gindikin_gamma(2, d, &v).unwrap();
                    if singular == 0 {
                        assert!(got.is_finite(), "{v:?} d={d}");
                    } else {
                        assert_eq!(got, SpectralValue::Pole { order: singular }, "{v:?} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn rho_k_examples_and_root_sum() {
        assert_eq!(rho_k(&sig(2, 1, FieldTag::Real)), vec![0.5]);
        assert_eq!(rho_k(&sig(3, 2, FieldTag::Real)), vec![1.0, 0.0]);
        // Half-sum of positive roots ε_i ± ε_j (mult d), ε_i (mult d(q−p)),
        // 2ε_i (mult d−1).
        for s in GrassmannSignature::all_up_to(9) {
            let (p, q, d) = (s.p() as usize, s.q() as f64, s.d() as f64);
            let mut coeff = vec![0.0; p];
            for i in 0..p {
                for j in (i + 1)..p {
                    coeff[i] += d; // ε_i + ε_j
                    coeff[j] += d;
                    coeff[i] += d; // ε_i − ε_j
                    coeff[j] -= d;
                }
                coeff[i] += d * (q - p as f64);
                coeff[i] += 2.0 * (d - 1.0);
            }
            for (got, twice) in rho_k(&s).iter().zip(coeff) {
                assert!((got - twice / 2.0).abs() < 1e-12, "{s}");
            }
        }
    }

    #[test]
    fn omega_values() {
        let sphere = sig(2, 1, FieldTag::Real);
        assert_eq!(omega(&sphere, &KType::trivial(1)).unwrap(), 0.0);
        assert!((omega(&sphere, &KType::new(vec![2])).unwrap() - 2.0).abs() < 1e-14);
        // On S^n, ω is the spherical Laplacian m(m+n−1) scaled by pq/(2(n+1))·2 = n/(n+1)… check ratio.
        for n in 1..7u32 {
            let s = sig(n, 1, FieldTag::Real);
            for m in (0..12i64).step_by(2) {
                let w = omega(&s, &KType::new(vec![m])).unwrap();
                let lap = (m * (m + n as i64 - 1)) as f64;
                assert!((w - lap * s.root_scale() / 2.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn omega_positive_off_the_trivial_type() {
        for s in GrassmannSignature::all_up_to(8) {
            for mu in enumerate_ktypes(&s, 20) {
                let w = omega(&s, &mu).unwrap();
                if mu.is_trivial() {
                    assert_eq!(w, 0.0);
                } else {
                    assert!(w > 0.0, "{s} {mu}: {w}");
                }
            }
        }
    }

    #[test]
    fn c_p_values() {
        let sphere = sig(2, 1, FieldTag::Real);
        let v = c_p(&sphere, c(3.5, 0.0)).unwrap().unwrap_finite();
        assert!((v - c(1.0 / 3.0, 0.0)).norm() < 1e-14);
        // Reference values from an independent 40-digit evaluation.
        let cases = [
            (sig(3, 2, FieldTag::Real), 3.0, 1.0 / 3.0),
            (sig(3, 2, FieldTag::Complex), 5.0, 0.365_714_285_714_285_7),
            (sig(3, 2, FieldTag::Quaternion), 9.0, 0.385_769_113_041_840_3),
            (sig(3, 2, FieldTag::Quaternion), 10.0, 1.0 / 6.0),
            (sig(1, 1, FieldTag::Real), 2.0, std::f64::consts::FRAC_2_PI),
        ];
        for (s, l, want) in cases {
            let got = c_p(&s, c(l, 0.0)).unwrap().unwrap_finite();
            assert!((got.re - want).abs() < 1e-13 && got.im.abs() < 1e-15, "{s}: {got}");
        }
    }

    #[test]
    fn c_p_at_rho_is_one() {
        for s in GrassmannSignature::all_up_to(8) {
            let v = c_p(&s, c(s.rho(), 0.0)).unwrap().unwrap_finite();
            assert!((v - c(1.0, 0.0)).norm() < 1e-13, "{s}: {v}");
        }
    }

    #[test]
    fn eta_reference_values() {
        let e = eta(&sig(3, 2, FieldTag::Real), &KType::new(vec![2, 0]), c(4.0, 0.0)).unwrap().unwrap_finite();
        assert!(close(e, c(1.0 / 18.0, 0.0), 1e-13));
        let e = eta(&sig(1, 1, FieldTag::Real), &KType::new(vec![2]), c(3.0, 0.0)).unwrap().unwrap_finite();
        assert!(close(e, c(0.25, 0.0), 1e-13));
        let e = eta(&sig(4, 2, FieldTag::Complex), &KType::new(vec![4, 2]), c(7.3, 1.1)).unwrap().unwrap_finite();
        assert!(close(e, c(3.554_835_540_346_371_6e-4, 3.396_693_674_115_778e-4), 1e-12));
        let e =
            eta(&sig(5, 3, FieldTag::Quaternion), &KType::new(vec![6, 2, 2]), c(2.7, -3.4)).unwrap().unwrap_finite();
        assert!(close(e, c(39_219.706_452_965, 17_252.335_567_594_01), 1e-12));
    }

    #[test]
    fn eta_trivial_type_is_c_p() {
        for s in GrassmannSignature::all_up_to(5) {
            for &l in &[c(0.37, 1.3), c(s.rho() + 1.25, -0.4), c(-2.2, 0.1)] {
                let a = eta(&s, &KType::trivial(s.p() as usize), l).unwrap().unwrap_finite();
                let b = c_p(&s, l).unwrap().unwrap_finite();
                assert!(close(a, b, 1e-13), "{s} {l}");
            }
        }
    }

    #[test]
    fn step_ratio_examples() {
        let sphere = sig(2, 1, FieldTag::Real);
        let l = c(2.9, 0.6);
        let r = eta_step_ratio(&sphere, &KType::trivial(1), 0, l).unwrap().unwrap_finite();
        assert!(close(r, (l - 1.5) / (l + 1.5), 1e-15));
        // numerator root λ = m_j + ρ − d(j−1)
        let s = sig(5, 2, FieldTag::Complex);
        let mu = KType::new(vec![4, 2]);
        let root = 2.0 + s.rho() - 2.0;
        assert_eq!(eta_step_ratio(&s, &mu, 1, c(root, 0.0)).unwrap(), SpectralValue::Zero { order: 1 });
        assert!(eta_step_ratio(&s, &KType::new(vec![2, 2]), 1, l).is_err());
    }

    #[test]
    fn sphere_eta_at_rho_vanishes_for_positive_degree() {
        for n in 1..6 {
            let rho = (n + 1) as f64 / 2.0;
            assert_eq!(sphere_eta(n, 2, c(rho, 0.0)).unwrap(), SpectralValue::Zero { order: 1 });
            let v = sphere_eta(n, 0, c(rho, 0.0)).unwrap().unwrap_finite();
            assert!((v - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn sphere_eta_first_pole() {
        // Γ((λ−ρ+1)/2) first hits a pole at λ = ρ − 1 = (n−1)/2.
        assert_eq!(sphere_eta(4, 0, c(1.5, 0.0)).unwrap(), SpectralValue::Pole { order: 1 });
        assert_eq!(sphere_eta(4, 2, c(1.5, 0.0)).unwrap(), SpectralValue::Pole { order: 1 });
    }

    #[test]
    fn removable_singularity_in_eta_is_resolved() {
        // λ = ρ + 2 on the sphere: Γ((−λ+ρ+m)/2) and Γ((−λ+ρ)/2) both hit poles.
        let s = sig(2, 1, FieldTag::Real);
        for m in [2i64, 4, 6] {
            let l = c(s.rho() + 2.0, 0.0);
            let a = eta(&s, &KType::new(vec![m]), l).unwrap();
            let b = sphere_eta(2, m, l).unwrap();
            match (a, b) {
                (SpectralValue::Finite { .. }, SpectralValue::Finite { .. }) => {
                    assert!(close(a.unwrap_finite(), b.unwrap_finite(), 1e-13))
                }
                _ => assert_eq!(a, b, "m={m}"),
            }
        }
        let v = eta(&s, &KType::new(vec![2]), c(3.5, 0.0)).unwrap().unwrap_finite();
        assert!(close(v, c(2.0 / 15.0, 0.0), 1e-14));
    }

    #[test]
    fn nu_requires_square_signature() {
        let s = sig(4, 2, FieldTag::Real);
        assert!(matches!(nu(&s, &KType::trivial(2), c(4.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn nu_examples() {
        let s = sig(3, 2, FieldTag::Real);
        let l = c(4.0, 0.0);
        let v = nu(&s, &KType::new(vec![2, 0]), l).unwrap().unwrap_finite();
        assert!(close(v, c(-1.0 / 18.0, 0.0), 1e-13));
        let v0 = nu(&s, &KType::trivial(2), c(3.3, 0.2)).unwrap().unwrap_finite();
        assert!(close(v0, c_p(&s, c(3.3, 0.2)).unwrap().unwrap_finite(), 1e-13));
    }

    #[test]
    fn signed_last_entry_matches_recursion_and_mirror() {
        let s = sig(3, 2, FieldTag::Real);
        for l in [c(2.7, 0.3), c(5.1, -1.2)] {
            for (pos, neg) in [(vec![2, 2], vec![2, -2]), (vec![4, 2], vec![4, -2]), (vec![6, 4], vec![6, -4])] {
                let a = eta(&s, &KType::new(pos), l).unwrap().unwrap_finite();
                let b = eta(&s, &KType::new(neg.clone()), l).unwrap().unwrap_finite();
                let r = eta_by_recursion(&s, &KType::new(neg), l).unwrap().unwrap_finite();
                assert!(close(a, b, 1e-12));
                assert!(close(b, r, 1e-12));
            }
        }
    }
}
