use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sphere::abs_pow;
use crate::error::{Error, Result};
use crate::geometry::{cos_angle, haar_frame, perp, FramePoint};
use crate::spectral::{FieldTag, GrassmannSignature, KType};

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: Complex64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Samples per random stream. Batch `i` draws from
/// `ChaCha8Rng::seed_from_u64(seed)` on stream `i`, so the sample sequence
/// does not depend on how batches are spread over threads.
pub const BATCH_SIZE: u64 = 4096;

#[derive(Debug, Clone, Copy)]
struct Moments {
    count: u64,
    mean: Complex64,
    m2: f64,
}

impl Moments {
    const EMPTY: Moments = Moments { count: 0, mean: Complex64::new(0.0, 0.0), m2: 0.0 };

    fn push(&mut self, x: Complex64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += (delta.conj() * (x - self.mean)).re;
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let n = self.count + other.count;
        let delta = other.mean - self.mean;
        let frac = other.count as f64 / n as f64;
        Moments {
            count: n,
            mean: self.mean + delta * frac,
            m2: self.m2 + other.m2 + delta.norm_sqr() * self.count as f64 * frac,
        }
    }
}

/// Monte Carlo mean of `sample(rng)` over `samples` draws, run in parallel
/// batches and merged in batch order: bit-identical for any thread count.
pub fn mc_mean<F>(samples: u64, seed: u64, sample: F) -> Result<McEstimate>
where
    F: Fn(&mut ChaCha8Rng) -> Complex64 + Sync,
{
    if samples == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    let batches = samples.div_ceil(BATCH_SIZE);
    let parts: Vec<Moments> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let len = BATCH_SIZE.min(samples - b * BATCH_SIZE);
            let mut m = Moments::EMPTY;
            for _ in 0..len {
                m.push(sample(&mut rng));
            }
            m
        })
        .collect();
    let total = parts.into_iter().fold(Moments::EMPTY, Moments::merge);
    let stderr =
        if total.count > 1 { (total.m2.max(0.0) / (total.count - 1) as f64 / total.count as f64).sqrt() } else { 0.0 };
    Ok(McEstimate { mean: total.mean, stderr, samples, seed })
}

fn check_lambda(sig: &GrassmannSignature, lambda: Complex64) -> Result<()> {
    if lambda.re < sig.rho() || !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::Domain(format!("the transform integral needs Re λ >= ρ = {}, got λ = {lambda}", sig.rho())));
    }
    Ok(())
}

/// Estimate of `c_P(λ) = ∫_K α_P(k)^{λ−ρ} dk`.
pub fn mc_c_p(sig: &GrassmannSignature, lambda: Complex64, samples: u64, seed: u64) -> Result<McEstimate> {
    check_lambda(sig, lambda)?;
    let s = lambda - sig.rho();
    let base = FramePoint::base(*sig);
    mc_mean(samples, seed, |rng| {
        let b = haar_frame(sig, rng);
        abs_pow(cos_angle(&b, &base), s)
    })
}

/// Test functions on `Gr_p(K^{n+1})` whose K-type is known: the constant for
/// `μ = 0`, and `tr(P_b P_{b_o}) − p²/(n+1)` for `μ = (2, 0, …, 0)`, with `P_b`
/// the orthogonal projection onto `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    Constant,
    FirstStep,
}

impl TestFunction {
    pub fn for_ktype(sig: &GrassmannSignature, mu: &KType) -> Result<Self> {
        mu.validate(sig)?;
        if mu.is_trivial() {
            Ok(TestFunction::Constant)
        } else if *mu == KType::first_step(sig.p() as usize) {
            Ok(TestFunction::FirstStep)
        } else {
            Err(Error::InvalidKType {
                mu: mu.entries().to_vec(),
                reason: "only μ = 0 and μ = (2,0,…,0) have built-in test functions".into(),
            })
        }
    }

    pub fn eval(&self, b: &FramePoint) -> f64 {
        match self {
            TestFunction::Constant => 1.0,
            TestFunction::FirstStep => {
                let sig = b.sig();
                let p = sig.p() as usize;
                // ‖A‖_F² over K for the top p×p block A; the quaternionic
                // embedding counts every entry twice.
                let top = b.frame().block(0, 0, p, p);
                let copies = if sig.field() == FieldTag::Quaternion { 2.0 } else { 1.0 };
                let fro = top.embedding().iter().map(|z| z.norm_sqr()).sum::<f64>() / copies;
                fro - (p * p) as f64 / (sig.n() + 1) as f64
            }
        }
    }
}

/// Estimate of `(J(λ) f_μ)(b_o) / f_μ(b_o)`, which equals `η_μ(λ)`.
pub fn mc_transform_ktype(
    sig: &GrassmannSignature,
    lambda: Complex64,
    mu: &KType,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    check_lambda(sig, lambda)?;
    let f = TestFunction::for_ktype(sig, mu)?;
    let s = lambda - sig.rho();
    let base = FramePoint::base(*sig);
    let at_base = f.eval(&base);
    mc_mean(samples, seed, |rng| {
        let b = haar_frame(sig, rng);
        abs_pow(cos_angle(&b, &base), s) * (f.eval(&b) / at_base)
    })
}

/// Estimate of `(S^λ f_μ)(b_o) / f_μ(b_o) = (C^λ f_μ)(b_o^⊥) / f_μ(b_o)`,
/// which equals `ν_μ(λ)`. Needs `p = q`.
pub fn sin_transform_numeric(
    sig: &GrassmannSignature,
    lambda: Complex64,
    mu: &KType,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    check_lambda(sig, lambda)?;
    let f = TestFunction::for_ktype(sig, mu)?;
    let s = lambda - sig.rho();
    let base = FramePoint::base(*sig);
    let target = perp(&base)?;
    let at_base = f.eval(&base);
    mc_mean(samples, seed, |rng| {
        let b = haar_frame(sig, rng);
        abs_pow(cos_angle(&b, &target), s) * (f.eval(&b) / at_base)
    })
}
