//! Values of meromorphic functions of `λ`, with explicit pole and zero
//! bookkeeping.
//!
//! Every factor is tracked by the leading term of its Laurent expansion in
//! `ε = λ − λ₀`, i.e. `coeff · ε^order`, with the coefficient stored as a
//! logarithm. Products and quotients then stay exact at points where a pole
//! of one factor cancels a zero (or a pole) of another.

use std::f64::consts::PI;
use std::ops::{Div, Mul};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{log_gamma, nearest_pole, POLE_TOLERANCE};

/// A finite value, or a pole or zero of a given positive order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum SpectralValue {
    Finite { re: f64, im: f64 },
    Pole { order: u32 },
    Zero { order: u32 },
}

impl SpectralValue {
    pub fn finite(z: Complex64) -> Self {
        SpectralValue::Finite { re: z.re, im: z.im }
    }

    /// Drops the imaginary part of a finite value known to be real.
    pub(crate) fn real_if(self, real: bool) -> Self {
        match self {
            SpectralValue::Finite { re, .. } if real => SpectralValue::Finite { re, im: 0.0 },
            other => other,
        }
    }

    /// The complex value; `0` for a zero, `None` for a pole.
    pub fn value(&self) -> Option<Complex64> {
        match *self {
            SpectralValue::Finite { re, im } => Some(Complex64::new(re, im)),
            SpectralValue::Zero { .. } => Some(Complex64::new(0.0, 0.0)),
            SpectralValue::Pole { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SpectralValue::Finite { .. })
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, SpectralValue::Pole { .. })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SpectralValue::Zero { .. })
    }

    /// Unwraps a finite value.
    ///
    /// # Panics
    /// If the value is a pole or a zero.
    pub fn unwrap_finite(&self) -> Complex64 {
        match *self {
            SpectralValue::Finite { re, im } => Complex64::new(re, im),
            other => panic!("expected a finite spectral value, got {other:?}"),
        }
    }
}

/// Leading Laurent term `exp(log_coeff) · ε^order` of a meromorphic factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeadingTerm {
    pub log_coeff: Complex64,
    pub order: i32,
}

impl LeadingTerm {
    pub const ONE: LeadingTerm = LeadingTerm { log_coeff: Complex64::new(0.0, 0.0), order: 0 };

    /// A nonzero finite constant.
    pub fn constant(z: Complex64) -> Self {
        LeadingTerm { log_coeff: z.ln(), order: 0 }
    }

    /// `(−1)^k`
    pub fn sign(k: i64) -> Self {
        let im = if k.rem_euclid(2) == 0 { 0.0 } else { PI };
        LeadingTerm { log_coeff: Complex64::new(0.0, im), order: 0 }
    }

    /// The affine factor `slope · ε + value`; a simple zero when `value`
    /// vanishes (relative to `scale`).
    pub fn affine(slope: f64, value: Complex64, scale: f64) -> Self {
        if value.norm() < POLE_TOLERANCE * scale.max(1.0) && slope != 0.0 {
            LeadingTerm { log_coeff: Complex64::new(slope, 0.0).ln(), order: 1 }
        } else {
            LeadingTerm::constant(value)
        }
    }

    /// `Γ(z + slope · ε)`: a simple pole with residue
    /// `(−1)^k / (k! · slope)` at `z = −k`.
    pub fn gamma(slope: f64, z: Complex64) -> Result<Self> {
        match nearest_pole(z) {
            Some(k) => {
                let ln_fact = log_gamma(Complex64::new(k as f64 + 1.0, 0.0))?;
                Ok(LeadingTerm {
                    log_coeff: LeadingTerm::sign(k as i64).log_coeff - ln_fact - Complex64::new(slope, 0.0).ln(),
                    order: -1,
                })
            }
            None => Ok(LeadingTerm { log_coeff: log_gamma(z)?, order: 0 }),
        }
    }

    pub fn inv(self) -> Self {
        LeadingTerm { log_coeff: -self.log_coeff, order: -self.order }
    }

    /// Collapses to a [`SpectralValue`]; errors if a finite value overflows.
    pub fn evaluate(self) -> Result<SpectralValue> {
        match self.order {
            o if o < 0 => Ok(SpectralValue::Pole { order: (-o) as u32 }),
            o if o > 0 => Ok(SpectralValue::Zero { order: o as u32 }),
            _ => {
                let z = self.log_coeff.exp();
                if z.re.is_finite() && z.im.is_finite() {
                    Ok(SpectralValue::finite(z))
                } else {
                    Err(Error::Domain(format!("value exp({}) is not representable", self.log_coeff)))
                }
            }
        }
    }
}

impl Mul for LeadingTerm {
    type Output = LeadingTerm;
    fn mul(self, rhs: LeadingTerm) -> LeadingTerm {
        LeadingTerm { log_coeff: self.log_coeff + rhs.log_coeff, order: self.order + rhs.order }
    }
}

impl Div for LeadingTerm {
    type Output = LeadingTerm;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: LeadingTerm) -> LeadingTerm {
        self * rhs.inv()
    }
}

impl std::iter::Product for LeadingTerm {
    fn product<I: Iterator<Item = LeadingTerm>>(iter: I) -> LeadingTerm {
        iter.fold(LeadingTerm::ONE, |a, b| a * b)
    }
}
