use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base (skew-)field: ℝ, ℂ or ℍ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
}

impl FieldTag {
    pub const ALL: [FieldTag; 3] = [FieldTag::Real, FieldTag::Complex, FieldTag::Quaternion];

    /// Real dimension `d`.
    pub fn dim(self) -> u32 {
        match self {
            FieldTag::Real => 1,
            FieldTag::Complex => 2,
            FieldTag::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            FieldTag::Real => "R",
            FieldTag::Complex => "C",
            FieldTag::Quaternion => "H",
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "real" => Ok(FieldTag::Real),
            "C" | "c" | "complex" => Ok(FieldTag::Complex),
            "H" | "h" | "quaternion" => Ok(FieldTag::Quaternion),
            other => Err(Error::Config(format!("unknown field tag {other:?} (expected R, C or H)"))),
        }
    }
}

/// The Grassmannian `Gr_p(K^{n+1})` with `q = n + 1 − p ≥ p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannSignature {
    n: u32,
    p: u32,
    field: FieldTag,
}

impl GrassmannSignature {
    pub fn new(n: u32, p: u32, field: FieldTag) -> Result<Self> {
        if n == 0 || p == 0 {
            return Err(Error::InvalidSignature(format!("need n >= 1 and p >= 1, got n={n}, p={p}")));
        }
        if 2 * p > n + 1 {
            return Err(Error::InvalidSignature(format!("need p <= q = n + 1 - p, got n={n}, p={p}")));
        }
        Ok(GrassmannSignature { n, p, field })
    }

    /// The real projective space `Gr_1(ℝ^{n+1})`, i.e. the sphere `S^n` modulo ±1.
    pub fn sphere(n: u32) -> Result<Self> {
        Self::new(n, 1, FieldTag::Real)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.n + 1 - self.p
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn d(&self) -> u32 {
        self.field.dim()
    }

    /// `ρ = d(n+1)/2` in the scalar `λ`-coordinate.
    pub fn rho(&self) -> f64 {
        self.d() as f64 * (self.n + 1) as f64 / 2.0
    }

    /// The transform integral converges for `Re λ > ρ`.
    pub fn convergence_threshold(&self) -> f64 {
        self.rho()
    }

    pub fn is_square(&self) -> bool {
        self.p == self.q()
    }

    /// `pq/(n+1)`, the factor relating `λ` to the root coordinate `r`.
    pub fn root_scale(&self) -> f64 {
        (self.p * self.q()) as f64 / (self.n + 1) as f64
    }

    /// Whether the lattice admits a negative last entry (`K = ℝ`, `p = q`).
    pub fn allows_signed_last(&self) -> bool {
        self.field == FieldTag::Real && self.is_square()
    }

    /// Every valid signature with `n <= max_n`, ordered by field, `n`, `p`.
    pub fn all_up_to(max_n: u32) -> Vec<GrassmannSignature> {
        let mut out = Vec::new();
        for field in FieldTag::ALL {
            for n in 1..=max_n {
                for p in 1..=n.div_ceil(2) {
                    out.push(GrassmannSignature { n, p, field });
                }
            }
        }
        out
    }
}

impl fmt::Display for GrassmannSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr_{}({}^{})", self.p, self.field, self.n + 1)
    }
}
