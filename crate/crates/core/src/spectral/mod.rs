//! Exact spectral calculus: the K-type lattice, Gindikin Gamma, `ω(μ)`,
//! `c_P(λ)`, `η_μ(λ)`, `ν_μ(λ)` and the spectrum-generating recursion.

mod eigen;
mod ktype;
mod poles;
mod signature;
mod value;

pub use eigen::{
    c_p, canonical_path, eta, eta_along_path, eta_by_recursion, eta_step_ratio, gindikin_gamma, nu, nu_from_eta, omega,
    rho_k, sphere_eta,
};
pub use ktype::{enumerate_ktypes, neighbors, KType};
pub use poles::{singular_points, FactorHit, SingularPoint};
pub use signature::{FieldTag, GrassmannSignature};
pub use value::{LeadingTerm, SpectralValue};
