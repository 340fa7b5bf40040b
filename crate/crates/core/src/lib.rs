//! Spectra of the Cos^λ and Sin^λ transforms on Grassmannians `Gr_p(K^{n+1})`
//! over `K = R, C, H`.
//!
//! - [`spectral`]: closed forms for `c_P(λ)`, `η_μ(λ)`, `ν_μ(λ)`, the
//!   spectrum-generating recursion, and pole/zero bookkeeping.
//! - [`geometry`]: matrices over `K`, Haar sampling on the compact group,
//!   subspace cosines.
//! - [`transform`]: the transforms as integrals (sphere quadrature, Monte
//!   Carlo over the group) and Selberg's integral.
//! - [`verify`]: suites that compare all of the above and report errors.
//! - [`cli`]: the `coslambda` command.
//!
//! `λ` is normalized so that `ρ = d(n+1)/2` and `c_P(ρ) = 1`.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod scalar;
pub mod spectral;
pub mod transform;
pub mod verify;
