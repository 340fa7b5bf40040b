//! Scalar machinery shared by the rest of the crate: complex log-Gamma,
//! Gegenbauer polynomials and one-dimensional quadrature rules.

mod gamma;
mod gegenbauer;
mod quadrature;

pub use gamma::{gamma, log_gamma, nearest_pole, sin_pi, POLE_TOLERANCE};
pub use gegenbauer::{chebyshev_t, gegenbauer};
pub use quadrature::{gauss_jacobi, gauss_legendre, integrate_adaptive, QuadratureRule1D};

/// Complex scalars. `λ` and every Gamma argument live here.
pub type ComplexScalar = num_complex::Complex64;
