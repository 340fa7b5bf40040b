//! Numerical realizations of the transforms: sphere quadrature, the
//! one-dimensional Funk–Hecke integral, Haar Monte Carlo on Grassmannians and
//! Selberg's integral.

mod mc;
mod selberg;
mod sphere;

pub use mc::{mc_c_p, mc_mean, mc_transform_ktype, sin_transform_numeric, McEstimate, TestFunction, BATCH_SIZE};
pub use selberg::{selberg_closed, selberg_oracle};
pub use sphere::{cos_transform_sphere, funk_hecke_1d, zonal, SphereGrid};
