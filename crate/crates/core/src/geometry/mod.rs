//! Matrices over ℝ, ℂ, ℍ, the cocycle `α_P`, `|Cos(b, c)|`, orthocomplements,
//! torus elements and Haar sampling on `K`.

mod group;
mod haar;
mod matk;

pub use group::{alpha_p, cos_angle, perp, torus_point, FramePoint, GroupElement};
pub use haar::{haar_frame, haar_sample};
pub use matk::MatK;
