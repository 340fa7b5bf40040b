//! The Cos^λ transform on S² as a dense quadrature sum, applied to zonal
//! harmonics: even degrees are scaled by the sphere eigenvalue, odd degrees
//! vanish.
//!
//!     cargo run --release --example sphere_quadrature

use coslambda::spectral::sphere_eta;
use coslambda::transform::{cos_transform_sphere, funk_hecke_1d, zonal, SphereGrid};
use num_complex::Complex64;

fn main() -> coslambda::error::Result<()> {
    let grid = SphereGrid::new(2, 32)?;
    let l = Complex64::new(1.5 + 2.0, 0.0);
    let axis = [0.0, 0.6, 0.8];
    println!("S^2 grid with {} nodes, lambda = {}", grid.len(), l.re);
    for m in 0..=5u32 {
        let f: Vec<Complex64> = grid
            .points
            .iter()
            .map(|x| Complex64::new(zonal(2, m, x.iter().zip(&axis).map(|(a, b)| a * b).sum()), 0.0))
            .collect();
        let g = cos_transform_sphere(2, l, &f, &grid)?;
        let want = if m % 2 == 0 { sphere_eta(2, m as i64, l)?.value().unwrap() } else { Complex64::new(0.0, 0.0) };
        let err = g.iter().zip(&f).map(|(gv, fv)| (gv - want * fv).norm()).fold(0.0, f64::max);
        let line =
            if m % 2 == 0 { format!("1-D integral {:.12}", funk_hecke_1d(2, m as i64, l)?.re) } else { String::new() };
        println!("  m = {m}: eigenvalue {:>15.12}  max grid error {err:.2e}  {line}", want.re);
    }
    Ok(())
}
