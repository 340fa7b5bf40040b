//! Selberg's integral: product formula against tensor Gauss–Jacobi quadrature.
//!
//!     cargo run --example selberg

use coslambda::transform::{selberg_closed, selberg_oracle};
use num_complex::Complex64;

fn main() -> coslambda::error::Result<()> {
    let c = |x: f64| Complex64::new(x, 0.0);
    for (p, alpha, g1, g2) in [(1, 0.5, 2.0, 3.0), (2, 0.5, 1.0, 1.0), (2, 1.0, 2.5, 1.5), (2, 1.75, 3.2, 1.1)] {
        let closed = selberg_closed(p, c(alpha), c(g1), c(g2))?.value().unwrap().re;
        let quad = selberg_oracle(p, alpha, g1, g2, 8)?;
        println!(
            "p={p} alpha={alpha:<5} gamma=({g1}, {g2}): closed {closed:.12e}  quadrature {quad:.12e}  rel {:.1e}",
            ((closed - quad) / closed).abs()
        );
    }
    // Complex parameters only have the closed form.
    println!("p=3 at complex alpha: {:?}", selberg_closed(3, Complex64::new(0.5, 0.25), c(1.5), c(2.0))?);
    Ok(())
}
