//! The Sin^λ transform on Gr_p(K^{2p}): its spectrum differs from the Cos^λ
//! spectrum by the sign (−1)^{|μ|/2}, and the Monte Carlo estimate measured at
//! the orthogonal complement of the base point agrees.
//!
//!     cargo run --release --example sin_transform

use coslambda::spectral::{enumerate_ktypes, eta, nu, FieldTag, GrassmannSignature, KType};
use coslambda::transform::sin_transform_numeric;
use num_complex::Complex64;

fn main() -> coslambda::error::Result<()> {
    let sig = GrassmannSignature::new(3, 2, FieldTag::Complex)?;
    let l = Complex64::new(sig.rho() + 0.75, 0.0);
    println!("{sig}, lambda = {}", l.re);
    for mu in enumerate_ktypes(&sig, 6) {
        let e = eta(&sig, &mu, l)?.value().unwrap().re;
        let s = nu(&sig, &mu, l)?.value().unwrap().re;
        println!("  {:<8} eta {e:>12.8}  nu {s:>12.8}", mu.to_string());
    }
    for (n, p) in [(1, 1), (3, 2)] {
        let sig = GrassmannSignature::new(n, p, FieldTag::Real)?;
        let mu = KType::first_step(p as usize);
        let l = Complex64::new(sig.rho() + 2.0, 0.0);
        let est = sin_transform_numeric(&sig, l, &mu, 200_000, 3)?;
        println!(
            "{sig} nu_{mu}: closed {:.6}, mc {:.6} ± {:.6}",
            nu(&sig, &mu, l)?.value().unwrap().re,
            est.mean.re,
            est.stderr
        );
    }
    Ok(())
}
