//! Haar Monte Carlo estimates of c_P(λ) and η_(2,0,…)(λ) next to their closed
//! forms. Results do not depend on the number of threads.
//!
//!     cargo run --release --example monte_carlo

use coslambda::spectral::{c_p, eta, FieldTag, GrassmannSignature, KType};
use coslambda::transform::{mc_c_p, mc_transform_ktype};
use num_complex::Complex64;

fn main() -> coslambda::error::Result<()> {
    let samples = 200_000;
    for (n, p, field) in
        [(2, 1, FieldTag::Real), (3, 2, FieldTag::Real), (3, 2, FieldTag::Complex), (3, 2, FieldTag::Quaternion)]
    {
        let sig = GrassmannSignature::new(n, p, field)?;
        let l = Complex64::new(sig.rho() + 1.0, 0.0);
        let est = mc_c_p(&sig, l, samples, 7)?;
        let exact = c_p(&sig, l)?.value().unwrap();
        println!(
            "c_P  {sig:<10} lambda={:<5} closed {:.6}  mc {:.6} ± {:.6}  ({:+.2} sigma)",
            l.re,
            exact.re,
            est.mean.re,
            est.stderr,
            (est.mean.re - exact.re) / est.stderr
        );
    }
    let sig = GrassmannSignature::new(3, 2, FieldTag::Real)?;
    let mu = KType::first_step(2);
    let l = Complex64::new(sig.rho() + 2.0, 0.0);
    let est = mc_transform_ktype(&sig, l, &mu, samples, 8)?;
    let exact = eta(&sig, &mu, l)?.value().unwrap();
    println!("eta_{mu} {sig} lambda={} closed {:.6}  mc {:.6} ± {:.6}", l.re, exact.re, est.mean.re, est.stderr);
    Ok(())
}
