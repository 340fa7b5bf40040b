//! K-spectrum table of the Cos^λ transform (and the Sin^λ transform when
//! p = q) on a few Grassmannians.
//!
//!     cargo run --example spectrum_table

use coslambda::spectral::{c_p, enumerate_ktypes, eta, nu, omega, FieldTag, GrassmannSignature, SpectralValue};
use num_complex::Complex64;

fn show(v: &SpectralValue) -> String {
    match v {
        SpectralValue::Finite { re, im } if *im == 0.0 => format!("{re:>14.8}"),
        SpectralValue::Finite { re, im } => format!("{re:.6}{im:+.6}i"),
        SpectralValue::Pole { order } => format!("{:>14}", format!("pole({order})")),
        SpectralValue::Zero { order } => format!("{:>14}", format!("zero({order})")),
    }
}

fn main() -> coslambda::error::Result<()> {
    for (n, p, field, shift) in
        [(2, 1, FieldTag::Real, 2.0), (3, 2, FieldTag::Real, 1.5), (3, 2, FieldTag::Quaternion, 0.5)]
    {
        let sig = GrassmannSignature::new(n, p, field)?;
        let l = Complex64::new(sig.rho() + shift, 0.0);
        println!("{sig}, rho = {}, lambda = {}, c_P = {}", sig.rho(), l.re, show(&c_p(&sig, l)?).trim());
        println!("  {:<10} {:>8} {:>14} {:>14}", "mu", "omega", "eta", "nu");
        for mu in enumerate_ktypes(&sig, 6) {
            let sin = if sig.is_square() { show(&nu(&sig, &mu, l)?) } else { format!("{:>14}", "-") };
            println!("  {:<10} {:>8.3} {} {}", mu.to_string(), omega(&sig, &mu)?, show(&eta(&sig, &mu, l)?), sin);
        }
        println!();
    }
    Ok(())
}
