//! Builds η_μ(λ) from c_P(λ) one lattice step at a time and compares each
//! partial product with the closed form.
//!
//!     cargo run --example recursion

use coslambda::spectral::{c_p, canonical_path, eta, eta_along_path, FieldTag, GrassmannSignature, KType};
use num_complex::Complex64;

fn main() -> coslambda::error::Result<()> {
    let sig = GrassmannSignature::new(5, 3, FieldTag::Complex)?;
    let target = KType::new(vec![6, 4, 2]);
    let l = Complex64::new(3.25, 1.5);
    println!("{sig}, lambda = {l}, c_P = {:.10}", c_p(&sig, l)?.value().unwrap());
    let path = canonical_path(&target);
    for k in 1..=path.len() {
        let mu = &path[k - 1];
        let walked = eta_along_path(&sig, &path[..k], l)?.value().unwrap();
        let closed = eta(&sig, mu, l)?.value().unwrap();
        println!(
            "  {:<10} recursion {:>28}   closed form {:>28}   |diff| {:.1e}",
            mu.to_string(),
            format!("{walked:.10}"),
            format!("{closed:.10}"),
            (walked - closed).norm()
        );
    }
    Ok(())
}
