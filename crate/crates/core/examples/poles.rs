//! Where the Gamma factors of c_P and η_μ blow up along the real λ-axis, and
//! which of those points survive as genuine poles.
//!
//!     cargo run --example poles

use coslambda::spectral::{singular_points, FieldTag, GrassmannSignature, KType, SpectralValue};

fn main() -> coslambda::error::Result<()> {
    let sig = GrassmannSignature::new(4, 2, FieldTag::Real)?;
    let mu = KType::new(vec![4, 2]);
    for (label, ktype) in [("c_P", None), ("eta_(4,2)", Some(&mu))] {
        println!("{label} on {sig}, lambda in [-8, 4]:");
        for point in singular_points(&sig, ktype, -8.0, 4.0, 0.0)? {
            let hits: Vec<String> = point
                .hits
                .iter()
                .map(|h| {
                    format!(
                        "{} Γ entry {} of {} at {}",
                        if h.numerator { "num" } else { "den" },
                        h.j,
                        h.factor,
                        -(h.k as i64)
                    )
                })
                .collect();
            let value = match point.value {
                SpectralValue::Finite { re, .. } => format!("finite {re:.6}"),
                SpectralValue::Pole { order } => format!("pole of order {order}"),
                SpectralValue::Zero { order } => format!("zero of order {order}"),
            };
            println!("  lambda = {:>5}: {:<22} {}", point.lambda, value, hits.join("; "));
        }
    }
    Ok(())
}
