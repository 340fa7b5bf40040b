use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::group::{FramePoint, GroupElement};
use super::matk::{block_size, extend_orthonormal, MatK};
use crate::spectral::{FieldTag, GrassmannSignature};

/// Gaussian column over `K` in the embedded picture (for ℍ only the first
/// column of each 2×2 block; the partner follows from it).
fn gaussian_column<R: Rng + ?Sized>(field: FieldTag, size: usize, rng: &mut R) -> DVector<Complex64> {
    let e = block_size(field);
    DVector::from_fn(e * size, |_, _| match field {
        FieldTag::Real => Complex64::new(rng.sample(StandardNormal), 0.0),
        _ => Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)),
    })
}

fn orthonormal_columns<R: Rng + ?Sized>(
    field: FieldTag,
    size: usize,
    count: usize,
    rng: &mut R,
) -> Vec<DVector<Complex64>> {
    let mut basis = Vec::with_capacity(block_size(field) * count);
    // A Gaussian candidate is rejected with probability zero; retry if so.
    while basis.len() < block_size(field) * count {
        extend_orthonormal(field, &mut basis, std::iter::once(gaussian_column(field, size, rng)), 1);
    }
    basis
}

/// A Haar-distributed element of `K = SO(n+1)`, `SU(n+1)` or `Sp(n+1)`.
///
/// Gram–Schmidt on Gaussian columns gives Haar measure on `O`, `U` or `Sp`;
/// the last column is then rotated so the determinant is `1` (a sign flip
/// for ℝ, multiplication by `conj(det)` for ℂ, nothing for ℍ).
pub fn haar_sample<R: Rng + ?Sized>(sig: &GrassmannSignature, rng: &mut R) -> GroupElement {
    let field = sig.field();
    let size = (sig.n() + 1) as usize;
    let cols = orthonormal_columns(field, size, size, rng);
    let mut emb = DMatrix::from_columns(&cols);
    match field {
        FieldTag::Real | FieldTag::Complex => {
            let det = emb.clone().determinant();
            let fix = det.conj() / det.norm();
            let last = emb.ncols() - 1;
            let mut col = emb.column_mut(last);
            col *= fix;
        }
        FieldTag::Quaternion => {}
    }
    GroupElement::new_unchecked(*sig, MatK::from_embedding_unchecked(field, emb))
}

/// `k · b_o` for Haar-random `k`: only the first `p` columns are drawn, which
/// have the same law as those of [`haar_sample`] since `p < n + 1`.
pub fn haar_frame<R: Rng + ?Sized>(sig: &GrassmannSignature, rng: &mut R) -> FramePoint {
    let field = sig.field();
    let size = (sig.n() + 1) as usize;
    let cols = orthonormal_columns(field, size, sig.p() as usize, rng);
    FramePoint::new_unchecked(*sig, MatK::from_embedding_unchecked(field, DMatrix::from_columns(&cols)))
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn samples_lie_in_the_special_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for sig in GrassmannSignature::all_up_to(5) {
            for _ in 0..20 {
                let k = haar_sample(&sig, &mut rng);
                assert!(k.is_in_k(1e-12), "{sig}");
                assert_eq!(k.mat().structure_defect(), 0.0);
                let det = k.mat().embedding().clone().determinant();
                assert!((det - 1.0).norm() < 1e-10, "{sig}: det {det}");
            }
        }
    }

    #[test]
    fn frames_are_orthonormal() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for sig in GrassmannSignature::all_up_to(6) {
            let b = haar_frame(&sig, &mut rng);
            assert!(b.frame().has_orthonormal_columns(1e-12));
            assert!(FramePoint::new(sig, b.frame().clone()).is_ok());
        }
    }

    #[test]
    fn reproducible_for_a_fixed_seed() {
        let sig = GrassmannSignature::new(4, 2, FieldTag::Quaternion).unwrap();
        let a = haar_sample(&sig, &mut ChaCha8Rng::seed_from_u64(3));
        let b = haar_sample(&sig, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
