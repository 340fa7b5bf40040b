//! Haar-random elements of K over R, C and H: the cosine of the angle between
//! two subspaces equals α_P of the relative rotation, and torus rotations
//! give products of cosines.
//!
//!     cargo run --example geometry

use coslambda::geometry::{alpha_p, cos_angle, haar_sample, perp, torus_point, FramePoint};
use coslambda::spectral::{FieldTag, GrassmannSignature};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coslambda::error::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for field in FieldTag::ALL {
        let sig = GrassmannSignature::new(3, 2, field)?;
        let k = haar_sample(&sig, &mut rng);
        let h = haar_sample(&sig, &mut rng);
        let angle = cos_angle(&k.base_image(), &h.base_image());
        let alpha = alpha_p(&sig, &h.inverse().compose(&k));
        let base = FramePoint::base(sig);
        println!(
            "{sig}: Cos(k b_o, h b_o) = {angle:.12}, alpha_P(h^-1 k) = {alpha:.12}, Cos(b_o, b_o^perp) = {:.1e}",
            cos_angle(&base, &perp(&base)?)
        );
        let t = [0.3, 1.1];
        println!(
            "    torus t = {t:?}: alpha_P = {:.12}, |cos t1 cos t2| = {:.12}",
            alpha_p(&sig, &torus_point(&sig, &t)?),
            (t[0].cos() * t[1].cos()).abs()
        );
    }
    Ok(())
}
