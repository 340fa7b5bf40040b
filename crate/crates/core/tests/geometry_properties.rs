use coslambda::geometry::{alpha_p, cos_angle, haar_frame, haar_sample, perp, torus_point, FramePoint, MatK};
use coslambda::spectral::{FieldTag, GrassmannSignature};
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn signature() -> impl Strategy<Value = GrassmannSignature> {
    (0usize..3, 1u32..7)
        .prop_flat_map(|(f, n)| (Just(f), Just(n), 1u32..=n.div_ceil(2)))
        .prop_map(|(f, n, p)| GrassmannSignature::new(n, p, FieldTag::ALL[f]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_realizations_of_cos_agree(sig in signature(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = haar_sample(&sig, &mut rng);
        let h = haar_sample(&sig, &mut rng);
        let via_frames = cos_angle(&k.base_image(), &h.base_image());
        let via_alpha = alpha_p(&sig, &h.inverse().compose(&k));
        prop_assert!((via_frames - via_alpha).abs() < 1e-10);
    }

    #[test]
    fn alpha_is_inverse_symmetric(sig in signature(), seed in any::<u64>()) {
        let k = haar_sample(&sig, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!((alpha_p(&sig, &k) - alpha_p(&sig, &k.inverse())).abs() < 1e-12);
    }

    #[test]
    fn cos_is_symmetric_and_bounded(sig in signature(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = haar_frame(&sig, &mut rng);
        let c = haar_frame(&sig, &mut rng);
        let x = cos_angle(&b, &c);
        prop_assert!((0.0..=1.0).contains(&x));
        prop_assert!((x - cos_angle(&c, &b)).abs() < 1e-12);
        prop_assert!((cos_angle(&b, &b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn torus_alpha(sig in signature(), t in proptest::collection::vec(-7.0f64..7.0, 3)) {
        let t = &t[..sig.p() as usize];
        let g = torus_point(&sig, t).unwrap();
        let want: f64 = t.iter().map(|x| x.cos().abs()).product();
        prop_assert!((alpha_p(&sig, &g) - want).abs() < 1e-12);
    }

    #[test]
    fn perp_is_an_involution(half_p in 1u32..4, f in 0usize..3, seed in any::<u64>()) {
        let sig = GrassmannSignature::new(2 * half_p - 1, half_p, FieldTag::ALL[f]).unwrap();
        let b = haar_frame(&sig, &mut ChaCha8Rng::seed_from_u64(seed));
        let q = perp(&b).unwrap();
        prop_assert!(FramePoint::new(sig, q.frame().clone()).is_ok());
        prop_assert!(q.frame().structure_defect() < 1e-12);
        prop_assert!(cos_angle(&q, &b) < 1e-10);
        prop_assert!((cos_angle(&perp(&q).unwrap(), &b) - 1.0).abs() < 1e-12);
    }
}

/// Left multiplication by `a + bi + cj + dk` on `ℝ⁴`.
fn left_mult(a: f64, b: f64, c: f64, d: f64) -> [[f64; 4]; 4] {
    [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]
}

#[test]
fn quaternionic_determinant_bridge() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let entries: Vec<[f64; 4]> = (0..9).map(|_| std::array::from_fn(|_| rng.random_range(-1.0..1.0))).collect();
        let m = MatK::from_quaternion(3, 3, &entries);
        let real = DMatrix::from_fn(12, 12, |r, c| {
            let [a, b, cc, d] = entries[(r / 4) * 3 + c / 4];
            left_mult(a, b, cc, d)[r % 4][c % 4]
        });
        let det_r = real.determinant().abs();
        let det_c = m.embedding().clone().determinant().norm();
        assert!((det_r - det_c * det_c).abs() < 1e-10 * det_r.max(1e-300), "{det_r} vs {}", det_c * det_c);
        assert!((m.det_r_abs() - det_r).abs() < 1e-10 * det_r);
    }
}

/// Kolmogorov–Smirnov sup distance between an empirical sample and a CDF.
fn ks_one_sample(mut xs: Vec<f64>, cdf: impl Fn(f64) -> f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max)
}

fn ks_two_sample(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

// 1% critical value of the Kolmogorov distribution.
const KS_1PCT: f64 = 1.6276;

#[test]
fn circle_column_angle_is_uniform() {
    let sig = GrassmannSignature::new(1, 1, FieldTag::Real).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 100_000;
    let angles: Vec<f64> = (0..n)
        .map(|_| {
            let k = haar_sample(&sig, &mut rng);
            let e = k.mat().embedding();
            e[(1, 0)].re.atan2(e[(0, 0)].re)
        })
        .collect();
    let d = ks_one_sample(angles, |x| (x + std::f64::consts::PI) / (2.0 * std::f64::consts::PI));
    assert!(d * (n as f64).sqrt() < KS_1PCT, "KS statistic {d}");
}

#[test]
fn haar_entries_have_zero_mean() {
    let n = 100_000;
    for f in FieldTag::ALL {
        let sig = GrassmannSignature::new(2, 1, f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let xs: Vec<f64> = (0..n).map(|_| haar_sample(&sig, &mut rng).mat().embedding()[(1, 2)].re).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        assert!(mean.abs() < 4.0 * (var / n as f64).sqrt(), "{f}: mean {mean}");
    }
}

#[test]
fn sampling_is_left_invariant() {
    let n = 100_000;
    let crit = KS_1PCT * (2.0 / n as f64).sqrt();
    for f in FieldTag::ALL {
        let sig = GrassmannSignature::new(3, 2, f).unwrap();
        let g = haar_sample(&sig, &mut ChaCha8Rng::seed_from_u64(99));
        let base = FramePoint::base(sig);
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        let mut plain = Vec::with_capacity(n);
        let mut moved = Vec::with_capacity(n);
        for _ in 0..n {
            plain.push(cos_angle(&haar_sample(&sig, &mut rng).base_image(), &base));
            let k = haar_sample(&sig, &mut rng);
            moved.push(cos_angle(&g.compose(&k).base_image(), &base));
        }
        let d = ks_two_sample(plain, moved);
        assert!(d < crit, "{f}: KS {d} vs {crit}");
    }
}
