use std::f64::consts::PI;

use coslambda::scalar::{gamma, gegenbauer, log_gamma, sin_pi};
use num_complex::Complex64;
use proptest::prelude::*;

fn off_axis() -> impl Strategy<Value = Complex64> {
    (-20.0f64..20.0, 0.05f64..15.0, proptest::bool::ANY)
        .prop_map(|(re, im, neg)| Complex64::new(re, if neg { -im } else { im }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reflection(z in off_axis()) {
        let lhs = (log_gamma(z).unwrap() + log_gamma(1.0 - z).unwrap()).exp();
        let rhs = PI / sin_pi(z);
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm().max(1.0), "{}: {} vs {}", z, lhs, rhs);
    }

    #[test]
    fn recurrence(re in -15.0f64..30.0, im in -30.0f64..30.0) {
        let z = Complex64::new(re, im);
        prop_assume!((z - z.re.round()).norm() > 1e-3 || z.re > 0.5);
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm(), "{}", z);
    }

    #[test]
    fn accurate_in_working_strip(re in 0.5f64..50.0, im in -50.0f64..50.0) {
        // Shifted recurrence from far right as the independent evaluation.
        let z = Complex64::new(re, im);
        let mut far = log_gamma(z + 40.0).unwrap();
        for k in 0..40 {
            far -= (z + k as f64).ln();
        }
        let got = log_gamma(z).unwrap();
        let d = got - far;
        let k = (d.im / (2.0 * PI)).round();
        prop_assert!((Complex64::new(d.re, d.im - 2.0 * PI * k)).norm() < 1e-13 * far.norm().max(10.0));
    }

    #[test]
    fn gegenbauer_endpoint(m in 0u32..30, nu in 0.05f64..6.0) {
        // C_m^ν(1) = Γ(m+2ν)/(m! Γ(2ν))
        let want = (log_gamma(Complex64::new(m as f64 + 2.0 * nu, 0.0)).unwrap()
            - log_gamma(Complex64::new(m as f64 + 1.0, 0.0)).unwrap()
            - log_gamma(Complex64::new(2.0 * nu, 0.0)).unwrap()).re.exp();
        let got = gegenbauer(m, nu, 1.0);
        prop_assert!((got - want).abs() <= 1e-11 * want.abs().max(1.0));
    }
}
