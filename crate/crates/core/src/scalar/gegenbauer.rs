/// Gegenbauer polynomial `C_m^ν(t)` by the three-term recurrence
/// `m C_m = 2t(m + ν − 1) C_{m−1} − (m + 2ν − 2) C_{m−2}`.
///
/// At `ν = 0` every `C_m` with `m ≥ 1` vanishes; use [`chebyshev_t`] for the
/// normalized limit.
pub fn gegenbauer(m: u32, nu: f64, t: f64) -> f64 {
    let mut prev = 1.0;
    if m == 0 {
        return prev;
    }
    let mut cur = 2.0 * nu * t;
    for k in 2..=m {
        let k = k as f64;
        let next = (2.0 * t * (k + nu - 1.0) * cur - (k + 2.0 * nu - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind, `T_m(t)`.
pub fn chebyshev_t(m: u32, t: f64) -> f64 {
    let mut prev = 1.0;
    if m == 0 {
        return prev;
    }
    let mut cur = t;
    for _ in 2..=m {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss_jacobi;

    #[test]
    fn recurrence_base_cases() {
        for &(nu, t) in &[(0.5, 0.3), (1.5, -0.7), (2.25, 1.0)] {
            assert_eq!(gegenbauer(0, nu, t), 1.0);
            assert!((gegenbauer(1, nu, t) - 2.0 * nu * t).abs() < 1e-15);
        }
    }

    #[test]
    fn legendre_p4_by_expansion() {
        // P_4(t) = (35t^4 − 30t^2 + 3) / 8
        let t: f64 = 0.3;
        let expanded = (35.0 * t.powi(4) - 30.0 * t * t + 3.0) / 8.0;
        assert!((gegenbauer(4, 0.5, t) - expanded).abs() < 1e-15);
        assert!((expanded - 0.072_937_5).abs() < 1e-15);
    }

    #[test]
    fn reference_value_c5() {
        // C_5^{3/4}(0.4) = 0.46431
        assert!((gegenbauer(5, 0.75, 0.4) - 0.464_31).abs() < 1e-14);
    }

    #[test]
    fn orthogonality_under_the_weight() {
        for &nu in &[0.5, 1.0, 2.0] {
            let rule = gauss_jacobi(32, nu - 0.5, nu - 0.5).unwrap();
            for m in 0..6u32 {
                for k in 0..m {
                    let s: f64 = rule.iter().map(|(t, w)| w * gegenbauer(m, nu, t) * gegenbauer(k, nu, t)).sum();
                    assert!(s.abs() < 1e-10, "nu={nu} m={m} k={k}: {s}");
                }
            }
        }
    }

    #[test]
    fn chebyshev_matches_cosine() {
        for m in 0..9u32 {
            let th: f64 = 0.77;
            assert!((chebyshev_t(m, th.cos()) - (m as f64 * th).cos()).abs() < 1e-13);
        }
    }
}
