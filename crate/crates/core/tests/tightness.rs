use mertens::tightness::{sigma_k, FejerParams};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fejer_sum_is_bounded(k in 1usize..400, t in -50.0f64..50.0) {
        let p = FejerParams::new(k, 1.0).unwrap();
        prop_assert!(sigma_k(&p, t).abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn shift_by_pi_flips_sign(k in 1usize..200, t in -10.0f64..10.0) {
        let p = FejerParams::new(k, 1.0).unwrap();
        prop_assert!((sigma_k(&p, t + std::f64::consts::PI) + sigma_k(&p, t)).abs() < 1e-12);
    }

    #[test]
    fn variation_matches_closed_form(k in 1usize..1000) {
        let p = FejerParams::new(k, 1.0).unwrap();
        let odd: f64 = (1..=k).step_by(2).map(|j| 1.0 - j as f64 / (k + 1) as f64).sum();
        prop_assert!((p.total_variation() - 16.0 / std::f64::consts::PI * odd).abs() < 1e-9 * (1.0 + odd));
    }
}
