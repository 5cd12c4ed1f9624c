use mertens::sieve::{remainder_r, MobiusTable};
use mertens::squarefree::{
    andalas_decompose, preset, q_smooth_count, r_bound_gould, ratio_f64, short_interval_constants, BoundHypothesis, Branch,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use std::sync::OnceLock;

fn table() -> &'static MobiusTable {
    static T: OnceLock<MobiusTable> = OnceLock::new();
    T.get_or_init(|| MobiusTable::new(40_000).unwrap())
}

fn r_at(x: u64) -> f64 {
    remainder_r(table().squarefree_count(x).unwrap(), x as f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn short_interval_pairs(q in prop::sample::select(vec![2u64, 3, 5, 7]), a in 0.0f64..1e5, b in 0.0f64..1e5) {
        let c = short_interval_constants(q).unwrap();
        let (c1, c2) = (ratio_f64(c.c1), ratio_f64(c.c2_star));
        let dq = q_smooth_count(q, b).unwrap() as f64 - q_smooth_count(q, a).unwrap() as f64;
        prop_assert!(dq.abs() <= c1 * (b - a).abs() + c2 + 1e-9);
        let d = table().squarefree_count(b as u64).unwrap() as f64 - table().squarefree_count(a as u64).unwrap() as f64;
        prop_assert!(d.abs() <= c1 * (b - a).abs() + c2 + 1e-9);
    }

    #[test]
    fn decomposition(x in 1u64..2_000_000, k in 0u64..300, extra in 0u64..100) {
        let hyp = BoundHypothesis::new(0.0, 1.0, 16.0 / 25.0, 114.0 / 25.0).unwrap();
        let d = andalas_decompose(x, k, k + extra, &hyp, table()).unwrap();
        prop_assert!(d.holds(), "{:?}", d);
    }
}

#[test]
fn certificates_dominate_sieved_remainder() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let nopgik = preset("nopgik").unwrap();
    let desk = BoundHypothesis::new(0.0, 1.0, 16.0 / 25.0, 114.0 / 25.0).unwrap();
    let (mut a, mut b) = (0, 0);
    for _ in 0..100 {
        let x = rng.gen_range(4_100_000..=1_000_000_000u64);
        let r = r_at(x).abs();
        let cert = nopgik.certificate(&nopgik.sets[0], x as f64).unwrap();
        assert!(r <= cert.eval(x as f64).unwrap(), "nopgik at {x}");
        a += 1;
        let x = rng.gen_range(40_000_000..=1_000_000_000u64);
        let cert = r_bound_gould(&desk, x as f64, Branch::A).unwrap();
        assert!(r_at(x).abs() <= cert.eval(x as f64).unwrap(), "gould at {x}");
        b += 1;
    }
    assert_eq!((a, b), (100, 100));
}

#[test]
fn large_presets_have_no_desk_domain() {
    for name in ["gopnik", "coda"] {
        let p = preset(name).unwrap();
        for set in &p.sets {
            assert!(p.certificate(set, 1e9).is_err(), "{}", set.label);
        }
    }
}
