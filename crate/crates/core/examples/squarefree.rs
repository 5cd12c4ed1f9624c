//! Square-free counting: short-interval constants, published bound certificates, the M → R split.
use mertens::sieve::MobiusTable;
use mertens::squarefree::{andalas_decompose, preset, short_interval_constants, BoundHypothesis, PRESET_NAMES};

fn main() -> mertens::Result<()> {
    for q in [2, 3, 5, 7] {
        let c = short_interval_constants(q)?;
        println!("q={q}: c1={} c2={} period={}", c.c1, c.c2_star, c.period);
    }
    for name in PRESET_NAMES {
        let p = preset(name).expect("known preset");
        for set in &p.sets {
            println!("{:>7}: |R(x)| <= {}", set.label, p.certificate(set, set.x)?);
        }
    }
    let table = MobiusTable::new(1500)?;
    let hyp = BoundHypothesis::new(0.0, 1.0, 16.0 / 25.0, 114.0 / 25.0)?;
    let d = andalas_decompose(1_000_000, 10, 100, &hyp, &table)?;
    println!("R(1e6)={:.4} head sum={} head integral={:.4} residual={:.4} cap={:.4}", d.r_exact, d.head_sum, d.head_integral, d.residual(), d.error_cap);
    Ok(())
}
