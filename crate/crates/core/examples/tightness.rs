//! Fejér sums of the square wave: partial sums of σ_K(T₊ log n) against x·tanh(π/2T₊).
use mertens::tightness::{tightness_experiment, FejerParams};
use std::f64::consts::PI;

fn main() -> mertens::Result<()> {
    let p = FejerParams::new(99, 4.0 * PI)?;
    let ns = p.largest_admissible(3, 1e7);
    let r = tightness_experiment(&p, &ns)?;
    println!("K=99 T+=4pi: L1 distance {:.5}, TV bound {:.2}", r.l1, r.total_variation);
    for row in &r.rows {
        println!("N={} x={:.4e} S/x={:.6} target={:.6} envelope/x={:.4} within={}", row.n, row.x, row.ratio, row.target, row.relative_envelope(), row.within());
    }
    Ok(())
}
