//! Segmented Möbius sieve: checkpoints of M, m, Q, R and suprema of normalized ratios.
use mertens::sieve::{mertens_table, sup_ratio_scan, RatioKind};

fn main() -> mertens::Result<()> {
    for c in mertens_table(10_000_000, 2_500_000)? {
        println!("x={:>9} M={:>5} m={:+.3e} Q={:>8} R={:+.4}", c.x, c.big_m, c.m, c.q, c.r);
    }
    for (kind, lo) in [(RatioKind::MOverSqrt, 33), (RatioKind::ROverQtr, 7)] {
        let r = sup_ratio_scan(kind, lo, 10_000_000)?;
        println!("sup {} on [{lo}, 1e7] = {:.6} at x = {}", kind.name(), r.sup, r.argmax);
    }
    Ok(())
}
