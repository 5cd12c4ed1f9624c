//! The explicit formula with the coth weight: predictions and envelopes against sieved M(x), m(x).
use mertens::explicit_formula::{mertens_clean_bound, ExplicitFormula, Variant};
use mertens::sieve::MobiusTable;
use mertens::zeta::{find_zeros, residues, EvalAccuracy};

fn main() -> mertens::Result<()> {
    let acc = EvalAccuracy::default();
    let t = 500.0;
    let table = residues(&find_zeros(t, &acc)?, &acc)?;
    let formula = ExplicitFormula::new(t, &table, &acc)?;
    let sieve = MobiusTable::new(1_000_000)?;
    println!("T={t}: {} zeros, max 1/|zeta| on the line {:.4}", formula.zero_count(), formula.line_max());
    for x in [5_000u64, 50_000, 1_000_000] {
        let e = formula.evaluate(x as f64, 0.0, Variant::Generic)?;
        let m = sieve.mertens(x as f64)? as f64;
        println!("x={x:>8}: M={m:>5} predicted={:>9.3} envelope={:>8.3} holds={}", e.predicted(), e.envelope, e.holds(m));
    }
    println!("clean bound on |M(x)|/x at 1e20: {:.4e}", mertens_clean_bound(1e20));
    Ok(())
}
