//! Zeros of ζ on the critical line, residues 1/ζ'(ρ) and the scan of 1/|ζ| along a horizontal line.
use mertens::zeta::{find_zeros, min_inv_zeta_scan, residues, zero_count, EvalAccuracy};

fn main() -> mertens::Result<()> {
    let acc = EvalAccuracy::default();
    println!("N(500) = {}", zero_count(500.0, &acc)?);
    let table = residues(&find_zeros(100.0, &acc)?, &acc)?;
    println!("{} zeros up to T=100, complete={}", table.len(), table.complete);
    for z in table.zeros.iter().take(3) {
        let r = z.inv_zeta_prime.unwrap_or_default();
        println!("gamma={:.10}  1/zeta'(rho)={:.8}{:+.8}i", z.gamma, r.re, r.im);
    }
    println!("max 1/|zeta| on [-1/64, 1] at T=1000: {:.9}", min_inv_zeta_scan(1000.0, -1.0 / 64.0, 1.0, &acc)?);
    Ok(())
}
