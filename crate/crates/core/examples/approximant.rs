//! The extremal approximant to a truncated exponential: interpolation, L¹ distance, weight.
use mertens::approximant::{approximant_hat, k_nu, l1_distance, l1_min, weight_w, TruncationPolicy, WeightParams};
use num_complex::Complex64;

fn main() -> mertens::Result<()> {
    let policy = TruncationPolicy::default();
    for n in [-2, 0, 1, 3] {
        let v = k_nu(0.5, Complex64::new(n as f64, 0.0), policy)?;
        println!("K_0.5({n}) = {:.12}", v.re);
    }
    for lambda in [0.5, -4.0] {
        println!("lambda={lambda}: L1 = {:.10}, tanh(l/4)/l = {:.10}", l1_distance(lambda, 1000)?, l1_min(lambda)?);
    }
    let u = 0.3;
    println!("phi_hat_1({u}) = {:.12}", approximant_hat(1.0, Complex64::new(u, 0.0), policy)?.re);
    let w = weight_w(&WeightParams::new(100.0, 0.0)?, Complex64::new(0.5, 14.134725))?;
    println!("w(1/2 + 14.13i) at T=100, sigma=0: {w:.6}");
    Ok(())
}
