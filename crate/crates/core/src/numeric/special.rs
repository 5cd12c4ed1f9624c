//! Special functions: exponential integral, log-gamma, Bernoulli ratios, real zeta.

use crate::error::{invalid, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Ei(x) = gamma + ln|x| + sum x^k/(k k!) for 0 < |x| <= 40.
pub fn ei(x: f64) -> Result<f64> {
    if x == 0.0 || x.abs() > 40.0 || !x.is_finite() {
        return Err(invalid(format!("Ei series needs 0 < |x| <= 40, got {x}")));
    }
    let mut term = 1.0;
    let mut acc = super::Neumaier::new();
    for k in 1..400 {
        term *= x / k as f64;
        let t = term / k as f64;
        acc.add(t);
        if t.abs() < 1e-17 * acc.value().abs().max(1e-300) {
            return Ok(EULER_GAMMA + x.abs().ln() + acc.value());
        }
    }
    Err(invalid(format!("Ei series did not converge at {x}")))
}

// B_{2k} for k = 1..=6; enough for the real zeta used to bootstrap the rest.
const B_SMALL: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

/// zeta(s) for real s > 1 by Euler-Maclaurin with N = 40 and six corrections.
pub fn zeta_real(s: f64) -> Result<f64> {
    if s <= 1.0 || s.is_nan() {
        return Err(invalid(format!("zeta_real needs s > 1, got {s}")));
    }
    if s > 60.0 {
        return Ok(1.0 + 2f64.powf(-s) + 3f64.powf(-s));
    }
    const N: usize = 40;
    let n = N as f64;
    let mut acc = super::Neumaier::new();
    for k in (1..N).rev() {
        acc.add((k as f64).powf(-s));
    }
    acc.add(n.powf(1.0 - s) / (s - 1.0));
    acc.add(0.5 * n.powf(-s));
    // rising factorial s(s+1)...(s+2k-2) times N^{-s-2k+1} / (2k)!
    let mut poch = s;
    let mut fact = 2.0;
    let mut pow = n.powf(-s - 1.0);
    for (k, b) in B_SMALL.iter().enumerate() {
        if k > 0 {
            let j = 2 * k as i32;
            poch *= (s + j as f64 - 1.0) * (s + j as f64);
            fact *= (j + 1) as f64 * (j + 2) as f64;
            pow /= n * n;
        }
        acc.add(b / fact * poch * pow);
    }
    Ok(acc.value())
}

/// B_{2k}/(2k)! for k = 1..=60, from 2(-1)^{k+1} zeta(2k)/(2 pi)^{2k}.
pub fn bernoulli_ratio(k: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0..=60)
            .map(|k| {
                if k == 0 {
                    return 1.0;
                }
                let z = if k == 1 { PI * PI / 6.0 } else { zeta_real(2.0 * k as f64).unwrap() };
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * 2.0 * z * (2.0 * PI).powi(-2 * k)
            })
            .collect()
    });
    assert!((1..=60).contains(&k), "bernoulli_ratio supports 1..=60");
    table[k]
}

/// B_{2k} itself.
pub fn bernoulli(k: usize) -> f64 {
    let mut f = 1.0;
    for j in 1..=2 * k {
        f *= j as f64;
    }
    bernoulli_ratio(k) * f
}

/// Stirling with a single correction and its O* remainder, valid for Re z >= 0.
pub fn stirling_b3(z: Complex64) -> (Complex64, f64) {
    let v = (z - 0.5) * z.ln() - z + LN_SQRT_2PI + 1.0 / (12.0 * z);
    (v, 2f64.sqrt() / (180.0 * z.norm().powi(3)))
}

/// log Gamma through upward recurrence into the region where the single-term
/// Stirling remainder is below `tol`. Returns (value, remainder bound).
pub fn ln_gamma_b3(z: Complex64, tol: f64) -> Result<(Complex64, f64)> {
    if z.re < 0.0 {
        return Err(invalid("Stirling form requires Re z >= 0"));
    }
    let r = (2f64.sqrt() / (180.0 * tol)).cbrt();
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    let mut prod = Complex64::new(1.0, 0.0);
    let mut count = 0;
    while w.norm() < r {
        prod *= w;
        count += 1;
        if count == 16 {
            shift += prod.ln();
            prod = Complex64::new(1.0, 0.0);
            count = 0;
        }
        w += 1.0;
    }
    shift += prod.ln();
    let (v, e) = stirling_b3(w);
    Ok((v - shift, e))
}

/// log Gamma on the principal branch for Re z > 0 (continuous in Im z).
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection; branch of the imaginary part is not normalised here
        let s = super::sin_pi(z);
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(1.0 - z);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for k in 1..=10 {
        let kk = 2 * k;
        series += p * (bernoulli(k) / (kk as f64 * (kk - 1) as f64));
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - shift
}

/// Riemann-Siegel theta.
pub fn rs_theta(t: f64) -> f64 {
    if t > 200.0 {
        let t2 = t * t;
        return 0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
            + 1.0 / (48.0 * t)
            + 7.0 / (5760.0 * t * t2)
            + 31.0 / (80640.0 * t * t2 * t2)
            + 127.0 / (430080.0 * t * t2 * t2 * t2);
    }
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}
