//! Hyperbolic and trigonometric helpers with explicit argument reduction.

use num_complex::Complex64;
use std::f64::consts::PI;

/// exp(z) - 1 without cancellation near 0.
fn expm1(z: Complex64) -> Complex64 {
    let (s, c) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    Complex64::new(z.re.exp_m1() * c - 2.0 * half * half, z.re.exp() * s)
}

/// Reduces the imaginary part into [-pi/2, pi/2]; both tanh and coth have period i*pi.
fn reduce(z: Complex64) -> Complex64 {
    Complex64::new(z.re, z.im - PI * (z.im / PI).round())
}

/// Complex hyperbolic tangent.
pub fn tanh(z: Complex64) -> Complex64 {
    let z = reduce(z);
    if z.re < 0.0 {
        return -tanh(-z);
    }
    let e = expm1(-2.0 * z);
    -e / (2.0 + e)
}

/// Complex hyperbolic cotangent. Infinite at multiples of i*pi.
pub fn coth(z: Complex64) -> Complex64 {
    let z = reduce(z);
    if z.re < 0.0 {
        return -coth(-z);
    }
    let e = expm1(-2.0 * z);
    (2.0 + e) / -e
}

/// tanh(x)/x, with the removable singularity filled in.
pub fn tanhc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0 - 17.0 * x2 * x2 * x2 / 315.0
    } else {
        x.tanh() / x
    }
}

// Splits Re z = n + r with |r| <= 1/2 (exact), returning (r, (-1)^n).
fn split_half(x: f64) -> (f64, f64) {
    let n = x.round();
    let sign = if (n / 2.0).fract() == 0.0 { 1.0 } else { -1.0 };
    (x - n, sign)
}

/// sin(pi z), accurate near integers thanks to exact reduction of Re z.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (r, sign) = split_half(z.re);
    (Complex64::new(r, z.im) * PI).sin() * sign
}

pub fn cos_pi(z: Complex64) -> Complex64 {
    let (r, sign) = split_half(z.re);
    (Complex64::new(r, z.im) * PI).cos() * sign
}
