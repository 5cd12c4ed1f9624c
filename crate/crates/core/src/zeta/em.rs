//! Euler-Maclaurin summation for ζ(s) and ζ'(s).

use crate::numeric::special::bernoulli_ratio;
use crate::numeric::ComplexNeumaier;
use num_complex::Complex64;

const TWO_PI_HI: f64 = std::f64::consts::TAU;
const TWO_PI_LO: f64 = 2.449_293_598_294_706_4e-16;

/// ln n as an unevaluated sum hi + lo.
#[inline]
pub(crate) fn ln_dd(n: f64) -> (f64, f64) {
    let hi = n.ln();
    let lo = n.mul_add((-hi).exp(), -1.0);
    (hi, lo)
}

/// t·(hi + lo) reduced into roughly [−π, π], accurate to about t·1e-16 absolute.
#[inline]
pub(crate) fn phase(t: f64, hi: f64, lo: f64) -> f64 {
    let p = t * hi;
    let e = t.mul_add(hi, -p);
    let k = (p / TWO_PI_HI).round();
    let r = (-k).mul_add(TWO_PI_HI, p);
    r - k * TWO_PI_LO + (e + t * lo)
}

/// n^{−s} with an accurately reduced phase.
#[inline]
pub(crate) fn npow(n: f64, s: Complex64) -> Complex64 {
    let (hi, lo) = ln_dd(n);
    let mag = (-s.re * hi).exp() * (1.0 - s.re * lo);
    let (sn, cs) = phase(s.im, hi, lo).sin_cos();
    Complex64::new(mag * cs, -mag * sn)
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct EmValue {
    pub zeta: Complex64,
    pub zeta_prime: Complex64,
    /// Rigorous bound on the Euler-Maclaurin remainder of ζ.
    pub remainder: f64,
    /// Estimate of the remainder for ζ'.
    pub remainder_prime: f64,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Tail {
    pub zeta: Complex64,
    pub zeta_prime: Complex64,
    /// truncation bound, and its estimate for ζ'
    pub remainder: f64,
    pub remainder_prime: f64,
    pub rounding: f64,
    pub rounding_prime: f64,
}

/// The part of Euler-Maclaurin beyond the main sum Σ_{n<N}: tail integral,
/// half term and `m` Bernoulli corrections, with derivatives in s.
pub(crate) fn em_tail(s: Complex64, n_cut: usize, m: usize) -> Tail {
    let n = n_cut as f64;
    let (hi, _) = ln_dd(n);
    let ln_n = hi;
    let n_s = npow(n, s); // N^{−s}
    let one = Complex64::new(1.0, 0.0);
    let mut z = ComplexNeumaier::new();
    let mut zp = ComplexNeumaier::new();
    let sm1 = s - one;
    let tail = n_s * n / sm1;
    z.add(tail);
    zp.add(-tail * ln_n - tail / sm1);
    z.add(n_s * 0.5);
    zp.add(-n_s * (0.5 * ln_n));
    // P_k(s) = s(s+1)...(s+2k−2) and its derivative
    let mut p = s;
    let mut dp = one;
    let mut pw = n_s / n; // N^{−s−2k+1} for k = 1
    for k in 1..=m {
        if k > 1 {
            let a = s + (2 * k - 3) as f64;
            let b = s + (2 * k - 2) as f64;
            dp = dp * a * b + p * (a + b);
            p = p * a * b;
            pw /= n * n;
        }
        let c = bernoulli_ratio(k);
        let term = p * pw * c;
        z.add(term);
        zp.add((dp * pw - p * pw * ln_n) * c);
    }
    // next term bounds the remainder
    let a = s + (2 * m - 1) as f64;
    let b = s + (2 * m) as f64;
    let p_next = p * a * b;
    let next = (p_next * (pw / (n * n)) * bernoulli_ratio(m + 1)).norm();
    let sig = s.re + (2 * m + 1) as f64;
    let rem = if sig > 0.0 {
        (s + (2 * m + 1) as f64).norm() / sig * next
    } else {
        f64::INFINITY
    };
    let rem_p = rem * (ln_n + (2 * m + 2) as f64);
    // rounding in the individual terms, which can be large and cancel for Re s < 0
    let round = 4.0 * f64::EPSILON * (2.0 + s.norm() * ln_n);
    Tail {
        zeta: z.value(),
        zeta_prime: zp.value(),
        remainder: rem,
        remainder_prime: rem_p,
        rounding: round * z.abs_sum(),
        rounding_prime: round * zp.abs_sum(),
    }
}

/// Full evaluation at a single point.
pub(crate) fn em_eval(s: Complex64, n_cut: usize, m: usize) -> EmValue {
    let mut z = ComplexNeumaier::new();
    let mut zp = ComplexNeumaier::new();
    let mut term_err = 0.0;
    for k in 1..n_cut {
        let kf = k as f64;
        let (hi, lo) = ln_dd(kf);
        let mag = (-s.re * hi).exp() * (1.0 - s.re * lo);
        let (sn, cs) = phase(s.im, hi, lo).sin_cos();
        let v = Complex64::new(mag * cs, -mag * sn);
        z.add(v);
        zp.add(-v * (hi + lo));
        term_err += mag * (2.0 + s.re.abs() * hi + s.im.abs() * hi * f64::EPSILON);
    }
    term_err *= 2.0 * f64::EPSILON;
    let tail = em_tail(s, n_cut, m);
    z.add(tail.zeta);
    zp.add(tail.zeta_prime);
    let rem = tail.remainder + tail.rounding;
    let rem_p = tail.remainder_prime + tail.rounding_prime;
    EmValue {
        zeta: z.value(),
        zeta_prime: zp.value(),
        remainder: rem + z.error_bound() + term_err,
        remainder_prime: rem_p + zp.error_bound() + term_err * (n_cut as f64).ln(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_reduction_is_accurate() {
        // compare against a reduction done in two halves of t
        let n = 123_457.0;
        let (hi, lo) = ln_dd(n);
        let t = 1_893_193.5;
        let direct = phase(t, hi, lo);
        let half = phase(t / 2.0, hi, lo);
        let twice = 2.0 * half;
        let diff = (direct - twice).rem_euclid(std::f64::consts::TAU);
        let diff = diff.min(std::f64::consts::TAU - diff);
        assert!(diff < 1e-9, "{diff}");
    }

    #[test]
    fn ln_dd_tracks_rounding() {
        for n in [3.0, 10.0, 99_991.0] {
            let (hi, lo) = ln_dd(n);
            assert!(lo.abs() <= 2.0 * f64::EPSILON * hi.abs());
        }
    }
}
