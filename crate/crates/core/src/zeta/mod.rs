//! The Riemann zeta function: evaluation, zeros, residues and line scans.

pub(crate) mod em;
pub mod io;
pub mod line;
pub mod zeros;

pub use line::{min_inv_zeta_scan, zeta_line_max, LineEvaluator};
pub use zeros::{find_zeros, main_term_count, residues, zero_count, ZeroTable, ZetaZero};

use crate::error::{invalid, Error, Result};
use crate::numeric::special::{ln_gamma_b3, rs_theta, zeta_real};
use crate::numeric::sin_pi;
use num_complex::Complex64;
use std::f64::consts::{E, PI};

/// Knobs for Euler-Maclaurin evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalAccuracy {
    /// Cutoff N; `None` picks max(2⌈|Im s|/2π⌉, 30).
    pub em_terms: Option<usize>,
    /// Number of Bernoulli correction terms.
    pub bernoulli_order: usize,
    pub target_abs_err: f64,
}

impl Default for EvalAccuracy {
    fn default() -> Self {
        Self {
            em_terms: None,
            bernoulli_order: 12,
            target_abs_err: 1e-8,
        }
    }
}

impl EvalAccuracy {
    pub fn cutoff(&self, t: f64) -> Result<usize> {
        let min = (t.abs() / (2.0 * PI)).ceil() as usize;
        match self.em_terms {
            Some(n) if n < min.max(1) => Err(Error::Accuracy {
                achieved: f64::INFINITY,
                target: self.target_abs_err,
            }),
            Some(n) => Ok(n),
            None => Ok((2 * min).max(30)),
        }
    }

    /// The cutoff for a point. Without an override, the default is enlarged
    /// until the tail remainder at `s` fits in half the target. Left of the
    /// line Re s = 0 the floor drops to 8, since term rounding grows like N^{1−σ}.
    pub fn cutoff_for(&self, s: Complex64) -> Result<usize> {
        let mut n = self.cutoff(s.im)?;
        if self.em_terms.is_some() {
            return Ok(n);
        }
        if s.re < 0.0 {
            n = (2 * (s.im.abs() / (2.0 * PI)).ceil() as usize).max(8);
        }
        for _ in 0..12 {
            let rem = em::em_tail(s, n, self.bernoulli_order).remainder;
            if rem <= 0.5 * self.target_abs_err {
                break;
            }
            n += n / 4;
        }
        Ok(n)
    }
}

/// A value with its error estimate.
#[derive(Clone, Copy, Debug)]
pub struct Evaluated {
    pub value: Complex64,
    pub err: f64,
}

fn check_pole(s: Complex64) -> Result<()> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole(s));
    }
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(invalid("s must be finite"));
    }
    Ok(())
}

pub(crate) fn eval_both(s: Complex64, acc: &EvalAccuracy) -> Result<(Evaluated, Evaluated)> {
    check_pole(s)?;
    let n = acc.cutoff_for(s)?;
    let v = em::em_eval(s, n, acc.bernoulli_order);
    // the target is absolute up to |ζ| = 1 and relative beyond
    if !(v.remainder <= acc.target_abs_err * v.zeta.norm().max(1.0)) {
        return Err(Error::Accuracy {
            achieved: v.remainder,
            target: acc.target_abs_err,
        });
    }
    Ok((
        Evaluated {
            value: v.zeta,
            err: v.remainder,
        },
        Evaluated {
            value: v.zeta_prime,
            err: v.remainder_prime,
        },
    ))
}

pub fn zeta(s: Complex64, acc: &EvalAccuracy) -> Result<Complex64> {
    Ok(eval_both(s, acc)?.0.value)
}

pub fn zeta_prime(s: Complex64, acc: &EvalAccuracy) -> Result<Complex64> {
    Ok(eval_both(s, acc)?.1.value)
}

/// ζ(s) and ζ'(s) with their error estimates.
pub fn zeta_with_derivative(s: Complex64, acc: &EvalAccuracy) -> Result<(Evaluated, Evaluated)> {
    eval_both(s, acc)
}

/// (2π)^{s−1}·2 sin(πs/2)·Γ(1−s)·ζ(1−s), with log Γ from single-term Stirling.
pub fn functional_equation_rhs(s: Complex64, acc: &EvalAccuracy) -> Result<Complex64> {
    if s.re > 0.5 {
        return Err(invalid(format!("functional equation side needs Re s <= 1/2, got {s}")));
    }
    let w = 1.0 - s;
    if w.im == 0.0 && w.re <= 0.0 && w.re.fract() == 0.0 {
        return Err(Error::Pole(s));
    }
    let (lg, _) = ln_gamma_b3(w, 1e-14)?;
    let pre = ((s - 1.0) * (2.0 * PI).ln() + lg).exp();
    Ok(pre * 2.0 * sin_pi(s / 2.0) * zeta(w, acc)?)
}

/// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), real up to rounding.
pub fn hardy_z(t: f64, acc: &EvalAccuracy) -> Result<f64> {
    if !(t > 0.0) {
        return Err(invalid(format!("hardy_z needs t > 0, got {t}")));
    }
    let (z, _) = eval_both(Complex64::new(0.5, t), acc)?;
    let th = rs_theta(t);
    let v = Complex64::from_polar(1.0, th) * z.value;
    let tol = 1e-6 * (1.0 + v.norm()) + z.err;
    if v.im.abs() > tol {
        return Err(Error::Accuracy {
            achieved: v.im.abs(),
            target: tol,
        });
    }
    Ok(v.re)
}

pub use crate::numeric::special::rs_theta as theta;

/// Upper bound on 1/|ζ(s)| for Re s ≤ 0, |Im s| ≥ 1:
/// (2πe/|Im s|)^{1/2−Re s}·√e/|ζ(1−s)|.
pub fn inv_zeta_left_bound(s: Complex64, acc: &EvalAccuracy) -> Result<f64> {
    if s.re > 0.0 || s.im.abs() < 1.0 {
        return Err(invalid(format!("left bound needs Re s <= 0 and |Im s| >= 1, got {s}")));
    }
    let z = zeta(1.0 - s, acc)?;
    Ok((2.0 * PI * E / s.im.abs()).powf(0.5 - s.re) * E.sqrt() / z.norm())
}

/// The general form for Re s ≤ 1/2:
/// (2πe/|1−s|)^{1/2−Re s}·e^{π|Im s|/2}/(2|sin(πs/2)|)·√e/|ζ(1−s)|.
pub fn inv_zeta_left_bound_general(s: Complex64, acc: &EvalAccuracy) -> Result<f64> {
    if s.re > 0.5 {
        return Err(invalid(format!("general left bound needs Re s <= 1/2, got {s}")));
    }
    let z = zeta(1.0 - s, acc)?;
    let sine = sin_pi(s / 2.0).norm();
    if sine == 0.0 {
        return Err(Error::Pole(s));
    }
    // e^{π|t|/2}/|sin(πs/2)| computed as a ratio to avoid overflow
    let growth = 1.0 / (sine * (-PI * s.im.abs() / 2.0).exp());
    Ok((2.0 * PI * E / (1.0 - s).norm()).powf(0.5 - s.re) * growth / 2.0 * E.sqrt() / z.norm())
}

/// 1/ζ'(−2n) = (−1)^n (2π)^{2n+1}/(π (2n)! ζ(2n+1)).
pub fn zeta_prime_trivial(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(invalid("trivial zeros start at n = 1"));
    }
    if 2 * n > 170 {
        return Err(Error::Range(format!("(2n)! overflows for n = {n}")));
    }
    let mut log_fact = 0.0;
    for k in 2..=2 * n {
        log_fact += (k as f64).ln();
    }
    let z = zeta_real(2.0 * n as f64 + 1.0)?;
    let log_mag = (2 * n + 1) as f64 * (2.0 * PI).ln() - PI.ln() - log_fact - z.ln();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * log_mag.exp())
}
