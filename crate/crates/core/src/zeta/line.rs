//! ζ along a horizontal segment σ ↦ σ + iT, and the max-of-1/|ζ| scan.

use super::em::{em_tail, ln_dd, npow, phase};
use super::{zeta, EvalAccuracy};
use crate::error::{invalid, Error, Result};
use crate::numeric::special::zeta_real;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::{E, PI};

const CENTER_STEP: f64 = 1.0 / 32.0;

/// Fast evaluator of ζ(σ + iT), ζ' and ζ'' for σ in a fixed window.
///
/// The main sum Σ_{n<N} n^{−σ−iT} is Taylor-expanded in σ around centers
/// spaced 1/32 apart; the Euler-Maclaurin tail is evaluated exactly.
pub struct LineEvaluator {
    t: f64,
    n_cut: usize,
    order: usize,
    lo: f64,
    centers: Vec<Vec<Complex64>>,
    /// bound on the Taylor truncation error of the main sum and its σ-derivative
    taylor_err: f64,
}

/// A point evaluation on the line.
#[derive(Clone, Copy, Debug)]
pub struct LinePoint {
    pub sigma: f64,
    pub zeta: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub err: f64,
}

impl LinePoint {
    pub fn abs(&self) -> f64 {
        self.zeta.norm()
    }

    /// Half the σ-derivative of |ζ|².
    pub fn slope(&self) -> f64 {
        (self.zeta.conj() * self.d1).re
    }
}

impl LineEvaluator {
    pub fn new(t: f64, sigma_lo: f64, sigma_hi: f64, acc: &EvalAccuracy) -> Result<Self> {
        if !(sigma_lo <= sigma_hi) {
            return Err(invalid("sigma_lo must not exceed sigma_hi"));
        }
        if sigma_lo < -2.0 * acc.bernoulli_order as f64 {
            return Err(invalid("sigma_lo too far left for the Bernoulli order"));
        }
        let n_cut = acc.cutoff_for(Complex64::new(sigma_lo, t))?;
        let first = (sigma_lo / CENTER_STEP).round() as i64;
        let last = (sigma_hi / CENTER_STEP).round() as i64;
        let lo = first as f64 * CENTER_STEP;

        let logs: Vec<(f64, f64)> = (1..n_cut).map(|n| ln_dd(n as f64)).collect();
        let phases: Vec<Complex64> = logs
            .par_iter()
            .map(|&(hi, lo)| {
                let (s, c) = phase(t, hi, lo).sin_cos();
                Complex64::new(c, -s)
            })
            .collect();

        // Truncation of the σ-Taylor series at |h| ≤ 1/64, for the sum and its derivative:
        // Σ n^{−c} (h ln n)^{K+1}/(K+1)! n^{h} (1 + ln n) ≤ A (hL)^{K+1}/(K+1)! N^h (1 + L)
        let nf = n_cut as f64;
        let big_l = nf.ln();
        let h = CENTER_STEP / 2.0;
        let mass = if (1.0 - lo).abs() < 1e-9 {
            1.0 + big_l
        } else {
            1.0 + (nf.powf(1.0 - lo) - 1.0) / (1.0 - lo)
        };
        let scale = mass * nf.powf(h) * (1.0 + big_l);
        let mut order = 4;
        let mut term = (h * big_l).powi(order as i32 + 1) / factorial(order + 1);
        while order < 60 && scale * term > 1e-14 {
            order += 1;
            term *= h * big_l / (order + 1) as f64;
        }
        let taylor_err = scale * term;

        let centers = (first..=last)
            .into_par_iter()
            .map(|j| {
                let c = j as f64 * CENTER_STEP;
                let mut d = vec![Complex64::new(0.0, 0.0); order + 1];
                for (&(hi, lo), &ph) in logs.iter().zip(&phases) {
                    let l = hi + lo;
                    let mut v = ph * ((-c * hi).exp() * (1.0 - c * lo));
                    d[0] += v;
                    for (k, dk) in d.iter_mut().enumerate().skip(1) {
                        v *= -l / k as f64;
                        *dk += v;
                    }
                }
                d
            })
            .collect();
        Ok(Self {
            t,
            n_cut,
            order,
            lo,
            centers,
            taylor_err,
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn cutoff(&self) -> usize {
        self.n_cut
    }

    pub fn eval(&self, sigma: f64, bernoulli_order: usize) -> LinePoint {
        let idx = ((sigma - self.lo) / CENTER_STEP).round().clamp(0.0, (self.centers.len() - 1) as f64) as usize;
        let c = self.lo + idx as f64 * CENTER_STEP;
        let h = sigma - c;
        let d = &self.centers[idx];
        let mut s0 = Complex64::new(0.0, 0.0);
        let mut s1 = Complex64::new(0.0, 0.0);
        let mut s2 = Complex64::new(0.0, 0.0);
        for k in (0..=self.order).rev() {
            s0 = s0 * h + d[k];
            if k >= 1 {
                s1 = s1 * h + d[k] * k as f64;
            }
            if k >= 2 {
                s2 = s2 * h + d[k] * (k * (k - 1)) as f64;
            }
        }
        let s = Complex64::new(sigma, self.t);
        let tail = em_tail(s, self.n_cut, bernoulli_order);
        // second derivative of the tail by a one-sided difference of the first
        let eps = 1e-5;
        let tzp2 = em_tail(s + eps, self.n_cut, bernoulli_order).zeta_prime;
        LinePoint {
            sigma,
            zeta: s0 + tail.zeta,
            d1: s1 + tail.zeta_prime,
            d2: s2 + (tzp2 - tail.zeta_prime) / eps,
            err: tail.remainder + tail.rounding + self.taylor_err,
        }
    }

    /// Direct evaluation without the Taylor cache, for cross-checks.
    pub fn eval_direct(&self, sigma: f64, bernoulli_order: usize) -> Complex64 {
        let s = Complex64::new(sigma, self.t);
        let mut acc = crate::numeric::ComplexNeumaier::new();
        for n in 1..self.n_cut {
            acc.add(npow(n as f64, s));
        }
        acc.value() + em_tail(s, self.n_cut, bernoulli_order).zeta
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// max over σ ∈ [lo, hi] of 1/|ζ(σ + iT)| by grid elimination and bisection.
pub fn min_inv_zeta_scan(t: f64, sigma_lo: f64, sigma_hi: f64, acc: &EvalAccuracy) -> Result<f64> {
    if !(sigma_lo <= sigma_hi) {
        return Err(invalid(format!("need sigma_lo <= sigma_hi, got [{sigma_lo}, {sigma_hi}]")));
    }
    if sigma_lo == sigma_hi {
        let z = zeta(Complex64::new(sigma_lo, t), acc)?;
        return Ok(1.0 / z.norm());
    }
    let ev = LineEvaluator::new(t, sigma_lo, sigma_hi, acc)?;
    scan_with(&ev, sigma_lo, sigma_hi, acc)
}

/// Lower bound for |ζ| on [a, b] from endpoint values and derivative sizes.
fn cell_lower_bound(a: &LinePoint, b: &LinePoint) -> f64 {
    let w = b.sigma - a.sigma;
    let lip = a.d1.norm().max(b.d1.norm()) + w * a.d2.norm().max(b.d2.norm()) * 2.0;
    0.5 * (a.abs() + b.abs()) - 0.5 * w * lip - a.err.max(b.err)
}

pub fn scan_with(ev: &LineEvaluator, lo: f64, hi: f64, acc: &EvalAccuracy) -> Result<f64> {
    let m = acc.bernoulli_order;
    let cells = (((hi - lo) * 65536.0).ceil() as usize).max(1);
    let width = (hi - lo) / cells as f64;
    let grid: Vec<LinePoint> = (0..=cells)
        .into_par_iter()
        .map(|j| ev.eval(if j == cells { hi } else { lo + j as f64 * width }, m))
        .collect();
    let mut best = grid.iter().map(LinePoint::abs).fold(f64::INFINITY, f64::min);
    let mut live: Vec<(LinePoint, LinePoint)> = Vec::new();
    for w in grid.windows(2) {
        let lb = cell_lower_bound(&w[0], &w[1]);
        if lb <= 0.0 {
            return Err(Error::PotentialZeroOnLine {
                sigma_lo: w[0].sigma,
                sigma_hi: w[1].sigma,
                t: ev.t(),
            });
        }
        if lb <= best {
            live.push((w[0], w[1]));
        }
    }
    // elimination rounds down to cells of width 2^-22 (relative to a unit interval)
    let target = (hi - lo).min(1.0) / 4_194_304.0;
    let mut w = width;
    while w > target * 1.5 {
        let mut next = Vec::with_capacity(live.len() * 2);
        for (a, b) in live {
            let mid = ev.eval(0.5 * (a.sigma + b.sigma), m);
            best = best.min(mid.abs());
            next.push((a, mid));
            next.push((mid, b));
        }
        live = next
            .into_iter()
            .filter(|(a, b)| cell_lower_bound(a, b) <= best)
            .collect();
        w *= 0.5;
    }
    // stationary points of |ζ|: sign change of the slope from − to +
    for (a, b) in &live {
        if a.slope() < 0.0 && b.slope() > 0.0 {
            let (mut l, mut r) = (a.sigma, b.sigma);
            for _ in 0..23 {
                let mid = ev.eval(0.5 * (l + r), m);
                best = best.min(mid.abs());
                if mid.slope() < 0.0 {
                    l = mid.sigma;
                } else {
                    r = mid.sigma;
                }
            }
            best = best.min(ev.eval(0.5 * (l + r), m).abs());
        }
    }
    Ok(1.0 / best)
}

/// max over r ≤ 1 of 1/|ζ(r ± iT)|: scan on [−1, 1], left-half-plane bound below −1.
pub fn zeta_line_max(t: f64, acc: &EvalAccuracy) -> Result<f64> {
    if t.abs() < 2.0 * PI * E {
        return Err(invalid("line bound needs |T| > 2πe"));
    }
    let scanned = min_inv_zeta_scan(t.abs(), -1.0, 1.0, acc)?;
    // for r ≤ −1: (2πe/T)^{1/2−r}·√e·ζ(1−r)/ζ(2−2r) is largest at r = −1
    let left = (2.0 * PI * E / t.abs()).powf(1.5) * E.sqrt() * zeta_real(2.0)? / zeta_real(4.0)?;
    Ok(scanned.max(left))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn taylor_cache_matches_direct() {
        let acc = EvalAccuracy::default();
        let ev = LineEvaluator::new(1000.0, -1.0, 1.0, &acc).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let s: f64 = rng.gen_range(-1.0..1.0);
            let p = ev.eval(s, 12);
            let a = p.zeta;
            let b = ev.eval_direct(s, 12);
            let (c, _) = crate::zeta::zeta_with_derivative(Complex64::new(s, 1000.0), &acc).unwrap();
            assert!((a - b).norm() < 1e-11, "{s}: {a} vs {b}");
            assert!((a - c.value).norm() <= p.err + c.err, "{s}: {a} vs {}", c.value);
        }
    }

    #[test]
    fn derivatives_consistent() {
        let acc = EvalAccuracy::default();
        let ev = LineEvaluator::new(321.0, -0.2, 0.9, &acc).unwrap();
        let h = 1e-6;
        for s in [-0.1, 0.3, 0.77] {
            let p = ev.eval(s, 12);
            let fd = (ev.eval(s + h, 12).zeta - ev.eval(s - h, 12).zeta) / (2.0 * h);
            assert!((fd - p.d1).norm() < 1e-6 * (1.0 + p.d1.norm()));
            let fd2 = (ev.eval(s + h, 12).d1 - ev.eval(s - h, 12).d1) / (2.0 * h);
            assert!((fd2 - p.d2).norm() < 1e-4 * (1.0 + p.d2.norm()));
        }
    }

    #[test]
    fn degenerate_interval() {
        let acc = EvalAccuracy::default();
        let v = min_inv_zeta_scan(100.0, 0.3, 0.3, &acc).unwrap();
        let z = zeta(Complex64::new(0.3, 100.0), &acc).unwrap();
        assert_eq!(v, 1.0 / z.norm());
    }

    #[test]
    fn scan_dominates_samples() {
        let acc = EvalAccuracy::default();
        let t = 500.0;
        let best = min_inv_zeta_scan(t, -1.0, 1.0, &acc).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let s: f64 = rng.gen_range(-1.0..1.0);
            let v = 1.0 / zeta(Complex64::new(s, t), &acc).unwrap().norm();
            assert!(v <= best * (1.0 + 1e-10), "{s}: {v} > {best}");
        }
    }

    #[test]
    fn zero_on_segment_detected() {
        let acc = EvalAccuracy::default();
        let g1 = 14.134_725_141_734_695;
        assert!(matches!(
            min_inv_zeta_scan(g1, 0.0, 1.0, &acc),
            Err(Error::PotentialZeroOnLine { .. })
        ));
    }
}
