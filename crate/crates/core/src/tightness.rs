//! Fejér sums of the square wave sgn cos t and the sequence a_n = σ_K(T₊ log n), whose
//! partial sums attain x·tanh(π/2T₊) although A(s) has no poles with |Im s| < T₊.

use crate::error::{invalid, Error, Result};
use crate::numeric::quad::GaussLegendre;
use crate::numeric::special::zeta_real;
use crate::numeric::Neumaier;
use crate::zeta::{zeta, EvalAccuracy};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// Largest x the direct sums will run to.
pub const X_CAP: f64 = 1e9;

const TABLE_BITS: u32 = 20;
const CHUNK: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq)]
pub struct FejerParams {
    pub k: usize,
    pub t_plus: f64,
    /// c[0..=k]; zero at even indices
    pub c: Vec<f64>,
}

impl FejerParams {
    /// c_k = (−1)^{(k−1)/2}(4/π)(1/k − 1/(K+1)) for odd k.
    pub fn new(k: usize, t_plus: f64) -> Result<Self> {
        if k == 0 || !(t_plus > 0.0 && t_plus.is_finite()) {
            return Err(invalid(format!("need K >= 1 and T+ > 0, got {k}, {t_plus}")));
        }
        let kp1 = (k + 1) as f64;
        let c = (0..=k)
            .map(|j| {
                if j % 2 == 0 {
                    0.0
                } else {
                    let sign = if (j / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    sign * 4.0 / PI * (1.0 / j as f64 - 1.0 / kp1)
                }
            })
            .collect();
        Ok(Self { k, t_plus, c })
    }

    /// Σ 4j|c_j|, a bound on the total variation of σ_K over one period.
    pub fn total_variation(&self) -> f64 {
        self.c.iter().enumerate().map(|(j, c)| 4.0 * j as f64 * c.abs()).sum()
    }

    fn derivative_bound(&self, order: i32) -> f64 {
        self.c.iter().enumerate().map(|(j, c)| c.abs() * (j as f64).powi(order)).sum()
    }

    /// x_N = exp((2πN + π/2)/T₊).
    pub fn x_n(&self, n: u64) -> f64 {
        ((TAU * n as f64 + FRAC_PI_2) / self.t_plus).exp()
    }

    /// The `count` largest N ≥ 1 with x_N ≤ cap, ascending.
    pub fn largest_admissible(&self, count: usize, cap: f64) -> Vec<u64> {
        let top = ((self.t_plus * cap.ln() - FRAC_PI_2) / TAU).floor();
        if top < 1.0 {
            return Vec::new();
        }
        let mut top = top as u64;
        while top > 0 && self.x_n(top) > cap {
            top -= 1;
        }
        (1..=top).rev().take(count).collect::<Vec<_>>().into_iter().rev().collect()
    }
}

pub fn sigma_k(params: &FejerParams, t: f64) -> f64 {
    let mut acc = Neumaier::new();
    for (j, c) in params.c.iter().enumerate().skip(1).step_by(2) {
        acc.add(c * (j as f64 * t).cos());
    }
    acc.value()
}

/// ‖σ_K − sgn cos‖₁ over one period, by Gauss-Legendre panels split at ±π/2.
pub fn l1_distance(params: &FejerParams) -> f64 {
    let gl = GaussLegendre::new(16);
    let breaks = [0.0, FRAC_PI_2, PI, 1.5 * PI, TAU];
    let per = (params.k / 2).max(4);
    let mut acc = Neumaier::new();
    for w in breaks.windows(2) {
        let sign = if w[0] < FRAC_PI_2 || w[0] >= 1.5 * PI { 1.0 } else { -1.0 };
        let h = (w[1] - w[0]) / per as f64;
        for i in 0..per {
            let a = w[0] + i as f64 * h;
            acc.add(gl.integrate(|t| (sigma_k(params, t) - sign).abs(), a, a + h));
        }
    }
    acc.value()
}

/// σ_K tabulated over one period with 4-point Lagrange interpolation.
struct SigmaTable {
    values: Vec<f64>,
    scale: f64,
    error: f64,
}

impl SigmaTable {
    fn new(params: &FejerParams) -> Self {
        let m = 1usize << TABLE_BITS;
        let h = TAU / m as f64;
        let values: Vec<f64> = (0..m + 3)
            .into_par_iter()
            .map(|i| sigma_k(params, (i as f64 - 1.0) * h))
            .collect();
        // |Π(u − u_i)| ≤ 9/16 on the middle interval, plus rounding of the table and the phase
        let error = h.powi(4) * 9.0 / 16.0 / 24.0 * params.derivative_bound(4)
            + 1e-13 * params.derivative_bound(1)
            + 1e-14;
        Self {
            values,
            scale: m as f64 / TAU,
            error,
        }
    }

    #[inline]
    fn eval(&self, t: f64) -> f64 {
        let u = t.rem_euclid(TAU) * self.scale;
        let i = (u.floor() as usize).min(self.values.len() - 4);
        let f = u - i as f64;
        let p = &self.values[i..i + 4];
        let (a, b, c, d) = (f + 1.0, f, f - 1.0, f - 2.0);
        -b * c * d / 6.0 * p[0] + a * c * d / 2.0 * p[1] - a * b * d / 2.0 * p[2] + a * b * c / 6.0 * p[3]
    }
}

// Σ_{lo<n≤hi} table(T₊ log n)·n^{−power}
fn chunk_sum(table: &SigmaTable, t_plus: f64, lo: u64, hi: u64, power: i32) -> f64 {
    let mut acc = Neumaier::new();
    for n in lo + 1..=hi {
        let nf = n as f64;
        let v = table.eval(t_plus * nf.ln());
        acc.add(if power == 0 { v } else { v / nf });
    }
    acc.value()
}

// partial sums at each (sorted) endpoint, deterministic in chunk order
fn partial_sums(table: &SigmaTable, t_plus: f64, ends: &[u64], power: i32) -> Vec<f64> {
    let mut pieces = Vec::new();
    let mut lo = 0;
    for (idx, &end) in ends.iter().enumerate() {
        while lo < end {
            let hi = (lo + CHUNK).min(end);
            pieces.push((idx, lo, hi));
            lo = hi;
        }
    }
    let sums: Vec<f64> = pieces.par_iter().map(|&(_, lo, hi)| chunk_sum(table, t_plus, lo, hi, power)).collect();
    let mut out = vec![0.0; ends.len()];
    let mut acc = Neumaier::new();
    let mut next = 0;
    for (&(idx, _, _), s) in pieces.iter().zip(&sums) {
        while next < idx {
            out[next] = acc.value();
            next += 1;
        }
        acc.add(*s);
    }
    while next < ends.len() {
        out[next] = acc.value();
        next += 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TightnessRow {
    pub n: u64,
    pub x: f64,
    pub sum: f64,
    /// S(x)/x
    pub ratio: f64,
    /// tanh(π/2T₊)
    pub target: f64,
    /// bound on |S(x) − x·tanh(π/2T₊)|
    pub envelope: f64,
}

impl TightnessRow {
    pub fn deviation(&self) -> f64 {
        self.sum - self.x * self.target
    }

    pub fn within(&self) -> bool {
        self.deviation().abs() <= self.envelope
    }

    pub fn relative_envelope(&self) -> f64 {
        self.envelope / self.x
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TightnessReport {
    pub k: usize,
    pub t_plus: f64,
    pub l1: f64,
    pub total_variation: f64,
    pub rows: Vec<TightnessRow>,
}

impl TightnessReport {
    pub fn all_within(&self) -> bool {
        self.rows.iter().all(TightnessRow::within)
    }

    /// Envelope/x strictly decreasing along the rows.
    pub fn envelope_shrinks(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].relative_envelope() < w[0].relative_envelope())
    }
}

fn check_range(params: &FejerParams, ns: &[u64]) -> Result<Vec<f64>> {
    if ns.is_empty() {
        return Err(invalid("empty N list"));
    }
    let xs: Vec<f64> = ns.iter().map(|&n| params.x_n(n)).collect();
    if let Some(x) = xs.iter().find(|&&x| x > X_CAP) {
        return Err(Error::Range(format!("x_N = {x:e} exceeds the cap {X_CAP:e}")));
    }
    if ns.contains(&0) || !ns.windows(2).all(|w| w[0] < w[1]) {
        return Err(invalid("N list must be positive and strictly increasing"));
    }
    Ok(xs)
}

/// S(x_N) = Σ_{n≤x_N} σ_K(T₊ log n) against x_N·tanh(π/2T₊), with the envelope
/// 2x‖σ_K−g‖₁/T₊ + TV(T₊ log(2x+1)/2π + 1) + 2‖σ_K‖∞ + 1 plus the tabulation error.
pub fn tightness_experiment(params: &FejerParams, ns: &[u64]) -> Result<TightnessReport> {
    let xs = check_range(params, ns)?;
    let table = SigmaTable::new(params);
    let ends: Vec<u64> = xs.iter().map(|x| x.floor() as u64).collect();
    let sums = partial_sums(&table, params.t_plus, &ends, 0);
    let l1 = l1_distance(params);
    let tv = params.total_variation();
    let t = params.t_plus;
    let target = (PI / (2.0 * t)).tanh();
    let rows = ns
        .iter()
        .zip(xs.iter().zip(&sums))
        .map(|(&n, (&x, &sum))| TightnessRow {
            n,
            x,
            sum,
            ratio: sum / x,
            target,
            envelope: 2.0 * x * l1 / t + tv * (t * (2.0 * x + 1.0).ln() / TAU + 1.0) + 3.0 + x * table.error,
        })
        .collect();
    Ok(TightnessReport {
        k: params.k,
        t_plus: t,
        l1,
        total_variation: tv,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HarmonicRow {
    pub n: u64,
    pub x: f64,
    /// Σ_{n≤x} a_n/n
    pub sum: f64,
    /// A(1) = Σ c_k Re ζ(1 + ikT₊)
    pub a1: f64,
    /// π/(2T₊)
    pub target: f64,
    pub envelope: f64,
}

impl HarmonicRow {
    pub fn within(&self) -> bool {
        (self.sum - self.a1 - self.target).abs() <= self.envelope
    }
}

pub fn a_at_one(params: &FejerParams, acc: &EvalAccuracy) -> Result<f64> {
    let mut s = Neumaier::new();
    for (j, c) in params.c.iter().enumerate().skip(1).step_by(2) {
        s.add(c * zeta(Complex64::new(1.0, j as f64 * params.t_plus), acc)?.re);
    }
    Ok(s.value())
}

/// Σ_{n≤x_N} a_n/n − A(1) against π/(2T₊), envelope ‖σ_K−g‖₁/T₊ + (TV(T₊/2π + 2) + 2)/x.
pub fn harmonic_experiment(params: &FejerParams, ns: &[u64], acc: &EvalAccuracy) -> Result<Vec<HarmonicRow>> {
    let xs = check_range(params, ns)?;
    let table = SigmaTable::new(params);
    let ends: Vec<u64> = xs.iter().map(|x| x.floor() as u64).collect();
    let sums = partial_sums(&table, params.t_plus, &ends, 1);
    let a1 = a_at_one(params, acc)?;
    let l1 = l1_distance(params);
    let tv = params.total_variation();
    let t = params.t_plus;
    Ok(ns
        .iter()
        .zip(xs.iter().zip(&sums))
        .map(|(&n, (&x, &sum))| HarmonicRow {
            n,
            x,
            sum,
            a1,
            target: PI / (2.0 * t),
            envelope: l1 / t + (tv * (t / TAU + 2.0) + 2.0) / x + table.error * (x.ln() + 1.0) + 1e-9,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirichletRepReport {
    pub truncated: Complex64,
    pub zeta_combination: Complex64,
    pub tail_bound: f64,
}

impl DirichletRepReport {
    pub fn holds(&self) -> bool {
        (self.truncated - self.zeta_combination).norm() <= self.tail_bound
    }
}

/// Compares Σ_{n≤N} σ_K(T₊ log n)n^{−s} with Σ (c_k/2)(ζ(s−ikT₊) + ζ(s+ikT₊)).
pub fn dirichlet_rep_check(params: &FejerParams, s: Complex64, terms: u64, acc: &EvalAccuracy) -> Result<DirichletRepReport> {
    if !(s.re > 1.2) {
        return Err(invalid(format!("need Re s > 1.2, got {}", s.re)));
    }
    if terms < 2 {
        return Err(invalid("need at least two terms"));
    }
    let mut re = Neumaier::new();
    let mut im = Neumaier::new();
    for n in 1..=terms {
        let nf = n as f64;
        let v = sigma_k(params, params.t_plus * nf.ln()) * (-s * nf.ln()).exp();
        re.add(v.re);
        im.add(v.im);
    }
    let mut zr = Neumaier::new();
    let mut zi = Neumaier::new();
    let mut zeta_err = 0.0;
    for (j, c) in params.c.iter().enumerate() {
        if *c == 0.0 {
            continue;
        }
        let shift = Complex64::new(0.0, j as f64 * params.t_plus);
        let (z1, z2) = (zeta(s - shift, acc)?, zeta(s + shift, acc)?);
        let v = 0.5 * c * (z1 + z2);
        zeta_err += c.abs() * acc.target_abs_err * (2.0 + z1.norm() + z2.norm());
        zr.add(v.re);
        zi.add(v.im);
    }
    // |Σ_{n>N} a_n n^{−s}| ≤ ζ(σ) − Σ_{n≤N} n^{−σ} ≤ N^{1−σ}/(σ−1)
    let sigma = s.re;
    let tail = (terms as f64).powf(1.0 - sigma) / (sigma - 1.0);
    let tail = tail.min(zeta_real(sigma)?);
    Ok(DirichletRepReport {
        truncated: Complex64::new(re.value(), im.value()),
        zeta_combination: Complex64::new(zr.value(), zi.value()),
        tail_bound: tail + zeta_err + 1e-12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let p = FejerParams::new(9, 10.0).unwrap();
        assert!(p.c.iter().step_by(2).all(|c| *c == 0.0));
        assert!((p.c[1] - 4.0 / PI * 0.9).abs() < 1e-15);
        assert!((p.c[3] + 4.0 / PI * (1.0 / 3.0 - 0.1)).abs() < 1e-15);
        let odd: f64 = (1..=9).step_by(2).map(|k| 1.0 - k as f64 / 10.0).sum();
        assert!((p.total_variation() - 16.0 / PI * odd).abs() < 1e-12);
        assert!(FejerParams::new(0, 1.0).is_err());
    }

    #[test]
    fn bounded_and_odd_harmonic() {
        for k in [9, 99, 999] {
            let p = FejerParams::new(k, 1.0).unwrap();
            let n = 20_000;
            let max = (0..=n).map(|i| sigma_k(&p, TAU * i as f64 / n as f64).abs()).fold(0.0, f64::max);
            assert!(max <= 1.0 + 1e-12, "K={k}: {max}");
            for t in [0.0, 0.3, 1.1, 2.5] {
                assert!((sigma_k(&p, t + PI) + sigma_k(&p, t)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mean_zero() {
        let p = FejerParams::new(49, 1.0).unwrap();
        let gl = GaussLegendre::new(20);
        let s: f64 = (0..200).map(|i| gl.integrate(|t| sigma_k(&p, t), TAU * i as f64 / 200.0, TAU * (i + 1) as f64 / 200.0)).sum();
        assert!(s.abs() < 1e-10);
    }

    #[test]
    fn l1_decreases_with_k() {
        let d: Vec<f64> = [49, 199, 799].iter().map(|&k| l1_distance(&FejerParams::new(k, 1.0).unwrap())).collect();
        assert!(d[0] > d[1] && d[1] > d[2] && d[2] > 0.0, "{d:?}");
    }

    #[test]
    fn table_matches_direct() {
        let p = FejerParams::new(399, 4.0 * PI).unwrap();
        let table = SigmaTable::new(&p);
        assert!(table.error < 1e-9);
        for i in 0..1000 {
            let t = 0.2617 * i as f64;
            assert!((table.eval(t) - sigma_k(&p, t)).abs() <= table.error);
        }
    }

    #[test]
    fn small_experiment() {
        let p = FejerParams::new(49, 4.0 * PI).unwrap();
        let ns = p.largest_admissible(3, 1e6);
        assert_eq!(ns.len(), 3);
        let report = tightness_experiment(&p, &ns).unwrap();
        assert!(report.all_within(), "{report:?}");
        assert!(report.envelope_shrinks());
        // direct summation agrees with the tabulated sum
        let x = report.rows[0].x.floor() as u64;
        let direct: f64 = (1..=x).map(|n| sigma_k(&p, p.t_plus * (n as f64).ln())).sum();
        assert!((direct - report.rows[0].sum).abs() < 1e-6);
        assert!(matches!(tightness_experiment(&p, &[100]), Err(Error::Range(_))));
    }

    #[test]
    fn harmonic_variant() {
        let p = FejerParams::new(9, 4.0 * PI).unwrap();
        let ns = p.largest_admissible(2, 1e6);
        let rows = harmonic_experiment(&p, &ns, &EvalAccuracy::default()).unwrap();
        assert!(rows.iter().all(HarmonicRow::within), "{rows:?}");
    }

    #[test]
    fn dirichlet_representation() {
        let acc = EvalAccuracy::default();
        let p = FejerParams::new(9, 10.0).unwrap();
        let r = dirichlet_rep_check(&p, Complex64::new(2.0, 0.0), 20_000, &acc).unwrap();
        assert!(r.holds(), "{r:?}");
        let p = FejerParams::new(1, 10.0).unwrap();
        let s = Complex64::new(3.0, 0.0);
        let r = dirichlet_rep_check(&p, s, 5_000, &acc).unwrap();
        assert!(r.holds());
        let single = 0.5 * p.c[1] * (zeta(s - Complex64::new(0.0, 10.0), &acc).unwrap() + zeta(s + Complex64::new(0.0, 10.0), &acc).unwrap());
        assert!((r.zeta_combination - single).norm() < 1e-14);
        assert_eq!(p.c[0], 0.0);
        assert!(dirichlet_rep_check(&p, Complex64::new(1.1, 0.0), 10, &acc).is_err());
    }
}
