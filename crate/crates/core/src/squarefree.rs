//! Square-free counting: exact short-interval constants, the M → R decomposition
//! and bound certificates for R(x) = Q(x) − 6x/π² derived from bounds on M.

use crate::error::{invalid, Error, Result};
use crate::numeric::format_sig;
use crate::sieve::{remainder_r, MobiusTable, SIX_OVER_PI2};
use num_rational::Ratio;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;

const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
const WINDOW: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShortIntervalConstants {
    pub q: u64,
    /// ∏_{p≤q} (1 − 1/p²)
    pub c1: Ratio<i64>,
    /// sup − inf of Q_q(t) − c1·t over t ≥ 0
    pub c2_star: Ratio<i64>,
    /// ∏_{p≤q} p²
    pub period: i64,
}

fn primes_to(q: u64) -> Result<&'static [u64]> {
    match SMALL_PRIMES.iter().position(|&p| p == q) {
        Some(i) => Ok(&SMALL_PRIMES[..=i]),
        None => Err(invalid(format!("q must be one of 2, 3, 5, 7, 11, 13, got {q}"))),
    }
}

// (count, max of period·q_local − a·(n − lo) after each n, min of the same just before each n)
fn window_stats(lo: u64, hi: u64, squares: &[u64], period: i64, a: i64) -> (i64, i64, i64) {
    let len = (hi - lo) as usize;
    let mut hit = vec![false; len];
    for &s in squares {
        let mut m = lo.div_ceil(s) * s;
        while m < hi {
            hit[(m - lo) as usize] = true;
            m += s;
        }
    }
    let (mut q, mut hi_v, mut lo_v) = (0i64, i64::MIN, i64::MAX);
    for (i, &h) in hit.iter().enumerate() {
        let n = i as i64 + 1;
        // value just before lo + i jumps, relative to lo − 1
        let before = period * q - a * n;
        lo_v = lo_v.min(before);
        if !h {
            q += 1;
        }
        hi_v = hi_v.max(period * q - a * n);
    }
    (q, hi_v, lo_v)
}

/// Exact (c1, c2) for |Q_q(t₂) − Q_q(t₁)| ≤ c1|t₂ − t₁| + c2, by a streaming scan of one period.
/// Q_q counts n ≤ t free of p² for p ≤ q, so the pair is also valid for Q.
pub fn short_interval_constants(q: u64) -> Result<ShortIntervalConstants> {
    let ps = primes_to(q)?;
    let squares: Vec<u64> = ps.iter().map(|p| p * p).collect();
    let period: i64 = squares.iter().product::<u64>() as i64;
    let a: i64 = squares.iter().map(|s| *s as i64 - 1).product();
    // d(n) scaled by the period: period·Q_q(n) − a·n, an integer
    let starts: Vec<u64> = (0..period as u64).step_by(WINDOW as usize).collect();
    let stats: Vec<(i64, i64, i64)> = starts
        .par_iter()
        .map(|&lo| window_stats(lo + 1, (lo + WINDOW).min(period as u64) + 1, &squares, period, a))
        .collect();
    let (mut base, mut sup, mut inf) = (0i64, 0i64, 0i64);
    for (&lo, &(count, hi_v, lo_v)) in starts.iter().zip(&stats) {
        let shift = period * base - a * lo as i64;
        sup = sup.max(shift + hi_v);
        inf = inf.min(shift + lo_v);
        base += count;
    }
    Ok(ShortIntervalConstants {
        q,
        c1: Ratio::new(a, period),
        c2_star: Ratio::new(sup - inf, period),
        period,
    })
}

/// Q_q(t) by inclusion-exclusion over the squares of divisors of ∏_{p≤q} p.
pub fn q_smooth_count(q: u64, t: f64) -> Result<u64> {
    let ps = primes_to(q)?;
    if !(t >= 0.0) {
        return Ok(0);
    }
    let n = t.floor() as u64;
    let mut total = 0i64;
    for mask in 0u32..(1 << ps.len()) {
        let mut d2 = 1u64;
        for (i, p) in ps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d2 *= p * p;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * (n / d2) as i64;
    }
    Ok(total as u64)
}

pub fn c3(c1: f64) -> f64 {
    0.5 * (1.0 / (2.0 * (PI * PI / 6.0)) - c1 / 4.0)
}

/// Inputs to the R(x) bounds: |M(v)| ≤ εv + κ√v, optionally |M(v)| ≤ κ₋√v on [v₀, v₁],
/// and a short-interval pair (c1, c2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundHypothesis {
    pub epsilon: f64,
    pub kappa: f64,
    pub kappa_minus: f64,
    pub v0: f64,
    pub v1: f64,
    pub c1: f64,
    pub c2: f64,
}

impl BoundHypothesis {
    pub fn new(epsilon: f64, kappa: f64, c1: f64, c2: f64) -> Result<Self> {
        let h = Self {
            epsilon,
            kappa,
            kappa_minus: 0.0,
            v0: 1.0,
            v1: 1.0,
            c1,
            c2,
        };
        h.validate()?;
        Ok(h)
    }

    pub fn with_mid_range(mut self, kappa_minus: f64, v0: f64, v1: f64) -> Result<Self> {
        if !(kappa_minus > 0.0) || !(v0 > 0.0) || !(v1 > v0) {
            return Err(invalid(format!("need kappa_minus > 0 and 0 < v0 < v1, got {kappa_minus}, {v0}, {v1}")));
        }
        self.kappa_minus = kappa_minus;
        self.v0 = v0;
        self.v1 = v1;
        Ok(self)
    }

    pub fn with_pair(mut self, pair: &ShortIntervalConstants) -> Result<Self> {
        self.c1 = ratio_f64(pair.c1);
        self.c2 = ratio_f64(pair.c2_star);
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if !(self.epsilon >= 0.0) || !(self.kappa >= 0.0) {
            return Err(invalid("epsilon and kappa must be nonnegative"));
        }
        if !(self.c1 > 0.0 && self.c1 <= 1.0) || !(self.c2 > 0.0) {
            return Err(invalid(format!("need 0 < c1 <= 1 and c2 > 0, got {}, {}", self.c1, self.c2)));
        }
        Ok(())
    }

    pub fn c3(&self) -> f64 {
        c3(self.c1)
    }
}

pub fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundTerm {
    pub exponent: Ratio<i64>,
    pub coefficient: f64,
}

/// |R(x)| ≤ Σ coefficient·x^exponent on the validity range.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundCertificate {
    pub terms: Vec<BoundTerm>,
    pub valid_from: f64,
    pub from_inclusive: bool,
    pub valid_to: f64,
}

impl BoundCertificate {
    pub fn contains(&self, x: f64) -> bool {
        let lower = if self.from_inclusive { x >= self.valid_from } else { x > self.valid_from };
        lower && x <= self.valid_to
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !self.contains(x) {
            return Err(Error::Domain(format!("x = {x} outside [{}, {}]", self.valid_from, self.valid_to)));
        }
        Ok(self.terms.iter().map(|t| t.coefficient * x.powf(ratio_f64(t.exponent))).sum())
    }

    pub fn coefficients(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.coefficient).collect()
    }

    /// Largest value of bound(x)/x^e on [lo, hi]; each term is monotone so endpoints suffice.
    pub fn max_ratio(&self, e: f64, lo: f64, hi: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let k = ratio_f64(t.exponent) - e;
                t.coefficient * lo.powf(k).max(hi.powf(k))
            })
            .sum()
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{} x^({})", format_sig(t.coefficient, 6), t.exponent))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn term(n: i64, d: i64, c: f64) -> BoundTerm {
    BoundTerm {
        exponent: Ratio::new(n, d),
        coefficient: c,
    }
}

fn domain(name: &str, x: f64, bound: f64) -> Error {
    Error::Domain(format!("{name}: need x > {bound}, got {x}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    A,
    B,
}

/// Bounds on R(x) from |M(v)| ≤ εv + κ√v for all v > 0. Branch A is for moderate x; branch B
/// needs ε < c1/584 and wins for very large x.
pub fn r_bound_gould(hyp: &BoundHypothesis, x: f64, branch: Branch) -> Result<BoundCertificate> {
    hyp.validate()?;
    let (e, k, c1, c2) = (hyp.epsilon, hyp.kappa, hyp.c1, hyp.c2);
    let c3 = hyp.c3();
    let mid = 3.0 * c2.cbrt() * c3.powf(2.0 / 3.0);
    let last = 0.5 * (c2 / c3).powf(1.0 / 6.0);
    match branch {
        Branch::A => {
            if !(k > 0.0) {
                return Err(invalid("branch A needs kappa > 0"));
            }
            let r = 16.0 * k / c1;
            let balance = (c2 / c3).powi(5) / r.powi(6);
            let from = (64e5 * (k / c1).powi(4)).max(balance);
            if !(x > from) {
                return Err(domain("x > max(64e5 (kappa/c1)^4, (c2/c3)^5/(16 kappa/c1)^6)", x, from));
            }
            let omit_from = (4.25e12 * (k / c1).powi(4)).max(balance);
            let mut terms = vec![
                term(3, 5, 4.0 * e / r.powf(0.4)),
                term(2, 5, 5.0 * c1.powf(0.6) / 3.0 * (k / 2.0).powf(0.4)),
                term(1, 3, mid),
            ];
            let valid_from = if x > omit_from {
                omit_from
            } else {
                terms.push(term(1, 4, 5.0 * k / 7.0));
                from
            };
            terms.push(term(1, 6, last));
            terms.retain(|t| t.coefficient > 0.0);
            Ok(BoundCertificate {
                terms,
                valid_from,
                from_inclusive: false,
                valid_to: f64::INFINITY,
            })
        }
        Branch::B => {
            if !(e > 0.0 && e < c1 / 584.0) {
                return Err(Error::Domain(format!("branch B needs 0 < epsilon < c1/584, got {e}")));
            }
            let from = (c2 / c3).powi(2) * (c1 / (16.0 * e)).powi(3);
            if !(x >= from) {
                return Err(domain("x >= (c2/c3)^2 (c1/(16 epsilon))^3", x, from));
            }
            let mut terms = vec![
                term(1, 2, 2.0 * (e * c1).sqrt()),
                term(1, 3, mid),
                term(1, 4, k / 3.0 * (c1 / e).powf(0.75)),
                term(1, 6, last),
            ];
            terms.retain(|t| t.coefficient > 0.0);
            Ok(BoundCertificate {
                terms,
                valid_from: from,
                from_inclusive: true,
                valid_to: f64::INFINITY,
            })
        }
    }
}

/// Bound on R(x) when |M(v)| ≤ κ₋√v on [v₀, v₁] and εv + κ√v beyond; valid up to x = v₁².
pub fn r_bound_qmediano(hyp: &BoundHypothesis, x: f64) -> Result<BoundCertificate> {
    hyp.validate()?;
    let (e, k, km, c1, c2) = (hyp.epsilon, hyp.kappa, hyp.kappa_minus, hyp.c1, hyp.c2);
    if !(km > 0.0) || !(hyp.v1 > hyp.v0) {
        return Err(invalid("mid-range hypothesis (kappa_minus, v0, v1) not set"));
    }
    let c3 = hyp.c3();
    let r = 16.0 * km / c1;
    let two_v0 = 2.0 * hyp.v0 * hyp.v0;
    let from = (64e5 * (km / c1).powi(4))
        .max((c2 / c3).powi(5) / r.powi(6))
        .max(two_v0.powf(1.25) / r)
        .max(two_v0);
    let to = hyp.v1 * hyp.v1;
    if !(x > from) {
        return Err(domain("x > max(64e5 (k-/c1)^4, (c2/c3)^5/(16k-/c1)^6, (2v0^2)^(5/4)/(16k-/c1), 2v0^2)", x, from));
    }
    if !(x <= to) {
        return Err(Error::Domain(format!("need x <= v1^2 = {to}, got {x}")));
    }
    let mut terms = vec![
        term(1, 2, 2.0 * e),
        term(2, 5, 5.0 * c1.powf(0.6) / 3.0 * (km / 2.0).powf(0.4)),
        term(1, 3, 3.0 * c2.cbrt() * c3.powf(2.0 / 3.0)),
        term(1, 4, 4.0 * k / 3.0),
        term(1, 6, 0.5 * (c2 / c3).powf(1.0 / 6.0)),
    ];
    terms.retain(|t| t.coefficient > 0.0);
    Ok(BoundCertificate {
        terms,
        valid_from: from,
        from_inclusive: false,
        valid_to: to,
    })
}

/// Cap on |Σ_{k≤K} F(√(x/k))| + |∫₀^{K+1/2} F(√(x/u)) du| when |F(v)| ≤ εv + κ√v.
pub fn legolas_cap(epsilon: f64, kappa: f64, x: f64, k: u64) -> Result<f64> {
    if k < 3 {
        return Err(invalid(format!("K must be at least 3, got {k}")));
    }
    let h = k as f64 - 0.5;
    let extra = if k >= 37 { 0.0 } else { 5.0 / 7.0 };
    Ok(4.0 * h.sqrt() * epsilon * x.sqrt() + (8.0 / 3.0 * h.powf(0.75) + extra) * kappa * x.powf(0.25))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RamandoRow {
    pub n: u64,
    /// right side minus left side; `None` where the inequality is not claimed
    pub first: Option<f64>,
    pub second_with_const: Option<f64>,
    pub second_plain: Option<f64>,
}

impl RamandoRow {
    pub fn holds(&self) -> bool {
        [self.first, self.second_with_const, self.second_plain]
            .iter()
            .all(|m| m.is_none_or(|v| v >= 0.0))
    }
}

/// Checks 2√(N+½) + Σ n^{−1/2} ≤ 4√(N−½) (N ≥ 2) and
/// (4/3)(N+½)^{3/4} + Σ n^{−1/4} ≤ (8/3)(N−½)^{3/4} + 5/7 (N ≥ 3; without 5/7 for N ≥ 37).
pub fn ramando_check(range: std::ops::RangeInclusive<u64>) -> Vec<RamandoRow> {
    let (mut s2, mut s4) = (0.0f64, 0.0f64);
    let mut out = Vec::new();
    for n in 1..=*range.end() {
        let nf = n as f64;
        s2 += 1.0 / nf.sqrt();
        s4 += 1.0 / nf.sqrt().sqrt();
        if n < (*range.start()).max(2) {
            continue;
        }
        let first = 4.0 * (nf - 0.5).sqrt() - 2.0 * (nf + 0.5).sqrt() - s2;
        let second = 8.0 / 3.0 * (nf - 0.5).powf(0.75) - 4.0 / 3.0 * (nf + 0.5).powf(0.75) - s4;
        out.push(RamandoRow {
            n,
            first: Some(first),
            second_with_const: (n >= 3).then_some(second + 5.0 / 7.0),
            second_plain: (n >= 37).then_some(second),
        });
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Decomposition {
    pub r_exact: f64,
    pub head_sum: f64,
    pub head_integral: f64,
    pub error_cap: f64,
}

impl Decomposition {
    pub fn residual(&self) -> f64 {
        self.r_exact - self.head_sum + self.head_integral
    }

    pub fn holds(&self) -> bool {
        self.residual().abs() <= self.error_cap * (1.0 + 1e-12) + 1e-9
    }
}

// ⌊√(x/u)⌋ for u = num/den, exactly
fn isqrt_ratio(x: u64, num: u64, den: u64) -> u64 {
    let target = x as u128 * den as u128;
    let mut v = ((x as f64 * den as f64 / num as f64).sqrt()) as u128;
    while v * v * num as u128 > target {
        v -= 1;
    }
    while (v + 1) * (v + 1) * num as u128 <= target {
        v += 1;
    }
    v as u64
}

/// R(x) split as Σ_{k≤K} M(√(x/k)) − ∫₀^{K+½} M(√(x/u)) du plus a remainder capped by
/// c1√x/4·((K+½)^{−1/2} − (K′+½)^{−1/2}) + c2(K′−K) + Q(√(x/(K′+½)))/2.
/// The integral is U·M(√(x/U)) + x(6/π² − Σ_{n≤√(x/U)} μ(n)/n²) with U = K+½.
pub fn andalas_decompose(x: u64, k: u64, k_prime: u64, hyp: &BoundHypothesis, table: &MobiusTable) -> Result<Decomposition> {
    if x == 0 || k_prime < k {
        return Err(invalid(format!("need x >= 1 and K' >= K, got x={x}, K={k}, K'={k_prime}")));
    }
    let need = isqrt_ratio(x, 2, 1).max(x.isqrt());
    if need > table.limit() {
        return Err(Error::Range(format!("decomposition at x = {x} needs mu up to {need}")));
    }
    let m = |v: u64| table.big_m[v as usize] as f64;
    let r_exact = remainder_r(table.squarefree_count(x)?, x as f64);
    let head_sum: f64 = (1..=k.min(x)).map(|j| m((x / j).isqrt())).sum();
    let u = k as f64 + 0.5;
    let top = isqrt_ratio(x, 2 * k + 1, 2);
    let mut partial = crate::numeric::Neumaier::new();
    for n in (1..=top).rev() {
        let mu = table.mu[n as usize];
        if mu != 0 {
            partial.add(mu as f64 / (n as f64 * n as f64));
        }
    }
    let tail = SIX_OVER_PI2 - partial.value();
    let head_integral = u * m(top) + x as f64 * tail;
    let kp = k_prime as f64 + 0.5;
    let q_tail = table.squarefree_count(isqrt_ratio(x, 2 * k_prime + 1, 2).pow(2))?;
    let q_tail = q_tail.min(isqrt_ratio(x, 2 * k_prime + 1, 2));
    let xs = (x as f64).sqrt();
    let error_cap = hyp.c1 * xs / 4.0 * (1.0 / u.sqrt() - 1.0 / kp.sqrt()) + hyp.c2 * (k_prime - k) as f64 + 0.5 * q_tail as f64;
    Ok(Decomposition {
        r_exact,
        head_sum,
        head_integral,
        error_cap,
    })
}

/// R(x) from Σ_{k≤x} M(√(x/k)) − 6x/π².
pub fn r_from_identity(x: u64, table: &MobiusTable) -> Result<f64> {
    if x.isqrt() > table.limit() {
        return Err(Error::Range(format!("identity at x = {x} needs mu up to {}", x.isqrt())));
    }
    let mut sum = 0i64;
    let mut k = 1u64;
    while k <= x {
        let v = (x / k).isqrt();
        let k_end = x / (v * v);
        sum += (k_end - k + 1) as i64 * table.big_m[v as usize] as i64;
        k = k_end + 1;
    }
    Ok(remainder_r(sum as u64, x as f64))
}

/// A published coefficient, either exact or a decimal rounded up at its last digit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Published {
    Exact(f64),
    Decimal(&'static str),
}

impl Published {
    pub fn value(&self) -> f64 {
        match self {
            Published::Exact(v) => *v,
            Published::Decimal(s) => s.parse().unwrap_or(f64::NAN),
        }
    }

    /// Unit in the last published digit.
    pub fn ulp(&self) -> f64 {
        match self {
            Published::Exact(v) => v.abs() * 1e-12,
            Published::Decimal(s) => {
                let (mant, exp) = match s.split_once(['e', 'E']) {
                    Some((m, e)) => (m, e.parse::<i32>().unwrap_or(0)),
                    None => (*s, 0),
                };
                let decimals = mant.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
                10f64.powi(exp - decimals)
            }
        }
    }

    /// Whether `computed` rounds up to this value at the published precision.
    pub fn matches(&self, computed: f64) -> bool {
        match self {
            Published::Exact(v) => (computed - v).abs() <= 1e-12 * v.abs(),
            Published::Decimal(_) => {
                let u = self.ulp();
                let v = self.value();
                // ceil(computed/u)·u == v, with slack for the decimal representation of v
                computed <= v * (1.0 + 1e-12) && computed > v - u * (1.0 + 1e-9)
            }
        }
    }

    /// Agreement of `computed` with this value to `digits` significant digits.
    pub fn agrees_to(&self, computed: f64, digits: i32) -> bool {
        let v = self.value();
        let scale = 10f64.powi(v.abs().log10().floor() as i32 - digits + 1);
        ((computed / scale).round() - (v / scale).round()).abs() < 0.5
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Pipeline {
    Qmediano,
    Gould(Branch),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PublishedSet {
    pub label: &'static str,
    pub pipeline: Pipeline,
    /// a point in the domain where the set applies
    pub x: f64,
    pub coefficients: Vec<Published>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub hypothesis: BoundHypothesis,
    pub sets: Vec<PublishedSet>,
}

impl Preset {
    pub fn certificate(&self, set: &PublishedSet, x: f64) -> Result<BoundCertificate> {
        match set.pipeline {
            Pipeline::Qmediano => r_bound_qmediano(&self.hypothesis, x),
            Pipeline::Gould(b) => r_bound_gould(&self.hypothesis, x, b),
        }
    }
}

pub const PRESET_NAMES: [&str; 3] = ["nopgik", "gopnik", "coda"];

/// Published hypotheses and coefficient sets for R(x) at large x.
pub fn preset(name: &str) -> Option<Preset> {
    use Published::{Decimal as D, Exact};
    let p = match name {
        "nopgik" => Preset {
            name: "nopgik",
            hypothesis: BoundHypothesis::new(PI / 2e7, 6.738093, 16.0 / 25.0, 114.0 / 25.0)
                .and_then(|h| h.with_mid_range(0.570591, 33.0, 1e16))
                .ok()?,
            sets: vec![PublishedSet {
                label: "nopgik",
                pipeline: Pipeline::Qmediano,
                x: 1e18,
                coefficients: vec![Exact(PI / 1e7), D("0.772103"), D("0.860845"), D("8.98413"), D("0.999")],
            }],
        },
        "gopnik" => Preset {
            name: "gopnik",
            hypothesis: BoundHypothesis::new(PI / 2e10, 11.350514, 768.0 / 1225.0, 9458.0 / 1225.0).ok()?,
            sets: vec![
                PublishedSet {
                    label: "gopnik-a",
                    pipeline: Pipeline::Gould(Branch::A),
                    x: 1e32,
                    coefficients: vec![D("6.51e-11"), D("2.5222"), D("1.042"), D("1.086")],
                },
                PublishedSet {
                    label: "gopnik-b",
                    pipeline: Pipeline::Gould(Branch::B),
                    x: 1e50,
                    coefficients: vec![D("1.99e-5"), D("1.042"), D("6.01e7"), D("1.1")],
                },
            ],
        },
        "coda" => Preset {
            name: "coda",
            hypothesis: BoundHypothesis::new(3.0 / (PI * 1e10), 11.39, 442368.0 / 715715.0, 14328304.0 / 715715.0).ok()?,
            sets: vec![
                PublishedSet {
                    label: "coda-a",
                    pipeline: Pipeline::Gould(Branch::A),
                    x: 1e32,
                    coefficients: vec![D("3.9282e-11"), D("2.50422"), D("1.446"), D("1.27")],
                },
                PublishedSet {
                    label: "coda-b",
                    pipeline: Pipeline::Gould(Branch::B),
                    x: 1e52,
                    coefficients: vec![D("1.5366e-5"), D("1.446"), D("8.664e7"), D("1.3")],
                },
            ],
        },
        _ => return None,
    };
    Some(p)
}

/// Published short-interval pairs (c1, c2) for q = 2..13.
pub fn published_pair(q: u64) -> Option<(Ratio<i64>, Ratio<i64>)> {
    let (a, b, d) = match q {
        2 => (3, 6, 4),
        3 => (2, 8, 3),
        5 => (16, 114, 25),
        7 => (768, 9458, 1225),
        11 => (18432, 361192, 29645),
        13 => (442368, 14328304, 715715),
        _ => return None,
    };
    Some((Ratio::new(a, d), Ratio::new(b, d)))
}
