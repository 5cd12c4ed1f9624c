//! Segmented sieve for μ(n) and the running sums M, m, Q, R.

mod scan;
mod table;

pub use scan::{scan_many, sup_ratio_scan, RatioKind, ScanRequest, SupRecord};
pub use table::{mertens_table, parse_checkpoints, read_checkpoints, render_checkpoints, write_checkpoints, MertensCheckpoint};

use crate::error::{invalid, Error, Result};
use crate::numeric::Neumaier;
use rayon::prelude::*;

/// 6/π² split as hi + lo for R = Q − 6x/π² without cancellation loss.
pub const SIX_OVER_PI2: f64 = 0.607_927_101_854_026_7;
const SIX_OVER_PI2_LO: f64 = -2.379_773_927_663_665e-17;

/// Q − 6x/π² for integer-valued Q and real x.
#[inline]
pub fn remainder_r(q: u64, x: f64) -> f64 {
    (-x).mul_add(SIX_OVER_PI2, q as f64) - x * SIX_OVER_PI2_LO
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SieveConfig {
    /// entries per segment
    pub segment_size: usize,
    /// bytes allowed for one segment's working arrays
    pub memory_budget: usize,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            segment_size: 1 << 22,
            memory_budget: 1 << 30,
        }
    }
}

/// μ(n) for n in [lo, hi].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveSegment {
    pub lo: u64,
    pub hi: u64,
    pub mu: Vec<i8>,
}

impl SieveSegment {
    pub fn get(&self, n: u64) -> i8 {
        self.mu[(n - self.lo) as usize]
    }
}

/// Primes up to `n` by a plain sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

trait Word: Copy + Send + Sync {
    const ONE: Self;
    fn mul(self, p: u64) -> Self;
    fn equals(self, n: u64) -> bool;
}

impl Word for u32 {
    const ONE: Self = 1;
    #[inline]
    fn mul(self, p: u64) -> Self {
        self.wrapping_mul(p as u32)
    }
    #[inline]
    fn equals(self, n: u64) -> bool {
        self as u64 == n
    }
}

impl Word for u64 {
    const ONE: Self = 1;
    #[inline]
    fn mul(self, p: u64) -> Self {
        self.wrapping_mul(p)
    }
    #[inline]
    fn equals(self, n: u64) -> bool {
        self == n
    }
}

fn fill_segment<W: Word>(lo: u64, mu: &mut [i8], primes: &[u64]) {
    let len = mu.len() as u64;
    let hi = lo + len - 1;
    let mut prod = vec![W::ONE; mu.len()];
    mu.fill(1);
    for &p in primes {
        if p * p > hi {
            break;
        }
        let mut i = (lo.div_ceil(p) * p - lo) as usize;
        while (i as u64) < len {
            mu[i] = -mu[i];
            prod[i] = prod[i].mul(p);
            i += p as usize;
        }
        let p2 = p * p;
        let mut i = (lo.div_ceil(p2) * p2 - lo) as usize;
        while (i as u64) < len {
            mu[i] = 0;
            i += p2 as usize;
        }
    }
    // one prime factor above √hi is left over unless the product is n itself
    for (k, (m, w)) in mu.iter_mut().zip(&prod).enumerate() {
        if *m != 0 && !w.equals(lo + k as u64) {
            *m = -*m;
        }
    }
}

/// All primes up to `bound`.
#[derive(Clone, Debug)]
pub struct SievingPrimes {
    pub bound: u64,
    pub primes: Vec<u64>,
}

/// Primes needed to sieve up to `hi`.
pub fn sieving_primes(hi: u64) -> SievingPrimes {
    let bound = hi.isqrt();
    SievingPrimes {
        bound,
        primes: primes_up_to(bound),
    }
}

/// μ on [lo, hi], using `primes` which must cover √hi.
pub fn mobius_segment_with(lo: u64, hi: u64, primes: &SievingPrimes, cfg: &SieveConfig) -> Result<SieveSegment> {
    if lo == 0 || lo > hi {
        return Err(invalid(format!("need 1 <= lo <= hi, got [{lo}, {hi}]")));
    }
    let len = hi - lo + 1;
    let word = if hi <= u32::MAX as u64 { 4 } else { 8 };
    let requested = len.saturating_mul(1 + word);
    if requested > cfg.memory_budget as u64 {
        return Err(Error::Segmentation {
            requested,
            budget: cfg.memory_budget as u64,
        });
    }
    if primes.bound < hi.isqrt() {
        return Err(invalid(format!("sieving primes stop at {}, need up to {}", primes.bound, hi.isqrt())));
    }
    let primes = &primes.primes[..];
    let mut mu = vec![0i8; len as usize];
    if word == 4 {
        fill_segment::<u32>(lo, &mut mu, primes);
    } else {
        fill_segment::<u64>(lo, &mut mu, primes);
    }
    Ok(SieveSegment { lo, hi, mu })
}

pub fn mobius_segment(lo: u64, hi: u64) -> Result<SieveSegment> {
    mobius_segment_with(lo, hi, &sieving_primes(hi), &SieveConfig::default())
}

/// Running sums after some x.
#[derive(Clone, Copy, Debug, Default)]
pub struct Running {
    pub x: u64,
    pub big_m: i64,
    pub q: u64,
    pub small_m: Neumaier,
}

impl Running {
    /// The state before n = 1.
    pub fn start() -> Self {
        Self::default()
    }

    #[inline]
    fn push(&mut self, n: u64, mu: i8) {
        self.x = n;
        if mu != 0 {
            self.big_m += mu as i64;
            self.q += 1;
            self.small_m.add(mu as f64 / n as f64);
        }
    }

    pub fn m(&self) -> f64 {
        self.small_m.value()
    }

    /// Folds the compensation term into a single double, so the state is
    /// exactly what a round-tripped checkpoint restores.
    pub fn settle(&mut self) {
        let (abs, n) = (self.small_m.abs_sum(), self.small_m.count());
        self.small_m = Neumaier::seeded(self.small_m.value(), abs, n);
    }

    pub fn r(&self) -> f64 {
        remainder_r(self.q, self.x as f64)
    }

    pub fn checkpoint(&self) -> MertensCheckpoint {
        MertensCheckpoint {
            x: self.x,
            big_m: self.big_m,
            m: self.m(),
            q: self.q,
            r: self.r(),
        }
    }
}

/// Sieves (state.x, limit] in order, calling `visit(n, μ(n), state)` with the
/// state already including n. Segments of a batch are sieved in parallel; the
/// visit pass is sequential, so results do not depend on the worker count.
pub fn sweep<F>(mut state: Running, limit: u64, cfg: &SieveConfig, mut visit: F) -> Result<Running>
where
    F: FnMut(u64, i8, &mut Running),
{
    if cfg.segment_size == 0 {
        return Err(invalid("segment size must be positive"));
    }
    if limit <= state.x {
        return Ok(state);
    }
    let primes = sieving_primes(limit);
    let seg = cfg.segment_size as u64;
    let batch = rayon::current_num_threads().max(1) as u64;
    let mut lo = state.x + 1;
    while lo <= limit {
        let starts: Vec<u64> = (0..batch).map(|k| lo + k * seg).take_while(|&a| a <= limit).collect();
        let segments: Vec<SieveSegment> = starts
            .par_iter()
            .map(|&a| mobius_segment_with(a, (a + seg - 1).min(limit), &primes, cfg))
            .collect::<Result<_>>()?;
        for s in &segments {
            for (k, &mu) in s.mu.iter().enumerate() {
                let n = s.lo + k as u64;
                state.push(n, mu);
                visit(n, mu, &mut state);
            }
        }
        lo = segments.last().unwrap().hi + 1;
    }
    Ok(state)
}

/// μ and M on [0, n] held in memory; the small-range oracle.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    pub mu: Vec<i8>,
    pub big_m: Vec<i32>,
}

impl MobiusTable {
    pub fn new(n: u64) -> Result<Self> {
        let mut mu = vec![0i8];
        let mut big_m = vec![0i32];
        if n >= 1 {
            let seg = mobius_segment(1, n)?;
            let mut acc = 0i32;
            for &v in &seg.mu {
                acc += v as i32;
                mu.push(v);
                big_m.push(acc);
            }
        }
        Ok(Self { mu, big_m })
    }

    pub fn limit(&self) -> u64 {
        (self.mu.len() - 1) as u64
    }

    /// M(⌊v⌋) for real v ≥ 0.
    pub fn mertens(&self, v: f64) -> Result<i64> {
        let k = v.floor();
        if !(k >= 0.0) || k > self.limit() as f64 {
            return Err(Error::Range(format!("M({v}) outside the table up to {}", self.limit())));
        }
        Ok(self.big_m[k as usize] as i64)
    }

    /// Q(x) = Σ_{d ≤ √x} μ(d)⌊x/d²⌋, needing the table up to √x.
    pub fn squarefree_count(&self, x: u64) -> Result<u64> {
        let r = x.isqrt();
        if r > self.limit() {
            return Err(Error::Range(format!("Q({x}) needs μ up to {r}")));
        }
        let mut q = 0i64;
        for d in 1..=r {
            let m = self.mu[d as usize];
            if m != 0 {
                q += m as i64 * (x / (d * d)) as i64;
            }
        }
        Ok(q as u64)
    }
}

/// Checks Q(x) = Σ_{k≤x} M(⌊√(x/k)⌋) exactly.
pub fn verify_difintsq(x: u64) -> Result<bool> {
    if x == 0 {
        return Err(invalid("x must be positive"));
    }
    let table = MobiusTable::new(x.isqrt())?;
    verify_difintsq_with(x, &table)
}

pub fn verify_difintsq_with(x: u64, table: &MobiusTable) -> Result<bool> {
    let q = table.squarefree_count(x)?;
    // ⌊√(x/k)⌋ = v exactly for k in (x/(v+1)², x/v²]
    let mut sum = 0i64;
    let mut k = 1u64;
    while k <= x {
        let v = (x / k).isqrt();
        let k_end = x / (v * v);
        sum += (k_end - k + 1) as i64 * table.big_m[v as usize] as i64;
        k = k_end + 1;
    }
    Ok(sum == q as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_mu(mut n: u64) -> i8 {
        let mut sign = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        sign
    }

    #[test]
    fn first_values() {
        let s = mobius_segment(1, 10).unwrap();
        assert_eq!(s.mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        let s = mobius_segment(1, 40).unwrap();
        assert_eq!(s.get(30), -1);
        assert_eq!(s.get(12), 0);
        for p in primes_up_to(541) {
            assert_eq!(mobius_segment(p * p, p * p).unwrap().mu[0], 0);
        }
    }

    #[test]
    fn large_offsets_match_factorization() {
        let lo = (1u64 << 32) - 50;
        let s = mobius_segment(lo, lo + 100).unwrap();
        for (k, &m) in s.mu.iter().enumerate() {
            assert_eq!(m, naive_mu(lo + k as u64), "{}", lo + k as u64);
        }
    }

    #[test]
    fn segmentation_budget() {
        let cfg = SieveConfig {
            segment_size: 16,
            memory_budget: 100,
        };
        let r = mobius_segment_with(1, 1000, &sieving_primes(1000), &cfg);
        assert!(matches!(r, Err(Error::Segmentation { .. })));
        assert!(mobius_segment(0, 3).is_err());
    }

    #[test]
    fn sweep_is_segment_size_independent() {
        let run = |seg| {
            let cfg = SieveConfig {
                segment_size: seg,
                ..Default::default()
            };
            let mut sum = 0i64;
            let end = sweep(Running::start(), 100_000, &cfg, |n, mu, _| sum += n as i64 * mu as i64).unwrap();
            (sum, end.big_m, end.q, end.m().to_bits())
        };
        assert_eq!(run(7), run(1 << 22));
        assert_eq!(run(1000), run(65536));
    }

    #[test]
    fn difintsq_identity() {
        assert!(verify_difintsq(1).unwrap());
        assert!(verify_difintsq(100).unwrap());
        let t = MobiusTable::new(100).unwrap();
        assert_eq!(t.squarefree_count(100).unwrap(), 61);
        assert_eq!(t.squarefree_count(10).unwrap(), 7);
    }

    #[test]
    fn remainder_is_accurate_at_scale() {
        let r = remainder_r(607_927_124, 999_999_999.0);
        assert!((r - 22.753_900_473_190_75).abs() < 1e-12, "{r}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn segment_agrees_with_factorization(lo in 1u64..2_000_000, len in 1u64..300) {
            let s = mobius_segment(lo, lo + len).unwrap();
            for k in 0..=len {
                prop_assert_eq!(s.get(lo + k), naive_mu(lo + k));
            }
        }
    }
}
