//! Suprema of |M|/√x, |m|√x, |R|/x^{1/4} and |R|/√x over real x in a range.
//!
//! M, m and Q are constant on [n, n+1). Hence |M|/√x peaks at integers, |m|√x
//! at left limits, and for R both the value at n (R positive, decreasing) and
//! the left limit at n+1 (R negative) are candidates.

use super::{remainder_r, sweep, MertensCheckpoint, Running, SieveConfig};
use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RatioKind {
    MOverSqrt,
    MTimesSqrt,
    ROverQtr,
    ROverSqrt,
}

impl RatioKind {
    pub fn name(&self) -> &'static str {
        match self {
            RatioKind::MOverSqrt => "M_over_sqrt",
            RatioKind::MTimesSqrt => "m_times_sqrt",
            RatioKind::ROverQtr => "R_over_qtr",
            RatioKind::ROverSqrt => "R_over_sqrt",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::MOverSqrt, Self::MTimesSqrt, Self::ROverQtr, Self::ROverSqrt]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanRequest {
    pub kind: RatioKind,
    pub lo: u64,
    pub hi: u64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupRecord {
    pub request: ScanRequest,
    /// supremum over real x in [lo, hi]
    pub sup: f64,
    /// where it is attained; a left limit when `left_limit` is set
    pub argmax: f64,
    pub left_limit: bool,
    /// maximum over the integers in [lo, hi]
    pub sup_integer: f64,
    pub argmax_integer: u64,
}

struct Tracker {
    req: ScanRequest,
    rec: SupRecord,
    /// squared or fourth-power threshold for cheap rejection
    gate: f64,
}

impl Tracker {
    fn new(req: ScanRequest) -> Self {
        Self {
            req,
            rec: SupRecord {
                request: req,
                sup: 0.0,
                argmax: req.lo as f64,
                left_limit: false,
                sup_integer: 0.0,
                argmax_integer: req.lo,
            },
            gate: 0.0,
        }
    }

    #[inline]
    fn offer(&mut self, value: f64, x: f64, left: bool, n: u64) {
        if !left && value > self.rec.sup_integer {
            self.rec.sup_integer = value;
            self.rec.argmax_integer = n;
        }
        if value > self.rec.sup {
            self.rec.sup = value;
            self.rec.argmax = x;
            self.rec.left_limit = left;
        }
    }

    #[inline]
    fn visit(&mut self, n: u64, st: &Running) {
        if n < self.req.lo || n > self.req.hi {
            return;
        }
        let x = n as f64;
        let end = if n < self.req.hi { x + 1.0 } else { x };
        let best = self.gate;
        match self.req.kind {
            RatioKind::MOverSqrt => {
                let m = st.big_m as f64;
                if m * m >= best * x {
                    self.offer(m.abs() / x.sqrt(), x, false, n);
                }
            }
            RatioKind::MTimesSqrt => {
                let m = st.m();
                if m * m * end >= best {
                    self.offer(m.abs() * x.sqrt(), x, false, n);
                    self.offer(m.abs() * end.sqrt(), end, end > x, n);
                }
            }
            RatioKind::ROverQtr | RatioKind::ROverSqrt => {
                let r_at = st.r();
                let r_end = remainder_r(st.q, end);
                let big = r_at.abs().max(r_end.abs());
                let pass = if self.req.kind == RatioKind::ROverQtr {
                    big * big * big * big >= best * x
                } else {
                    big * big >= best * x
                };
                if pass {
                    let qtr = self.req.kind == RatioKind::ROverQtr;
                    let pow = |v: f64| if qtr { v.sqrt().sqrt() } else { v.sqrt() };
                    self.offer(r_at.abs() / pow(x), x, false, n);
                    if end > x {
                        self.offer(-r_end / pow(end), end, true, n);
                    }
                }
            }
        }
        let s = self.rec.sup.min(self.rec.sup_integer);
        self.gate = match self.req.kind {
            RatioKind::ROverQtr => s * s * s * s,
            _ => s * s,
        } * (1.0 - 1e-12);
    }
}

/// One sieve pass serving several scans and sampling checkpoints at `samples`.
pub fn scan_many(requests: &[ScanRequest], samples: &[u64], cfg: &SieveConfig) -> Result<(Vec<SupRecord>, Vec<MertensCheckpoint>)> {
    for r in requests {
        if r.lo == 0 || r.lo > r.hi {
            return Err(invalid(format!("scan range must satisfy 1 <= lo <= hi, got [{}, {}]", r.lo, r.hi)));
        }
    }
    let mut sorted: Vec<u64> = samples.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.first() == Some(&0) {
        return Err(invalid("sample points must be positive"));
    }
    let limit = requests.iter().map(|r| r.hi).chain(sorted.iter().copied()).max().unwrap_or(0);
    let mut trackers: Vec<Tracker> = requests.iter().copied().map(Tracker::new).collect();
    let mut taken = Vec::with_capacity(sorted.len());
    let mut next = 0;
    sweep(Running::start(), limit, cfg, |n, _, st| {
        for t in trackers.iter_mut() {
            t.visit(n, st);
        }
        if next < sorted.len() && sorted[next] == n {
            taken.push(st.checkpoint());
            next += 1;
        }
    })?;
    Ok((trackers.into_iter().map(|t| t.rec).collect(), taken))
}

pub fn sup_ratio_scan(kind: RatioKind, lo: u64, hi: u64) -> Result<SupRecord> {
    let (mut recs, _) = scan_many(&[ScanRequest { kind, lo, hi }], &[], &SieveConfig::default())?;
    Ok(recs.remove(0))
}
