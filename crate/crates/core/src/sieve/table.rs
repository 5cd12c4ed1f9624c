//! Checkpoints of M, m, Q, R and their CSV form.

use super::{sweep, Running, SieveConfig};
use crate::numeric::Neumaier;
use crate::error::{invalid, Error, Result};
use crate::numeric::format_sig;
use std::io::Write;
use std::path::Path;

const HEADER: &str = "x,M,m,Q,R";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MertensCheckpoint {
    pub x: u64,
    /// M(x)
    pub big_m: i64,
    /// m(x) = Σ μ(n)/n
    pub m: f64,
    pub q: u64,
    /// Q(x) − 6x/π²
    pub r: f64,
}

impl MertensCheckpoint {
    /// A priori bound on the rounding error in m: compensated summation,
    /// the rounding of each μ(n)/n, and one rounding per earlier checkpoint
    /// (|m| ≤ 1 throughout).
    pub fn m_error_bound(&self, checkpoints: u64) -> f64 {
        let u = f64::EPSILON / 2.0;
        let harmonic = (self.x as f64).ln() + 1.0;
        2.0 * u * self.m.abs() + u * harmonic + 2.0 * self.x as f64 * u * u * harmonic + checkpoints as f64 * u
    }

    /// Rounding error in R from forming 6x/π² in double precision.
    pub fn r_error_bound(&self) -> f64 {
        2.0 * f64::EPSILON * self.x as f64
    }

    fn render(&self) -> String {
        format!("{},{},{},{},{}", self.x, self.big_m, self.m, self.q, format_sig(self.r, 15))
    }
}

/// Checkpoints at every multiple of `stride` and at `limit`.
pub fn mertens_table(limit: u64, stride: u64) -> Result<Vec<MertensCheckpoint>> {
    mertens_table_from(Running::start(), limit, stride, &SieveConfig::default(), |_| Ok(()))
}

/// Continues from `state`, handing each checkpoint to `sink` as it is produced.
pub fn mertens_table_from<F>(state: Running, limit: u64, stride: u64, cfg: &SieveConfig, mut sink: F) -> Result<Vec<MertensCheckpoint>>
where
    F: FnMut(&MertensCheckpoint) -> Result<()>,
{
    if limit == 0 || stride == 0 {
        return Err(invalid("limit and stride must be positive"));
    }
    let mut out = Vec::new();
    let mut failure = None;
    sweep(state, limit, cfg, |n, _, st| {
        if n % stride == 0 || n == limit {
            st.settle();
            let c = st.checkpoint();
            if failure.is_none() {
                if let Err(e) = sink(&c) {
                    failure = Some(e);
                }
            }
            out.push(c);
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

pub fn render_checkpoints(rows: &[MertensCheckpoint]) -> String {
    let mut s = String::from(HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.render());
        s.push('\n');
    }
    s
}

/// Parses a checkpoint CSV. A final line without a newline is treated as an
/// interrupted write and dropped.
pub fn parse_checkpoints(text: &str) -> Result<Vec<MertensCheckpoint>> {
    let complete = if text.ends_with('\n') {
        text
    } else {
        text.rsplit_once('\n').map_or("", |(head, _)| head)
    };
    let mut out: Vec<MertensCheckpoint> = Vec::new();
    for (i, line) in complete.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line == HEADER {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 5 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected 5 fields, found {}", f.len()),
            });
        }
        let bad = |what: &str| Error::Parse {
            line: line_no,
            msg: format!("bad {what}"),
        };
        let c = MertensCheckpoint {
            x: f[0].parse().map_err(|_| bad("x"))?,
            big_m: f[1].parse().map_err(|_| bad("M"))?,
            m: f[2].parse().map_err(|_| bad("m"))?,
            q: f[3].parse().map_err(|_| bad("Q"))?,
            r: f[4].parse().map_err(|_| bad("R"))?,
        };
        if out.last().is_some_and(|p| p.x >= c.x) {
            return Err(Error::Parse {
                line: line_no,
                msg: "x not increasing".into(),
            });
        }
        out.push(c);
    }
    Ok(out)
}

pub fn read_checkpoints(path: impl AsRef<Path>) -> Result<Vec<MertensCheckpoint>> {
    parse_checkpoints(&std::fs::read_to_string(path)?)
}

/// Sieves to `limit`, appending checkpoint lines to `path` as they are
/// produced. With `resume`, picks up after the last complete line.
pub fn write_checkpoints(path: impl AsRef<Path>, limit: u64, stride: u64, resume: bool, cfg: &SieveConfig) -> Result<Vec<MertensCheckpoint>> {
    let path = path.as_ref();
    let mut state = Running::start();
    let mut prior = Vec::new();
    if resume && path.exists() {
        prior = read_checkpoints(path)?;
        // rewrite without any torn tail, then append
        crate::io::write_atomic(path, render_checkpoints(&prior).as_bytes())?;
        if let Some(last) = prior.last() {
            state = Running {
                x: last.x,
                big_m: last.big_m,
                q: last.q,
                // count and Σ|μ(n)/n| only feed error bounds; restore the count
                small_m: Neumaier::seeded(last.m, 0.0, last.q),
            };
        }
    } else {
        crate::io::write_atomic(path, format!("{HEADER}\n").as_bytes())?;
    }
    let mut file = std::fs::OpenOptions::new().append(true).open(path)?;
    let fresh = mertens_table_from(state, limit, stride, cfg, |c| {
        writeln!(file, "{}", c.render())?;
        Ok(())
    })?;
    file.sync_all()?;
    prior.extend(fresh);
    Ok(prior)
}
