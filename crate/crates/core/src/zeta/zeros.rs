//! Zeros on the critical line and the residues 1/ζ'(ρ).

use super::{eval_both, hardy_z, theta, EvalAccuracy};
use crate::error::{invalid, Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Simplicity floor on |ζ'(ρ)|.
pub const SIMPLICITY_FLOOR: f64 = 1e-6;

const MAX_REFINEMENTS: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaZero {
    /// ρ = 1/2 + iγ
    pub gamma: f64,
    /// 1/ζ'(ρ), absent until residues are computed
    pub inv_zeta_prime: Option<Complex64>,
    pub err: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    pub height_t: f64,
    pub zeros: Vec<ZetaZero>,
    pub complete: bool,
}

/// round(θ(T)/π + 1), the main term of N(T). Off by one whenever |S(T)| > 1/2.
pub fn main_term_count(t: f64) -> usize {
    (theta(t) / PI + 1.0).round().max(0.0) as usize
}

/// N(T) = θ(T)/π + 1 + S(T), with S(T) = arg ζ(1/2 + iT)/π tracked
/// continuously along the segment from 2 + iT, where Re ζ > 0.
pub fn zero_count(t: f64, acc: &EvalAccuracy) -> Result<usize> {
    if !(t >= 1.0) {
        return Err(invalid(format!("zero_count needs T >= 1, got {t}")));
    }
    let at = |sigma: f64| super::zeta(Complex64::new(sigma, t), acc);
    let mut sigma = 2.0;
    let mut z = at(sigma)?;
    let mut arg = z.arg();
    let mut h = 1.0 / 16.0;
    while sigma > 0.5 {
        let next = (sigma - h).max(0.5);
        let zn = at(next)?;
        let d = (zn / z).arg();
        if d.abs() > 0.5 && h > 1e-9 {
            h *= 0.5;
            continue;
        }
        if zn.norm() < 1e-12 {
            return Err(invalid(format!("zeta vanishes near {next} + {t}i")));
        }
        arg += d;
        sigma = next;
        z = zn;
        h = (2.0 * h).min(1.0 / 16.0);
    }
    let n = theta(t) / PI + 1.0 + arg / PI;
    let r = n.round();
    if (n - r).abs() > 0.25 {
        return Err(Error::Accuracy {
            achieved: (n - r).abs(),
            target: 0.25,
        });
    }
    Ok(r.max(0.0) as usize)
}

impl ZeroTable {
    /// Builds a table, validating order and height and recomputing completeness.
    pub fn new(height_t: f64, zeros: Vec<ZetaZero>) -> Result<Self> {
        for (i, z) in zeros.iter().enumerate() {
            if !(z.gamma > 0.0) {
                return Err(invalid(format!("ordinate {} is not positive", z.gamma)));
            }
            if i > 0 && zeros[i - 1].gamma >= z.gamma {
                return Err(invalid(format!("ordinates not strictly increasing at {}", z.gamma)));
            }
            if z.gamma > height_t {
                return Err(invalid(format!("ordinate {} exceeds height {height_t}", z.gamma)));
            }
        }
        let complete = height_t >= 15.0
            && zero_count(height_t, &EvalAccuracy::default()).is_ok_and(|n| n == zeros.len());
        Ok(Self {
            height_t,
            zeros,
            complete,
        })
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn has_residues(&self) -> bool {
        self.zeros.iter().all(|z| z.inv_zeta_prime.is_some())
    }

    /// The zeros with γ ≤ t, as a table at height t.
    pub fn truncated(&self, t: f64) -> Result<ZeroTable> {
        let zeros = self.zeros.iter().copied().filter(|z| z.gamma <= t).collect();
        let mut table = ZeroTable::new(t, zeros)?;
        table.complete &= self.complete && t <= self.height_t;
        Ok(table)
    }
}

fn grid_step(t: f64, level: u32) -> f64 {
    let gram = 2.0 * PI / (t.max(7.0) / (2.0 * PI)).ln().max(0.1);
    gram.min(1.0) / 2f64.powi(level as i32 + 1)
}

fn scan_grid(t_max: f64, level: u32) -> Vec<f64> {
    let mut pts = vec![10.0];
    let mut t = 10.0;
    while t < t_max {
        t = (t + grid_step(t, level)).min(t_max);
        pts.push(t);
    }
    pts
}

/// Refines a sign change of Z on [a, b] by the Illinois method.
fn refine(mut a: f64, mut fa: f64, mut b: f64, mut fb: f64, acc: &EvalAccuracy) -> Result<(f64, f64)> {
    let mut side = 0;
    for _ in 0..200 {
        if b - a <= 1e-13 * b.max(1.0) {
            break;
        }
        let mut c = b - fb * (b - a) / (fb - fa);
        if !(c > a && c < b) {
            c = 0.5 * (a + b);
        }
        let fc = hardy_z(c, acc)?;
        if fc == 0.0 {
            return Ok((c, 0.0));
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
    }
    Ok((0.5 * (a + b), 0.5 * (b - a) + 1e-13 * b))
}

/// All zeros 1/2 + iγ with 0 < γ ≤ T, found as sign changes of Z.
pub fn find_zeros(t: f64, acc: &EvalAccuracy) -> Result<ZeroTable> {
    if !(t >= 15.0) {
        return Err(invalid(format!("find_zeros needs T >= 15, got {t}")));
    }
    let expected = zero_count(t, acc)?;
    let mut last = (0, 0.0, t);
    for level in 0..=MAX_REFINEMENTS {
        let grid = scan_grid(t, level);
        let values: Vec<f64> = grid.par_iter().map(|&x| hardy_z(x, acc)).collect::<Result<_>>()?;
        let brackets: Vec<usize> = (1..grid.len())
            .filter(|&i| values[i - 1] != 0.0 && values[i - 1].signum() != values[i].signum())
            .collect();
        if brackets.len() == expected {
            let zeros: Vec<ZetaZero> = brackets
                .par_iter()
                .map(|&i| {
                    let (g, e) = if values[i] == 0.0 {
                        (grid[i], 0.0)
                    } else {
                        refine(grid[i - 1], values[i - 1], grid[i], values[i], acc)?
                    };
                    Ok(ZetaZero {
                        gamma: g,
                        inv_zeta_prime: None,
                        err: e,
                    })
                })
                .collect::<Result<_>>()?;
            return ZeroTable::new(t, zeros);
        }
        // locate the first point where the running count lags the main term
        let mut count = 0;
        let mut gap = (10.0, t);
        for i in 1..grid.len() {
            if brackets.binary_search(&i).is_ok() {
                count += 1;
            }
            let main = theta(grid[i]) / PI + 1.0;
            if main - count as f64 > 2.5 {
                gap = (grid[i - 1] - 2.0 * grid_step(grid[i], 0), grid[i]);
                break;
            }
        }
        last = (brackets.len(), gap.0, gap.1);
    }
    Err(Error::Incomplete {
        found: last.0,
        expected,
        gap_lo: last.1,
        gap_hi: last.2,
    })
}

/// Fills 1/ζ'(ρ) for each zero, with the error folding in location uncertainty.
pub fn residues(table: &ZeroTable, acc: &EvalAccuracy) -> Result<ZeroTable> {
    let zeros = table
        .zeros
        .par_iter()
        .map(|z| {
            let rho = Complex64::new(0.5, z.gamma);
            let (_, d) = eval_both(rho, acc)?;
            let norm = d.value.norm();
            if norm < SIMPLICITY_FLOOR {
                return Err(Error::NearMultipleZero {
                    gamma: z.gamma,
                    abs_zeta_prime: norm,
                });
            }
            let h = 1e-4;
            let (_, up) = eval_both(rho + Complex64::new(0.0, h), acc)?;
            let (_, down) = eval_both(rho - Complex64::new(0.0, h), acc)?;
            let second = ((up.value - down.value) / (2.0 * h)).norm();
            let err_prime = d.err + second * z.err;
            let inv = 1.0 / d.value;
            Ok(ZetaZero {
                gamma: z.gamma,
                inv_zeta_prime: Some(inv),
                err: (err_prime / (norm * norm)).max(z.err),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroTable {
        height_t: table.height_t,
        zeros,
        complete: table.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        let acc = EvalAccuracy::default();
        let t = find_zeros(15.0, &acc).unwrap();
        assert!(t.complete);
        assert_eq!(t.len(), 1);
        assert!((t.zeros[0].gamma - 14.134_725_141_734_69).abs() < 1e-9);
        let t = find_zeros(30.0, &acc).unwrap();
        assert_eq!(t.len(), 3);
        assert!((t.zeros[1].gamma - 21.022_039_638_771_55).abs() < 1e-9);
        assert!((t.zeros[2].gamma - 25.010_857_580_145_69).abs() < 1e-9);
    }

    #[test]
    fn count_to_100() {
        let t = find_zeros(100.0, &EvalAccuracy::default()).unwrap();
        assert!(t.complete);
        assert_eq!(t.len(), 29);
        assert_eq!(main_term_count(100.0), 29);
    }

    #[test]
    fn counts_where_rounding_fails() {
        let acc = EvalAccuracy::default();
        for (t, n, main) in [(30.0, 3, 4), (50.0, 10, 9), (500.0, 269, 270), (1000.0, 649, 649)] {
            assert_eq!(zero_count(t, &acc).unwrap(), n);
            assert_eq!(main_term_count(t), main);
        }
        let t = find_zeros(50.0, &acc).unwrap();
        assert!(t.complete);
        assert_eq!(t.len(), 10);
    }

    #[test]
    fn residues_of_first_zero() {
        let acc = EvalAccuracy::default();
        let t = residues(&find_zeros(30.0, &acc).unwrap(), &acc).unwrap();
        let r = t.zeros[0].inv_zeta_prime.unwrap();
        assert!(r.norm() > 0.1 && r.norm() < 10.0);
        assert!(t.zeros.iter().all(|z| z.err < 1e-6));
        // Schwarz reflection: ζ'(1/2 − iγ) is the conjugate
        let g = t.zeros[0].gamma;
        let (_, d) = eval_both(Complex64::new(0.5, -g), &acc).unwrap();
        assert!((1.0 / d.value - r.conj()).norm() < 1e-12);
    }

    #[test]
    fn table_validation() {
        let z = |g| ZetaZero {
            gamma: g,
            inv_zeta_prime: None,
            err: 0.0,
        };
        assert!(ZeroTable::new(30.0, vec![z(21.0), z(14.0)]).is_err());
        assert!(ZeroTable::new(20.0, vec![z(21.0)]).is_err());
        assert!(!ZeroTable::new(30.0, vec![z(14.1)]).unwrap().complete);
    }
}
