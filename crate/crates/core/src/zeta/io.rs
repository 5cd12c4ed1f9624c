//! Zero lists and residue tables on disk.
//!
//! Zero file: one ordinate per line, `#` comments; an optional `# height_T=...`
//! line records the height. Residue table: CSV `gamma,re_inv_zp,im_inv_zp,err`.

use super::{ZeroTable, ZetaZero};
use crate::error::{Error, Result};
use crate::io::write_atomic;
use crate::numeric::format_sig;
use num_complex::Complex64;
use std::path::Path;

const HEADER: &str = "gamma,re_inv_zp,im_inv_zp,err";

fn parse_f64(s: &str, line: usize) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|e| Error::Parse {
        line,
        msg: format!("bad number {s:?}: {e}"),
    })
}

fn height_directive(line: &str) -> Option<&str> {
    line.trim_start_matches('#').trim().strip_prefix("height_T=")
}

/// Parses either a plain zero list or a residue CSV.
pub fn parse_table(text: &str) -> Result<ZeroTable> {
    let mut height = None;
    let mut zeros = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if let Some(h) = height_directive(line) {
                height = Some(parse_f64(h, line_no)?);
            }
            continue;
        }
        if line == HEADER {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let zero = match fields.len() {
            1 => ZetaZero {
                gamma: parse_f64(fields[0], line_no)?,
                inv_zeta_prime: None,
                err: 0.0,
            },
            4 => ZetaZero {
                gamma: parse_f64(fields[0], line_no)?,
                inv_zeta_prime: Some(Complex64::new(parse_f64(fields[1], line_no)?, parse_f64(fields[2], line_no)?)),
                err: parse_f64(fields[3], line_no)?,
            },
            n => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected 1 or 4 fields, found {n}"),
                })
            }
        };
        if let Some(prev) = zeros.last().map(|z: &ZetaZero| z.gamma) {
            if zero.gamma <= prev {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("ordinate {} not above previous {prev}", zero.gamma),
                });
            }
        }
        zeros.push(zero);
    }
    let height = height.unwrap_or_else(|| zeros.last().map_or(0.0, |z| z.gamma));
    if height <= 0.0 {
        return Ok(ZeroTable {
            height_t: 0.0,
            zeros,
            complete: false,
        });
    }
    ZeroTable::new(height, zeros)
}

pub fn import_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    parse_table(&std::fs::read_to_string(path)?)
}

/// Residue CSV when every zero has a residue, plain zero list otherwise.
pub fn render_table(table: &ZeroTable) -> String {
    let mut out = format!("# height_T={}\n", format_sig(table.height_t, 17));
    if table.has_residues() && !table.is_empty() {
        out.push_str(HEADER);
        out.push('\n');
        for z in &table.zeros {
            let r = z.inv_zeta_prime.unwrap();
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_sig(z.gamma, 15),
                format_sig(r.re, 15),
                format_sig(r.im, 15),
                format_sig(z.err, 15)
            ));
        }
    } else {
        for z in &table.zeros {
            out.push_str(&format_sig(z.gamma, 15));
            out.push('\n');
        }
    }
    out
}

pub fn export_table(table: &ZeroTable, path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path, render_table(table).as_bytes())
}
