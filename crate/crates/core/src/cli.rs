//! Command-line front end. `run` returns the process exit code:
//! 0 on success, 1 when a verification fails, 2 on usage or input errors.

use crate::approximant::{approximant_hat, l1_distance, l1_min, truncated_exponential, TruncationPolicy};
use crate::error::{invalid, Error, Result};
use crate::explicit_formula::{render_certificate, ExplicitFormula, FormulaEvaluation, Variant};
use crate::io::write_atomic;
use crate::numeric::format_sig;
use crate::sieve::{read_checkpoints, remainder_r, write_checkpoints, MertensCheckpoint, MobiusTable, SieveConfig};
use crate::squarefree::{self, andalas_decompose, r_from_identity, BoundHypothesis, Branch};
use crate::tightness::{tightness_experiment, FejerParams, X_CAP};
use crate::zeta::io::{export_table, import_zeros};
use crate::zeta::{find_zeros, min_inv_zeta_scan, residues, EvalAccuracy};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use std::ffi::OsString;
use std::path::PathBuf;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "MERTENS_WORKERS";

const DIGITS: usize = 15;

#[derive(Parser, Debug)]
#[command(name = "mertens", version, about = "Explicit-formula bounds for sums of the Moebius function")]
#[command(args_override_self = true)]
struct Cli {
    /// worker threads (default: $MERTENS_WORKERS, else all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sieve μ and write M, m, Q, R checkpoints
    Sieve {
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        stride: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        resume: bool,
    },
    /// Find the zeros of ζ on the critical line up to a height
    Zeros {
        #[arg(long)]
        height: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute 1/ζ'(ρ) for a zero list
    Residues {
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// max of 1/|ζ(σ + iT)| over σ in [lo, hi]
    ZetaScan {
        #[arg(long = "T")]
        t: f64,
        #[arg(long, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long)]
        hi: f64,
    },
    /// Explicit-formula certificate against sieved values
    Bound(BoundArgs),
    /// Envelope and identity checks against sieved values
    #[command(subcommand)]
    Verify(Verify),
    /// Square-free remainder constants and bounds
    #[command(subcommand)]
    Sqfree(Sqfree),
    /// Fejér-sum partial sums against x·tanh(π/2T₊)
    Tightness {
        #[arg(long = "T-plus")]
        t_plus: f64,
        #[arg(long = "K")]
        k: usize,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = X_CAP)]
        cap: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extremal approximants of the truncated exponential
    #[command(subcommand)]
    Approx(Approx),
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long)]
    residues: PathBuf,
    #[arg(long = "T")]
    t: f64,
    #[arg(long, default_value_t = 0.0)]
    sigma: f64,
    /// lo:hi:n, n log-spaced samples
    #[arg(long)]
    x_range: String,
    #[arg(long)]
    squarefree_c: Option<f64>,
    #[arg(long)]
    mertens: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long = "T")]
    t: f64,
    #[arg(long)]
    x_range: String,
    #[arg(long)]
    mertens: PathBuf,
    #[arg(long)]
    residues: PathBuf,
    #[arg(long, value_delimiter = ',', default_values_t = [0.0, 1.0])]
    sigma: Vec<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Generic envelope at every sample
    CorMertens(SweepArgs),
    /// Square-free-improved envelope at every sample
    CorSquarefree {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, default_value_t = 0.0134)]
        c: f64,
    },
    /// Q(x) from the sum over M(√(x/k)) against the sieve, at random x
    Difintsq {
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The M → R decomposition inequality at random (x, K, K′)
    Decompose {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Sqfree {
    /// Exact short-interval constants for Q_q
    Constants {
        #[arg(long)]
        q: u64,
        /// accepted for compatibility; every q runs in seconds
        #[arg(long)]
        long: bool,
    },
    /// Coefficients of a published bound on R(x)
    Bound {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        x: f64,
    },
    /// Check R(x) bound certificates against sieved values
    Verify {
        #[arg(long)]
        x_range: String,
        #[arg(long)]
        mertens: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum Approx {
    /// CSV of u, I_λ(u) and the extremal approximant
    Plot {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        /// lo:hi:n
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quadratured L¹ distance against tanh(λ/4)/λ
    L1 {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
    },
}

enum Outcome {
    Pass,
    Fail(Vec<String>),
}

/// Parses `lo:hi:n`.
pub fn parse_range(s: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(invalid(format!("range must be lo:hi:n, got {s:?}")));
    }
    let num = |p: &str| p.trim().parse::<f64>().map_err(|_| invalid(format!("bad number {p:?} in {s:?}")));
    let (lo, hi) = (num(parts[0])?, num(parts[1])?);
    let n: usize = parts[2].trim().parse().map_err(|_| invalid(format!("bad count in {s:?}")))?;
    if !(lo <= hi) || n == 0 {
        return Err(invalid(format!("need lo <= hi and n >= 1 in {s:?}")));
    }
    Ok((lo, hi, n))
}

/// n log-spaced points on [lo, hi].
pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

/// Checkpoints nearest to n log-spaced targets in [lo, hi], without repeats.
fn pick_samples(rows: &[MertensCheckpoint], range: &str) -> Result<Vec<MertensCheckpoint>> {
    let (lo, hi, n) = parse_range(range)?;
    if !(lo > 0.0) {
        return Err(invalid("x-range must start above 0"));
    }
    let inside: Vec<&MertensCheckpoint> = rows.iter().filter(|c| c.x as f64 >= lo && c.x as f64 <= hi).collect();
    if inside.is_empty() {
        return Err(Error::Range(format!("no checkpoints in [{lo}, {hi}]")));
    }
    let mut out: Vec<MertensCheckpoint> = Vec::new();
    for target in log_spaced(lo, hi, n) {
        let i = inside.partition_point(|c| (c.x as f64) < target);
        let best = [i.saturating_sub(1), i.min(inside.len() - 1)]
            .into_iter()
            .min_by(|&a, &b| {
                let d = |k: usize| (inside[k].x as f64 - target).abs();
                d(a).total_cmp(&d(b))
            })
            .unwrap();
        if out.last().map(|c| c.x) != Some(inside[best].x) {
            out.push(*inside[best]);
        }
    }
    Ok(out)
}

fn observed(c: &MertensCheckpoint, sigma: f64) -> Result<f64> {
    if sigma == 0.0 {
        Ok(c.big_m as f64)
    } else if sigma == 1.0 {
        Ok(c.m)
    } else {
        Err(invalid(format!("checkpoints hold M and m only; sigma must be 0 or 1, got {sigma}")))
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sweep(args: &SweepArgs, variant: Variant) -> Result<Outcome> {
    let acc = EvalAccuracy::default();
    let table = import_zeros(&args.residues)?;
    let formula = ExplicitFormula::new(args.t, &table, &acc)?;
    let rows = read_checkpoints(&args.mertens)?;
    let samples = pick_samples(&rows, &args.x_range)?;
    let mut report: Vec<(FormulaEvaluation, f64)> = Vec::new();
    let mut failures = Vec::new();
    let mut skipped = 0;
    for &sigma in &args.sigma {
        for c in &samples {
            let obs = observed(c, sigma)?;
            match formula.evaluate(c.x as f64, sigma, variant) {
                Ok(e) => {
                    if !e.holds(obs) {
                        failures.push(format!("x={} sigma={sigma} slack={}", c.x, format_sig(e.slack(obs), DIGITS)));
                    }
                    report.push((e, obs));
                }
                Err(Error::Hypothesis(_)) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    if skipped > 0 {
        eprintln!("{skipped} samples outside the hypotheses were skipped");
    }
    emit(&render_certificate(&report), args.out.as_ref())?;
    Ok(if failures.is_empty() { Outcome::Pass } else { Outcome::Fail(failures) })
}

fn bound(args: &BoundArgs) -> Result<Outcome> {
    let variant = match args.squarefree_c {
        Some(c) => Variant::Squarefree { c },
        None => Variant::Generic,
    };
    let sweep_args = SweepArgs {
        t: args.t,
        x_range: args.x_range.clone(),
        mertens: args.mertens.clone(),
        residues: args.residues.clone(),
        sigma: vec![args.sigma],
        out: args.out.clone(),
    };
    sweep(&sweep_args, variant)
}

/// Certificates usable on a sieved range: the nopgik preset and gould(a) under |M(v)| ≤ √v.
pub fn desk_certificates(x: f64) -> Vec<(&'static str, squarefree::BoundCertificate)> {
    let mut out = Vec::new();
    if let Some(p) = squarefree::preset("nopgik") {
        if let Ok(c) = p.certificate(&p.sets[0], x) {
            out.push(("nopgik", c));
        }
    }
    if let Ok(h) = BoundHypothesis::new(0.0, 1.0, 16.0 / 25.0, 114.0 / 25.0) {
        if let Ok(c) = squarefree::r_bound_gould(&h, x, Branch::A) {
            out.push(("gould_a_sqrt", c));
        }
    }
    out
}

fn sqfree(cmd: &Sqfree) -> Result<Outcome> {
    match cmd {
        Sqfree::Constants { q, .. } => {
            let c = squarefree::short_interval_constants(*q)?;
            println!("c1={} c2<={} period={}", c.c1, c.c2_star, c.period);
            Ok(Outcome::Pass)
        }
        Sqfree::Bound { preset, x } => {
            let p = squarefree::preset(preset)
                .ok_or_else(|| invalid(format!("unknown preset {preset:?}; expected one of {:?}", squarefree::PRESET_NAMES)))?;
            let mut any = false;
            for set in &p.sets {
                match p.certificate(set, *x) {
                    Ok(cert) => {
                        any = true;
                        println!("{}: |R(x)| <= {}", set.label, cert);
                        let coeffs: Vec<String> = cert.coefficients().iter().map(|c| format_sig(*c, DIGITS)).collect();
                        println!("{}: coefficients {}", set.label, coeffs.join(","));
                        println!("{}: value at x {}", set.label, format_sig(cert.eval(*x)?, DIGITS));
                    }
                    Err(Error::Domain(msg)) => eprintln!("{}: {msg}", set.label),
                    Err(e) => return Err(e),
                }
            }
            if !any {
                return Err(Error::Domain(format!("x = {x} is outside every {preset} certificate")));
            }
            Ok(Outcome::Pass)
        }
        Sqfree::Verify { x_range, mertens } => {
            let rows = read_checkpoints(mertens)?;
            let samples = pick_samples(&rows, x_range)?;
            let mut failures = Vec::new();
            println!("x,certificate,R,bound");
            for c in &samples {
                for (name, cert) in desk_certificates(c.x as f64) {
                    let b = cert.eval(c.x as f64)?;
                    println!("{},{name},{},{}", c.x, format_sig(c.r, DIGITS), format_sig(b, DIGITS));
                    if c.r.abs() > b {
                        failures.push(format!("x={} {name}: |R|={} > {}", c.x, c.r.abs(), b));
                    }
                }
            }
            Ok(if failures.is_empty() { Outcome::Pass } else { Outcome::Fail(failures) })
        }
    }
}

fn verify(cmd: &Verify) -> Result<Outcome> {
    match cmd {
        Verify::CorMertens(args) => sweep(args, Variant::Generic),
        Verify::CorSquarefree { sweep: args, c } => sweep(args, Variant::Squarefree { c: *c }),
        Verify::Difintsq { count, max, seed } => {
            let table = MobiusTable::new(max.isqrt() + 1)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let mut failures = Vec::new();
            for _ in 0..*count {
                let x = rng.gen_range(1..=*max);
                let direct = remainder_r(table.squarefree_count(x)?, x as f64);
                let via = r_from_identity(x, &table)?;
                println!("{x},{},{}", format_sig(direct, DIGITS), format_sig(via, DIGITS));
                if (direct - via).abs() > 1e-9 {
                    failures.push(format!("x={x}: {direct} vs {via}"));
                }
            }
            Ok(if failures.is_empty() { Outcome::Pass } else { Outcome::Fail(failures) })
        }
        Verify::Decompose { count, max, seed } => {
            let table = MobiusTable::new((2 * max).isqrt() + 2)?;
            let hyp = BoundHypothesis::new(0.0, 1.0, 16.0 / 25.0, 114.0 / 25.0)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let mut failures = Vec::new();
            println!("x,K,K_prime,residual,cap");
            for _ in 0..*count {
                let x = rng.gen_range(1..=*max);
                let k = rng.gen_range(0..=200u64);
                let kp = k + rng.gen_range(0..=50u64);
                let d = andalas_decompose(x, k, kp, &hyp, &table)?;
                println!("{x},{k},{kp},{},{}", format_sig(d.residual(), DIGITS), format_sig(d.error_cap, DIGITS));
                if !d.holds() {
                    failures.push(format!("x={x} K={k} K'={kp}"));
                }
            }
            Ok(if failures.is_empty() { Outcome::Pass } else { Outcome::Fail(failures) })
        }
    }
}

fn tightness(t_plus: f64, k: usize, count: usize, cap: f64, out: Option<&PathBuf>) -> Result<Outcome> {
    let p = FejerParams::new(k, t_plus)?;
    let ns = p.largest_admissible(count, cap.min(X_CAP));
    if ns.is_empty() {
        return Err(Error::Range(format!("no admissible N with x_N <= {cap}")));
    }
    let r = tightness_experiment(&p, &ns)?;
    let mut text = String::from("N,x,S,S_over_x,target,envelope,within\n");
    for row in &r.rows {
        text.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.n,
            format_sig(row.x, DIGITS),
            format_sig(row.sum, DIGITS),
            format_sig(row.ratio, DIGITS),
            format_sig(row.target, DIGITS),
            format_sig(row.envelope, DIGITS),
            row.within()
        ));
    }
    emit(&text, out)?;
    eprintln!("l1={} tv={}", format_sig(r.l1, DIGITS), format_sig(r.total_variation, DIGITS));
    let mut failures: Vec<String> = r.rows.iter().filter(|x| !x.within()).map(|x| format!("N={} outside envelope", x.n)).collect();
    if !r.envelope_shrinks() {
        failures.push("envelope does not shrink with N".into());
    }
    Ok(if failures.is_empty() { Outcome::Pass } else { Outcome::Fail(failures) })
}

fn approx(cmd: &Approx) -> Result<Outcome> {
    match cmd {
        Approx::Plot { lambda, range, out } => {
            let (lo, hi, n) = parse_range(range)?;
            let policy = TruncationPolicy::default();
            let mut text = String::from("u,target,approximant\n");
            for i in 0..n {
                let u = if n == 1 { lo } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 };
                let target = truncated_exponential(*lambda, -u)?;
                let v = approximant_hat(*lambda, Complex64::new(-u, 0.0), policy)?;
                text.push_str(&format!("{},{},{}\n", format_sig(u, DIGITS), format_sig(target, DIGITS), format_sig(v.re, DIGITS)));
            }
            emit(&text, out.as_ref())?;
            Ok(Outcome::Pass)
        }
        Approx::L1 { lambda } => {
            let got = l1_distance(*lambda, 2000)?;
            let want = l1_min(*lambda)?;
            println!("l1={} tanh(lambda/4)/lambda={}", format_sig(got, DIGITS), format_sig(want, DIGITS));
            Ok(if (got - want).abs() <= 1e-6 {
                Outcome::Pass
            } else {
                Outcome::Fail(vec![format!("|{got} - {want}| > 1e-6")])
            })
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let acc = EvalAccuracy::default();
    match &cli.command {
        Command::Sieve { limit, stride, out, resume } => {
            let rows = write_checkpoints(out, *limit, *stride, *resume, &SieveConfig::default())?;
            if let Some(last) = rows.last() {
                println!("x={} M={} m={} Q={} R={}", last.x, last.big_m, format_sig(last.m, DIGITS), last.q, format_sig(last.r, DIGITS));
            }
            Ok(Outcome::Pass)
        }
        Command::Zeros { height, out } => {
            let table = find_zeros(*height, &acc)?;
            export_table(&table, out)?;
            println!("zeros={} complete={}", table.len(), table.complete);
            Ok(Outcome::Pass)
        }
        Command::Residues { zeros, out } => {
            let table = residues(&import_zeros(zeros)?, &acc)?;
            export_table(&table, out)?;
            println!("residues={}", table.len());
            Ok(Outcome::Pass)
        }
        Command::ZetaScan { t, lo, hi } => {
            println!("{}", format_sig(min_inv_zeta_scan(*t, *lo, *hi, &acc)?, DIGITS));
            Ok(Outcome::Pass)
        }
        Command::Bound(args) => bound(args),
        Command::Verify(v) => verify(v),
        Command::Sqfree(s) => sqfree(s),
        Command::Tightness { t_plus, k, count, cap, out } => tightness(*t_plus, *k, *count, *cap, out.as_ref()),
        Command::Approx(a) => approx(a),
    }
}

/// Splits `--config FILE` out of the arguments and turns its `key=value` lines into flags
/// placed before the user's own flags, so explicit flags win.
fn apply_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut rest = Vec::new();
    let mut config = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy().into_owned();
        if s == "--config" {
            config = Some(it.next().ok_or_else(|| invalid("--config needs a file"))?);
        } else if let Some(p) = s.strip_prefix("--config=") {
            config = Some(p.into());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = config else { return Ok(rest) };
    let text = std::fs::read_to_string(&path)?;
    let mut extra = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i + 1,
            msg: format!("expected key=value, got {line:?}"),
        })?;
        let (k, v) = (k.trim(), v.trim());
        match v {
            "true" => extra.push(OsString::from(format!("--{k}"))),
            "false" => {}
            _ => extra.push(OsString::from(format!("--{k}={v}"))),
        }
    }
    // subcommand names come first; config flags go right after them
    let split = rest.iter().skip(1).position(|a| a.to_string_lossy().starts_with('-')).map_or(rest.len(), |p| p + 1);
    let tail = rest.split_off(split);
    rest.extend(extra);
    rest.extend(tail);
    Ok(rest)
}

fn configure_workers(flag: Option<usize>) -> Result<()> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var(WORKERS_ENV) {
            Ok(v) => Some(v.trim().parse().map_err(|_| invalid(format!("{WORKERS_ENV} must be a positive integer, got {v:?}")))?),
            Err(_) => None,
        },
    };
    if let Some(n) = n {
        if n == 0 {
            return Err(invalid("worker count must be positive"));
        }
        // a pool may already exist when embedded; keep it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match apply_config(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Err(e) = configure_workers(cli.workers) {
        eprintln!("error: {e}");
        return 2;
    }
    match execute(&cli) {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail(list)) => {
            for f in &list {
                eprintln!("FAIL {f}");
            }
            eprintln!("{} verification failures", list.len());
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1:10:5").unwrap(), (1.0, 10.0, 5));
        assert_eq!(parse_range("-5:5:1000").unwrap().2, 1000);
        assert!(parse_range("1:10").is_err());
        assert!(parse_range("10:1:3").is_err());
        let xs = log_spaced(1.0, 100.0, 3);
        assert!((xs[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["mertens", "nonsense"]), 2);
        assert_eq!(run(["mertens", "sqfree", "constants", "--q", "4"]), 2);
        assert_eq!(run(["mertens", "sqfree", "constants", "--q", "5"]), 0);
        assert_eq!(run(["mertens", "sqfree", "bound", "--preset", "nopgik", "--x", "1e18"]), 0);
        assert_eq!(run(["mertens", "sqfree", "bound", "--preset", "nope", "--x", "1e18"]), 2);
        assert_eq!(run(["mertens", "--help"]), 0);
    }

    #[test]
    fn config_flags_precede_user_flags() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("run.cfg");
        std::fs::write(&cfg, "# comment\nq = 7\nlong = true\n").unwrap();
        let args: Vec<OsString> = ["mertens", "sqfree", "constants", "--config", cfg.to_str().unwrap(), "--q", "5"]
            .iter()
            .map(OsString::from)
            .collect();
        let out: Vec<String> = apply_config(args).unwrap().iter().map(|a| a.to_string_lossy().into_owned()).collect();
        assert_eq!(out, ["mertens", "sqfree", "constants", "--q=7", "--long", "--q", "5"]);
        let cli = Cli::try_parse_from(out).unwrap();
        assert!(matches!(cli.command, Command::Sqfree(Sqfree::Constants { q: 5, long: true })));
    }

    #[test]
    fn sample_picking() {
        let rows: Vec<MertensCheckpoint> = (1..=100)
            .map(|i| MertensCheckpoint {
                x: i * 10,
                big_m: 0,
                m: 0.0,
                q: 0,
                r: 0.0,
            })
            .collect();
        let s = pick_samples(&rows, "10:1000:3").unwrap();
        assert_eq!(s.iter().map(|c| c.x).collect::<Vec<_>>(), [10, 100, 1000]);
        assert!(pick_samples(&rows, "2000:3000:3").is_err());
    }
}
