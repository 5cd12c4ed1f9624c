//! Truncated explicit formula for Σ μ(n)/n^σ: sums over zeros of ζ weighted by
//! w_{δ,σ}, the trivial-zero tail, error budgets and closed-form bounds.

use crate::approximant::{weight_w, WeightParams};
use crate::error::{invalid, Error, Result};
use crate::numeric::special::zeta_real;
use crate::numeric::quad::integrate;
use crate::numeric::{coth, format_sig, tanhc, Neumaier};
use crate::zeta::em::{ln_dd, phase};
use crate::zeta::{inv_zeta_left_bound, zeta, zeta_line_max, zeta_prime_trivial, EvalAccuracy, ZeroTable, ZetaZero};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::{E, PI};
use std::fmt::Write as _;

const BLOCK: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Variant {
    Generic,
    /// Square-free support, assuming |R(ω)| ≤ c√ω for ω ≥ (cT)².
    Squarefree { c: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorBudget {
    pub a_inf: f64,
    pub l: f64,
    pub i: f64,
    pub iota_bound: f64,
    pub eps_total: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FormulaEvaluation {
    pub x: f64,
    pub sigma: f64,
    pub t: f64,
    /// δ Σ w(ρ)/ζ'(ρ) x^{ρ−σ}
    pub zero_sum: Complex64,
    /// propagated residue and phase error in `zero_sum`
    pub zero_sum_error: f64,
    /// trivial zeros, on the scale of the sum itself
    pub trivial_term: f64,
    pub sigma_term: f64,
    pub envelope: f64,
    pub budget: ErrorBudget,
}

impl FormulaEvaluation {
    pub fn predicted(&self) -> f64 {
        self.zero_sum.re + self.sigma_term
    }

    /// envelope − |observed − predicted|; negative means a violation.
    pub fn slack(&self, observed: f64) -> f64 {
        self.envelope - (observed - self.predicted()).abs()
    }

    pub fn holds(&self, observed: f64) -> bool {
        self.slack(observed) >= 0.0
    }
}

fn ready_zeros(t: f64, table: &ZeroTable) -> Result<&[ZetaZero]> {
    if !table.complete || !table.has_residues() || table.height_t < t {
        return Err(Error::TableNotReady);
    }
    let end = table.zeros.partition_point(|z| z.gamma <= t);
    Ok(&table.zeros[..end])
}

#[derive(Default)]
struct Partial {
    re: Neumaier,
    im: Neumaier,
    err: f64,
}

// (value, error) of the δ-free sum over ±γ
fn pair_sum(x: f64, params: &WeightParams, zeros: &[ZetaZero]) -> Result<(Complex64, f64)> {
    let (hi, lo) = ln_dd(x);
    let scale = x.powf(0.5 - params.sigma());
    let blocks: Vec<Partial> = zeros
        .par_chunks(BLOCK)
        .map(|block| {
            let mut p = Partial::default();
            for z in block {
                let rho = Complex64::new(0.5, z.gamma);
                let r = z.inv_zeta_prime.ok_or(Error::TableNotReady)?;
                let w = weight_w(params, rho)?;
                let w_conj = weight_w(params, rho.conj())?;
                let (sn, cs) = phase(z.gamma, hi, lo).sin_cos();
                let xp = Complex64::new(cs, sn) * scale;
                let term = w * r * xp;
                let mirror = w_conj * r.conj() * xp.conj();
                p.re.add(2.0 * term.re);
                p.im.add(term.im + mirror.im);
                let phase_err = 8.0 * f64::EPSILON * (z.gamma * hi.abs() + 1.0);
                p.err += 2.0 * (w.norm() * scale * z.err + term.norm() * phase_err);
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    let mut total = Partial::default();
    for b in &blocks {
        total.re.merge(&b.re);
        total.im.merge(&b.im);
        total.err += b.err;
    }
    let err = total.err + total.re.error_bound();
    Ok((Complex64::new(total.re.value(), total.im.value()), err))
}

/// δ Σ_{|γ| ≤ T} w_{δ,σ}(ρ)/ζ'(ρ) x^{ρ−σ}, pairing each stored γ > 0 with its conjugate.
/// The imaginary part sums the two mirror terms separately and only measures rounding.
pub fn zero_sum(x: f64, sigma: f64, params: &WeightParams, table: &ZeroTable) -> Result<Complex64> {
    if !(x > 1.0) {
        return Err(invalid(format!("zero_sum needs x > 1, got {x}")));
    }
    if table.is_empty() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let zeros = ready_zeros(params.t(), table)?;
    let p = params.with_sigma(sigma);
    Ok(pair_sum(x, &p, zeros)?.0 * p.delta())
}

fn coth_terms(params: &WeightParams, table: &ZeroTable) -> Result<Vec<f64>> {
    let d = params.delta();
    table
        .zeros
        .iter()
        .map(|z| {
            let r = z.inv_zeta_prime.ok_or(Error::TableNotReady)?;
            Ok(d * coth(Complex64::new(0.5, z.gamma) * d).norm() * r.norm())
        })
        .collect()
}

/// δ Σ_{γ>0} |coth(δρ)|/|ζ'(ρ)| over the zeros in the table.
pub fn coth_constant(params: &WeightParams, table: &ZeroTable) -> Result<f64> {
    let mut acc = Neumaier::new();
    for v in coth_terms(params, table)? {
        acc.add(v);
    }
    Ok(acc.value())
}

/// Running sums of the coth constant over table prefixes.
pub fn coth_constant_partials(params: &WeightParams, table: &ZeroTable) -> Result<Vec<f64>> {
    let mut acc = Neumaier::new();
    Ok(coth_terms(params, table)?
        .into_iter()
        .map(|v| {
            acc.add(v);
            acc.value()
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrivialZeros {
    pub value: f64,
    pub bound: f64,
}

/// The individual terms δ w(−2n) x^{−2n−1}/ζ'(−2n), n = 1..=n_max.
pub fn trivial_zero_terms(x: f64, sigma: f64, params: &WeightParams, n_max: u32) -> Result<Vec<f64>> {
    if !(x >= 2.0) {
        return Err(invalid(format!("trivial zeros need x >= 2, got {x}")));
    }
    if !(sigma > -2.0) {
        return Err(invalid(format!("trivial zeros need sigma > -2, got {sigma}")));
    }
    if n_max == 0 {
        return Err(invalid("n_max must be positive"));
    }
    let p = params.with_sigma(sigma);
    let d = p.delta();
    let lx = x.ln();
    (1..=n_max.min(85))
        .map(|n| {
            let s = -2.0 * n as f64;
            let w = weight_w(&p, Complex64::new(s, 0.0))?.re;
            Ok(d * w * ((s - 1.0) * lx).exp() * zeta_prime_trivial(n)?)
        })
        .collect()
}

/// Contribution of the trivial zeros relative to x^{1−σ}, with the alternating-series bound
/// (1/(2+σ) + 2δ)(2π)²/ζ(3)·x^{−3}.
pub fn trivial_zero_term(x: f64, sigma: f64, params: &WeightParams, n_max: u32) -> Result<TrivialZeros> {
    let terms = trivial_zero_terms(x, sigma, params, n_max)?;
    let mut acc = Neumaier::new();
    // smallest first
    for v in terms.iter().rev() {
        acc.add(*v);
    }
    let bound = (1.0 / (2.0 + sigma) + 2.0 * params.delta()) * (2.0 * PI).powi(2) / zeta_real(3.0)? * x.powi(-3);
    Ok(TrivialZeros {
        value: acc.value(),
        bound,
    })
}

/// ε(x, T) bound for a_n supported as in `variant`, given max 1/|ζ| on the horizontal lines.
pub fn error_budget(x: f64, params: &WeightParams, a_inf: f64, zeta_line_max: f64, variant: Variant) -> Result<ErrorBudget> {
    let t = params.t();
    if !(a_inf >= 0.0) || !(zeta_line_max >= 0.0) {
        return Err(invalid("a_inf and zeta_line_max must be nonnegative"));
    }
    let lx = x.ln();
    let i = zeta_line_max / (lx * lx);
    let tc = tanhc((params.sigma() - 1.0) * params.delta());
    match variant {
        Variant::Generic => {
            if !(x >= E * E * t) {
                return Err(Error::Domain(format!("need x >= e^2 T = {}, got {x}", E * E * t)));
            }
            let l = (x / t).ln();
            Ok(ErrorBudget {
                a_inf,
                l,
                i,
                iota_bound: params.delta() * tc,
                eps_total: PI / 4.0 * (a_inf / l + a_inf / (l * l) + i) / (t * t) + 2.0 * a_inf / x,
            })
        }
        Variant::Squarefree { c } => {
            if !(c > 0.0) {
                return Err(invalid(format!("c must be positive, got {c}")));
            }
            let ct = c * t;
            if !(x >= (E * ct).powi(2)) {
                return Err(Error::Domain(format!("need x >= (e c T)^2 = {}, got {x}", (E * ct).powi(2))));
            }
            let l = (x / (ct * ct)).ln();
            Ok(ErrorBudget {
                a_inf,
                l,
                i,
                iota_bound: 3.0 / (PI * t) * tc,
                eps_total: PI / 4.0 * (i + a_inf * (1.0 / l + 4.0 / (l * l))) / (t * t) + 2.9 * c * a_inf / x.sqrt(),
            })
        }
    }
}

/// 1/ζ(σ), with 1/ζ(1) = 0.
pub fn sigma_term(sigma: f64, acc: &EvalAccuracy) -> Result<f64> {
    if sigma == 1.0 {
        return Ok(0.0);
    }
    if sigma > 1.0 {
        return Ok(1.0 / zeta_real(sigma)?);
    }
    if sigma < 0.0 && (sigma / 2.0).fract() == 0.0 {
        return Err(Error::Pole(Complex64::new(sigma, 0.0)));
    }
    Ok(1.0 / zeta(Complex64::new(sigma, 0.0), acc)?.re)
}

/// The formula at a fixed height T, with the line maximum of 1/|ζ| computed once.
#[derive(Clone, Debug)]
pub struct ExplicitFormula {
    t: f64,
    zeros: Vec<ZetaZero>,
    line_max: f64,
    acc: EvalAccuracy,
}

impl ExplicitFormula {
    pub fn new(t: f64, table: &ZeroTable, acc: &EvalAccuracy) -> Result<Self> {
        let line_max = zeta_line_max(t, acc)?;
        Self::with_line_max(t, table, line_max, acc)
    }

    pub fn with_line_max(t: f64, table: &ZeroTable, line_max: f64, acc: &EvalAccuracy) -> Result<Self> {
        if !(t >= 4.0 * PI) {
            return Err(Error::Hypothesis(format!("T >= 4 pi fails for T = {t}")));
        }
        Ok(Self {
            t,
            zeros: ready_zeros(t, table)?.to_vec(),
            line_max,
            acc: *acc,
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn line_max(&self) -> f64 {
        self.line_max
    }

    pub fn zero_count(&self) -> usize {
        self.zeros.len()
    }

    /// Smallest x at which `variant`'s hypotheses on x hold.
    pub fn min_x(&self, variant: Variant) -> f64 {
        let lm = self.line_max.max(0.0);
        match variant {
            Variant::Generic => (E * E * self.t).max(lm.sqrt().exp()),
            Variant::Squarefree { c } => (E.powi(3) * (c * self.t).powi(2)).max(4.0 * self.t).max((3.0 * lm).sqrt().exp()),
        }
    }

    fn check(&self, x: f64, sigma: f64, variant: Variant) -> Result<()> {
        let lx2 = x.ln().powi(2);
        if !(sigma >= -1.0) {
            return Err(Error::Hypothesis(format!("sigma >= -1 fails for sigma = {sigma}")));
        }
        match variant {
            Variant::Generic => {
                if !(x >= E * E * self.t) {
                    return Err(Error::Hypothesis(format!("x >= e^2 T fails: {x} < {}", E * E * self.t)));
                }
                if self.line_max > lx2 {
                    return Err(Error::Hypothesis(format!("max 1/|zeta| = {} exceeds log^2 x = {lx2}", self.line_max)));
                }
            }
            Variant::Squarefree { c } => {
                if !(self.t >= 50.0) {
                    return Err(Error::Hypothesis(format!("T >= 50 fails for T = {}", self.t)));
                }
                if !(c > 0.0) {
                    return Err(invalid(format!("c must be positive, got {c}")));
                }
                let need = (E.powi(3) * (c * self.t).powi(2)).max(4.0 * self.t);
                if !(x >= need) {
                    return Err(Error::Hypothesis(format!("x >= max(e^3 (cT)^2, 4T) fails: {x} < {need}")));
                }
                if self.line_max > lx2 / 3.0 {
                    return Err(Error::Hypothesis(format!(
                        "max 1/|zeta| = {} exceeds log^2 x / 3 = {}",
                        self.line_max,
                        lx2 / 3.0
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, x: f64, sigma: f64, variant: Variant) -> Result<FormulaEvaluation> {
        self.check(x, sigma, variant)?;
        let params = WeightParams::new(self.t, sigma)?;
        let d = params.delta();
        let (sum, err) = pair_sum(x, &params, &self.zeros)?;
        let budget = error_budget(x, &params, 1.0, self.line_max, variant)?;
        let lead = match variant {
            Variant::Generic => (PI / 2.0) / (self.t - 1.0) * x.powf(1.0 - sigma) + 2.0 / x.powf(sigma),
            Variant::Squarefree { c } => (3.0 / PI) / (self.t - 1.0) * x.powf(1.0 - sigma) + 2.9 * c * x.powf(0.5 - sigma),
        };
        let trivial = trivial_zero_term(x, sigma, &params, 30)?.value * x.powf(1.0 - sigma);
        Ok(FormulaEvaluation {
            x,
            sigma,
            t: self.t,
            zero_sum: sum * d,
            zero_sum_error: err * d,
            trivial_term: trivial,
            sigma_term: sigma_term(sigma, &self.acc)?,
            envelope: lead + err * d,
            budget,
        })
    }
}

/// One-shot evaluation; prefer [`ExplicitFormula`] for many x at the same T.
pub fn evaluate_formula(x: f64, params: &WeightParams, table: &ZeroTable, variant: Variant) -> Result<FormulaEvaluation> {
    ExplicitFormula::new(params.t(), table, &EvalAccuracy::default())?.evaluate(x, params.sigma(), variant)
}

pub const CERTIFICATE_HEADER: &str = "x,sigma,T,zero_sum,sigma_term,envelope,observed,slack";

pub fn render_certificate(rows: &[(FormulaEvaluation, f64)]) -> String {
    let mut out = String::from(CERTIFICATE_HEADER);
    out.push('\n');
    for (e, observed) in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            format_sig(e.x, 15),
            format_sig(e.sigma, 15),
            format_sig(e.t, 15),
            format_sig(e.zero_sum.re, 15),
            format_sig(e.sigma_term, 15),
            format_sig(e.envelope, 15),
            format_sig(*observed, 15),
            format_sig(e.slack(*observed), 15)
        );
    }
    out
}

/// Inputs of a bound |M(x)| ≤ lead·x + C√x.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CleanBoundInputs {
    pub t: f64,
    pub c: f64,
    pub lead: f64,
}

impl CleanBoundInputs {
    /// From a coth constant at height T: C = 2·constant, lead = π/(2(T−1)).
    pub fn from_coth_constant(t: f64, coth_constant: f64) -> Self {
        Self {
            t,
            c: 2.0 * coth_constant,
            lead: PI / (2.0 * (t - 1.0)),
        }
    }
}

pub const PUBLISHED_C1: CleanBoundInputs = CleanBoundInputs {
    t: 1e10 + 1.0,
    c: 11.350514,
    lead: PI / 2e10,
};
pub const PUBLISHED_C2: CleanBoundInputs = CleanBoundInputs {
    t: 1e9,
    c: 9.758736,
    lead: PI / (2.0 * (1e9 - 1.0)),
};
pub const PUBLISHED_C3: CleanBoundInputs = CleanBoundInputs {
    t: 1e7 + 1.0,
    c: 6.738093,
    lead: PI / 2e7,
};

/// Where the square-free improved bound takes over.
pub const CLEAN_CROSSOVER: f64 = 3.61e17;

pub fn clean_bound(x: f64, inputs: &CleanBoundInputs) -> f64 {
    inputs.lead * x + inputs.c * x.sqrt()
}

/// |M(x)| ≤ 3/(π·10¹⁰)·x + 11.39√x for x ≥ 1, assembled piecewise.
pub fn mertens_clean_bound(x: f64) -> f64 {
    if x >= CLEAN_CROSSOVER {
        3.0 / (PI * 1e10) * x + 11.39 * x.sqrt()
    } else {
        clean_bound(x, &PUBLISHED_C2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineIntegral {
    pub value: f64,
    pub quad_error: f64,
    pub tail_bound: f64,
}

/// ∫₀^∞ t x^{−t}/|ζ(1−t+iT)| dt by quadrature on [0, U], U = 40/log x + 1, plus a bound for
/// the tail. Diagnostic only: budgets use zeta_line_max/(log x)².
pub fn line_integral(x: f64, t: f64, acc: &EvalAccuracy) -> Result<LineIntegral> {
    if !(x > 1.0) || !(t > 2.0 * PI * E) {
        return Err(invalid("line integral needs x > 1 and T > 2 pi e"));
    }
    let a = x.ln();
    let u = 40.0 / a + 1.0;
    let mut failure = None;
    let f = |r: f64| match zeta(Complex64::new(1.0 - r, t), acc) {
        Ok(z) => r * (-a * r).exp() / z.norm(),
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    };
    let (value, quad_error) = integrate(f, 0.0, u, 1e-12, 1e-9, 4000)?;
    if let Some(e) = failure {
        return Err(e);
    }
    // 1/|ζ(1−r+iT)| ≤ (2πe/T)^{r−1/2}·√e/|ζ(r+iT)| ≤ √e·ζ(U)/ζ(2U) for r ≥ U
    let c = inv_zeta_left_bound(Complex64::new(1.0 - u, t), acc)?.min(E.sqrt()) * zeta_real(u)? / zeta_real(2.0 * u)?;
    let tail_bound = c * (-a * u).exp() * (u / a + 1.0 / (a * a));
    Ok(LineIntegral {
        value,
        quad_error,
        tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::MobiusTable;
    use crate::zeta::{find_zeros, residues};
    use rand::{Rng, SeedableRng};
    use std::sync::OnceLock;

    fn table_500() -> &'static ZeroTable {
        static T: OnceLock<ZeroTable> = OnceLock::new();
        T.get_or_init(|| {
            let acc = EvalAccuracy::default();
            residues(&find_zeros(500.0, &acc).unwrap(), &acc).unwrap()
        })
    }

    #[test]
    fn zero_sum_is_real() {
        let t = table_500();
        let p = WeightParams::new(500.0, 0.0).unwrap();
        let s = zero_sum(1e5, 0.0, &p, t).unwrap();
        assert!(s.im.abs() <= 1e-9 * t.len() as f64, "{}", s.im);
    }

    #[test]
    fn zero_sum_bounded_by_coth_constant() {
        let t = table_500();
        let p = WeightParams::new(500.0, 0.0).unwrap();
        let k = coth_constant(&p, t).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x: f64 = 10f64.powf(rng.gen_range(1.0..12.0));
            for sigma in [0.0, 1.0] {
                let s = zero_sum(x, sigma, &p, t).unwrap();
                assert!(s.norm() <= x.powf(0.5 - sigma) * 2.0 * k, "x={x} sigma={sigma}");
            }
        }
    }

    #[test]
    fn zero_sum_edge_cases() {
        let p = WeightParams::new(100.0, 0.0).unwrap();
        let empty = ZeroTable {
            height_t: 100.0,
            zeros: vec![],
            complete: false,
        };
        assert_eq!(zero_sum(10.0, 0.0, &p, &empty).unwrap(), Complex64::new(0.0, 0.0));
        let no_res = find_zeros(30.0, &EvalAccuracy::default()).unwrap();
        let p30 = WeightParams::new(30.0, 0.0).unwrap();
        assert!(matches!(zero_sum(10.0, 0.0, &p30, &no_res), Err(Error::TableNotReady)));
        let mut partial = table_500().clone();
        partial.zeros.pop();
        partial.complete = false;
        assert!(matches!(zero_sum(10.0, 0.0, &p, &partial), Err(Error::TableNotReady)));
        assert!(zero_sum(1.0, 0.0, &p, table_500()).is_err());
    }

    #[test]
    fn zero_sum_is_deterministic() {
        let p = WeightParams::new(500.0, 1.0).unwrap();
        let a = zero_sum(123_456.7, 1.0, &p, table_500()).unwrap();
        let b = rayon::ThreadPoolBuilder::new()
            .num_threads(3)
            .build()
            .unwrap()
            .install(|| zero_sum(123_456.7, 1.0, &p, table_500()).unwrap());
        assert_eq!(a.re.to_bits(), b.re.to_bits());
    }

    #[test]
    fn coth_constant_single_zero() {
        let t = table_500().truncated(15.0).unwrap();
        assert_eq!(t.len(), 1);
        let p = WeightParams::new(100.0, 0.0).unwrap();
        let d = PI / 200.0;
        let rho = Complex64::new(0.5, t.zeros[0].gamma);
        let r = t.zeros[0].inv_zeta_prime.unwrap();
        // w_{δ,1}(ρ) = coth(δ(ρ−1)), and |coth(δ(ρ−1))| = |coth(δρ)| on the critical line
        let w1 = weight_w(&p.with_sigma(1.0), rho).unwrap();
        let hand = d * w1.norm() * r.norm();
        let k = coth_constant(&p, &t).unwrap();
        assert!((k - hand).abs() < 1e-14 * hand, "{k} {hand}");
    }

    #[test]
    fn coth_partials_increase() {
        let p = WeightParams::new(1e6 + 1.0, 0.0).unwrap();
        let parts = coth_constant_partials(&p, table_500()).unwrap();
        assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        assert!(*parts.last().unwrap() < 2.661_612_779_910_01);
    }

    #[test]
    fn trivial_zero_bound() {
        for x in [2.0, 10.0, 1e4] {
            for sigma in [-1.0, 0.0, 1.0] {
                for t in [4.0 * PI, 100.0] {
                    let p = WeightParams::new(t, sigma).unwrap();
                    let tz = trivial_zero_term(x, sigma, &p, 30).unwrap();
                    assert!(tz.value.abs() <= tz.bound, "{x} {sigma} {t}");
                }
            }
        }
    }

    #[test]
    fn trivial_zero_series_alternates() {
        let p = WeightParams::new(50.0, 0.0).unwrap();
        let terms = trivial_zero_terms(2.0, 0.0, &p, 30).unwrap();
        for w in terms.windows(2) {
            assert!(w[0] * w[1] < 0.0);
            assert!(w[1].abs() < w[0].abs());
        }
        let a = trivial_zero_term(1e2, 0.0, &p, 30).unwrap().value;
        let b = trivial_zero_term(1e3, 0.0, &p, 30).unwrap().value;
        assert!((b / a).abs() < 1.1e-3);
        assert!(trivial_zero_term(1.5, 0.0, &p, 30).is_err());
        assert!(trivial_zero_term(10.0, -2.0, &p, 30).is_err());
    }

    #[test]
    fn budget_examples() {
        let t = 100.0;
        let p = WeightParams::new(t, 0.0).unwrap();
        let x = E * E * t;
        let lx2 = x.ln().powi(2);
        let b = error_budget(x, &p, 1.0, lx2, Variant::Generic).unwrap();
        assert!((b.l - 2.0).abs() < 1e-12);
        assert!(1.0 / b.l + 1.0 / (b.l * b.l) + b.i <= 1.75 + 1e-12);
        let b1 = error_budget(x, &p.with_sigma(1.0), 1.0, 1.0, Variant::Generic).unwrap();
        assert_eq!(b1.iota_bound, PI / (2.0 * t));
        let d = PI / (2.0 * t);
        assert!((b.iota_bound - d.tanh()).abs() < 1e-16);
        assert!(b.iota_bound <= d);
        assert!(matches!(error_budget(x * 0.99, &p, 1.0, 1.0, Variant::Generic), Err(Error::Domain(_))));
        let sq = Variant::Squarefree { c: 0.02 };
        assert!(error_budget(25.0, &p, 1.0, 1.0, sq).is_err());
        let bs = error_budget(1e6, &p, 1.0, 1.0, sq).unwrap();
        assert!((bs.l - (1e6f64 / 4.0).ln()).abs() < 1e-12);
        assert!(bs.iota_bound <= d);
    }

    #[test]
    fn budget_decreases_in_t() {
        let x = 1e8;
        let mut last = f64::INFINITY;
        for t in [100.0, 200.0, 1000.0, 5000.0] {
            let p = WeightParams::new(t, 0.0).unwrap();
            let b = error_budget(x, &p, 1.0, 2.0, Variant::Generic).unwrap();
            assert!(b.eps_total < last);
            last = b.eps_total;
        }
    }

    #[test]
    fn sigma_terms() {
        let acc = EvalAccuracy::default();
        assert!((sigma_term(0.0, &acc).unwrap() + 2.0).abs() < 1e-12);
        assert_eq!(sigma_term(1.0, &acc).unwrap(), 0.0);
        assert!((sigma_term(2.0, &acc).unwrap() - 6.0 / (PI * PI)).abs() < 1e-14);
    }

    #[test]
    fn formula_matches_sieve_at_500() {
        let table = table_500();
        let f = ExplicitFormula::new(500.0, table, &EvalAccuracy::default()).unwrap();
        let mt = MobiusTable::new(200_000).unwrap();
        let mut m = 0.0;
        let mut small_m = vec![0.0; 200_001];
        for n in 1..=200_000u64 {
            m += mt.mu[n as usize] as f64 / n as f64;
            small_m[n as usize] = m;
        }
        for x in [4000.0, 12_345.5, 99_999.0, 200_000.0] {
            let e0 = f.evaluate(x, 0.0, Variant::Generic).unwrap();
            let big = mt.mertens(x).unwrap() as f64;
            assert!(e0.holds(big), "M({x}) = {big}, predicted {}", e0.predicted());
            let e1 = f.evaluate(x, 1.0, Variant::Generic).unwrap();
            assert!(e1.holds(small_m[x as usize]));
            assert_eq!(e1.sigma_term, 0.0);
            assert!(e0.budget.eps_total * x + e0.budget.iota_bound * x <= e0.envelope);
        }
        assert!(matches!(f.evaluate(3000.0, 0.0, Variant::Generic), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn clean_bounds() {
        assert_eq!(clean_bound(1.0, &PUBLISHED_C3), PUBLISHED_C3.lead + PUBLISHED_C3.c);
        assert_eq!(PUBLISHED_C2.lead, PI / (2.0 * (1e9 - 1.0)));
        let from = CleanBoundInputs::from_coth_constant(1e7 + 1.0, 3.369_046_5);
        assert!((from.lead - PUBLISHED_C3.lead).abs() < 1e-22);
        for x in [1.0, 1e6, 1e12, 1e17, 3.6e17, 3.61e17, 1e20] {
            assert!(mertens_clean_bound(x) <= 3.0 / (PI * 1e10) * x + 11.39 * x.sqrt());
        }
    }

    #[test]
    fn line_integral_below_proof_bound() {
        let acc = EvalAccuracy::default();
        let x = 1e6;
        let li = line_integral(x, 500.0, &acc).unwrap();
        let lm = zeta_line_max(500.0, &acc).unwrap();
        assert!(li.tail_bound < 1e-12);
        assert!(li.value + li.quad_error + li.tail_bound <= lm / x.ln().powi(2));
        assert!(li.value > 0.0);
    }
}
