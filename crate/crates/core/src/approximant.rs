//! Extremal approximants to the truncated exponential and the explicit-formula weight.
//!
//! Fourier transforms use the convention `f^(y) = ∫ f(x) e^{-2πixy} dx`.

use crate::error::{invalid, Error, Result};
use crate::numeric::quad::GaussLegendre;
use crate::numeric::special::ei;
use crate::numeric::{coth, cos_pi, sin_pi, Neumaier};
use num_complex::Complex64;
use std::f64::consts::PI;

pub use crate::numeric::tanhc;

/// Default exclusion radius around poles of Φ_λ and w.
pub const POLE_RADIUS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproximantParams {
    lambda: f64,
}

impl ApproximantParams {
    pub fn new(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// ν = |λ|/2, the decay rate of the K_ν series.
    pub fn nu(&self) -> f64 {
        self.lambda.abs() / 2.0
    }
}

/// Spectral height T and shift σ. δ = π/(2T) is derived on demand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightParams {
    t: f64,
    sigma: f64,
}

impl WeightParams {
    pub fn new(t: f64, sigma: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(invalid(format!("T must be positive, got {t}")));
        }
        if !sigma.is_finite() {
            return Err(invalid("sigma must be finite"));
        }
        Ok(Self { t, sigma })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn delta(&self) -> f64 {
        PI / (2.0 * self.t)
    }

    pub fn with_sigma(&self, sigma: f64) -> Self {
        Self { t: self.t, sigma }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationPolicy {
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-15,
            max_terms: 1_000_000,
        }
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(invalid(format!("lambda must be finite and nonzero, got {lambda}")));
    }
    Ok(())
}

/// I_λ(y) = 1_{[0,∞)}(sgn(λ) y) e^{-λy}.
pub fn truncated_exponential(lambda: f64, y: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(if lambda.signum() * y >= 0.0 { (-lambda * y).exp() } else { 0.0 })
}

fn nearest_phi_pole(lambda: f64, z: Complex64) -> Complex64 {
    Complex64::new(2.0 * (z.re / 2.0).round(), -lambda / (2.0 * PI))
}

/// Φ_λ(z) = (sgn λ/4)(coth(πz/(2i) + λ/4) − tanh(λ/4)).
pub fn phi_lambda(lambda: f64, z: Complex64) -> Result<Complex64> {
    phi_lambda_with_radius(lambda, z, POLE_RADIUS)
}

pub fn phi_lambda_with_radius(lambda: f64, z: Complex64, radius: f64) -> Result<Complex64> {
    check_lambda(lambda)?;
    let pole = nearest_phi_pole(lambda, z);
    if (z - pole).norm() < radius {
        return Err(Error::PoleProximity { pole, radius });
    }
    let w = z * Complex64::new(0.0, -PI / 2.0) + lambda / 4.0;
    Ok((coth(w) - (lambda / 4.0).tanh()) * (lambda.signum() / 4.0))
}

/// Φ_λ through the cosine/sine quotient.
pub fn phi_lambda_quotient(lambda: f64, z: Complex64) -> Result<Complex64> {
    check_lambda(lambda)?;
    let pole = nearest_phi_pole(lambda, z);
    if (z - pole).norm() < POLE_RADIUS {
        return Err(Error::PoleProximity { pole, radius: POLE_RADIUS });
    }
    let pre = Complex64::new(0.0, lambda.signum() / (4.0 * (lambda / 4.0).cosh()));
    let num = cos_pi(z / 2.0);
    let den = (z * (PI / 2.0) + Complex64::new(0.0, lambda / 4.0)).sin();
    Ok(pre * num / den)
}

fn integer_value(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9e15).then_some(z.re as i64)
}

fn interpolation_value(nu: f64, n: i64) -> f64 {
    match n {
        0 => 1.0 / (nu.exp() + 1.0),
        n if n > 0 => (-nu * n as f64).exp(),
        _ => 0.0,
    }
}

/// K_ν(z) = (sin πz/π) Σ_{n≥1} (−1)^n (e^{−νn}/(z−n) − e^{−νn}/z).
pub fn k_nu(nu: f64, z: Complex64, policy: TruncationPolicy) -> Result<Complex64> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(invalid(format!("nu must be positive, got {nu}")));
    }
    if !(policy.abs_tol > 0.0) {
        return Err(invalid("abs_tol must be positive"));
    }
    if let Some(n) = integer_value(z) {
        return Ok(Complex64::new(interpolation_value(nu, n), 0.0));
    }
    let pref = sin_pi(z) / PI;
    let dist = {
        let r = z.re - z.re.round();
        r.hypot(z.im)
    };
    let q = (-nu).exp();
    let scale = pref.norm() * 2.0 / ((1.0 - q) * dist);
    // the closed-form sum of the −e^{−νn}/z parts
    let mut acc = Complex64::new(1.0 / (nu.exp() + 1.0), 0.0) / z;
    let mut coef = 1.0;
    for n in 1..=policy.max_terms {
        coef *= -q;
        acc += coef / (z - n as f64);
        let tail = scale * q.powi(n as i32 + 1);
        if tail < policy.abs_tol || (n as f64) * nu > 745.0 {
            return Ok(pref * acc);
        }
    }
    Err(Error::Truncation {
        terms: policy.max_terms,
        achieved: scale * q.powf(policy.max_terms as f64 + 1.0),
    })
}

/// φ̂_λ(z) = K_{|λ|/2}(2 sgn(λ) z).
pub fn approximant_hat(lambda: f64, z: Complex64, policy: TruncationPolicy) -> Result<Complex64> {
    check_lambda(lambda)?;
    k_nu(lambda.abs() / 2.0, z * (2.0 * lambda.signum()), policy)
}

/// K_ν through the Lerch transcendent: −(sin πz/π)(Φ(−e^{−ν},1,−z) + (1/z)/(1+e^{−ν})).
pub fn k_nu_lerch(nu: f64, z: Complex64) -> Result<Complex64> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(invalid(format!("Lerch series needs |−e^(−ν)| < 1, got nu = {nu}")));
    }
    let w = -(-nu).exp();
    if let Some(m) = integer_value(z) {
        if m < 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        // limit of −(sin πz/π) w^m/(m − z) is (−1)^m w^m; at 0 the 1/z term adds −1/(1+e^{−ν})
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let mut v = sign * w.powi(m as i32);
        if m == 0 {
            v -= 1.0 / (1.0 - w);
        }
        return Ok(Complex64::new(v, 0.0));
    }
    let alpha = -z;
    let dist = {
        let r = alpha.re - alpha.re.round();
        r.hypot(alpha.im).min(alpha.norm())
    };
    let mut lerch = Complex64::new(0.0, 0.0);
    let mut pow = 1.0;
    let mut n = 0usize;
    loop {
        lerch += pow / (alpha + n as f64);
        pow *= w;
        n += 1;
        if pow.abs() / ((1.0 - w.abs()) * dist) < 1e-17 * lerch.norm().max(1e-300) || n > 100_000 {
            break;
        }
    }
    Ok(-(sin_pi(z) / PI) * (lerch + (1.0 / z) / (1.0 - w)))
}

/// tanh(λ/4)/λ, the minimal L¹ distance from I_λ to type-2π entire functions.
pub fn l1_min(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(tanhc(lambda / 4.0) / 4.0)
}

fn weight_pole(params: &WeightParams, s: Complex64) -> Result<()> {
    let period = 2.0 * params.t();
    let pole = Complex64::new(params.sigma(), period * (s.im / period).round());
    if (s - pole).norm() < POLE_RADIUS {
        return Err(Error::PoleProximity { pole, radius: POLE_RADIUS });
    }
    Ok(())
}

/// w_{δ,σ}(s) = coth(δ(s−σ)) − tanh(δ(1−σ)).
pub fn weight_w(params: &WeightParams, s: Complex64) -> Result<Complex64> {
    weight_pole(params, s)?;
    let d = params.delta();
    Ok(coth((s - params.sigma()) * d) - (d * (1.0 - params.sigma())).tanh())
}

/// The same weight as cosh(δ(s−1))/(cosh(δ(1−σ)) sinh(δ(s−σ))).
pub fn weight_w_product(params: &WeightParams, s: Complex64) -> Result<Complex64> {
    weight_pole(params, s)?;
    let d = params.delta();
    let sigma = params.sigma();
    Ok(((s - 1.0) * d).cosh() / ((d * (1.0 - sigma)).cosh() * ((s - sigma) * d).sinh()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AppendixAConstants {
    pub kappa_alpha: f64,
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

pub fn appendix_a_constants(alpha: f64) -> Result<AppendixAConstants> {
    if !(alpha > 0.0 && alpha <= 80.0) {
        return Err(invalid(format!("alpha must lie in (0, 80], got {alpha}")));
    }
    let e = (alpha / 2.0).exp();
    let kappa = 2.0 * e - alpha * ei(alpha / 2.0)? + 2.525 * alpha;
    let c0 = e / 2.0 + 1.0 / (e * 8.0 * PI) + kappa / (16.0 * PI);
    let lin = alpha / (16.0 * PI) + 3.0 / 22.0;
    let c1 = 2.0 * e + (alpha / (8.0 * PI) + 3.0 / 11.0) / e + lin * kappa;
    let c2 = 16.0 / 11.0 * lin;
    Ok(AppendixAConstants {
        kappa_alpha: kappa,
        c0,
        c1,
        c2,
    })
}

/// (φ̂_λ − I_λ)(u) on the real line.
pub fn approximation_error(lambda: f64, u: f64) -> Result<f64> {
    let hat = approximant_hat(lambda, Complex64::new(u, 0.0), TruncationPolicy::default())?;
    Ok(hat.re - truncated_exponential(lambda, u)?)
}

#[derive(Clone, Debug, Default)]
pub struct DecayReport {
    pub points: usize,
    /// min over the grid of 1/(16πu²) − |φ̂−I|
    pub value_slack: f64,
    /// min over the grid of 3/(22u²) + margin − |(φ̂−I)'|
    pub derivative_slack: f64,
    pub violations: Vec<f64>,
}

impl DecayReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks |φ̂_λ − I_λ| ≤ 1/(16πu²) and |(φ̂_λ − I_λ)'| ≤ 3/(22u²) for |u| ≥ 1/2.
pub fn decay_check(lambda: f64, u_grid: &[f64]) -> Result<DecayReport> {
    check_lambda(lambda)?;
    if let Some(u) = u_grid.iter().find(|u| u.abs() < 0.5) {
        return Err(invalid(format!("grid point {u} has |u| < 1/2")));
    }
    const H: f64 = 1e-5;
    // Bernstein: φ̂ has type 2π and is bounded by 2 on the reals
    let m3_hat = 2.0 * (2.0 * PI).powi(3);
    let mut report = DecayReport {
        points: u_grid.len(),
        value_slack: f64::INFINITY,
        derivative_slack: f64::INFINITY,
        violations: Vec::new(),
    };
    for &u in u_grid {
        let f = approximation_error(lambda, u)?;
        let fp = approximation_error(lambda, u + H)?;
        let fm = approximation_error(lambda, u - H)?;
        let deriv = (fp - fm) / (2.0 * H);
        let m3_exp = lambda.abs().powi(3) * truncated_exponential(lambda, u - lambda.signum() * H)?;
        let margin = H * H / 6.0 * (m3_hat + m3_exp) + 4.0 * f64::EPSILON * (1.0 + fp.abs() + fm.abs()) / (2.0 * H);
        let vs = 1.0 / (16.0 * PI * u * u) - f.abs();
        let ds = 3.0 / (22.0 * u * u) + margin - deriv.abs();
        report.value_slack = report.value_slack.min(vs);
        report.derivative_slack = report.derivative_slack.min(ds);
        if vs < -1e-15 || ds < 0.0 {
            report.violations.push(u);
        }
    }
    Ok(report)
}

/// ‖φ̂_λ − I_λ‖₁ by Gauss-Legendre panels between consecutive half-integers
/// (the difference has constant sign there) plus an asymptotic tail for |u| > cutoff.
pub fn l1_distance(lambda: f64, cutoff: usize) -> Result<f64> {
    check_lambda(lambda)?;
    let rule = GaussLegendre::new(20);
    let policy = TruncationPolicy::default();
    let mut total = Neumaier::new();
    let panels = 2 * cutoff as i64;
    for k in -panels..panels {
        let (a, b) = (k as f64 / 2.0, (k + 1) as f64 / 2.0);
        let mut err = None;
        let mut signs = (false, false);
        let v = rule.integrate(
            |u| {
                let hat = approximant_hat(lambda, Complex64::new(u, 0.0), policy);
                let i = if u == 0.0 {
                    // one-sided value on this panel
                    if (a + b) * lambda > 0.0 { 1.0 } else { 0.0 }
                } else {
                    truncated_exponential(lambda, u).unwrap_or(0.0)
                };
                match hat {
                    Ok(h) => {
                        let d = h.re - i;
                        if d > 0.0 {
                            signs.0 = true;
                        } else if d < 0.0 {
                            signs.1 = true;
                        }
                        d
                    }
                    Err(e) => {
                        err.get_or_insert(e);
                        0.0
                    }
                }
            },
            a,
            b,
        );
        if let Some(e) = err {
            return Err(e);
        }
        if signs.0 && signs.1 {
            let (w, _) = crate::numeric::quad::integrate(
                |u| approximation_error(lambda, u).map(f64::abs).unwrap_or(f64::NAN),
                a,
                b,
                1e-14,
                1e-12,
                2000,
            )?;
            total.add(w);
        } else {
            total.add(v.abs());
        }
    }
    // |φ̂−I| ~ |sin πv| |A|/(π v²) with v = 2u, A = e^{−ν}/(1+e^{−ν})²; both tails together
    let q = (-lambda.abs() / 2.0).exp();
    let a = q / ((1.0 + q) * (1.0 + q));
    total.add(2.0 * a / (PI * PI * 2.0 * cutoff as f64));
    Ok(total.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::quad::integrate_complex;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn truncated_exponential_values() {
        assert_eq!(truncated_exponential(1.0, 0.0).unwrap(), 1.0);
        assert_eq!(truncated_exponential(1.0, -1.0).unwrap(), 0.0);
        // sgn(λ)y = 1 is on the support, value e^{−λy} = e^{−2}
        assert!((truncated_exponential(-2.0, -1.0).unwrap() - (-2.0f64).exp()).abs() < 1e-16);
        assert_eq!(truncated_exponential(-2.0, 1.0).unwrap(), 0.0);
        assert!(truncated_exponential(0.0, 1.0).is_err());
    }

    #[test]
    fn phi_lambda_anchor_values() {
        assert!(phi_lambda(1.0, c(1.0, 0.0)).unwrap().norm() < 1e-16);
        assert!(phi_lambda(1.0, c(-1.0, 0.0)).unwrap().norm() < 1e-16);
        let v = phi_lambda(1.0, c(0.0, 0.0)).unwrap();
        let expected = 0.25 * (1.0 / 0.25f64.tanh() - 0.25f64.tanh());
        assert!((v.re - expected).abs() < 1e-15 && v.im.abs() < 1e-16);
        assert!((expected - 0.959_518).abs() < 1e-6);
        let q = phi_lambda_quotient(1.0, c(0.0, 0.0)).unwrap();
        assert!((q.re - expected).abs() < 1e-15);
    }

    #[test]
    fn phi_lambda_pole_policy() {
        let pole = c(2.0, -1.0 / (2.0 * PI));
        match phi_lambda(1.0, pole) {
            Err(Error::PoleProximity { pole: p, .. }) => assert!((p - pole).norm() < 1e-15),
            other => panic!("expected pole error, got {other:?}"),
        }
        assert!(phi_lambda(1.0, pole + 1e-6).is_ok());
    }

    #[test]
    fn phi_lambda_residue() {
        // residue i sgn(λ)/(2π) at the poles
        for &lambda in &[0.7, -1.3] {
            let pole = c(2.0, -lambda / (2.0 * PI));
            let h = 1e-6;
            let r = phi_lambda(lambda, pole + h).unwrap() * h;
            let expected = c(0.0, lambda.signum() / (2.0 * PI));
            assert!((r - expected).norm() < 1e-6, "{r}");
        }
    }

    #[test]
    fn k_nu_anchor_values() {
        let p = TruncationPolicy::default();
        assert!((k_nu(0.5, c(0.0, 0.0), p).unwrap().re - 1.0 / (0.5f64.exp() + 1.0)).abs() < 1e-16);
        assert!((k_nu(0.5, c(3.0, 0.0), p).unwrap().re - (-1.5f64).exp()).abs() < 1e-16);
        assert_eq!(k_nu(0.5, c(-3.0, 0.0), p).unwrap().re, 0.0);
        assert!((1.0 / (0.5f64.exp() + 1.0) - 0.37754).abs() < 1e-5);
    }

    #[test]
    fn k_nu_is_continuous_at_integers() {
        let p = TruncationPolicy::default();
        for nu in [0.25, 0.5, 1.0, 2.0] {
            for n in -5..=5 {
                let exact = k_nu(nu, c(n as f64, 0.0), p).unwrap().re;
                let near = k_nu(nu, c(n as f64 + 1e-9, 0.0), p).unwrap().re;
                assert!((exact - near).abs() < 1e-7, "nu={nu} n={n}: {exact} vs {near}");
            }
        }
    }

    #[test]
    fn truncation_failure_reported() {
        let p = TruncationPolicy {
            abs_tol: 1e-15,
            max_terms: 3,
        };
        assert!(matches!(k_nu(0.01, c(0.5, 0.0), p), Err(Error::Truncation { .. })));
    }

    #[test]
    fn lerch_form_agrees() {
        let p = TruncationPolicy::default();
        assert!((k_nu_lerch(0.5, c(3.0, 0.0)).unwrap().re - (-1.5f64).exp()).abs() < 1e-16);
        assert_eq!(k_nu_lerch(0.5, c(-3.0, 0.0)).unwrap().re, 0.0);
        assert!((k_nu_lerch(0.5, c(0.0, 0.0)).unwrap().re - 1.0 / (0.5f64.exp() + 1.0)).abs() < 1e-16);
        let a = k_nu_lerch(1.0, c(0.5, 0.0)).unwrap();
        let b = k_nu(1.0, c(0.5, 0.0), p).unwrap();
        assert!((a - b).norm() < 1e-10);
        for &(re, im) in &[(-2.3, 0.4), (7.9, -1.2), (0.01, 0.0), (-0.5, 3.0)] {
            let a = k_nu_lerch(0.8, c(re, im)).unwrap();
            let b = k_nu(0.8, c(re, im), p).unwrap();
            assert!((a - b).norm() < 1e-10 * (1.0 + b.norm()), "{re}+{im}i");
        }
        assert!(k_nu_lerch(0.0, c(0.5, 0.0)).is_err());
    }

    #[test]
    fn approximant_hat_reflection_and_origin() {
        let p = TruncationPolicy::default();
        let v = approximant_hat(1.0, c(0.0, 0.0), p).unwrap();
        assert!((v.re - 1.0 / (0.5f64.exp() + 1.0)).abs() < 1e-16);
        for &(re, im) in &[(0.3, 0.0), (-1.7, 0.2), (2.25, -0.5)] {
            let a = approximant_hat(-1.0, c(re, im), p).unwrap();
            let b = approximant_hat(1.0, c(-re, -im), p).unwrap();
            assert!((a - b).norm() < 1e-15);
        }
    }

    fn fourier_of_phi(lambda: f64, u: f64) -> Complex64 {
        integrate_complex(
            |t| phi_lambda(lambda, c(t, 0.0)).unwrap() * c(0.0, -2.0 * PI * u * t).exp(),
            -1.0,
            1.0,
            1e-12,
            1e-13,
            5000,
        )
        .unwrap()
        .0
    }

    #[test]
    fn fourier_consistency() {
        let p = TruncationPolicy::default();
        for &(lambda, u) in &[(0.5, 0.3), (0.5, 1.7), (-2.0, 0.45), (3.0, -2.2)] {
            let hat = approximant_hat(lambda, c(u, 0.0), p).unwrap();
            let quad = fourier_of_phi(lambda, u);
            assert!((hat - quad).norm() < 1e-8, "λ={lambda} u={u}: {hat} vs {quad}");
        }
    }

    #[test]
    fn l1_min_values() {
        assert!((l1_min(1e-9).unwrap() - 0.25).abs() < 1e-15);
        assert!((l1_min(1.0).unwrap() - 0.25f64.tanh()).abs() < 1e-16);
        assert!((0.25f64.tanh() - 0.244_918_7).abs() < 1e-7);
        for l in [0.1, -0.1, 1.0, -1.0, 10.0, -10.0] {
            assert!(l1_min(l).unwrap() < 0.25);
        }
        let l = 0.01;
        assert!((l1_min(l).unwrap() - (0.25 - l * l / 192.0)).abs() < 1e-10);
    }

    #[test]
    fn weight_vanishes_at_one_plus_it() {
        let params = WeightParams::new(10.0, 0.0).unwrap();
        assert!(weight_w(&params, c(1.0, 10.0)).unwrap().norm() < 1e-15);
        assert!(weight_w(&params, c(1.0, -10.0)).unwrap().norm() < 1e-15);
    }

    #[test]
    fn weight_residue_at_sigma() {
        let params = WeightParams::new(10.0, 0.3).unwrap();
        let h = 1e-7;
        let r = weight_w(&params, c(0.3 + h, 0.0)).unwrap() * h;
        assert!((r.re - 1.0 / params.delta()).abs() < 1e-5 * (1.0 / params.delta()));
        assert!(weight_w(&params, c(0.3, 0.0)).is_err());
        assert!(weight_w(&params, c(0.3, 20.0)).is_err());
    }

    #[test]
    fn weight_on_real_axis_left() {
        for &(t, sigma) in &[(10.0, 0.0), (50.0, 1.0), (4.0 * PI, -0.5)] {
            let params = WeightParams::new(t, sigma).unwrap();
            let d = params.delta();
            let mut prev = 0.0;
            let top = sigma.min(1.0);
            for k in 1..200 {
                let x = top - 0.05 * k as f64;
                let w = weight_w(&params, c(x, 0.0)).unwrap();
                assert!(w.im.abs() < 1e-15 && w.re < 0.0);
                let b = 1.0 / (d * (sigma - x)) + 2.0;
                assert!(w.re.abs() <= b + 1e-12);
                if k > 1 {
                    assert!(w.re.abs() <= prev + 1e-12, "|w| must decrease leftwards");
                }
                prev = w.re.abs();
            }
        }
    }

    #[test]
    fn appendix_a_claims() {
        let a = appendix_a_constants(0.5).unwrap();
        assert!(a.c0 < 16.0 / 21.0 && a.c1 < 17.0 / 5.0 && a.c2 < 2.0 / 9.0);
        let b = appendix_a_constants(1.0 / 6.0).unwrap();
        assert!(b.c0 <= 2.0 / 3.0 && b.c1 <= 2.85);
        let lo = appendix_a_constants(0.1).unwrap();
        assert!(lo.c0 <= a.c0 && lo.c1 <= a.c1 && lo.c2 <= a.c2 && lo.kappa_alpha <= a.kappa_alpha);
    }

    #[test]
    fn decay_anchor_points() {
        assert!(approximation_error(1.0, 0.5).unwrap().abs() < 1e-15);
        assert!(approximation_error(1.0, -0.5).unwrap().abs() < 1e-15);
        assert!(approximation_error(1.0, 2.0).unwrap().abs() <= 1.0 / (64.0 * PI));
        for lambda in [1.0, -2.5] {
            let jump = approximation_error(lambda, 1e-13).unwrap() - approximation_error(lambda, -1e-13).unwrap();
            assert!((jump + lambda.signum()).abs() < 1e-9);
        }
        let r = decay_check(1.0, &[0.5, -0.5, 0.75, 2.0, -7.3]).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(decay_check(1.0, &[0.2]).is_err());
    }

    #[test]
    fn l1_distance_small_lambda() {
        let d = l1_distance(1.0, 1000).unwrap();
        assert!((d - l1_min(1.0).unwrap()).abs() < 1e-6, "{d}");
    }

    proptest! {
        #[test]
        fn phi_forms_agree(lambda in prop_oneof![-6.0..-0.05f64, 0.05..6.0f64], re in -5.0..5.0f64, im in -2.0..2.0f64) {
            let z = c(re, im);
            let pole = nearest_phi_pole(lambda, z);
            prop_assume!((z - pole).norm() > 1e-3);
            let a = phi_lambda(lambda, z).unwrap();
            let b = phi_lambda_quotient(lambda, z).unwrap();
            prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()) / (z - pole).norm());
        }

        #[test]
        fn phi_reflection(lambda in 0.05..6.0f64, re in -5.0..5.0f64, im in -2.0..2.0f64) {
            let z = c(re, im);
            prop_assume!((z - nearest_phi_pole(lambda, z)).norm() > 1e-3);
            prop_assume!((-z - nearest_phi_pole(lambda, -z)).norm() > 1e-3);
            let a = phi_lambda(-lambda, z).unwrap();
            let b = phi_lambda(lambda, -z).unwrap();
            prop_assert!((a - b).norm() < 1e-10 * (1.0 + a.norm()));
        }

        #[test]
        fn weight_forms_agree(t in 1.0..1e4f64, sigma in -1.0..1.5f64, re in -3.0..3.0f64, frac in -3.0..3.0f64) {
            let params = WeightParams::new(t, sigma).unwrap();
            let s = c(re, frac * t);
            let period = 2.0 * t;
            let pole = c(sigma, period * (s.im / period).round());
            prop_assume!(params.delta() * (s - pole).norm() > 1e-3);
            let a = weight_w(&params, s).unwrap();
            let b = weight_w_product(&params, s).unwrap();
            prop_assert!((a - b).norm() <= 1e-12 * a.norm() + 1e-14, "{} vs {}", a, b);
        }

        #[test]
        fn critical_line_identity(t in 20.0..1e4f64, gamma in 0.1..1e4f64) {
            let params = WeightParams::new(t, 1.0).unwrap();
            let s = c(0.5, gamma);
            let w = weight_w(&params, s).unwrap().norm();
            let k = coth(s * params.delta()).norm();
            prop_assert!((w - k).abs() <= 1e-12 * k);
        }

        #[test]
        fn interpolation_property(nu in 0.05..4.0f64, n in -20i64..20) {
            let v = k_nu(nu, c(n as f64, 0.0), TruncationPolicy::default()).unwrap().re;
            prop_assert_eq!(v, interpolation_value(nu, n));
        }
    }
}
