//! The p/q fixed-point machinery: for parameters m, n >= 1,
//!
//!   p(x) = log(2^{mx-m+1} x^{nx} - 1),   q(x) = (2m log2 + 2n)(x - 1),
//!
//! p(1) = q(1) = 0 and p(x) <= q(x) holds on [1, a], where a is the limit of
//! the increasing iteration a_0 = M, a_{k+1} = p⁻¹(q(a_k)) started from the
//! concavity threshold M(m, n). At (m, n) = (3, 2) the inequality
//! log(2^{3K-2} K^{2K} - 1) <= (4 + 6 log 2)(K - 1) on K ∈ [1, 17] is what
//! gives the displacement bound its [1, 17] validity window; the iteration
//! reaches 17 at step 36 and converges to a ≈ 17.1558 < 2^{2m/n} e².

use crate::error::{Error, Result};
use crate::report::CheckReport;
use std::f64::consts::LN_2;

/// Parameters m, n >= 1 of the p/q pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MnParams {
    m: f64,
    n: f64,
}

impl MnParams {
    pub fn new(m: f64, n: f64) -> Result<Self> {
        if !(m >= 1.0 && n >= 1.0) {
            return Err(Error::domain(format!(
                "p/q parameters require m, n >= 1, got ({m}, {n})"
            )));
        }
        Ok(MnParams { m, n })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    /// 2^{2m/n} e², an explicit upper bound for the iteration limit.
    pub fn upper_cap(&self) -> f64 {
        (2.0_f64).powf(2.0 * self.m / self.n) * std::f64::consts::E.powi(2)
    }

    /// u(x) = (mx - m + 1) log2 + n x log x, so that p(x) = log(e^{u(x)} - 1).
    fn u(&self, x: f64) -> f64 {
        (self.m * x - self.m + 1.0) * LN_2 + self.n * x * x.ln()
    }

    /// u'(x) = m log2 + n(1 + log x).
    fn u_prime(&self, x: f64) -> f64 {
        self.m * LN_2 + self.n * (1.0 + x.ln())
    }
}

/// The concavity threshold M(m, n) > 1: the larger root of
/// (mx - m + 1) log2 + n x (x - 1) = log(1 + (n + m log2)²/n), written with
/// t = (m log2 - n)/(2n) as M = √(((m-1) log2 + C)/n + t²) - t.
pub fn compute_m(params: MnParams) -> f64 {
    let (m, n) = (params.m, params.n);
    let t = (m * LN_2 - n) / (2.0 * n);
    let c = (1.0 + (n + m * LN_2).powi(2) / n).ln();
    (((m - 1.0) * LN_2 + c) / n + t * t).sqrt() - t
}

/// p(x) = log(2^{mx-m+1} x^{nx} - 1) for x >= 1.
///
/// Evaluated as u + log(1 - e^{-u}) for large u (2^{mx-m+1} x^{nx} overflows
/// near x = 17 already at (3,2)) and as log(expm1(u)) otherwise; p(1) = 0.
pub fn p_func(params: MnParams, x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::domain(format!("p(x) requires x >= 1, got {x}")));
    }
    let u = params.u(x);
    if u > 30.0 {
        Ok(u + (-(-u).exp()).ln_1p())
    } else {
        Ok(u.exp_m1().ln())
    }
}

/// q(x) = (2m log2 + 2n)(x - 1) for x >= 1; q(1) = 0.
pub fn q_func(params: MnParams, x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::domain(format!("q(x) requires x >= 1, got {x}")));
    }
    Ok((2.0 * params.m * LN_2 + 2.0 * params.n) * (x - 1.0))
}

/// p'(x) = u'(x) e^u / (e^u - 1) = u'(x) / (1 - e^{-u}).
fn p_prime(params: MnParams, x: f64) -> f64 {
    let u = params.u(x);
    params.u_prime(x) / -(-u).exp_m1()
}

/// Inverse of the increasing p on [1, cap + 1]; bisection bracket plus
/// Newton refinement with the analytic p'.
pub fn p_inverse(params: MnParams, y: f64) -> Result<f64> {
    if !(y >= 0.0) {
        return Err(Error::domain(format!("p_inverse requires y >= 0, got {y}")));
    }
    if y == 0.0 {
        return Ok(1.0);
    }
    let mut lo = 1.0_f64;
    let mut hi = params.upper_cap() + 1.0;
    debug_assert!(p_func(params, hi)? > y, "cap does not bracket y = {y}");
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if p_func(params, mid)? < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..6 {
        let fx = p_func(params, x)? - y;
        let step = fx / p_prime(params, x);
        let next = x - step;
        if !(next >= lo && next <= hi) {
            break;
        }
        x = next;
        if step.abs() <= 2.0 * f64::EPSILON * x {
            break;
        }
    }
    Ok(x)
}

/// Trace of the iteration a_0 = M, a_{k+1} = p⁻¹(q(a_k)).
#[derive(Debug, Clone)]
pub struct IterationTrace {
    /// a_0, a_1, ..., strictly increasing.
    pub sequence: Vec<f64>,
    /// Whether the step size dropped below the requested tolerance.
    pub converged: bool,
    /// Last iterate; the fixed point p(a) = q(a) when converged.
    pub limit_estimate: f64,
    /// The explicit bound 2^{2m/n} e² every iterate stays below.
    pub upper_cap: f64,
}

impl IterationTrace {
    /// a_k, if the trace ran that far.
    pub fn step(&self, k: usize) -> Option<f64> {
        self.sequence.get(k).copied()
    }
}

/// Runs the iteration until the step is below `tol` or `max_steps` is hit.
/// Non-convergence is reported through the flag, not an error.
pub fn iterate_a(params: MnParams, max_steps: usize, tol: f64) -> Result<IterationTrace> {
    if max_steps < 1 {
        return Err(Error::usage("iterate_a needs max_steps >= 1"));
    }
    if !(tol > 0.0) {
        return Err(Error::usage(format!("iterate_a needs tol > 0, got {tol}")));
    }
    let mut sequence = vec![compute_m(params)];
    let mut converged = false;
    for _ in 0..max_steps {
        let prev = *sequence.last().expect("nonempty");
        let next = p_inverse(params, q_func(params, prev)?)?;
        sequence.push(next);
        if next - prev < tol {
            converged = true;
            break;
        }
    }
    let limit_estimate = *sequence.last().expect("nonempty");
    Ok(IterationTrace {
        sequence,
        converged,
        limit_estimate,
        upper_cap: params.upper_cap(),
    })
}

/// Default iteration settings: tolerance 1e-13, at most 10_000 steps.
pub fn iterate_a_default(params: MnParams) -> Result<IterationTrace> {
    iterate_a(params, 10_000, 1e-13)
}

/// Checks p(x) <= q(x) on a grid of [1, upto]: equality at x = 1, strict
/// inequality in the interior. Returns the worst interior margin.
pub fn verify_interval(params: MnParams, upto: f64, grid_size: usize) -> Result<CheckReport> {
    if !(upto >= 1.0) {
        return Err(Error::domain(format!(
            "verify_interval requires upto >= 1, got {upto}"
        )));
    }
    if grid_size < 2 {
        return Err(Error::usage("verify_interval needs grid_size >= 2"));
    }
    let mut worst_margin = f64::INFINITY;
    let mut worst_x = 1.0;
    for i in 1..=grid_size {
        let x = 1.0 + (upto - 1.0) * i as f64 / grid_size as f64;
        let margin = q_func(params, x)? - p_func(params, x)?;
        if margin < worst_margin {
            worst_margin = margin;
            worst_x = x;
        }
    }
    Ok(CheckReport::asserted(
        "mn.p_le_q_on_interval",
        &[
            ("m", params.m),
            ("n", params.n),
            ("upto", upto),
            ("worst_x", worst_x),
        ],
        0.0,
        worst_margin,
        format!("p <= q sampled on {grid_size} points of [1, {upto}]"),
    ))
}
