//! Grotzsch and Teichmuller ring capacities and the distortion functions
//! phi_{K,n}, eta_{K,n} built on them.
//!
//! In the plane everything is exact: gamma_2(s) = 2π/mu(1/s) ties the
//! Grotzsch capacity to the modulus, tau_2(t) = gamma_2(√(1+t))/2, and
//! phi_{K,2} coincides with the Hersch-Pfluger phi_K. For n >= 3 no closed
//! form exists; results are [`Enclosure`] values whose certified side comes
//! from the ring-constant interval λ_n ∈ [4, 2e^{n-1}) and the lower bound
//! phi_{1/K,n}(r) >= λ_n^{1-β} r^β, β = K^{1/(n-1)}, together with its
//! λ-free weakening λ_n^{1-β} >= 2^{1-β} K^{-β}.
//!
//! Since the exponent 1-β is nonpositive, a certified lower bound must
//! evaluate the λ-form at the *upper* end 2e^{n-1} of the interval; the
//! lower end λ_n >= 4 can only certify the opposite direction. Every n >= 3
//! value is tagged `BoundOnly` and records exactly which side is proven.

use crate::elliptic::{UnitRadius, ONE_MINUS};
use crate::error::{Error, Result};
use crate::grotzsch::{mu, phi_k_radius};
use std::f64::consts::PI;

/// Ambient dimension n >= 2. n = 2 selects the exact computational path,
/// n >= 3 the enclosure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("dimension must be >= 2, got {n}")));
        }
        Ok(Dimension(n))
    }

    pub const PLANE: Dimension = Dimension(2);

    pub fn get(&self) -> u32 {
        self.0
    }

    pub fn is_planar(&self) -> bool {
        self.0 == 2
    }
}

/// How much of an [`Enclosure`] is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rigor {
    /// Lower and upper agree to rounding; the value is known.
    Exact,
    /// Only the stated sides are proven; the true value may sit anywhere
    /// between them.
    BoundOnly,
}

/// A certified interval. `upper` may be +∞ when no finite upper bound is
/// available.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lower: f64,
    upper: f64,
    rigor: Rigor,
}

impl Enclosure {
    /// Tolerance of the `Exact` tag: upper - lower <= 1e-10 · max(1, |lower|).
    pub const EXACT_WIDTH: f64 = 1e-10;

    pub fn exact(value: f64) -> Self {
        Enclosure {
            lower: value,
            upper: value,
            rigor: Rigor::Exact,
        }
    }

    pub fn bounds(lower: f64, upper: f64) -> Self {
        assert!(
            lower <= upper,
            "enclosure needs lower <= upper, got [{lower}, {upper}]"
        );
        Enclosure {
            lower,
            upper,
            rigor: Rigor::BoundOnly,
        }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn rigor(&self) -> Rigor {
        self.rigor
    }

    pub fn is_exact(&self) -> bool {
        self.rigor == Rigor::Exact
    }

    /// The point value of an exact enclosure.
    pub fn value(&self) -> Option<f64> {
        if self.is_exact() {
            Some(self.lower)
        } else {
            None
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    #[cfg(test)]
    fn invariant_ok(&self) -> bool {
        match self.rigor {
            Rigor::Exact => {
                self.upper - self.lower <= Self::EXACT_WIDTH * self.lower.abs().max(1.0)
            }
            Rigor::BoundOnly => self.lower <= self.upper,
        }
    }
}

impl std::fmt::Display for Enclosure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.rigor {
            Rigor::Exact => write!(f, "{}", self.lower),
            Rigor::BoundOnly => write!(f, "{}..{} [bound-only]", self.lower, self.upper),
        }
    }
}

/// The Grotzsch ring constant interval: λ_n ∈ [4, 2e^{n-1}), with λ_2 = 4
/// exactly.
#[derive(Debug, Clone, Copy)]
pub struct GrotzschConstantInterval {
    n: Dimension,
}

impl GrotzschConstantInterval {
    pub fn new(n: Dimension) -> Self {
        GrotzschConstantInterval { n }
    }

    pub fn lower(&self) -> f64 {
        4.0
    }

    /// 2e^{n-1}, an *exclusive* upper end: λ_n < 2e^{n-1} strictly.
    pub fn upper(&self) -> f64 {
        2.0 * ((self.n.get() - 1) as f64).exp()
    }
}

/// Surface measure of the unit sphere S^{n-1}: ω_{n-1} = 2 π^{n/2} / Γ(n/2).
fn sphere_surface(n: u32) -> f64 {
    2.0 * PI.powf(n as f64 / 2.0) / gamma_half_integer(n)
}

/// Γ(n/2) for integer n >= 1 by the recurrence from Γ(1/2) = √π, Γ(1) = 1.
fn gamma_half_integer(n: u32) -> f64 {
    let mut x = n as f64 / 2.0;
    let mut acc = 1.0;
    while x > 1.0 {
        x -= 1.0;
        acc *= x;
    }
    if (x - 0.5).abs() < 1e-12 {
        acc * PI.sqrt()
    } else {
        acc // x == 1
    }
}

/// Plane Grotzsch capacity gamma_2(s) = 2π / mu(1/s) for s > 1.
/// Strictly decreasing, blows up as s → 1.
pub fn gamma_2(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::domain(format!("gamma_2 requires s > 1, got {s}")));
    }
    let r = UnitRadius::new(1.0 / s)?;
    Ok(2.0 * PI / mu(r).value())
}

/// Grotzsch capacity gamma_n(s): exact via [`gamma_2`] in the plane;
/// for n >= 3 the classical envelope
/// ω_{n-1} (log(Λ_n s))^{1-n} < gamma_n(s) <= ω_{n-1} (log s)^{1-n},
/// with Λ_n the certified end 2e^{n-1} of the ring-constant interval.
pub fn gamma_n(n: Dimension, s: f64) -> Result<Enclosure> {
    if !(s > 1.0) {
        return Err(Error::domain(format!("gamma_n requires s > 1, got {s}")));
    }
    if n.is_planar() {
        return Ok(Enclosure::exact(gamma_2(s)?));
    }
    let dim = n.get();
    let omega = sphere_surface(dim);
    let lambda_cap = GrotzschConstantInterval::new(n).upper();
    let expo = 1.0 - dim as f64;
    let lower = omega * (lambda_cap * s).ln().powf(expo);
    let upper = omega * s.ln().powf(expo);
    Ok(Enclosure::bounds(lower, upper))
}

/// Teichmuller capacity tau_n(t) = 2^{1-n} gamma_n(√(1+t)) for t > 0.
/// Exact for n = 2, enclosure otherwise; decreasing in t.
pub fn tau_n(n: Dimension, t: f64) -> Result<Enclosure> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("tau_n requires t > 0, got {t}")));
    }
    let s = (1.0 + t).sqrt();
    let scale = (2.0_f64).powi(1 - n.get() as i32);
    let g = gamma_n(n, s)?;
    Ok(match g.rigor() {
        Rigor::Exact => Enclosure::exact(scale * g.lower()),
        Rigor::BoundOnly => Enclosure::bounds(scale * g.lower(), scale * g.upper()),
    })
}

/// Exact tau_2(t) = π / mu(1/√(1+t)) as a plain float.
pub fn tau_2(t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("tau_2 requires t > 0, got {t}")));
    }
    let r = UnitRadius::new(1.0 / (1.0 + t).sqrt())?;
    Ok(PI / mu(r).value())
}

/// Inverse of the decreasing tau_2 by bisection on t ∈ (1e-8, 1e8);
/// used by the n = 2 consistency test for eta.
pub fn tau_2_inv(y: f64) -> Result<f64> {
    if !(y > 0.0) {
        return Err(Error::domain(format!("tau_2_inv requires y > 0, got {y}")));
    }
    let mut lo = 1e-8_f64;
    let mut hi = 1e8_f64;
    if tau_2(lo)? < y || tau_2(hi)? > y {
        return Err(Error::domain(format!(
            "tau_2_inv argument {y} outside the bracketed range"
        )));
    }
    for _ in 0..200 {
        let mid = (lo * hi).sqrt();
        if tau_2(mid)? > y {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 * hi {
            break;
        }
    }
    Ok((lo * hi).sqrt())
}

/// Certified lower bound for phi_{1/K,n}(r), K >= 1, n >= 3:
/// max of the λ-interval form (2e^{n-1})^{1-β} r^β and the λ-free
/// 2^{1-β} K^{-β} r^β, β = K^{1/(n-1)}.
fn phi_sub_lower(k: f64, n: Dimension, r: f64) -> f64 {
    debug_assert!(k >= 1.0);
    let beta = k.powf(1.0 / (n.get() as f64 - 1.0));
    let lambda_cap = GrotzschConstantInterval::new(n).upper();
    let interval_form = lambda_cap.powf(1.0 - beta) * r.powf(beta);
    let lambda_free = (2.0_f64).powf(1.0 - beta) * k.powf(-beta) * r.powf(beta);
    interval_form.max(lambda_free)
}

/// phi_{K,n}(r) = 1 / gamma_n^{-1}(K gamma_n(1/r)).
///
/// Exact for n = 2, where it equals phi_K, and at K = 1, where it is the
/// identity in any dimension. For n >= 3 the subconformal case k <= 1
/// carries the certified lower bound above and the trivial upper bound r;
/// the superconformal case k >= 1 only the trivial [r, 1].
pub fn phi_kn(k: f64, n: Dimension, r: UnitRadius) -> Result<Enclosure> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::domain(format!("phi_kn requires K > 0, got {k}")));
    }
    if k == 1.0 {
        return Ok(Enclosure::exact(r.value()));
    }
    if n.is_planar() {
        return Ok(Enclosure::exact(phi_k_radius(k, r).value()));
    }
    if k < 1.0 {
        let lower = phi_sub_lower(1.0 / k, n, r.value());
        Ok(Enclosure::bounds(lower.min(r.value()), r.value()))
    } else {
        Ok(Enclosure::bounds(r.value(), 1.0))
    }
}

/// eta_{K,n}(t) = tau_n^{-1}(tau_n(t)/K)
///              = (1 - v²)/v²,  v = phi_{1/K,n}(1/√(1+t)).
///
/// Exact for n = 2 via the closed form s²/(1-s²), s = phi_K(√(t/(1+t))).
/// For n >= 3 and K >= 1 the enclosure is [t, (1-a)/a] with a the certified
/// lower bound of v² (lower end t from monotonicity in K, K = 1 being the
/// identity); for K < 1 it is [0, t].
pub fn eta_kn(k: f64, n: Dimension, t: f64) -> Result<Enclosure> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::domain(format!("eta_kn requires K > 0, got {k}")));
    }
    if !(t > 0.0) {
        return Err(Error::domain(format!("eta_kn requires t > 0, got {t}")));
    }
    if k == 1.0 {
        return Ok(Enclosure::exact(t));
    }
    if n.is_planar() {
        return Ok(Enclosure::exact(eta_k2(k, t)?));
    }
    if k > 1.0 {
        let r = UnitRadius::new(1.0 / (1.0 + t).sqrt())?;
        let v_lo = phi_sub_lower(k, n, r.value());
        let a_lo = v_lo * v_lo;
        Ok(Enclosure::bounds(t, (1.0 - a_lo) / a_lo))
    } else {
        Ok(Enclosure::bounds(0.0, t))
    }
}

/// Exact planar eta_{K,2}(t) = s²/(1-s²) with s = phi_K(√(t/(1+t))).
///
/// 1 - s² is taken from the complement phi carries rather than by
/// subtraction, which keeps the quotient accurate when s is within a few
/// ulps of 1 (large K or t).
pub fn eta_k2(k: f64, t: f64) -> Result<f64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::domain(format!("eta_k2 requires K > 0, got {k}")));
    }
    if !(t > 0.0) {
        return Err(Error::domain(format!("eta_k2 requires t > 0, got {t}")));
    }
    if k == 1.0 {
        return Ok(t);
    }
    // √(t/(1+t)) and its complement 1/√(1+t), each computed directly
    let r = (t / (1.0 + t)).sqrt().min(ONE_MINUS);
    let c = (1.0 / (1.0 + t)).sqrt().min(ONE_MINUS);
    let s = phi_k_radius(k, UnitRadius::from_parts(r, c));
    // s²/(1-s²) with 1-s² = comp(s)²
    let sc = s.complement_value();
    Ok((s.value() / sc) * (s.value() / sc))
}

/// λ(K) = eta_{K,2}(1), the planar key constant.
pub fn lambda_k(k: f64) -> Result<f64> {
    eta_k2(k, 1.0)
}

/// Exact planar a = phi_{1/K,2}(1/√2)², the constant of the hyperbolic
/// displacement bound.
pub fn planar_a(k: f64) -> f64 {
    let half = UnitRadius::new(std::f64::consts::FRAC_1_SQRT_2).expect("1/sqrt2 valid");
    let v = phi_k_radius(1.0 / k, half);
    v.value() * v.value()
}

/// Certified lower bound of a = phi_{1/K,n}(1/√2)² for n >= 3.
pub(crate) fn a_lower_bound(k: f64, n: Dimension) -> f64 {
    let v = phi_sub_lower(k, n, std::f64::consts::FRAC_1_SQRT_2);
    v * v
}
