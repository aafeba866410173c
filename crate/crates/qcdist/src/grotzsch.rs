//! The plane Grotzsch modulus mu(r) = (π/2)·K(r')/K(r), its inverse, and the
//! Hersch-Pfluger distortion function phi_K(r) = mu⁻¹(mu(r)/K).
//!
//! mu is a decreasing homeomorphism (0,1) → (0,∞) with mu(r)·mu(r') = (π/2)²
//! and mu(1/√2) = π/2. The inverse exploits that symmetry: arguments below
//! π/2 are reduced to the dual problem, so the root search always runs on
//! r ∈ (0, 1/√2] where mu is steep and well conditioned. Bracketed bisection
//! supplies a guaranteed enclosure; Newton steps using
//! mu'(r) = -π² / (4 r r'² K(r)²) finish it off, falling back to bisection
//! whenever a step would leave the bracket.

use crate::elliptic::{complete_k_with_complement, UnitRadius, ONE_MINUS};
use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

/// (π/2)², the constant in mu(r)·mu(r') = (π/2)².
pub const MU_SYMMETRY_PRODUCT: f64 = FRAC_PI_2 * FRAC_PI_2;

/// Above this argument mu⁻¹(y) is replaced by its asymptote 4·e^{-y}
/// (relative error below 1e-15 there).
const MU_INV_ASYMPTOTIC_Y: f64 = 35.0;

/// A value of the modulus mu; positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ModulusValue(f64);

impl ModulusValue {
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::domain(format!(
                "modulus value must be positive and finite, got {value}"
            )));
        }
        Ok(ModulusValue(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl From<ModulusValue> for f64 {
    fn from(m: ModulusValue) -> f64 {
        m.0
    }
}

/// mu(r) = (π/2)·K(r')/K(r).
///
/// Strictly decreasing; mu(r) → ∞ as r → 0 and → 0 as r → 1. Both elliptic
/// integrals are evaluated from the complementary modulus the argument
/// already carries, so accuracy is uniform across the whole interval.
pub fn mu(r: UnitRadius) -> ModulusValue {
    // K(r) = pi/(2 agm(1, r')) and K(r') = pi/(2 agm(1, r)), hence
    // mu(r) = (pi/2) agm(1, r') / agm(1, r) — but going through the two K
    // values keeps the near-1 asymptotic guard in one place.
    let k = complete_k_with_complement(r.complement_value());
    let kp = complete_k_with_complement(r.value());
    ModulusValue(FRAC_PI_2 * kp / k)
}

/// Convenience wrapper validating a bare float argument.
pub fn mu_value(r: f64) -> Result<f64> {
    Ok(mu(UnitRadius::new(r)?).value())
}

/// mu'(r) = -π² / (4 r r'² K(r)²); used for Newton refinement.
fn mu_derivative(r: f64, rp: f64) -> f64 {
    let k = complete_k_with_complement(rp);
    -std::f64::consts::PI * std::f64::consts::PI / (4.0 * r * rp * rp * k * k)
}

/// mu⁻¹(y) for y > 0.
///
/// Strictly decreasing; satisfies mu(mu_inv(y)) = y to better than 1e-11
/// relative over the representable range. For y ≥ π/2 the root is found
/// directly on (0, 1/√2]; smaller y is handled through the dual value
/// (π/2)²/y, which lands the solver in the same well-conditioned range and
/// yields the complement of the answer instead.
///
/// The true value leaves f64 at the extremes: beyond y ≈ 708 it saturates
/// at the smallest positive float, and below y ≈ 3.5e-3 at the largest
/// float under 1. Callers needing log-scale answers out there (the
/// displacement bounds do) use the asymptote log mu⁻¹(y) = log 4 - y
/// directly instead.
pub fn mu_inv(y: ModulusValue) -> UnitRadius {
    let y = y.value();
    if y >= FRAC_PI_2 {
        mu_inv_lower_half(y)
    } else {
        mu_inv_lower_half(MU_SYMMETRY_PRODUCT / y).complement()
    }
}

/// Convenience wrapper validating a bare float argument.
pub fn mu_inv_value(y: f64) -> Result<f64> {
    Ok(mu_inv(ModulusValue::new(y)?).value())
}

/// Solves mu(r) = y for y ≥ π/2, i.e. r ∈ (0, 1/√2].
fn mu_inv_lower_half(y: f64) -> UnitRadius {
    debug_assert!(y >= FRAC_PI_2 - 1e-12);
    if y > MU_INV_ASYMPTOTIC_Y {
        // saturate both parts away from the closed endpoints; r underflows
        // for y beyond ~710 and comp rounds up to 1 long before that
        let r = (4.0 * (-y).exp()).max(f64::MIN_POSITIVE);
        let comp = ((1.0 - r) * (1.0 + r)).sqrt().min(ONE_MINUS);
        return UnitRadius::from_parts(r, comp);
    }

    // log(1/r) < mu(r) < log(4/r) brackets the root provably:
    // mu(e^{-y}) > y and mu(4 e^{-y}) < y. The margin at the upper end is
    // only O(r²), invisible in f64 for large y, so widen it by a relative
    // 1e-9 to make the sign numerically robust; clamp below 1/√2 plus a
    // hair, since y >= pi/2 puts the root at or below 1/√2.
    let mut lo = (-y).exp();
    let mut hi = (4.0 * (-y).exp() * (1.0 + 1e-9)).min(std::f64::consts::FRAC_1_SQRT_2 * 1.0000001);
    let f = |r: f64| {
        let u = UnitRadius::new(r).expect("bracket stays inside (0,1)");
        mu(u).value() - y
    };
    debug_assert!(f(lo) > 0.0 && f(hi) < 0.0);

    // Geometric bisection (the root spans many orders of magnitude over the
    // y range), then Newton with bisection fallback; mu is smooth and
    // strictly monotone on the bracket.
    for _ in 0..30 {
        let mid = (lo * hi).sqrt();
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut r = (lo * hi).sqrt();
    for _ in 0..12 {
        let u = UnitRadius::new(r).expect("iterate stays inside (0,1)");
        let fr = mu(u).value() - y;
        let dr = fr / mu_derivative(u.value(), u.complement_value());
        let next = r - dr;
        if !(next > lo && next < hi) {
            // Newton left the enclosure: shrink by bisection instead.
            if fr > 0.0 {
                lo = r;
            } else {
                hi = r;
            }
            r = (lo * hi).sqrt();
            continue;
        }
        if fr > 0.0 {
            lo = r;
        } else {
            hi = r;
        }
        r = next;
        if dr.abs() <= 2.0 * f64::EPSILON * r {
            break;
        }
    }
    UnitRadius::new(r).expect("root lies inside (0,1)")
}

/// The Hersch-Pfluger distortion function phi_K(r) = mu⁻¹(mu(r)/K) for
/// K > 0, extended by continuity with phi_K(0) = 0 and phi_K(1) = 1.
///
/// Increasing homeomorphism of [0,1] in r, increasing in K; phi_1 is the
/// identity and phi_{1/K} inverts phi_K.
pub fn phi_k(k: f64, r: f64) -> Result<f64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::domain(format!("phi_k requires K > 0, got {k}")));
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!(
            "phi_k requires 0 <= r <= 1, got {r}"
        )));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    if r == 1.0 {
        return Ok(1.0);
    }
    Ok(phi_k_radius(k, UnitRadius::new(r)?).value())
}

/// Typed core of [`phi_k`]; K = 1 short-circuits to the identity.
pub fn phi_k_radius(k: f64, r: UnitRadius) -> UnitRadius {
    debug_assert!(k > 0.0);
    if k == 1.0 {
        return r;
    }
    let target = mu(r).value() / k;
    mu_inv(ModulusValue(target.max(f64::MIN_POSITIVE)))
}
