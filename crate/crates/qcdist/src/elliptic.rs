//! Complete elliptic integrals of the first and second kind.
//!
//! K(r) = ∫₀¹ dx / √((1-x²)(1-r²x²)) is evaluated through the
//! arithmetic-geometric mean, K(r) = π / (2·agm(1, r')), r' = √(1-r²),
//! which converges quadratically. E(r) comes from the same iteration via the
//! usual c-sum. [`quadrature_k`] evaluates the defining integral directly by
//! adaptive Simpson after the substitution x = sin θ and serves as an
//! independent cross-check of the AGM route.
//!
//! The modulus convention is r (not the parameter m = r²): `complete_k(0.5)`
//! here equals `ellipk(0.25)` in the m-convention.

use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

/// Largest f64 strictly below 1; values of a radius saturate here instead of
/// reaching the excluded endpoint 1.
pub(crate) const ONE_MINUS: f64 = 1.0 - f64::EPSILON / 2.0;

/// AGM iteration cap. Quadratic convergence reaches f64 precision in well
/// under 10 steps for any positive pair; 64 is generous.
const AGM_MAX_ITER: usize = 64;

/// Below this complementary modulus, K(r) switches to the asymptotic
/// log(4/r'), avoiding AGM cancellation; the error is O(r'² log(1/r')).
const KP_ASYMPTOTIC: f64 = 1e-10;

/// A modulus r in the open interval (0,1), stored together with its
/// complement r' = √(1-r²).
///
/// The complement is computed once, at construction, as √((1-r)(1+r)). Both
/// components participate in downstream formulas; keeping them paired avoids
/// the catastrophic cancellation of recomputing √(1-r²) when r is close
/// to 1. [`UnitRadius::complement`] is then an exact swap, so identities
/// such as mu(r)·mu(r') = (π/2)² survive in floating point essentially to
/// machine precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitRadius {
    value: f64,
    comp: f64,
}

impl UnitRadius {
    /// Accepts 0 < value < 1.
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0 && value < 1.0) {
            return Err(Error::domain(format!(
                "unit radius requires 0 < r < 1, got {value}"
            )));
        }
        let comp = ((1.0 - value) * (1.0 + value)).sqrt().min(ONE_MINUS);
        Ok(UnitRadius { value, comp })
    }

    /// Builds the radius whose complement √(1-r²) equals `comp`. Preferred
    /// when the complement is the quantity known accurately (r near 1).
    pub fn from_complement(comp: f64) -> Result<Self> {
        let c = Self::new(comp)?;
        Ok(c.complement())
    }

    pub(crate) fn from_parts(value: f64, comp: f64) -> Self {
        debug_assert!(value > 0.0 && value < 1.0);
        debug_assert!(comp > 0.0 && comp < 1.0);
        UnitRadius { value, comp }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// √(1-r²) as stored; exact to within one rounding of the constructor.
    pub fn complement_value(&self) -> f64 {
        self.comp
    }

    /// r' = √(1-r²) as a `UnitRadius`; swaps the stored pair, no arithmetic.
    pub fn complement(&self) -> UnitRadius {
        UnitRadius {
            value: self.comp,
            comp: self.value,
        }
    }
}

/// Common limit of the arithmetic-geometric mean iteration
/// a ← (a+b)/2, b ← √(ab). Symmetric in its arguments.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::domain(format!(
            "agm requires positive arguments, got ({a}, {b})"
        )));
    }
    Ok(agm_unchecked(a, b))
}

fn agm_unchecked(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind, K(r) for 0 <= r < 1.
///
/// Strictly increasing, K(0) = π/2, K(r) → ∞ as r → 1.
pub fn complete_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(format!(
            "complete_k requires 0 <= r < 1, got {r}"
        )));
    }
    let rp = ((1.0 - r) * (1.0 + r)).sqrt();
    Ok(complete_k_with_complement(rp))
}

/// K(r) expressed through the complementary modulus r' = √(1-r²). This is
/// the form every internal caller uses: r itself never enters, so a radius
/// within one ulp of 1 still yields full accuracy as long as r' is known.
pub(crate) fn complete_k_with_complement(rp: f64) -> f64 {
    if rp < KP_ASYMPTOTIC {
        return (4.0 / rp).ln();
    }
    FRAC_PI_2 / agm_unchecked(1.0, rp)
}

/// Complete elliptic integral of the second kind, E(r) for 0 <= r <= 1.
///
/// Strictly decreasing, E(0) = π/2, E(1) = 1. Evaluated from the AGM
/// iteration with the c-sum E = K·(1 - Σ 2^{j-1} c_j²).
pub fn complete_e(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!(
            "complete_e requires 0 <= r <= 1, got {r}"
        )));
    }
    if r == 0.0 {
        return Ok(FRAC_PI_2);
    }
    if r == 1.0 {
        return Ok(1.0);
    }
    let mut a = 1.0_f64;
    let mut b = ((1.0 - r) * (1.0 + r)).sqrt();
    let mut sum = r * r; // c0² with c0 = r
    let mut pow2 = 1.0;
    for _ in 0..AGM_MAX_ITER {
        let c = 0.5 * (a - b);
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        pow2 *= 2.0;
        sum += pow2 * c * c;
        if c.abs() <= f64::EPSILON * a {
            break;
        }
    }
    let k = FRAC_PI_2 / a;
    Ok(k * (1.0 - 0.5 * sum))
}

/// K(r) by adaptive Simpson quadrature of ∫₀^{π/2} dθ / √(1-r²sin²θ)
/// (the defining integral after x = sin θ, which removes the endpoint
/// singularity). Independent of the AGM path; used to cross-validate it.
pub fn quadrature_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(format!(
            "quadrature_k requires 0 <= r < 1, got {r}"
        )));
    }
    let r2 = r * r;
    let f = |theta: f64| {
        let s = theta.sin();
        1.0 / (1.0 - r2 * s * s).sqrt()
    };
    Ok(adaptive_simpson(&f, 0.0, FRAC_PI_2, 1e-14, 52))
}

/// E(r) by the same adaptive quadrature; test oracle for `complete_e`.
pub fn quadrature_e(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!(
            "quadrature_e requires 0 <= r <= 1, got {r}"
        )));
    }
    let r2 = r * r;
    let f = |theta: f64| {
        let s = theta.sin();
        (1.0 - r2 * s * s).sqrt()
    };
    Ok(adaptive_simpson(&f, 0.0, FRAC_PI_2, 1e-14, 52))
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    adaptive_step(f, a, m, b, fa, fm, fb, whole, rel_tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    rel_tol: f64,
    depth: u32,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let refined = left + right;
    let err = refined - whole;
    if depth == 0 || err.abs() <= 15.0 * rel_tol * refined.abs() {
        // Richardson extrapolation term for the final estimate
        return refined + err / 15.0;
    }
    adaptive_step(f, a, lm, m, fa, flm, fm, left, rel_tol, depth - 1)
        + adaptive_step(f, m, rm, b, fm, frm, fb, right, rel_tol, depth - 1)
}

#[cfg(test)]
// frozen reference values keep their full oracle digits
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn agm_fixed_points() {
        assert_eq!(agm(1.0, 1.0).unwrap(), 1.0);
        assert!((agm(3.7, 3.7).unwrap() - 3.7).abs() < 1e-15);
    }

    #[test]
    fn agm_is_symmetric() {
        let x = agm(1.0, 0.2).unwrap();
        let y = agm(0.2, 1.0).unwrap();
        assert!((x - y).abs() <= 1e-15 * x);
    }

    #[test]
    fn agm_rejects_nonpositive() {
        assert!(agm(0.0, 1.0).is_err());
        assert!(agm(1.0, -2.0).is_err());
    }

    #[test]
    fn agm_matches_k_at_symmetric_point() {
        // agm(1, sqrt(1-0.5)) = pi / (2 K(1/sqrt2)); reference value from
        // 50-digit evaluation of the defining integral.
        let got = agm(1.0, (0.5_f64).sqrt()).unwrap();
        assert!((got - 0.847_213_084_793_979_1).abs() < 1e-15);
    }

    #[test]
    fn k_at_zero_is_half_pi() {
        assert!((complete_k(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((quadrature_k(0.0).unwrap() - FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn k_at_symmetric_point() {
        // (4/pi) K(1/sqrt2)^2 = 4.376879... as stated alongside the eta
        // window; equivalently K(1/sqrt2) = sqrt(4.376879 pi / 4).
        let k = complete_k(SQRT_HALF).unwrap();
        assert!((k - 1.854_074_677_301_371_9).abs() < 2e-15);
        let b = 4.0 / PI * k * k;
        assert!((b - 4.376_879_230_452_953_3).abs() < 1e-12);
    }

    #[test]
    fn k_frozen_reference_values() {
        // 50-digit quadrature of the defining integral.
        let cases = [
            (0.3, 1.608_048_619_930_512_8),
            (0.123, 1.576_788_568_132_225_9),
            (SQRT_HALF, 1.854_074_677_301_371_9),
        ];
        for (r, want) in cases {
            let got = complete_k(r).unwrap();
            assert!(
                (got - want).abs() < 1e-14 * want,
                "K({r}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn e_endpoints_and_frozen_values() {
        assert!((complete_e(0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(complete_e(1.0).unwrap(), 1.0);
        let cases = [(0.6, 1.418_083_394_448_724_2), (0.3, 1.534_833_464_923_249)];
        for (r, want) in cases {
            let got = complete_e(r).unwrap();
            assert!(
                (got - want).abs() < 1e-14 * want,
                "E({r}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn quadrature_agrees_with_agm() {
        // the point of the oracle: two independent routes to K
        for i in 1..=60 {
            let r = i as f64 / 61.0;
            let ka = complete_k(r).unwrap();
            let kq = quadrature_k(r).unwrap();
            assert!(
                (ka - kq).abs() < 1e-11 * ka,
                "K mismatch at r={r}: agm {ka} vs quadrature {kq}"
            );
        }
        let r = 0.123;
        let ka = complete_k(r).unwrap();
        let kq = quadrature_k(r).unwrap();
        assert!((ka - kq).abs() < 1e-11 * ka);
    }

    #[test]
    fn quadrature_e_agrees_with_agm() {
        for r in [0.05, 0.3, 0.6, 0.9, 0.99] {
            let ea = complete_e(r).unwrap();
            let eq = quadrature_e(r).unwrap();
            assert!((ea - eq).abs() < 1e-12 * ea, "E mismatch at r={r}");
        }
    }

    #[test]
    fn agm_identity_for_k() {
        // K(r) = pi / (2 agm(1, r')) is the evaluation route; check it
        // against the quadrature oracle rather than itself.
        for r in [0.1_f64, 0.5, 0.8, 0.95] {
            let rp = (1.0 - r * r).sqrt();
            let via_agm = FRAC_PI_2 / agm(1.0, rp).unwrap();
            let via_quad = quadrature_k(r).unwrap();
            assert!((via_agm - via_quad).abs() < 1e-12 * via_quad);
        }
    }

    #[test]
    fn legendre_relation() {
        // E(r) K(r') + E(r') K(r) - K(r) K(r') = pi/2 on a 50-point grid
        for i in 1..=50 {
            let r = 0.01 + (0.99 - 0.01) * (i as f64 - 1.0) / 49.0;
            let u = UnitRadius::new(r).unwrap();
            let rp = u.complement_value();
            let k = complete_k(r).unwrap();
            let kp = complete_k(rp).unwrap();
            let e = complete_e(r).unwrap();
            let ep = complete_e(rp).unwrap();
            let residual = e * kp + ep * k - k * kp - FRAC_PI_2;
            assert!(
                residual.abs() < 1e-11,
                "Legendre residual {residual} at r={r}"
            );
        }
    }

    #[test]
    fn monotonicity() {
        let mut prev_k = complete_k(0.0).unwrap();
        let mut prev_e = complete_e(0.0).unwrap();
        for i in 1..200 {
            let r = i as f64 / 200.0;
            let k = complete_k(r).unwrap();
            let e = complete_e(r).unwrap();
            assert!(k > prev_k, "K not increasing at r={r}");
            assert!(e < prev_e, "E not decreasing at r={r}");
            prev_k = k;
            prev_e = e;
        }
    }

    #[test]
    fn k_blows_up_toward_one() {
        assert!(complete_k(1.0 - 1e-12).unwrap() > 14.0);
        assert!(complete_k_with_complement(1e-12) > 28.0);
    }

    #[test]
    fn domain_errors() {
        assert!(complete_k(1.0).is_err());
        assert!(complete_k(-0.1).is_err());
        assert!(complete_e(1.0 + 1e-9).is_err());
        assert!(quadrature_k(1.0).is_err());
    }

    #[test]
    fn unit_radius_construction_and_complement() {
        let u = UnitRadius::new(0.6).unwrap();
        assert_eq!(u.value(), 0.6);
        assert!((u.complement_value() - 0.8).abs() < 1e-15);
        let c = u.complement();
        assert!((c.value() - 0.8).abs() < 1e-15);
        assert_eq!(c.complement_value(), 0.6);
        // double complement is the identity, bit for bit
        assert_eq!(c.complement(), u);

        assert!(UnitRadius::new(0.0).is_err());
        assert!(UnitRadius::new(1.0).is_err());
        assert!(UnitRadius::new(f64::NAN).is_err());
        assert!(UnitRadius::new(-0.3).is_err());
    }
}
