//! The quantitative displacement bounds: the Krzyz constant c1 and its
//! elementary sandwich, the hyperbolic bound ρ(f(x), x) <= log((1-a)/a) with
//! a = phi_{1/K,n}(1/√2)², its linearizations (9/2)(K-1) on K ∈ [1,17] and
//! (b/2)(K-1) in the plane, the image-modulus sandwich for maps with
//! B^n(m) ⊂ f(B^n) ⊂ B^n(M), and the averaging comparison for phi_K.
//!
//! Validity windows are data: every bound carries the K-range it is proven
//! on, and checks outside that range report "not applicable" instead of
//! failing. K = 1 short-circuits to the degenerate value everywhere, keeping
//! the mu-machinery away from its asymptote.

use crate::capacity::{a_lower_bound, eta_kn, planar_a, Dimension, Enclosure, Rigor};
use crate::elliptic::{complete_k, UnitRadius};
use crate::error::{Error, Result};
use crate::grotzsch::{mu_inv, phi_k_radius, ModulusValue};
use crate::report::CheckReport;
use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

/// Maximal dilatation K >= 1, the universal parameter of every bound.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DilatationK(f64);

impl DilatationK {
    pub fn new(k: f64) -> Result<Self> {
        if !(k >= 1.0 && k.is_finite()) {
            return Err(Error::domain(format!(
                "dilatation requires K >= 1, got {k}"
            )));
        }
        Ok(DilatationK(k))
    }

    pub const ONE: DilatationK = DilatationK(1.0);

    pub fn get(&self) -> f64 {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0 == 1.0
    }
}

/// The K-interval a bound is proven on; `max` may be +∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KRange {
    pub min: f64,
    pub max: f64,
}

impl KRange {
    pub const ALL: KRange = KRange {
        min: 1.0,
        max: f64::INFINITY,
    };

    pub const UP_TO_17: KRange = KRange {
        min: 1.0,
        max: 17.0,
    };

    pub fn contains(&self, k: f64) -> bool {
        self.min <= k && k <= self.max
    }
}

impl std::fmt::Display for KRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.max.is_infinite() {
            write!(f, "K >= {}", self.min)
        } else {
            write!(f, "K in [{}, {}]", self.min, self.max)
        }
    }
}

/// b = (4/π) K(1/√2)² = 4.376879..., the tangent slope of log λ(K) at K = 1.
pub fn planar_b() -> f64 {
    let k = complete_k(FRAC_1_SQRT_2).expect("1/sqrt2 inside domain");
    4.0 / std::f64::consts::PI * k * k
}

/// The sharp Krzyz constant c1 = mu⁻¹(log((√K+1)/(√K-1))) bounding |f(0)|
/// for planar maps with identity boundary values; c1(1) = 0 by continuity.
///
/// Satisfies the elementary sandwich (K-1)/(K+1) < c1 < 2(K-1)/(√K+1) for
/// K > 1.
pub fn krzyz_c1(k: DilatationK) -> f64 {
    if k.is_identity() {
        return 0.0;
    }
    let s = k.get().sqrt();
    let y = ((s + 1.0) / (s - 1.0)).ln();
    mu_inv(ModulusValue::new(y).expect("y > 0 for K > 1")).value()
}

/// The elementary sandwich around c1: ((K-1)/(K+1), 2(K-1)/(√K+1)).
pub fn krzyz_c1_sandwich(k: DilatationK) -> (f64, f64) {
    let kv = k.get();
    (
        (kv - 1.0) / (kv + 1.0),
        2.0 * (kv - 1.0) / (kv.sqrt() + 1.0),
    )
}

/// The hyperbolic displacement bound: for f in Id_K(∂B^n),
/// ρ(f(x), x) <= log((1-a)/a) = log eta_{K,n}(1), a = phi_{1/K,n}(1/√2)².
///
/// Exact for n = 2; for n >= 3 a bound-only enclosure [0, upper] whose
/// upper end comes from the certified lower bound on a. Zero at K = 1.
pub fn hyperbolic_displacement_bound(k: DilatationK, n: Dimension) -> Enclosure {
    if k.is_identity() {
        return Enclosure::exact(0.0);
    }
    if n.is_planar() {
        // log((1-a)/a) = 2(log v' - log v), v = phi_{1/K}(1/√2) = mu⁻¹(y),
        // y = (π/2)K; the complement carries 1-a accurately for any K.
        // Once 4 e^{-y} underflows, switch to the exact asymptote
        // 2(y - log 4) + O(e^{-2y}).
        let y = std::f64::consts::FRAC_PI_2 * k.get();
        if y > 600.0 {
            return Enclosure::exact(2.0 * (y - (4.0_f64).ln()));
        }
        let half = UnitRadius::new(FRAC_1_SQRT_2).expect("1/sqrt2 valid");
        let v = phi_k_radius(1.0 / k.get(), half);
        return Enclosure::exact(2.0 * (v.complement_value().ln() - v.value().ln()));
    }
    let a_lo = a_lower_bound(k.get(), n);
    Enclosure::bounds(0.0, ((1.0 - a_lo) / a_lo).ln())
}

/// Euclidean displacement bound for f in Id_K(∂B^n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Hyperbolic,
    Euclidean,
}

/// A proven displacement bound together with its provenance: the best
/// applicable linearized value, the K-range it holds on, the two linear
/// forms it was chosen from, and the sharper tanh chain value it came from.
#[derive(Debug, Clone)]
pub struct DisplacementBound {
    pub kind: BoundKind,
    /// Best applicable linearized bound.
    pub value: f64,
    pub rigor: Rigor,
    pub validity: KRange,
    /// 2 tanh(hyperbolic_displacement_bound / 4); certified and <= the linearized value.
    pub chain_tanh: f64,
    /// (9/2)(K-1), any dimension, K ∈ [1, 17].
    pub linearized_any_dim: Option<f64>,
    /// (b/2)(K-1), n = 2 only, all K >= 1.
    pub linearized_planar: Option<f64>,
}

/// The linearized Euclidean bounds |f(x) - x| <= (9/2)(K-1) (any n, K ∈
/// [1,17]) and |f(x) - x| <= (b/2)(K-1) (n = 2). Returns the sharper
/// applicable one; errors with `NotApplicable` for K > 17 in dimension
/// n >= 3, where nothing is proven.
pub fn euclidean_displacement_bound(k: DilatationK, n: Dimension) -> Result<DisplacementBound> {
    let kv = k.get();
    let any_dim = if KRange::UP_TO_17.contains(kv) {
        Some(4.5 * (kv - 1.0))
    } else {
        None
    };
    let planar = if n.is_planar() {
        Some(0.5 * planar_b() * (kv - 1.0))
    } else {
        None
    };
    let main = hyperbolic_displacement_bound(k, n);
    let chain_tanh = 2.0 * (main.upper() / 4.0).tanh();
    let (value, validity) = match (planar, any_dim) {
        (Some(p), Some(a)) => (p.min(a), KRange::ALL),
        (Some(p), None) => (p, KRange::ALL),
        (None, Some(a)) => (a, KRange::UP_TO_17),
        (None, None) => {
            return Err(Error::not_applicable(format!(
                "no Euclidean displacement bound is proven for K = {kv} > 17 in dimension {}",
                n.get()
            )))
        }
    };
    Ok(DisplacementBound {
        kind: BoundKind::Euclidean,
        value,
        rigor: if n.is_planar() {
            Rigor::Exact
        } else {
            Rigor::BoundOnly
        },
        validity,
        chain_tanh,
        linearized_any_dim: any_dim,
        linearized_planar: planar,
    })
}

/// The chain behind the linearized bounds, reported link by link:
///
///   log((1-a)/a) <= log(λ^{2(β-1)} 2^β - 1) <= V(n)(β-1)        (λ-chain)
///   log((1-a)/a) <= (4 + 6 log2)(K-1) < 9(K-1),   K ∈ [1, 17]   (window)
///   log((1-a)/a) <= b(K-1),                        n = 2         (planar)
///
/// with β = K^{1/(n-1)}, V(n) = 2 log(2λ²) (2λ²)^{M-1} for any M >= β
/// (`m_cap` overrides the default M = β), and λ the exactly known 4 for
/// n = 2 or the certified interval end 2e^{n-1} otherwise. Checks outside
/// their validity window come back "not applicable" rather than failed.
pub fn displacement_log_chains(
    k: DilatationK,
    n: Dimension,
    m_cap: Option<f64>,
) -> Result<Vec<CheckReport>> {
    let kv = k.get();
    let beta = kv.powf(1.0 / (n.get() as f64 - 1.0));
    let m_cap = match m_cap {
        Some(m) if !(m >= beta) => {
            return Err(Error::usage(format!(
                "V(n) cap must satisfy M >= beta = {beta}, got {m}"
            )))
        }
        Some(m) => m,
        None => beta,
    };
    let lambda = if n.is_planar() {
        4.0
    } else {
        crate::capacity::GrotzschConstantInterval::new(n).upper()
    };
    let lhs = hyperbolic_displacement_bound(k, n).upper();
    let nf = n.get() as f64;
    let mut reports = Vec::new();

    // λ-chain, both links
    let two_l2 = 2.0 * lambda * lambda;
    let mid = (lambda.powf(2.0 * (beta - 1.0)) * (2.0_f64).powf(beta) - 1.0).ln();
    let v_n = 2.0 * two_l2.ln() * two_l2.powf(m_cap - 1.0);
    reports.push(CheckReport::asserted(
        "logbound.lambda_chain.first",
        &[("K", kv), ("n", nf), ("beta", beta), ("lambda", lambda)],
        lhs,
        mid,
        "log((1-a)/a) <= log(lambda^{2(beta-1)} 2^beta - 1)",
    ));
    reports.push(CheckReport::asserted(
        "logbound.lambda_chain.second",
        &[("K", kv), ("n", nf), ("M", m_cap), ("V", v_n)],
        mid,
        v_n * (beta - 1.0),
        "log(lambda^{2(beta-1)} 2^beta - 1) <= V(n)(beta-1)",
    ));

    // K ∈ [1,17] window
    if KRange::UP_TO_17.contains(kv) {
        let lin = (4.0 + 6.0 * LN_2) * (kv - 1.0);
        reports.push(CheckReport::asserted(
            "logbound.window17.first",
            &[("K", kv), ("n", nf)],
            lhs,
            lin,
            "log((1-a)/a) <= (4 + 6 log2)(K-1) on K in [1,17]; equality only at K=1",
        ));
        reports.push(CheckReport::asserted(
            "logbound.window17.second",
            &[("K", kv)],
            lin,
            9.0 * (kv - 1.0),
            "(4 + 6 log2)(K-1) < 9(K-1)",
        ));
    } else {
        reports.push(CheckReport::not_applicable(
            "logbound.window17.first",
            &[("K", kv), ("n", nf)],
            "proven only for K in [1,17]",
        ));
    }

    // planar b-bound
    if n.is_planar() {
        reports.push(CheckReport::asserted(
            "logbound.planar_b",
            &[("K", kv)],
            lhs,
            planar_b() * (kv - 1.0),
            "log eta_{K,2}(1) <= b(K-1), b = (4/pi) K(1/sqrt2)^2",
        ));
    } else {
        reports.push(CheckReport::not_applicable(
            "logbound.planar_b",
            &[("K", kv), ("n", nf)],
            "planar bound, n = 2 only",
        ));
    }
    Ok(reports)
}

/// The interval of |f(x)| values compatible with the image-modulus sandwich
///
///   eta_{1/K,n}(T) <= (M + |f(x)|)/(m - |f(x)|),
///   (m + |f(x)|)/(M - |f(x)|) <= eta_{K,n}(T),      T = (1+|x|)/(1-|x|),
///
/// for K-qc maps of the Mobius space with f(∞) = ∞ and
/// B^n(m) ⊂ f(B^n) ⊂ B^n(M). Solving each side for |f(x)| gives a lower and
/// an upper constraint, returned as enclosures (exact for n = 2). For
/// m = M = 1 and K = 1 both collapse to |x|.
pub fn sandwich_eta(
    k: DilatationK,
    n: Dimension,
    x_norm: f64,
    m_inner: f64,
    m_outer: f64,
) -> Result<(Enclosure, Enclosure)> {
    if !(0.0..1.0).contains(&x_norm) {
        return Err(Error::domain(format!(
            "sandwich_eta requires 0 <= |x| < 1, got {x_norm}"
        )));
    }
    if m_inner > m_outer {
        return Err(Error::usage(format!(
            "inner radius m = {m_inner} exceeds outer radius M = {m_outer}"
        )));
    }
    if !(m_inner > 0.0 && m_inner <= 1.0 && m_outer >= 1.0 && m_outer.is_finite()) {
        return Err(Error::domain(format!(
            "sandwich_eta requires 0 < m <= 1 <= M, got m = {m_inner}, M = {m_outer}"
        )));
    }
    if x_norm == 0.0 && k.is_identity() && m_inner == 1.0 && m_outer == 1.0 {
        return Ok((Enclosure::exact(0.0), Enclosure::exact(0.0)));
    }
    let t = (1.0 + x_norm) / (1.0 - x_norm);
    // upper constraint from (m+|f|)/(M-|f|) <= eta_K: increasing in eta
    let upper_of = |eta: f64| ((eta * m_outer - m_inner) / (1.0 + eta)).max(0.0);
    // lower constraint from eta_{1/K} <= (M+|f|)/(m-|f|): increasing in eta
    let lower_of = |eta: f64| ((eta * m_inner - m_outer) / (1.0 + eta)).max(0.0);

    let eta_super = eta_kn(k.get(), n, t)?;
    let eta_sub = eta_kn(1.0 / k.get(), n, t)?;

    let upper = match eta_super.rigor() {
        Rigor::Exact => Enclosure::exact(upper_of(eta_super.lower())),
        Rigor::BoundOnly => {
            Enclosure::bounds(upper_of(eta_super.lower()), upper_of(eta_super.upper()))
        }
    };
    let lower = match eta_sub.rigor() {
        Rigor::Exact => Enclosure::exact(lower_of(eta_sub.lower())),
        Rigor::BoundOnly => Enclosure::bounds(lower_of(eta_sub.lower()), lower_of(eta_sub.upper())),
    };
    Ok((lower, upper))
}

/// Planar bound without any f(0) = 0 normalization: for n = 2 and maps as
/// in the sandwich with m = M = 1,
/// |f(x)| <= 2 phi_{K,2}(√((1+|x|)/2))² - 1. Equals |x| at K = 1 and is
/// increasing in both K and |x|.
pub fn image_radius_bound(k: DilatationK, x_norm: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x_norm) {
        return Err(Error::domain(format!(
            "image_radius_bound requires 0 <= |x| < 1, got {x_norm}"
        )));
    }
    if k.is_identity() {
        return Ok(x_norm);
    }
    let arg = ((1.0 + x_norm) / 2.0).sqrt();
    let w = phi_k_radius(k.get(), UnitRadius::new(arg)?);
    // 2w² - 1 = 1 - 2(w')², stable when w is near 1
    let c = w.complement_value();
    Ok(1.0 - 2.0 * c * c)
}

/// The planar |f(0)| chain: 1 - 2a <= 1 - 2^{3(1-K)} K^{-2K}
/// <= (2 + 3 log2)(K-1), reported with the smaller of the two link margins.
/// All three members vanish at K = 1.
pub fn origin_bound_chain(k: DilatationK) -> CheckReport {
    let kv = k.get();
    if k.is_identity() {
        return CheckReport::asserted(
            "origin_chain.planar",
            &[("K", 1.0)],
            0.0,
            0.0,
            "all chain members vanish at K = 1",
        );
    }
    let m1 = 1.0 - 2.0 * planar_a(kv);
    let m2 = 1.0 - (2.0_f64).powf(3.0 * (1.0 - kv)) * kv.powf(-2.0 * kv);
    let m3 = (2.0 + 3.0 * LN_2) * (kv - 1.0);
    let first = m2 - m1;
    let second = m3 - m2;
    let (lhs, rhs) = if first <= second { (m1, m2) } else { (m2, m3) };
    CheckReport::asserted(
        "origin_chain.planar",
        &[("K", kv), ("m1", m1), ("m2", m2), ("m3", m3)],
        lhs,
        rhs,
        "1-2a <= 1 - 2^{3(1-K)}K^{-2K} <= (2+3 log2)(K-1); margin is the tighter link",
    )
}

/// Scan of the averaging comparison A(phi_K(t), phi_K(r)) <= phi_K(A(t, r)),
/// A(r, s) = √((r+s)/2). The t = 1 slice is a proven inequality and is
/// asserted; interior (t, r) pairs are conjectured only and recorded without
/// a verdict.
pub fn averaging_conjecture_scan(
    k_grid: &[f64],
    t_grid: &[f64],
    r_grid: &[f64],
) -> Result<Vec<CheckReport>> {
    let mean = |a: f64, b: f64| ((a + b) / 2.0).sqrt();
    let mut out = Vec::new();
    for &kv in k_grid {
        let k = DilatationK::new(kv)?;
        for &r in r_grid {
            if !(0.0 < r && r < 1.0) {
                return Err(Error::domain(format!(
                    "scan grid radius must lie in (0,1), got {r}"
                )));
            }
            // proven slice: A(phi_K(1), phi_K(r)) <= phi_K(A(1, r))
            let lhs = mean(1.0, crate::grotzsch::phi_k(k.get(), r)?);
            let rhs = crate::grotzsch::phi_k(k.get(), mean(1.0, r))?;
            out.push(CheckReport::asserted(
                "phi.averaging.t1",
                &[("K", kv), ("r", r)],
                lhs,
                rhs,
                "t = 1 slice, equivalent to the proven planar comparison",
            ));
            for &t in t_grid {
                if !(0.0 < t && t < 1.0) {
                    return Err(Error::domain(format!(
                        "scan grid t must lie in (0,1), got {t}"
                    )));
                }
                let lhs = mean(
                    crate::grotzsch::phi_k(k.get(), t)?,
                    crate::grotzsch::phi_k(k.get(), r)?,
                );
                let rhs = crate::grotzsch::phi_k(k.get(), mean(t, r))?;
                out.push(CheckReport::exploratory(
                    "phi.averaging.general",
                    &[("K", kv), ("t", t), ("r", r)],
                    lhs,
                    rhs,
                    "conjectured for general (t, r); margin recorded, not asserted",
                ));
            }
        }
    }
    Ok(out)
}

/// log eta_{K,2}(1) as a plain value, the planar main bound.
pub fn planar_main_bound_log(k: DilatationK) -> f64 {
    hyperbolic_displacement_bound(k, Dimension::PLANE)
        .value()
        .expect("planar bound is exact")
}

#[cfg(test)]
// frozen reference values keep their full oracle digits
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::capacity::lambda_k;
    use std::f64::consts::PI;

    fn dk(k: f64) -> DilatationK {
        DilatationK::new(k).unwrap()
    }

    #[test]
    fn dilatation_validation() {
        assert!(DilatationK::new(0.99).is_err());
        assert!(DilatationK::new(f64::NAN).is_err());
        assert!(DilatationK::new(1.0).unwrap().is_identity());
    }

    #[test]
    fn b_constant_matches_stated_value() {
        assert!((planar_b() - 4.376_879).abs() < 5e-6);
        assert!((planar_b() - 4.376_879_230_452_953_3).abs() < 1e-12);
    }

    #[test]
    fn c1_degenerate_and_frozen() {
        assert_eq!(krzyz_c1(DilatationK::ONE), 0.0);
        // c1(4) = mu_inv(log 3), 50-digit reference
        let c = krzyz_c1(dk(4.0));
        assert!((c - 0.914_283_868_616_688_8).abs() < 1e-12, "c1(4) = {c}");
        assert!(c < 1.0);
        // its own sandwich at K = 4: (0.6, 2)
        let (lo, hi) = krzyz_c1_sandwich(dk(4.0));
        assert!((lo - 0.6).abs() < 1e-15);
        assert!(lo < c && c < hi);
    }

    #[test]
    fn c1_sandwich_across_log_grid() {
        let grid = crate::report::GridSpec::new("K", 1.001, 100.0, 40, crate::report::Spacing::Log)
            .unwrap();
        for kv in grid.points() {
            let k = dk(kv);
            let c = krzyz_c1(k);
            let (lo, hi) = krzyz_c1_sandwich(k);
            assert!(lo < c, "lower sandwich fails at K={kv}: {lo} !< {c}");
            assert!(c < hi, "upper sandwich fails at K={kv}: {c} !< {hi}");
            assert!(c < 1.0);
        }
    }

    #[test]
    fn c1_is_increasing() {
        let mut prev = 0.0;
        for kv in [1.1, 1.5, 2.0, 4.0, 10.0, 50.0] {
            let c = krzyz_c1(dk(kv));
            assert!(c > prev);
            prev = c;
        }
    }

    #[test]
    fn main_bound_degenerate_and_planar_values() {
        assert_eq!(
            hyperbolic_displacement_bound(DilatationK::ONE, Dimension::PLANE).value(),
            Some(0.0)
        );
        assert_eq!(
            hyperbolic_displacement_bound(DilatationK::ONE, Dimension::new(3).unwrap()).value(),
            Some(0.0)
        );
        // log eta_{1.5,2}(1), 50-digit reference; inside (pi/2, b/2)
        let v = planar_main_bound_log(dk(1.5));
        assert!((v - 1.866_957_763_349_793_2).abs() < 1e-10, "bound = {v}");
        assert!(PI * 0.5 < v && v < planar_b() * 0.5);
        // coherence with the eta route
        let eta = lambda_k(1.5).unwrap();
        assert!((v - eta.ln()).abs() < 1e-12);
    }

    #[test]
    fn main_bound_n3_certified_upper() {
        let e = hyperbolic_displacement_bound(dk(2.0), Dimension::new(3).unwrap());
        assert_eq!(e.rigor(), Rigor::BoundOnly);
        assert_eq!(e.lower(), 0.0);
        // frozen certified value; also below the K-only chain cap log 255
        assert!((e.upper() - 3.170_196_857_22).abs() < 1e-9);
        assert!(e.upper() <= 255.0_f64.ln());
    }

    #[test]
    fn main_bound_planar_large_k_stays_in_window() {
        // the asymptotic branches must keep log eta between pi(K-1) and
        // b(K-1) across the whole representable K range, including where
        // mu_inv itself underflows (K beyond ~450)
        for kv in [100.0, 380.0, 1000.0, 1e5] {
            let v = planar_main_bound_log(dk(kv));
            assert!(
                PI * (kv - 1.0) < v && v < planar_b() * (kv - 1.0),
                "log eta = {v} out of window at K={kv}"
            );
        }
        // continuity across the asymptote handoff at y = 600 (K ~ 381.97)
        let below = planar_main_bound_log(dk(381.0));
        let above = planar_main_bound_log(dk(383.0));
        let slope = (above - below) / 2.0;
        assert!((slope - PI).abs() < 1e-3, "slope {slope} near the handoff");
    }

    #[test]
    fn mycor_values_and_validity() {
        let b0 = euclidean_displacement_bound(DilatationK::ONE, Dimension::PLANE).unwrap();
        assert_eq!(b0.value, 0.0);

        // n = 3, K = 1.1: (9/2)(K-1) = 0.45
        let b3 = euclidean_displacement_bound(dk(1.1), Dimension::new(3).unwrap()).unwrap();
        assert!((b3.value - 0.45).abs() < 1e-12);
        assert_eq!(b3.validity, KRange::UP_TO_17);
        assert_eq!(b3.linearized_planar, None);
        assert_eq!(b3.rigor, Rigor::BoundOnly);

        // n = 2, K = 1.1: (b/2)(K-1) = 0.2188... <= 0.219, sharper than 0.45
        let b2 = euclidean_displacement_bound(dk(1.1), Dimension::PLANE).unwrap();
        assert!(b2.value <= 0.219);
        assert!((b2.value - 0.218_843_961_522_647_7).abs() < 1e-10);
        assert!(b2.value < b3.value);
        assert_eq!(b2.validity, KRange::ALL);

        // chain value is the sharper certified form
        assert!(b2.chain_tanh <= b2.value + 1e-12);
        assert!(b3.chain_tanh <= b3.value + 1e-12);

        // K > 17: planar bound still stands, n >= 3 has nothing
        assert!(euclidean_displacement_bound(dk(20.0), Dimension::PLANE).is_ok());
        let err = euclidean_displacement_bound(dk(20.0), Dimension::new(3).unwrap());
        assert!(matches!(err, Err(Error::NotApplicable(_))));
    }

    #[test]
    fn chain_coherence_on_validity_window() {
        // 2 tanh(main/4) <= (9/2)(K-1) across K in [1, 17]
        for i in 0..=100 {
            let kv = 1.0 + 16.0 * i as f64 / 100.0;
            let k = dk(kv);
            let chain =
                2.0 * (hyperbolic_displacement_bound(k, Dimension::PLANE).upper() / 4.0).tanh();
            assert!(
                chain <= 4.5 * (kv - 1.0) + 1e-12,
                "chain exceeds linearized bound at K={kv}"
            );
        }
    }

    #[test]
    fn stretch_delta_below_upper_bound() {
        // lower bound of the problem stays below the proven upper bound
        for kv in [1.01, 1.1, 2.0, 5.0, 17.0] {
            let f = crate::ball::RadialStretching::from_dilatation(Dimension::PLANE, kv).unwrap();
            assert!(f.delta() <= 4.5 * (kv - 1.0) + 1e-12, "K={kv}");
        }
    }

    #[test]
    fn log_chain_reports() {
        for (kv, n) in [(1.0, 2), (1.5, 2), (17.0, 2), (2.0, 3), (1.2, 4)] {
            let reports =
                displacement_log_chains(dk(kv), Dimension::new(n).unwrap(), None).unwrap();
            for r in &reports {
                assert!(!r.is_failure(), "chain link failed: {r:?}");
            }
        }
        // outside the window: marked not-applicable, not failed
        let reports = displacement_log_chains(dk(18.0), Dimension::new(3).unwrap(), None).unwrap();
        let w17 = reports
            .iter()
            .find(|r| r.check_id == "logbound.window17.first")
            .unwrap();
        assert_eq!(w17.pass, None);
        assert!(w17.validity_note.contains("[1,17]"));
        // bad V(n) cap
        assert!(displacement_log_chains(dk(4.0), Dimension::PLANE, Some(1.0)).is_err());
    }

    #[test]
    fn log_chain_17_frozen_value() {
        // at K = 17 the window bound evaluates to 16(4 + 6 log2) ~ 130.5
        let lin = (4.0 + 6.0 * LN_2) * 16.0;
        assert!((lin - 130.542_129_333_754_75).abs() < 1e-10);
        let reports = displacement_log_chains(dk(17.0), Dimension::new(3).unwrap(), None).unwrap();
        let first = reports
            .iter()
            .find(|r| r.check_id == "logbound.window17.first")
            .unwrap();
        assert_eq!(first.pass, Some(true));
        assert!((first.rhs - lin).abs() < 1e-10);
    }

    #[test]
    fn sandwich_degenerate_point() {
        let (lo, hi) = sandwich_eta(DilatationK::ONE, Dimension::PLANE, 0.3, 1.0, 1.0).unwrap();
        assert!((lo.value().unwrap() - 0.3).abs() < 1e-14);
        assert!((hi.value().unwrap() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn sandwich_planar_origin_matches_remark() {
        // n = 2, K = 2, x = 0: |f(0)| <= (eta-1)/(eta+1) = 1 - 2a
        let (lo, hi) = sandwich_eta(dk(2.0), Dimension::PLANE, 0.0, 1.0, 1.0).unwrap();
        let eta = lambda_k(2.0).unwrap();
        let want = (eta - 1.0) / (eta + 1.0);
        assert!((hi.value().unwrap() - want).abs() < 1e-12);
        assert!((want - 0.941_125_496_954_281_2).abs() < 1e-11);
        let one_minus_2a = 1.0 - 2.0 * planar_a(2.0);
        assert!((hi.value().unwrap() - one_minus_2a).abs() < 1e-10);
        assert_eq!(lo.value().unwrap(), 0.0); // eta_{1/K} side is vacuous at x = 0
    }

    #[test]
    fn sandwich_constraints_bracket_true_values() {
        // for the identity-boundary radial stretch (m = M = 1 applies),
        // |f(x)| must respect both constraints
        let k = dk(2.0);
        let f = crate::ball::RadialStretching::from_dilatation(Dimension::PLANE, 2.0).unwrap();
        for x_norm in [0.1_f64, 0.4, 0.75] {
            let fx_norm = x_norm.powf(f.alpha());
            let (lo, hi) = sandwich_eta(k, Dimension::PLANE, x_norm, 1.0, 1.0).unwrap();
            assert!(
                lo.value().unwrap() <= fx_norm + 1e-12,
                "lower constraint violated at |x|={x_norm}"
            );
            assert!(
                fx_norm <= hi.value().unwrap() + 1e-12,
                "upper constraint violated at |x|={x_norm}"
            );
        }
    }

    #[test]
    fn sandwich_n3_is_bound_only() {
        let (lo, hi) = sandwich_eta(dk(2.0), Dimension::new(3).unwrap(), 0.2, 1.0, 1.0).unwrap();
        assert_eq!(lo.rigor(), Rigor::BoundOnly);
        assert_eq!(hi.rigor(), Rigor::BoundOnly);
        assert!(hi.upper() < 1.0);
        assert!(lo.lower() >= 0.0);
    }

    #[test]
    fn sandwich_rejects_bad_radii() {
        assert!(sandwich_eta(dk(2.0), Dimension::PLANE, 0.2, 1.5, 2.0).is_err());
        assert!(sandwich_eta(dk(2.0), Dimension::PLANE, 0.2, 0.5, 0.9).is_err());
        assert!(sandwich_eta(dk(2.0), Dimension::PLANE, 1.0, 1.0, 1.0).is_err());
        let err = sandwich_eta(dk(2.0), Dimension::PLANE, 0.2, 1.0, 0.5);
        assert!(matches!(err, Err(Error::Usage(_))));
    }

    #[test]
    fn corollary_identity_and_frozen() {
        assert_eq!(image_radius_bound(DilatationK::ONE, 0.37).unwrap(), 0.37);
        // K = 2, |x| = 0.5, 50-digit reference
        let v = image_radius_bound(dk(2.0), 0.5).unwrap();
        assert!((v - 0.989_690_447_714_256_9).abs() < 1e-11, "bound = {v}");
        // exceeds the Schwarz value phi_{2,2}(0.5)
        let schwarz = crate::grotzsch::phi_k(2.0, 0.5).unwrap();
        assert!((schwarz - 0.942_809_041_582_063_4).abs() < 1e-12);
        assert!(v > schwarz);
    }

    #[test]
    fn corollary_at_origin_matches_one_minus_2a() {
        for kv in [1.2, 2.0, 5.0] {
            let v = image_radius_bound(dk(kv), 0.0).unwrap();
            let want = 1.0 - 2.0 * planar_a(kv);
            assert!(
                (v - want).abs() < 1e-10,
                "corollary(K={kv}, 0) = {v} vs 1-2a = {want}"
            );
        }
    }

    #[test]
    fn corollary_monotone_in_k_and_x() {
        let mut prev = 0.0;
        for kv in [1.0, 1.3, 2.0, 4.0] {
            let v = image_radius_bound(dk(kv), 0.4).unwrap();
            assert!(v >= prev);
            prev = v;
        }
        let mut prev = 0.0;
        for x in [0.0, 0.2, 0.5, 0.8] {
            let v = image_radius_bound(dk(2.0), x).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn remark_chain_margins() {
        let at_one = origin_bound_chain(DilatationK::ONE);
        assert_eq!(at_one.pass, Some(true));
        assert_eq!(at_one.margin, 0.0);
        for kv in [1.01, 1.5, 2.0, 5.0, 17.0] {
            let rep = origin_bound_chain(dk(kv));
            assert_eq!(rep.pass, Some(true), "chain fails at K={kv}: {rep:?}");
        }
        // margin is O(K-1) near 1
        let rep = origin_bound_chain(dk(1.01));
        assert!(rep.margin > 0.0 && rep.margin < 0.1);
    }

    #[test]
    fn averaging_scan_asserts_only_proven_slice() {
        let reports = averaging_conjecture_scan(&[1.0, 2.0, 3.0], &[0.7], &[0.2, 0.9]).unwrap();
        for r in &reports {
            match r.check_id.as_str() {
                "phi.averaging.t1" => {
                    assert_eq!(r.pass, Some(true), "proven slice failed: {r:?}")
                }
                "phi.averaging.general" => assert_eq!(r.pass, None),
                other => panic!("unexpected check id {other}"),
            }
        }
        // K = 1 gives equality on the whole plane
        let flat = averaging_conjecture_scan(&[1.0], &[0.5], &[0.5]).unwrap();
        for r in flat {
            assert!(r.margin.abs() < 1e-12);
        }
        assert!(averaging_conjecture_scan(&[2.0], &[1.5], &[0.5]).is_err());
    }
}
