//! Hyperbolic geometry of the unit ball B^n: the metric ρ, the chord
//! estimate |x-y| <= 2 tanh(ρ/4), Mobius self-maps sending a point to the
//! origin, and the radial stretching family z ↦ |z|^{α-1} z.
//!
//! The metric is evaluated from
//! tanh²(ρ(x,y)/2) = |x-y|² / (|x-y|² + t²), t = √((1-|x|²)(1-|y|²)),
//! through artanh of the square root of that ratio, which is stable down to
//! x = y (the ratio, not 1 minus it, is formed directly).

use crate::capacity::Dimension;
use crate::error::{Error, Result};

/// A point of the open unit ball B^n ⊂ R^n, n >= 2, with its norm cached.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint {
    coords: Vec<f64>,
    norm: f64,
}

impl BallPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::domain(format!(
                "ball point needs dimension >= 2, got {}",
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("ball point coordinates must be finite"));
        }
        let norm = norm_of(&coords);
        if !(norm < 1.0) {
            return Err(Error::domain(format!(
                "ball point needs |x| < 1, got |x| = {norm}"
            )));
        }
        Ok(BallPoint { coords, norm })
    }

    pub fn origin(dim: usize) -> Self {
        BallPoint {
            coords: vec![0.0; dim.max(2)],
            norm: 0.0,
        }
    }

    /// t·e_i, the point at distance |t| along the i-th axis.
    pub fn along_axis(dim: usize, axis: usize, t: f64) -> Result<Self> {
        let mut coords = vec![0.0; dim.max(2)];
        if axis >= coords.len() {
            return Err(Error::usage(format!(
                "axis {axis} out of range for dimension {}",
                coords.len()
            )));
        }
        coords[axis] = t;
        BallPoint::new(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn negated(&self) -> Self {
        BallPoint {
            coords: self.coords.iter().map(|c| -c).collect(),
            norm: self.norm,
        }
    }

    fn check_same_dim(&self, other: &BallPoint) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::usage(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

fn norm_of(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn dist_euclid(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Hyperbolic distance ρ(x, y) in B^n.
///
/// Symmetric, zero iff x = y; along a diameter ρ(0, t e₁) = log((1+t)/(1-t)).
pub fn hyperbolic_distance(x: &BallPoint, y: &BallPoint) -> Result<f64> {
    x.check_same_dim(y)?;
    let d = dist_euclid(x.coords(), y.coords());
    if d == 0.0 {
        return Ok(0.0);
    }
    let t2 = (1.0 - x.norm() * x.norm()) * (1.0 - y.norm() * y.norm());
    let t = t2.sqrt();
    // tanh(rho/2) = d / w, w = sqrt(d² + t²), so
    // rho = 2 artanh(d/w) = log((w+d)/(w-d)). Forming w-d directly cancels
    // when d dominates t; with w-d = t²/(w+d) the whole thing collapses to
    // the log1p form below, accurate from d -> 0 up to the boundary.
    let w = (d * d + t2).sqrt();
    Ok(2.0 * (d * (w + t + d) / (t * (w + t))).ln_1p())
}

/// Both sides of the chord estimate: returns (|x-y|, 2 tanh(ρ(x,y)/4)).
///
/// The contract lhs <= rhs always holds, with equality exactly for y = -x.
pub fn chord_bound(x: &BallPoint, y: &BallPoint) -> Result<(f64, f64)> {
    x.check_same_dim(y)?;
    let d = dist_euclid(x.coords(), y.coords());
    if d == 0.0 {
        return Ok((0.0, 0.0));
    }
    let rho = hyperbolic_distance(x, y)?;
    Ok((d, 2.0 * (rho / 4.0).tanh()))
}

/// The Mobius self-map T of B^n with T(a) = 0, in the standard
/// inversion-composed form
/// T_a(x) = ((1-|a|²)(x-a) - |x-a|² a) / (1 - 2 a·x + |a|²|x|²).
///
/// Its contract is property-driven: T(a) = 0 and ρ(T(u), T(v)) = ρ(u, v);
/// the tests pin both rather than the formula.
#[derive(Debug, Clone)]
pub struct MobiusToOrigin {
    center: BallPoint,
}

/// Builds the Mobius transformation sending `x` to the origin.
pub fn mobius_to_origin(x: &BallPoint) -> MobiusToOrigin {
    MobiusToOrigin { center: x.clone() }
}

impl MobiusToOrigin {
    pub fn center(&self) -> &BallPoint {
        &self.center
    }

    pub fn apply(&self, x: &BallPoint) -> Result<BallPoint> {
        self.center.check_same_dim(x)?;
        let a = self.center.coords();
        let a_norm2 = self.center.norm() * self.center.norm();
        if a_norm2 == 0.0 {
            return Ok(x.clone()); // identity map
        }
        let xa: Vec<f64> = x.coords().iter().zip(a).map(|(xi, ai)| xi - ai).collect();
        let xa_norm2 = dot(&xa, &xa);
        let x_norm2 = x.norm() * x.norm();
        let denom = 1.0 - 2.0 * dot(a, x.coords()) + a_norm2 * x_norm2;
        let one_minus_a2 = 1.0 - a_norm2;
        let coords: Vec<f64> = xa
            .iter()
            .zip(a)
            .map(|(di, ai)| (one_minus_a2 * di - xa_norm2 * ai) / denom)
            .collect();
        BallPoint::new(coords)
    }
}

/// The radial stretching f(z) = |z|^{α-1} z on B^n, extended by the identity
/// outside. With α = K^{1/(1-n)} it is a K-quasiconformal element of
/// Id_K(∂B^n) and serves as the witness map for the displacement bounds.
#[derive(Debug, Clone, Copy)]
pub struct RadialStretching {
    dim: Dimension,
    alpha: f64,
}

impl RadialStretching {
    /// α ∈ (0, 1]; α = 1 is the identity.
    pub fn from_alpha(dim: Dimension, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!(
                "radial stretching needs alpha in (0,1], got {alpha}"
            )));
        }
        Ok(RadialStretching { dim, alpha })
    }

    /// The stretching realizing maximal dilatation K >= 1 in dimension n:
    /// α = K^{1/(1-n)}.
    pub fn from_dilatation(dim: Dimension, k: f64) -> Result<Self> {
        if !(k >= 1.0) {
            return Err(Error::domain(format!(
                "radial stretching needs K >= 1, got {k}"
            )));
        }
        let alpha = k.powf(1.0 / (1.0 - dim.get() as f64));
        Self::from_alpha(dim, alpha)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    /// K = α^{1-n} >= 1.
    pub fn dilatation(&self) -> f64 {
        self.alpha.powf(1.0 - self.dim.get() as f64)
    }

    /// Applies the map to any point of R^n: |z|^{α-1} z inside the ball,
    /// identity on |z| >= 1. Fixes the origin and every ray.
    pub fn apply(&self, z: &[f64]) -> Vec<f64> {
        let r = norm_of(z);
        if r == 0.0 || r >= 1.0 || self.alpha == 1.0 {
            return z.to_vec();
        }
        let scale = r.powf(self.alpha - 1.0);
        z.iter().map(|c| c * scale).collect()
    }

    /// sup_z |f(z) - z| = (1-α) α^{α/(1-α)}, attained at
    /// r_α = (1/α)^{1/(α-1)}; zero for the identity (α = 1).
    pub fn delta(&self) -> f64 {
        if self.alpha == 1.0 {
            return 0.0;
        }
        (1.0 - self.alpha) * self.alpha.powf(self.alpha / (1.0 - self.alpha))
    }

    /// The radius where the displacement r^α - r is maximal.
    pub fn max_displacement_radius(&self) -> f64 {
        if self.alpha == 1.0 {
            return 0.0;
        }
        (1.0 / self.alpha).powf(1.0 / (self.alpha - 1.0))
    }
}
