//! Quantitative distortion bounds for K-quasiconformal self-maps of the unit
//! ball with identity boundary values.
//!
//! The library computes the special functions these bounds are built from and
//! certifies every identity and inequality among them numerically:
//!
//! * complete elliptic integrals K(r), E(r) by AGM iteration, with an
//!   independent quadrature oracle ([`elliptic`]);
//! * the plane Grotzsch modulus mu(r), its inverse, and the Hersch-Pfluger
//!   distortion function phi_K ([`grotzsch`]);
//! * Grotzsch/Teichmuller ring capacities, phi_{K,n} and eta_{K,n} — exact in
//!   the plane, certified enclosures in higher dimension ([`capacity`]);
//! * the hyperbolic metric of B^n, Mobius self-maps, and the radial
//!   stretching witness family ([`ball`]);
//! * the displacement bounds themselves: the Krzyz constant c1, the
//!   hyperbolic bound log((1-a)/a), the linearized (9/2)(K-1) and
//!   (b/2)(K-1) bounds, and their proof chains ([`bounds`]);
//! * the p/q fixed-point machinery behind the K-in-[1,17] validity window
//!   ([`mn`]);
//! * named check suites emitting [`report::CheckReport`] records
//!   ([`suites`]).
//!
//! Quantities that have no closed form in dimension n >= 3 are returned as
//! [`capacity::Enclosure`] values tagged `BoundOnly`; only the certified side
//! is ever used downstream.

// domain checks are written as !(x > 0.0) on purpose: the negated form
// rejects NaN, which x <= 0.0 would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ball;
pub mod bounds;
pub mod capacity;
pub mod elliptic;
mod error;
pub mod grotzsch;
pub mod mn;
pub mod report;
pub mod suites;

pub use ball::{hyperbolic_distance, BallPoint, MobiusToOrigin, RadialStretching};
pub use bounds::{
    euclidean_displacement_bound, hyperbolic_displacement_bound, krzyz_c1, DilatationK,
};
pub use capacity::{eta_kn, gamma_2, phi_kn, tau_n, Dimension, Enclosure, Rigor};
pub use elliptic::{agm, complete_e, complete_k, quadrature_k, UnitRadius};
pub use error::{Error, Result};
pub use grotzsch::{mu, mu_inv, phi_k, ModulusValue};
pub use report::{CheckReport, GridSpec, Spacing};
