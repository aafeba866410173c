//! Browser bindings for the distortion-bound explorer. Three operations
//! back the demo page:
//!
//! * [`distortion_curve`] — the planar distortion function phi_K(r) with the
//!   corollary bound 2 phi_K(√((1+r)/2))² - 1 that dominates it;
//! * [`bound_curves`] — c1(K) inside its elementary sandwich plus the
//!   hyperbolic and Euclidean displacement bounds as functions of K;
//! * [`stretch_rings`] / [`stretch_info`] — the radial stretching
//!   z ↦ |z|^{α-1} z as a picture: concentric circles and where they land,
//!   with the extremal displacement ring and its closed-form value.
//!
//! Everything returns flat `Float64Array` buffers; the page does the
//! drawing. All functions are plain Rust underneath and are unit-tested on
//! the native target.

use qcdist::bounds::{
    euclidean_displacement_bound, image_radius_bound, krzyz_c1, krzyz_c1_sandwich,
    planar_main_bound_log, DilatationK,
};
use qcdist::capacity::Dimension;
use qcdist::{phi_k, RadialStretching};
use wasm_bindgen::prelude::wasm_bindgen;

/// [r, phi_K(r), image_radius_bound(r)] triples on a uniform r grid in [0, 1].
///
/// K below 1 is clamped to 1; `samples` is the number of grid points.
#[wasm_bindgen]
pub fn distortion_curve(k: f64, samples: u32) -> Vec<f64> {
    let k = sanitize_k(k);
    let n = samples.max(2) as usize;
    let dk = DilatationK::new(k).expect("sanitized");
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let r = i as f64 / (n - 1) as f64;
        let phi = phi_k(k, r).expect("grid inside [0,1]");
        let cor = if r < 1.0 {
            image_radius_bound(dk, r).expect("grid inside [0,1)")
        } else {
            1.0
        };
        out.extend_from_slice(&[r, phi, cor]);
    }
    out
}

/// [K, c1, c1_lower, c1_upper, log eta_{K,2}(1), euclid_bound] per grid
/// point, K linearly spaced on [1, k_max].
#[wasm_bindgen]
pub fn bound_curves(k_max: f64, samples: u32) -> Vec<f64> {
    let k_max = if k_max.is_finite() && k_max > 1.0 {
        k_max.min(17.0)
    } else {
        4.0
    };
    let n = samples.max(2) as usize;
    let mut out = Vec::with_capacity(6 * n);
    for i in 0..n {
        let kv = 1.0 + (k_max - 1.0) * i as f64 / (n - 1) as f64;
        let k = DilatationK::new(kv).expect("grid starts at 1");
        let (lo, hi) = krzyz_c1_sandwich(k);
        let euclid = euclidean_displacement_bound(k, Dimension::PLANE)
            .expect("planar bound valid for all K >= 1")
            .value;
        out.extend_from_slice(&[kv, krzyz_c1(k), lo, hi, planar_main_bound_log(k), euclid]);
    }
    out
}

/// Point pairs [x, y, fx, fy] of `rings` concentric circles sampled at
/// `spokes` angles each, mapped by the radial stretching with dilatation K
/// in the plane. The page draws source and image circles from the pairs.
#[wasm_bindgen]
pub fn stretch_rings(k: f64, rings: u32, spokes: u32) -> Vec<f64> {
    let k = sanitize_k(k);
    let f = RadialStretching::from_dilatation(Dimension::PLANE, k).expect("sanitized");
    let rings = rings.clamp(1, 64) as usize;
    let spokes = spokes.clamp(8, 720) as usize;
    let mut out = Vec::with_capacity(4 * rings * spokes);
    for ri in 1..=rings {
        let r = ri as f64 / (rings + 1) as f64;
        for si in 0..spokes {
            let theta = 2.0 * std::f64::consts::PI * si as f64 / spokes as f64;
            let z = [r * theta.cos(), r * theta.sin()];
            let w = f.apply(&z);
            out.extend_from_slice(&[z[0], z[1], w[0], w[1]]);
        }
    }
    out
}

/// Summary numbers for the stretch view:
/// [alpha, delta, r_alpha, euclid_bound, log_eta_bound].
#[wasm_bindgen]
pub fn stretch_info(k: f64) -> Vec<f64> {
    let k = sanitize_k(k);
    let dk = DilatationK::new(k).expect("sanitized");
    let f = RadialStretching::from_dilatation(Dimension::PLANE, k).expect("sanitized");
    vec![
        f.alpha(),
        f.delta(),
        f.max_displacement_radius(),
        euclidean_displacement_bound(dk, Dimension::PLANE)
            .expect("planar")
            .value,
        planar_main_bound_log(dk),
    ]
}

fn sanitize_k(k: f64) -> f64 {
    if k.is_finite() && k >= 1.0 {
        k.min(1e6)
    } else {
        1.0
    }
}
