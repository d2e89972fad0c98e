//! Browser bindings for the demo page in `www/`. Every export returns a JSON
//! string; failures come back as `{"error": "..."}` so the page never traps.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use equator_core::exact::{stability_constants, ExactScalar, OrderDim};
use equator_core::numeric::{build_test_function, hardy_quotient_numeric, CutoffSpec, LogGrid};
use equator_core::radial::{critical_exponent, hardy_quotient_power, hardy_symbol};
use equator_core::threshold::{classify, threshold_binary};
use equator_core::Classification;

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    let v = match r {
        Ok(v) => serde_json::to_value(v).map_err(|e| e.to_string()),
        Err(e) => Err(e),
    };
    match v {
        Ok(v) => v.to_string(),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

fn dim(k: u32, n: u32) -> Result<OrderDim, String> {
    OrderDim::new(k, n).map_err(|e| e.to_string())
}

#[derive(Serialize)]
pub struct StabilityRow {
    pub k: u32,
    pub n_star: u32,
    /// One letter per `n = 1..=n_max`: `x` not admissible, `u` unstable, `m` minimizing.
    pub cells: String,
}

#[derive(Serialize)]
pub struct StabilityMap {
    pub n_max: u32,
    pub rows: Vec<StabilityRow>,
}

pub fn stability_map_data(k_max: u32, n_max: u32) -> Result<StabilityMap, String> {
    if k_max == 0 || k_max > 200 || n_max == 0 || n_max > 1000 {
        return Err("need 1 <= k_max <= 200 and 1 <= n_max <= 1000".into());
    }
    let rows = (1..=k_max)
        .map(|k| {
            let n_star = threshold_binary(k).map_err(|e| e.to_string())?.n_star;
            let cells = (1..=n_max)
                .map(|n| match classify(OrderDim { k, n }) {
                    Classification::NotAdmissible => 'x',
                    Classification::Unstable => 'u',
                    Classification::Minimizing => 'm',
                })
                .collect();
            Ok(StabilityRow { k, n_star, cells })
        })
        .collect::<Result<_, String>>()?;
    Ok(StabilityMap { n_max, rows })
}

/// Sign of `P_k(n)` over a `k x n` grid, with each row's critical dimension.
#[wasm_bindgen]
pub fn stability_map(k_max: u32, n_max: u32) -> String {
    to_json(stability_map_data(k_max, n_max))
}

#[derive(Serialize)]
pub struct HardyCurve {
    pub alpha: f64,
    pub alpha_exact: String,
    pub p_k: String,
    pub beta_star: f64,
    /// `(β, pure-power ratio)` along the real axis.
    pub real_axis: Vec<(f64, f64)>,
    /// `(τ, symbol)` along `β* + iτ`.
    pub critical_line: Vec<(f64, f64)>,
}

pub fn hardy_curve_data(k: u32, n: u32, half_width: f64, samples: u32) -> Result<HardyCurve, String> {
    let od = dim(k, n)?;
    if !(half_width > 0.0 && half_width <= 50.0) || !(2..=2000).contains(&samples) {
        return Err("need 0 < half_width <= 50 and 2 <= samples <= 2000".into());
    }
    let c = stability_constants(od);
    let beta_star = critical_exponent(od).to_f64();
    let exact = |x: f64| ExactScalar::from_f64(x).ok_or_else(|| format!("non-finite sample {x}"));
    let mut real_axis = Vec::with_capacity(samples as usize);
    let mut critical_line = Vec::with_capacity(samples as usize);
    for i in 0..samples {
        let off = -half_width + 2.0 * half_width * i as f64 / (samples - 1) as f64;
        let b = beta_star + off;
        real_axis.push((b, hardy_quotient_power(&exact(b)?, od).to_f64()));
        critical_line.push((off, hardy_symbol(&exact(off)?, od).to_f64()));
    }
    Ok(HardyCurve {
        alpha: c.alpha_k.to_f64(),
        alpha_exact: c.alpha_k.to_string(),
        p_k: c.p_k.to_string(),
        beta_star,
        real_axis,
        critical_line,
    })
}

/// The pure-power ratio around `β*` and its continuation along the critical line.
#[wasm_bindgen]
pub fn hardy_curve(k: u32, n: u32, half_width: f64, samples: u32) -> String {
    to_json(hardy_curve_data(k, n, half_width, samples))
}

#[derive(Serialize)]
pub struct CutoffProfile {
    pub alpha: f64,
    pub quotient: f64,
    pub relative_excess: f64,
    /// `(log r, φ(r) / max|φ|)`, thinned for plotting.
    pub profile: Vec<(f64, f64)>,
}

pub fn cutoff_profile_data(
    k: u32,
    n: u32,
    log10_epsilon: f64,
    width: f64,
    smoothness: u32,
    points: u32,
) -> Result<CutoffProfile, String> {
    let od = dim(k, n)?;
    if !(-12.0..=-1.0).contains(&log10_epsilon) || !(256..=16384).contains(&points) {
        return Err("need -12 <= log10(eps) <= -1 and 256 <= points <= 16384".into());
    }
    if smoothness < k {
        return Err(format!("smoothness must be at least k = {k}"));
    }
    let eps = 10f64.powf(log10_epsilon);
    let cut = CutoffSpec { inner_radius: eps, transition_width: width, smoothness_order: smoothness };
    let grid = LogGrid::new(0.5 * eps, 1.0, points as usize).map_err(|e| e.to_string())?;
    let phi = build_test_function(critical_exponent(od).to_f64(), &cut, &grid, n).map_err(|e| e.to_string())?;
    let quotient = hardy_quotient_numeric(&phi, k).map_err(|e| e.to_string())?;
    let alpha = stability_constants(od).alpha_k.to_f64();
    let peak = phi.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let stride = (points as usize / 512).max(1);
    let profile = grid
        .nodes()
        .iter()
        .zip(phi.values())
        .step_by(stride)
        .map(|(r, v)| (r.ln(), v / peak))
        .collect();
    Ok(CutoffProfile { alpha, quotient, relative_excess: quotient / alpha - 1.0, profile })
}

/// Numeric Hardy quotient of a cutoff `r^{β*}` and the profile it was computed on.
#[wasm_bindgen]
pub fn cutoff_profile(k: u32, n: u32, log10_epsilon: f64, width: f64, smoothness: u32, points: u32) -> String {
    to_json(cutoff_profile_data(k, n, log10_epsilon, width, smoothness, points))
}
