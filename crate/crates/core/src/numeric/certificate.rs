//! Numerical witnesses of instability.
//!
//! When `P_k(n) < 0`, a cutoff of `r^{β*}` with a long plateau in `log r` has a
//! Hardy quotient close enough to `α_k(n)` that the second variation of the
//! k-energy at the equator map turns negative. The search walks a fixed list
//! of cutoff parameters, most promising first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{stability_constants, OrderDim};
use crate::radial::critical_exponent;

use super::cutoff::{build_test_function, CutoffSpec};
use super::grid::LogGrid;
use super::hardy::stability_form_numeric;

/// `A_k(n)` grows factorially; beyond this order the float model is not trusted.
pub const MAX_CERTIFICATE_ORDER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub beta: f64,
    pub epsilon: f64,
    pub transition_width: f64,
    pub smoothness_order: u32,
    pub points: usize,
    pub r_min: f64,
    pub r_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub od: OrderDim,
    pub found: bool,
    /// The witness with the smallest normalized form value seen.
    pub witness: Option<Witness>,
    /// Form value at the witness (sphere-area factor omitted).
    pub value: f64,
    /// `value / ∫ φ^2 r^{-2k} dx`; tends to `P_k(n)` for near-extremal φ.
    pub normalized_value: f64,
    pub evaluations: usize,
}

fn candidates(od: OrderDim) -> impl Iterator<Item = Witness> {
    let beta_star = critical_exponent(od).to_f64();
    let k = od.k;
    let epsilons = [1e-6, 1e-8, 1e-4, 1e-10, 1e-3];
    let fractions = [0.3, 0.2, 0.4, 0.12];
    let shifts = [0.0, 0.1, -0.1, 0.3, -0.3];
    let points = [4096usize, 8192];
    let orders = [2 * k, k.max(1)];
    let mut out = Vec::new();
    for &shift in &shifts {
        for &eps in &epsilons {
            for &frac in &fractions {
                for &pts in &points {
                    for &m in &orders {
                        let span = (1.0 / eps as f64).ln();
                        out.push(Witness {
                            beta: beta_star + shift,
                            epsilon: eps,
                            transition_width: frac * span,
                            smoothness_order: m,
                            points: pts,
                            r_min: 0.5 * eps,
                            r_max: 1.0,
                        });
                    }
                }
            }
        }
    }
    out.into_iter()
}

/// Searches up to `search_budget` cutoff test functions for a negative second
/// variation. Requires `P_k(n) < 0`, `n >= 2k+1` and `k <= 8`.
pub fn instability_certificate(od: OrderDim, search_budget: usize) -> Result<Certificate> {
    if od.k > MAX_CERTIFICATE_ORDER {
        return Err(Error::OrderTooLarge(od.k));
    }
    if !od.sobolev_admissible() || stability_constants(od).is_nonnegative() {
        return Err(Error::NotUnstable { k: od.k, n: od.n });
    }
    let mut best: Option<(Witness, f64, f64)> = None;
    let mut evaluations = 0;
    for w in candidates(od).take(search_budget) {
        evaluations += 1;
        let grid = LogGrid::new(w.r_min, w.r_max, w.points)?;
        let cut = CutoffSpec {
            inner_radius: w.epsilon,
            transition_width: w.transition_width,
            smoothness_order: w.smoothness_order,
        };
        let phi = build_test_function(w.beta, &cut, &grid, od.n)?;
        let form = match stability_form_numeric(&phi, od) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let norm = form.normalized();
        if !norm.is_finite() {
            continue;
        }
        if best.as_ref().map_or(true, |b| norm < b.2) {
            best = Some((w, form.value, norm));
        }
        if form.value < 0.0 {
            break;
        }
    }
    let (witness, value, normalized_value) = match best {
        Some((w, v, nv)) => (Some(w), v, nv),
        None => (None, f64::NAN, f64::NAN),
    };
    Ok(Certificate {
        od,
        found: value < 0.0,
        witness,
        value,
        normalized_value,
        evaluations,
    })
}
