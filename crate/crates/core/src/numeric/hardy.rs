use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{a_const, OrderDim};

use super::fd::{fd_radial_derivative, fd_scalar_laplacian};
use super::grid::GridFunction;
use super::quadrature::radial_integral;

/// `Δ^s φ` for k = 2s, `(Δ^s φ)'` for k = 2s + 1.
fn top_derivative(phi: &GridFunction, k: u32) -> Result<GridFunction> {
    let mut psi = phi.clone();
    for _ in 0..k / 2 {
        psi = fd_scalar_laplacian(&psi)?;
    }
    if k % 2 == 1 {
        psi = fd_radial_derivative(&psi)?;
    }
    Ok(psi)
}

/// `(∫|Δ^s φ|^2 dx, ∫ φ^2 / r^{2k} dx)` for a radial `φ`.
fn energy_and_weighted_norm(phi: &GridFunction, k: u32) -> Result<(f64, f64)> {
    let top = top_derivative(phi, k)?;
    let energy = radial_integral(&top.map(|_, v| v * v)?, 0);
    let norm = radial_integral(&phi.map(|_, v| v * v)?, -2 * k as i32);
    if !(norm.is_finite() && norm > 1e-290) {
        return Err(Error::DenominatorUnderflow(norm));
    }
    Ok((energy, norm))
}

/// Discrete Rayleigh quotient `∫|Δ^s φ|^2 / ∫ φ^2 r^{-4s}` (gradient variant for odd k).
pub fn hardy_quotient_numeric(phi: &GridFunction, k: u32) -> Result<f64> {
    let (energy, norm) = energy_and_weighted_norm(phi, k)?;
    Ok(energy / norm)
}

/// Second variation of the k-energy at the equator map along `φ e`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FormValue {
    pub energy: f64,
    pub weighted_norm: f64,
    /// `energy - A_k(n) weighted_norm` (even k) or `energy + A_k(n) weighted_norm` (odd k).
    pub value: f64,
}

impl FormValue {
    /// `value / weighted_norm`, comparable with `P_k(n)`.
    pub fn normalized(&self) -> f64 {
        self.value / self.weighted_norm
    }
}

pub fn stability_form_numeric(phi: &GridFunction, od: OrderDim) -> Result<FormValue> {
    let (energy, weighted_norm) = energy_and_weighted_norm(phi, od.k)?;
    let a = a_const(od).to_f64();
    let value = if od.is_even() { energy - a * weighted_norm } else { energy + a * weighted_norm };
    Ok(FormValue { energy, weighted_norm, value })
}
