use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::grid::{GridFunction, LogGrid};

/// Radial cutoff: `0` on `[0, ε]`, a polynomial blend on `[ε, ε e^w]`,
/// `1` on `[ε e^w, r_max e^{-w}]`, a blend back down, and `0` at `r_max`.
/// The band width `w` is measured in `log r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffSpec {
    pub inner_radius: f64,
    pub transition_width: f64,
    /// Number of derivatives that vanish at each junction.
    pub smoothness_order: u32,
}

impl CutoffSpec {
    /// Smoothness `2k`, the default for order-k test functions.
    pub fn for_order(k: u32, inner_radius: f64, transition_width: f64) -> Self {
        CutoffSpec { inner_radius, transition_width, smoothness_order: 2 * k }
    }

    pub fn validate(&self, r_max: f64) -> Result<()> {
        let (eps, w) = (self.inner_radius, self.transition_width);
        if !(eps > 0.0 && eps < r_max) {
            return Err(Error::InvalidCutoff(format!("inner radius {eps} not in (0, {r_max})")));
        }
        if !(w > 0.0 && w.is_finite()) {
            return Err(Error::InvalidCutoff(format!("transition width {w} must be positive")));
        }
        if eps.ln() + w > r_max.ln() - w {
            return Err(Error::InvalidCutoff(format!(
                "transition bands overlap: 2 x {w} exceeds log(r_max/eps) = {}",
                (r_max / eps).ln()
            )));
        }
        Ok(())
    }

    /// Cutoff value at radius `r` for a ball of radius `r_max`.
    pub fn value(&self, r: f64, r_max: f64) -> f64 {
        let t = r.ln();
        let t0 = self.inner_radius.ln();
        let t3 = r_max.ln();
        let w = self.transition_width;
        if r <= self.inner_radius || r >= r_max {
            0.0
        } else if t < t0 + w {
            smoothstep((t - t0) / w, self.smoothness_order)
        } else if t > t3 - w {
            smoothstep((t3 - t) / w, self.smoothness_order)
        } else {
            1.0
        }
    }
}

/// `S_m(x) = x^{m+1} Σ_{j=0}^{m} C(m+j, j) (1-x)^j` on `[0, 1]`: rises from 0 to 1
/// with its first `m` derivatives vanishing at both ends.
pub fn smoothstep(x: f64, m: u32) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let y = 1.0 - x;
    let mut binom = 1.0;
    let mut pow = 1.0;
    let mut sum = 0.0;
    for j in 0..=m {
        if j > 0 {
            binom *= (m + j) as f64 / j as f64;
            pow *= y;
        }
        sum += binom * pow;
    }
    x.powi(m as i32 + 1) * sum
}

/// Samples `r^β χ(r)` on `grid`.
pub fn build_test_function(beta: f64, cut: &CutoffSpec, grid: &LogGrid, n: u32) -> Result<GridFunction> {
    cut.validate(grid.r_max())?;
    let r_max = grid.r_max();
    GridFunction::from_fn(grid.clone(), n, |r| {
        let chi = cut.value(r, r_max);
        if chi == 0.0 {
            0.0
        } else {
            r.powf(beta) * chi
        }
    })
}
