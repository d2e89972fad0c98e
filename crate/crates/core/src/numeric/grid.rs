use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_POINTS: usize = 16;

/// Radii `r_i = r_min (r_max / r_min)^{i/(N-1)}`, uniform in `log r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogGrid {
    r_min: f64,
    r_max: f64,
    nodes: Vec<f64>,
}

impl LogGrid {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        if !(r_min > 0.0 && r_min < r_max && r_max <= 1.0) {
            return Err(Error::InvalidGrid(format!("need 0 < r_min < r_max <= 1, got [{r_min}, {r_max}]")));
        }
        if points < MIN_POINTS {
            return Err(Error::InvalidGrid(format!("need at least {MIN_POINTS} points, got {points}")));
        }
        let (t0, t1) = (r_min.ln(), r_max.ln());
        let h = (t1 - t0) / (points - 1) as f64;
        let mut nodes: Vec<f64> = (0..points).map(|i| (t0 + h * i as f64).exp()).collect();
        nodes[0] = r_min;
        nodes[points - 1] = r_max;
        Ok(LogGrid { r_min, r_max, nodes })
    }

    /// 4096 points on `[1e-8, 1]`.
    pub fn default_unit() -> Self {
        Self::new(1e-8, 1.0, 4096).expect("default grid is valid")
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Spacing in `log r`.
    pub fn log_step(&self) -> f64 {
        (self.r_max.ln() - self.r_min.ln()) / (self.points() - 1) as f64
    }
}

/// Samples of a radial function on a [`LogGrid`], tagged with the ambient dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFunction {
    grid: LogGrid,
    values: Vec<f64>,
    n: u32,
}

impl GridFunction {
    pub fn new(grid: LogGrid, values: Vec<f64>, n: u32) -> Result<Self> {
        if values.len() != grid.points() {
            return Err(Error::InvalidGrid(format!(
                "{} values for {} grid points",
                values.len(),
                grid.points()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(GridFunction { grid, values, n })
    }

    pub fn from_fn(grid: LogGrid, n: u32, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().iter().map(|&r| f(r)).collect();
        Self::new(grid, values, n)
    }

    pub fn grid(&self) -> &LogGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub(crate) fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        Self::new(self.grid.clone(), values, self.n)
    }

    pub fn map(&self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let values = self.grid.nodes().iter().zip(&self.values).map(|(&r, &v)| f(r, v)).collect();
        self.with_values(values)
    }
}
