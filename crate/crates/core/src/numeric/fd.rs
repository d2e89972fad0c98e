//! Finite differences in `t = log r`: fourth-order centered stencils on
//! interior nodes, second-order stencils on the two nodes at each end.

use crate::error::{Error, Result};

use super::grid::GridFunction;

/// Width of the interior stencil; grids need at least this many points.
pub const STENCIL_WIDTH: usize = 5;

fn check(f: &GridFunction) -> Result<()> {
    let points = f.grid().points();
    if points < STENCIL_WIDTH {
        return Err(Error::GridTooSmall { points, needed: STENCIL_WIDTH });
    }
    Ok(())
}

pub(crate) fn d1(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    let mut out = vec![0.0; n];
    for i in 2..n - 2 {
        out[i] = (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) / (12.0 * h);
    }
    for i in [1, n - 2] {
        out[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    }
    out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    out[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    out
}

pub(crate) fn d2(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    let h2 = h * h;
    let mut out = vec![0.0; n];
    for i in 2..n - 2 {
        out[i] = (-v[i + 2] + 16.0 * v[i + 1] - 30.0 * v[i] + 16.0 * v[i - 1] - v[i - 2]) / (12.0 * h2);
    }
    for i in [1, n - 2] {
        out[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / h2;
    }
    out[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2;
    out[n - 1] = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / h2;
    out
}

/// `Δφ = φ'' + (n-1)φ'/r = r^{-2}(φ_tt + (n-2)φ_t)`.
pub fn fd_scalar_laplacian(f: &GridFunction) -> Result<GridFunction> {
    check(f)?;
    let h = f.grid().log_step();
    let ft = d1(f.values(), h);
    let ftt = d2(f.values(), h);
    let m = f.n() as f64 - 2.0;
    let values = f
        .grid()
        .nodes()
        .iter()
        .zip(ft.iter().zip(&ftt))
        .map(|(&r, (&a, &b))| (b + m * a) / (r * r))
        .collect();
    f.with_values(values)
}

/// `φ'(r) = φ_t / r`.
pub fn fd_radial_derivative(f: &GridFunction) -> Result<GridFunction> {
    check(f)?;
    let ft = d1(f.values(), f.grid().log_step());
    let values = f.grid().nodes().iter().zip(&ft).map(|(&r, &a)| a / r).collect();
    f.with_values(values)
}
