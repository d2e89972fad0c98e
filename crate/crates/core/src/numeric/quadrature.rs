//! Composite 4-point Gauss–Legendre quadrature over log-cells.
//!
//! Samples only exist at grid nodes, so the integrand is interpolated at the
//! Gauss points by the cubic through the four nearest nodes. Per cell this is
//! a fixed linear combination of four samples, precomputed once.

use std::sync::OnceLock;

use super::grid::GridFunction;

/// `(abscissa, weight)` on `[-1, 1]`.
pub const GAUSS_LEGENDRE_4: [(f64, f64); 4] = [
    (-0.861_136_311_594_052_6, 0.347_854_845_137_453_8),
    (-0.339_981_043_584_856_3, 0.652_145_154_862_546_2),
    (0.339_981_043_584_856_3, 0.652_145_154_862_546_2),
    (0.861_136_311_594_052_6, 0.347_854_845_137_453_8),
];

/// `CELL_WEIGHTS[o][j]`: weight of node `j` of a 4-node stencil for the cell
/// `[o, o+1]` (in units of the step), integrated against `dx` on that cell.
fn cell_weights() -> &'static [[f64; 4]; 3] {
    static W: OnceLock<[[f64; 4]; 3]> = OnceLock::new();
    W.get_or_init(|| {
        let mut w = [[0.0; 4]; 3];
        for (o, row) in w.iter_mut().enumerate() {
            for &(xi, wq) in &GAUSS_LEGENDRE_4 {
                let x = o as f64 + 0.5 * (1.0 + xi);
                for (j, slot) in row.iter_mut().enumerate() {
                    let mut basis = 1.0;
                    for m in 0..4 {
                        if m != j {
                            basis *= (x - m as f64) / (j as f64 - m as f64);
                        }
                    }
                    *slot += 0.5 * wq * basis;
                }
            }
        }
        w
    })
}

/// `∫_{r_min}^{r_max} f(r) r^{w + n - 1} dr = ∫ f r^{w+n} dt`, i.e. `∫ f |x|^w dx`
/// over the annulus up to the sphere-area factor.
pub fn radial_integral(f: &GridFunction, weight_exponent: i32) -> f64 {
    let grid = f.grid();
    let h = grid.log_step();
    let p = (weight_exponent + f.n() as i32) as f64;
    let g: Vec<f64> = grid.nodes().iter().zip(f.values()).map(|(&r, &v)| v * r.powf(p)).collect();
    let w = cell_weights();
    let cells = g.len() - 1;
    let mut total = 0.0;
    for i in 0..cells {
        let j0 = i.saturating_sub(1).min(g.len() - 4);
        let row = &w[i - j0];
        total += row[0] * g[j0] + row[1] * g[j0 + 1] + row[2] * g[j0 + 2] + row[3] * g[j0 + 3];
    }
    total * h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::grid::LogGrid;

    #[test]
    fn weights_sum_to_cell_length() {
        for row in cell_weights() {
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn log_measure() {
        let (a, b) = (1e-6, 0.8);
        let grid = LogGrid::new(a, b, 4096).unwrap();
        for n in [1u32, 3, 10] {
            let one = GridFunction::from_fn(grid.clone(), n, |_| 1.0).unwrap();
            let v = radial_integral(&one, -(n as i32));
            assert!((v / (b / a).ln() - 1.0).abs() < 1e-10);
            let v = radial_integral(&one, -(n as i32 - 1));
            assert!((v / (b - a) - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn power_rule() {
        let (a, b) = (1e-3, 1.0);
        let grid = LogGrid::new(a, b, 4096).unwrap();
        for (m, n) in [(2, 3u32), (-1, 5), (0, 7), (-3, 4)] {
            let f = GridFunction::from_fn(grid.clone(), n, |r| r.powi(m)).unwrap();
            let p = (m + n as i32) as f64;
            let exact = (b.powf(p) - a.powf(p)) / p;
            assert!((radial_integral(&f, 0) / exact - 1.0).abs() < 1e-8, "m={m} n={n}");
        }
    }
}
