use equator_core::exact::{stability_constants, OrderDim};
use equator_core::numeric::{
    build_test_function, fd_radial_derivative, hardy_quotient_numeric, instability_certificate, radial_integral,
    CutoffSpec, GridFunction, LogGrid,
};
use equator_core::radial::{critical_exponent, hardy_quotient_power, RadialScalarField};
use equator_core::ExactScalar;

fn od(k: u32, n: u32) -> OrderDim {
    OrderDim::new(k, n).unwrap()
}

fn power_integral_error(points: usize, p: f64, n: u32, w: i32) -> f64 {
    let (a, b) = (1e-4, 1.0);
    let grid = LogGrid::new(a, b, points).unwrap();
    let f = GridFunction::from_fn(grid, n, |r| r.powf(p)).unwrap();
    let e = p + n as f64 + w as f64;
    let exact = (b.powf(e) - a.powf(e)) / e;
    (radial_integral(&f, w) - exact).abs() / exact.abs()
}

#[test]
fn quadrature_converges_at_fourth_order() {
    for (p, n, w) in [(1.5, 3, 0), (-2.0, 7, -2), (3.0, 5, -4)] {
        let errs: Vec<f64> = [256, 512, 1024].iter().map(|&m| power_integral_error(m, p, n, w)).collect();
        for pair in errs.windows(2) {
            let order = (pair[0] / pair[1]).log2();
            assert!(order > 3.5, "p={p} n={n} w={w}: {errs:?}");
        }
        assert!(power_integral_error(4096, p, n, w) < 1e-9);
    }
}

#[test]
fn derivative_converges_at_third_order_or_better() {
    let err = |points: usize| {
        let grid = LogGrid::new(1e-3, 1.0, points).unwrap();
        let f = GridFunction::from_fn(grid, 4, |r| r.powf(2.5) * r.ln()).unwrap();
        let d = fd_radial_derivative(&f).unwrap();
        f.grid()
            .nodes()
            .iter()
            .zip(d.values())
            .skip(2)
            .take(points - 4)
            .map(|(&r, &v)| {
                let exact = r.powf(1.5) * (2.5 * r.ln() + 1.0);
                (v - exact).abs() / r.powf(1.5)
            })
            .fold(0.0, f64::max)
    };
    let (e1, e2) = (err(128), err(256));
    assert!((e1 / e2).log2() >= 3.0, "{e1} {e2}");
}

#[test]
fn plateau_is_the_pure_power() {
    let grid = LogGrid::new(5e-7, 1.0, 2048).unwrap();
    let cut = CutoffSpec::for_order(2, 1e-6, 3.0);
    let phi = build_test_function(-1.5, &cut, &grid, 9).unwrap();
    let (lo, hi) = (1e-6 * 3f64.exp(), (-3f64).exp());
    let mut seen = 0;
    for (&r, &v) in grid.nodes().iter().zip(phi.values()) {
        if r > lo && r < hi {
            assert_eq!(v, r.powf(-1.5));
            seen += 1;
        }
        if r <= 1e-6 {
            assert_eq!(v, 0.0);
        }
    }
    assert!(seen > 1000);
}

#[test]
fn scalar_field_eval_matches_fd() {
    let f = RadialScalarField::new(
        6,
        [(ExactScalar::ratio(3, 2), ExactScalar::ratio(-3, 2)), (ExactScalar::from_i64(-2), ExactScalar::from_i64(2))],
    );
    let lap = f.laplacian();
    let grid = LogGrid::new(1e-2, 1.0, 2048).unwrap();
    let g = GridFunction::from_fn(grid, 6, |r| f.eval(r)).unwrap();
    let num = equator_core::numeric::fd_scalar_laplacian(&g).unwrap();
    for (i, &r) in g.grid().nodes().iter().enumerate().skip(2).take(2044) {
        let exact = lap.eval(r);
        assert!((num.values()[i] - exact).abs() <= 1e-7 * exact.abs().max(1.0), "r={r}");
    }
}

#[test]
fn shifted_exponent_quotient_exceeds_pure_power_ratio() {
    for (k, n) in [(1, 7), (2, 10), (3, 12)] {
        let o = od(k, n);
        let beta = &critical_exponent(o) + &ExactScalar::one();
        let exact = hardy_quotient_power(&beta, o).to_f64();
        let grid = LogGrid::new(5e-7, 1.0, 4096).unwrap();
        let cut = CutoffSpec::for_order(k, 1e-6, 4.0);
        let phi = build_test_function(beta.to_f64(), &cut, &grid, n).unwrap();
        let q = hardy_quotient_numeric(&phi, k).unwrap();
        assert!(q >= exact * (1.0 - 1e-6), "k={k} n={n}: {q} < {exact}");
    }
}

#[test]
fn certificates_are_sound() {
    for k in 1..=4u32 {
        for n in 2 * k + 1..=4 * (k + 1) {
            let o = od(k, n);
            let unstable = !stability_constants(o).is_nonnegative();
            match instability_certificate(o, 16) {
                Ok(c) => {
                    assert!(unstable);
                    assert_eq!(c.found, c.value < 0.0);
                    assert!(c.found, "{c:?}");
                    assert!(c.evaluations <= 16);
                }
                Err(_) => assert!(!unstable, "k={k} n={n}"),
            }
        }
    }
}

