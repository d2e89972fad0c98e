use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;

use equator_core::exact::{
    a_const, a_const_recurrence, alpha_const, p1_p2_closed_forms, ratio_factors, stability_constants, ExactScalar,
    OrderDim, ScaledPoly,
};
use equator_core::radial::{
    critical_exponent, hardy_quotient_power, hardy_symbol, scalar_laplacian_power, RadialScalarField,
};
use equator_core::threshold::{thresholds, threshold_binary, threshold_linear};

fn od(k: u32, n: u32) -> OrderDim {
    OrderDim::new(k, n).unwrap()
}

fn q(p: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(p, d)
}

#[test]
fn a_const_matches_recurrence_on_the_full_square() {
    for k in 1..=200 {
        for n in 1..=200 {
            assert_eq!(a_const(od(k, n)), a_const_recurrence(od(k, n)), "k={k} n={n}");
        }
    }
}

#[test]
fn closed_forms_for_orders_one_and_two() {
    for n in 1..=100u32 {
        let (p1, p2) = p1_p2_closed_forms(n as i64);
        assert_eq!(stability_constants(od(1, n)).p_k, p1);
        assert_eq!(stability_constants(od(2, n)).p_k, p2);
    }
}

#[test]
fn linear_and_binary_searches_agree() {
    let chained = thresholds(1, 200).unwrap();
    for k in 1..=200 {
        let lin = threshold_linear(k).unwrap();
        let bin = threshold_binary(k).unwrap();
        assert_eq!(lin, bin, "k={k}");
        assert_eq!(chained[k as usize - 1].n_star, bin.n_star);
    }
}

#[test]
fn threshold_records_satisfy_the_sign_dichotomy() {
    for rec in thresholds(1, 300).unwrap() {
        let k = rec.k;
        assert!(rec.bound_ok);
        assert!(2 * k + 1 < rec.n_star && rec.n_star < 4 * (k + 1));
        let poly = ScaledPoly::new(k);
        for n in 2 * k + 1..rec.n_star {
            assert_eq!(poly.sign(n), Ordering::Less, "k={k} n={n}");
        }
        for n in rec.n_star..4 * (k + 1) {
            assert_ne!(poly.sign(n), Ordering::Less, "k={k} n={n}");
        }
    }
}

/// c(β, s) = Π_{j<s} (β-2j)(β-2j+n-2), written out directly.
fn c_beta(beta: &ExactScalar, s: u32, n: u32) -> ExactScalar {
    (0..s as i64).fold(ExactScalar::one(), |acc, j| {
        let a = beta - &ExactScalar::from_i64(2 * j);
        let b = &a + &ExactScalar::from_i64(n as i64 - 2);
        &(&acc * &a) * &b
    })
}

fn arb_dim() -> impl Strategy<Value = OrderDim> {
    (1u32..=40).prop_flat_map(|k| (Just(k), 2 * k + 1..=4 * (k + 1))).prop_map(|(k, n)| od(k, n))
}

fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, d)| q(p, d))
}

fn arb_field(n: u32) -> impl Strategy<Value = RadialScalarField> {
    prop::collection::vec((arb_scalar(), arb_scalar()), 0..5).prop_map(move |t| RadialScalarField::new(n, t))
}

proptest! {
    #[test]
    fn a_const_matches_recurrence(k in 1u32..=200, n in 1u32..=200) {
        prop_assert_eq!(a_const(od(k, n)), a_const_recurrence(od(k, n)));
    }

    #[test]
    fn alpha_is_nonnegative_and_dyadic(k in 1u32..=120, n in 1u32..=500) {
        let a = alpha_const(od(k, n));
        prop_assert_ne!(a.signum(), Ordering::Less);
        prop_assert!(a.is_dyadic());
        let scaled = &a * &ExactScalar::from_integer(BigInt::from(1) << (2 * k as usize));
        prop_assert!(scaled.is_integer());
    }

    #[test]
    fn scaled_sign_matches_exact_sign(k in 1u32..=120, n in 1u32..=500) {
        let c = stability_constants(od(k, n));
        prop_assert_eq!(ScaledPoly::new(k).sign(n), c.p_k.signum());
        prop_assert_eq!(c.p_sign(), c.p_k.signum());
    }

    #[test]
    fn ratio_factors_step_alpha_and_a(k in 1u32..=60, extra in 1u32..=200) {
        let big_n = 2 * k + 1 + extra;
        let rf = ratio_factors(k, big_n).unwrap();
        let (here, next) = (od(k, big_n), od(k, big_n + 1));
        prop_assert_eq!(&alpha_const(here) * &rf.gamma_product(), alpha_const(next));
        prop_assert_eq!(&a_const(here).abs() * &rf.beta_product(), a_const(next).abs());
        prop_assert!(rf.gamma.iter().zip(&rf.beta).all(|(g, b)| g > b));
    }

    #[test]
    fn nonnegative_p_stays_positive_one_dimension_up(k in 1u32..=60, extra in 1u32..=200) {
        let big_n = 2 * k + 1 + extra;
        if stability_constants(od(k, big_n)).is_nonnegative() {
            prop_assert_eq!(stability_constants(od(k, big_n + 1)).p_sign(), Ordering::Greater);
        }
    }

    #[test]
    fn pure_power_quotient_is_the_product_formula(o in arb_dim(), beta in arb_scalar()) {
        let c = c_beta(&beta, o.s(), o.n);
        let mut expect = &c * &c;
        if !o.is_even() {
            let d = &beta - &ExactScalar::from_i64(2 * o.s() as i64);
            expect = &expect * &(&d * &d);
        }
        prop_assert_eq!(hardy_quotient_power(&beta, o), expect);
    }

    #[test]
    fn hardy_symbol_is_minimal_only_at_zero(o in arb_dim(), tau in arb_scalar()) {
        let alpha = alpha_const(o);
        let h = hardy_symbol(&tau, o);
        if tau.is_zero() {
            prop_assert_eq!(h, alpha);
        } else {
            prop_assert!(h > alpha);
        }
        prop_assert_eq!(hardy_quotient_power(&critical_exponent(o), o), alpha_const(o));
    }

    #[test]
    fn laplacian_is_linear(f in arb_field(7), g in arb_field(7), c in arb_scalar(), s in 0u32..4) {
        let lhs = scalar_laplacian_power(&f.scale(&c).add(&g), s);
        let rhs = scalar_laplacian_power(&f, s).scale(&c).add(&scalar_laplacian_power(&g, s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_terms_stay_canonical(f in arb_field(5)) {
        let lap = f.laplacian();
        for t in [f.terms(), lap.terms()] {
            prop_assert!(t.windows(2).all(|w| w[0].1 < w[1].1));
            prop_assert!(t.iter().all(|(c, _)| !c.is_zero()));
        }
    }

    #[test]
    fn exact_scalar_text_round_trips(p in any::<i64>(), d in 1i64..=i64::MAX) {
        let x = q(p, d);
        prop_assert_eq!(x.to_string().parse::<ExactScalar>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactScalar>(&json).unwrap(), x);
    }

    #[test]
    fn stability_constants_serde_round_trip(o in arb_dim()) {
        let c = stability_constants(o);
        let json = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<equator_core::exact::StabilityConstants>(&json).unwrap(), c);
    }
}
