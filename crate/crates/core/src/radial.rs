//! Exact calculus for radial maps `x ↦ (p(r) x, 0)` and radial scalar fields.
//!
//! For a profile `p = c r^a` the map Laplacian is `p'' + (n+1) p'/r = c a (a+n) r^{a-2}`,
//! so the equator map (`c = 1`, `a = -1`) stays a monomial under every power of `Δ`.
//! Scalar fields `Σ c r^a` admit rational exponents because the Hardy-extremal
//! exponent `(2k-n)/2` is a half-integer for odd `n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{a_const, OrderDim, ExactScalar};

/// `x ↦ (c r^a x, 0)` on the punctured ball in dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadialMonomialMap {
    pub n: u32,
    pub coeff: ExactScalar,
    pub exponent: i64,
}

impl RadialMonomialMap {
    pub fn new(n: u32, coeff: ExactScalar, exponent: i64) -> Self {
        RadialMonomialMap { n, coeff, exponent }
    }

    /// `u*(x) = x / |x|`.
    pub fn equator(n: u32) -> Self {
        Self::new(n, ExactScalar::one(), -1)
    }

    /// `|u(x)|^2 = c^2 r^{2a+2}` as `(coeff, exponent)`.
    pub fn norm_sq(&self) -> (ExactScalar, i64) {
        (&self.coeff * &self.coeff, 2 * self.exponent + 2)
    }
}

pub fn map_laplacian(m: &RadialMonomialMap) -> RadialMonomialMap {
    let a = m.exponent;
    let factor = ExactScalar::from_i64(a * (a + m.n as i64));
    RadialMonomialMap::new(m.n, &m.coeff * &factor, a - 2)
}

/// `Δ^k u*`, by iterating [`map_laplacian`] from the equator profile.
pub fn map_laplacian_power(n: u32, k: u32) -> RadialMonomialMap {
    (0..k).fold(RadialMonomialMap::equator(n), |m, _| map_laplacian(&m))
}

/// `|∇u|^2 = r^2 p'^2 + n p^2 + 2 r p p'`; for `p = c r^a` this is
/// `c^2 (a(a+2) + n) r^{2a}`.
pub fn grad_norm_sq(m: &RadialMonomialMap) -> (ExactScalar, i64) {
    let a = m.exponent;
    let factor = ExactScalar::from_i64(a * (a + 2) + m.n as i64);
    (&(&m.coeff * &m.coeff) * &factor, 2 * a)
}

/// Pointwise energy density of the equator map, `|Δ^s u*|^2` or `|∇Δ^s u*|^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyDensitySummary {
    pub od: OrderDim,
    pub density_coeff: ExactScalar,
    pub density_exponent: i64,
    /// Integrability of `r^{density_exponent} r^{n-1}` at the origin.
    pub finite_energy: bool,
}

impl EnergyDensitySummary {
    /// `∫_a^b density(r) r^{n-1} dr` (the sphere area factor is omitted).
    pub fn radial_integral(&self, a: f64, b: f64) -> f64 {
        let c = self.density_coeff.to_f64();
        let p = self.density_exponent + self.od.n as i64;
        if p == 0 {
            c * (b / a).ln()
        } else {
            let p = p as f64;
            c * (b.powf(p) - a.powf(p)) / p
        }
    }
}

pub fn energy_density(od: OrderDim) -> EnergyDensitySummary {
    let s = od.s();
    let a_s = a_const_or_one(s, od.n);
    let a_sq = &a_s * &a_s;
    let (density_coeff, density_exponent) = if od.is_even() {
        (a_sq, -4 * s as i64)
    } else {
        let extra = ExactScalar::from_i64(od.n as i64 + 4 * (s as i64) * (s as i64) - 1);
        (&a_sq * &extra, -(4 * s as i64 + 2))
    };
    EnergyDensitySummary {
        od,
        density_coeff,
        density_exponent,
        finite_energy: density_exponent + od.n as i64 - 1 > -1,
    }
}

fn a_const_or_one(s: u32, n: u32) -> ExactScalar {
    if s == 0 {
        ExactScalar::one()
    } else {
        a_const(OrderDim { k: s, n })
    }
}

/// `u* ∈ W^{k,2}(B^n, S^n)` iff `n >= 2k+1`.
pub fn sobolev_member(od: OrderDim) -> bool {
    od.sobolev_admissible()
}

/// `Δ^k u* = (coeff r^exponent) u*`, read off from the iterated Laplacian.
/// The Lagrange multiplier of the equator map is the negative of this factor.
pub fn equator_multiplier(od: OrderDim) -> (ExactScalar, i64) {
    let m = map_laplacian_power(od.n, od.k);
    (m.coeff, m.exponent + 1)
}

/// Finite sum `Σ c r^a` with exact rational exponents, kept canonical:
/// sorted by exponent, no repeated exponents, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadialScalarField {
    pub n: u32,
    terms: Vec<(ExactScalar, ExactScalar)>,
}

impl RadialScalarField {
    pub fn new(n: u32, terms: impl IntoIterator<Item = (ExactScalar, ExactScalar)>) -> Self {
        let mut by_exp: BTreeMap<ExactScalar, ExactScalar> = BTreeMap::new();
        for (c, a) in terms {
            let slot = by_exp.entry(a).or_insert_with(ExactScalar::zero);
            *slot = &*slot + &c;
        }
        let terms = by_exp.into_iter().filter(|(_, c)| !c.is_zero()).map(|(a, c)| (c, a)).collect();
        RadialScalarField { n, terms }
    }

    pub fn zero(n: u32) -> Self {
        RadialScalarField { n, terms: Vec::new() }
    }

    pub fn monomial(n: u32, coeff: ExactScalar, exponent: ExactScalar) -> Self {
        Self::new(n, [(coeff, exponent)])
    }

    /// `(coeff, exponent)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(ExactScalar, ExactScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "fields live in different dimensions");
        Self::new(self.n, self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.n, self.terms.iter().map(|(t, a)| (t * c, a.clone())))
    }

    /// `Δφ = φ'' + (n-1) φ'/r`, termwise `c r^a ↦ c a (a+n-2) r^{a-2}`.
    pub fn laplacian(&self) -> Self {
        let two = ExactScalar::from_i64(2);
        let shift = ExactScalar::from_i64(self.n as i64 - 2);
        Self::new(
            self.n,
            self.terms.iter().map(|(c, a)| (&(c * a) * &(a + &shift), a - &two)),
        )
    }

    /// `d/dr`, termwise `c r^a ↦ c a r^{a-1}`.
    pub fn radial_derivative(&self) -> Self {
        let one = ExactScalar::one();
        Self::new(self.n, self.terms.iter().map(|(c, a)| (c * a, a - &one)))
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|(c, a)| c.to_f64() * r.powf(a.to_f64())).sum()
    }
}

impl fmt::Display for RadialScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * r^{a}")?;
        }
        Ok(())
    }
}

pub fn scalar_laplacian_power(f: &RadialScalarField, s: u32) -> RadialScalarField {
    (0..s).fold(f.clone(), |g, _| g.laplacian())
}

/// `β* = (2k - n) / 2`, the exponent at which `r^β` balances the Hardy quotient.
pub fn critical_exponent(od: OrderDim) -> ExactScalar {
    ExactScalar::ratio(2 * od.k as i64 - od.n as i64, 2)
}

/// Pointwise ratio of `|Δ^s φ|^2` (or `|∇Δ^s φ|^2` for odd k) to `φ^2 / r^{2k}`
/// for `φ = r^β`. Computed with the scalar field calculus; the ratio is the same
/// at every radius.
pub fn hardy_quotient_power(beta: &ExactScalar, od: OrderDim) -> ExactScalar {
    let phi = RadialScalarField::monomial(od.n, ExactScalar::one(), beta.clone());
    let mut top = scalar_laplacian_power(&phi, od.s());
    if !od.is_even() {
        top = top.radial_derivative();
    }
    match top.terms() {
        [] => ExactScalar::zero(),
        [(c, _)] => c * c,
        _ => unreachable!("a monomial stays a monomial under Δ and d/dr"),
    }
}

/// Integrand coefficient of the second variation of the k-energy at `u*` along
/// `φ = r^β e`: `q(β) - A_k(n)` for even k and `q(β) + A_k(n)` for odd k, where
/// `q` is [`hardy_quotient_power`]. Negative values point at instability.
pub fn stability_form_power(beta: &ExactScalar, od: OrderDim) -> ExactScalar {
    let q = hardy_quotient_power(beta, od);
    let a = a_const(od);
    if od.is_even() {
        q - a
    } else {
        q + a
    }
}

/// `|L(β* + iτ)|^2`, the pure-power ratio continued to the critical line
/// `β = β* + iτ`. Each factor `(β - 2j)(β - 2j + n - 2)` contributes
/// `((β* - 2j)^2 + τ^2)((β* - 2j + n - 2)^2 + τ^2)`, and odd k adds
/// `(β* - 2s)^2 + τ^2`. At `τ = 0` this is `α_k(n)`; it grows with `τ^2`.
pub fn hardy_symbol(tau: &ExactScalar, od: OrderDim) -> ExactScalar {
    let beta = critical_exponent(od);
    let tau_sq = tau * tau;
    let shifted = |offset: i64| -> ExactScalar {
        let v = &beta + &ExactScalar::from_i64(offset);
        &(&v * &v) + &tau_sq
    };
    let n = od.n as i64;
    let mut acc = ExactScalar::one();
    for j in 0..od.s() as i64 {
        acc = &acc * &shifted(-2 * j);
        acc = &acc * &shifted(-2 * j + n - 2);
    }
    if !od.is_even() {
        acc = &acc * &shifted(-2 * od.s() as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::alpha_const;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    fn od(k: u32, n: u32) -> OrderDim {
        OrderDim::new(k, n).unwrap()
    }

    fn mono(n: u32, c: &str, a: &str) -> RadialScalarField {
        RadialScalarField::monomial(n, q(c), q(a))
    }

    #[test]
    fn map_laplacian_examples() {
        for n in 1..20 {
            let m = map_laplacian(&RadialMonomialMap::equator(n));
            assert_eq!(m.coeff, ExactScalar::from_i64(-(n as i64 - 1)));
            assert_eq!(m.exponent, -3);
            let lin = map_laplacian(&RadialMonomialMap::new(n, q("1"), 0));
            assert!(lin.coeff.is_zero());
        }
        let twice = map_laplacian(&map_laplacian(&RadialMonomialMap::equator(10)));
        assert_eq!((twice.coeff, twice.exponent), (q("189"), -5));
    }

    #[test]
    fn map_laplacian_power_examples() {
        let m = map_laplacian_power(7, 1);
        assert_eq!((m.coeff, m.exponent), (q("-6"), -3));
        assert_eq!(map_laplacian_power(5, 0), RadialMonomialMap::equator(5));
        let m = map_laplacian_power(12, 3);
        assert_eq!((m.coeff, m.exponent), (q("-10395"), -7));
    }

    #[test]
    fn grad_norm_examples() {
        for n in 1..20 {
            assert_eq!(grad_norm_sq(&RadialMonomialMap::equator(n)), (ExactScalar::from_i64(n as i64 - 1), -2));
            assert_eq!(grad_norm_sq(&RadialMonomialMap::new(n, q("3"), 0)), (ExactScalar::from_i64(9 * n as i64), 0));
        }
        assert_eq!(grad_norm_sq(&RadialMonomialMap::new(10, q("-9"), -3)), (q("1053"), -6));
    }

    #[test]
    fn energy_density_examples() {
        let e = energy_density(od(2, 9));
        assert_eq!((e.density_coeff.clone(), e.density_exponent, e.finite_energy), (q("64"), -4, true));
        assert!(!energy_density(od(2, 4)).finite_energy);
        let e = energy_density(od(1, 6));
        assert_eq!((e.density_coeff, e.density_exponent), (q("5"), -2));
    }

    #[test]
    fn sobolev_examples() {
        assert!(sobolev_member(od(2, 5)));
        assert!(sobolev_member(od(3, 7)));
        assert!(!sobolev_member(od(3, 6)));
    }

    #[test]
    fn equator_multiplier_examples() {
        assert_eq!(equator_multiplier(od(1, 8)), (q("-7"), -2));
        assert_eq!(equator_multiplier(od(2, 10)), (q("189"), -4));
        for k in 1..6 {
            let (_, e) = equator_multiplier(od(k, 20));
            assert_eq!(e, map_laplacian_power(20, k).exponent + 1);
            assert_eq!(e, -2 * k as i64);
        }
    }

    #[test]
    fn scalar_laplacian_examples() {
        for n in 1..12u32 {
            let g = scalar_laplacian_power(&mono(n, "1", "2"), 1);
            assert_eq!(g, mono(n, &(2 * n).to_string(), "0"));
        }
        let g = scalar_laplacian_power(&mono(7, "1", "-5/2"), 1);
        // (-5/2)(-5/2 + 5) = -25/4
        assert_eq!(g, mono(7, "-25/4", "-9/2"));
        let b = q("-3/2");
        let n = 9;
        let g = scalar_laplacian_power(&RadialScalarField::monomial(n, q("1"), b.clone()), 2);
        let nn = ExactScalar::from_i64(n as i64);
        let two = q("2");
        let four = q("4");
        let expect = &(&(&b * &(&(&b + &nn) - &two)) * &(&b - &two)) * &(&(&b + &nn) - &four);
        assert_eq!(g, RadialScalarField::monomial(n, expect, &b - &four));
    }

    #[test]
    fn fundamental_solution_is_harmonic() {
        for n in 3..10 {
            let f = RadialScalarField::monomial(n, q("1"), ExactScalar::from_i64(2 - n as i64));
            assert!(f.laplacian().is_zero());
        }
    }

    #[test]
    fn canonical_form_merges_and_drops() {
        let f = RadialScalarField::new(5, [(q("1"), q("2")), (q("-1"), q("2")), (q("3"), q("-1/2")), (q("1"), q("-1/2"))]);
        assert_eq!(f.terms(), &[(q("4"), q("-1/2"))]);
        assert_eq!(f.to_string(), "4 * r^-1/2");
        assert_eq!(RadialScalarField::zero(3).to_string(), "0");
    }

    #[test]
    fn hardy_power_examples() {
        for n in 3..30u32 {
            let b1 = ExactScalar::ratio(2 - n as i64, 2);
            assert_eq!(hardy_quotient_power(&b1, od(1, n)), alpha_const(od(1, n)));
            let b2 = ExactScalar::ratio(4 - n as i64, 2);
            assert_eq!(hardy_quotient_power(&b2, od(2, n)), alpha_const(od(2, n)));
            let b3 = ExactScalar::ratio(6 - n as i64, 2);
            let nn = n as i64;
            let expect = ExactScalar::ratio((nn - 2).pow(2) * (nn - 6).pow(2) * (nn + 2).pow(2), 64);
            assert_eq!(hardy_quotient_power(&b3, od(3, n)), expect);
        }
    }

    #[test]
    fn stability_form_examples() {
        assert_eq!(stability_form_power(&q("-5/2"), od(2, 9)), q("-279/16"));
        assert_eq!(stability_form_power(&q("-5/2"), od(1, 7)), q("1/4"));
    }

    #[test]
    fn real_beta_does_not_minimize_the_pure_power_ratio() {
        // q(β) = β^2 for k = 1: smaller than α_1(3) = 1/4 at β = 0.
        assert_eq!(hardy_quotient_power(&q("0"), od(1, 3)), q("0"));
        assert!(hardy_quotient_power(&q("0"), od(1, 3)) < alpha_const(od(1, 3)));
    }

    #[test]
    fn symbol_at_zero_is_alpha() {
        for k in 1..8 {
            for n in 2 * k + 1..=4 * (k + 1) {
                assert_eq!(hardy_symbol(&q("0"), od(k, n)), alpha_const(od(k, n)));
            }
        }
    }

    #[test]
    fn energy_density_integral() {
        let e = energy_density(od(2, 9));
        // 64 ∫ r^{-4} r^8 dr on [0.5, 1] = 64 (1 - 0.5^5)/5
        assert!((e.radial_integral(0.5, 1.0) - 64.0 * (1.0 - 0.5f64.powi(5)) / 5.0).abs() < 1e-12);
    }
}
