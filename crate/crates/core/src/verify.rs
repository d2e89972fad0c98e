//! Invariant suites over ranges of `k`, shared by the CLI and the test suites.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{a_const, alpha_const, ratio_factors, stability_constants, OrderDim, ScaledPoly};
use crate::radial::{
    critical_exponent, energy_density, grad_norm_sq, hardy_quotient_power, map_laplacian_power,
    stability_form_power,
};
use crate::threshold::thresholds;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma,
    Bound,
    Radial,
    Hardy,
    Ratio,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Lemma, Suite::Bound, Suite::Radial, Suite::Hardy, Suite::Ratio];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lemma => "lemma",
            Suite::Bound => "bound",
            Suite::Radial => "radial",
            Suite::Hardy => "hardy",
            Suite::Ratio => "ratio",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub k_max: u32,
    pub checked: usize,
    /// First counterexample, if any.
    pub violation: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn run(suite: Suite, k_max: u32) -> Result<SuiteReport> {
    let mut checked = 0usize;
    let violation = match suite {
        Suite::Lemma => lemma(k_max, &mut checked),
        Suite::Bound => bound(k_max, &mut checked)?,
        Suite::Radial => radial(k_max, &mut checked),
        Suite::Hardy => hardy(k_max, &mut checked),
        Suite::Ratio => ratio(k_max, &mut checked)?,
    };
    Ok(SuiteReport { suite, k_max, checked, violation })
}

/// `n` from `2k+1` through `4(k+1)`.
fn dims(k: u32) -> impl Iterator<Item = OrderDim> {
    (2 * k + 1..=4 * (k + 1)).map(move |n| OrderDim { k, n })
}

fn lemma(k_max: u32, checked: &mut usize) -> Option<String> {
    for k in 1..=k_max {
        *checked += 1;
        if ScaledPoly::new(k).sign(2 * k + 1) != Ordering::Less {
            return Some(format!("P_{k}({}) >= 0", 2 * k + 1));
        }
    }
    None
}

fn bound(k_max: u32, checked: &mut usize) -> Result<Option<String>> {
    for rec in thresholds(1, k_max)? {
        *checked += 1;
        let k = rec.k;
        if !(rec.n_star > 2 * k + 1 && rec.n_star < 4 * (k + 1)) {
            return Ok(Some(format!("n_{k}* = {} outside (2k+1, 4(k+1))", rec.n_star)));
        }
        let poly = ScaledPoly::new(k);
        if poly.sign(rec.n_star) == Ordering::Less || poly.sign(rec.n_star - 1) != Ordering::Less {
            return Ok(Some(format!("sign change of P_{k} is not at n = {}", rec.n_star)));
        }
    }
    Ok(None)
}

fn radial(k_max: u32, checked: &mut usize) -> Option<String> {
    for k in 1..=k_max {
        for od in dims(k) {
            *checked += 1;
            let m = map_laplacian_power(od.n, k);
            if m.coeff != a_const(od) || m.exponent != -(2 * k as i64 + 1) {
                return Some(format!("Δ^k u* at {od}: {} r^{}", m.coeff, m.exponent));
            }
            let e = energy_density(od);
            let top = map_laplacian_power(od.n, od.s());
            let (c, a) = if od.is_even() { top.norm_sq() } else { grad_norm_sq(&top) };
            if c != e.density_coeff || a != e.density_exponent || e.finite_energy != od.sobolev_admissible() {
                return Some(format!("energy density mismatch at {od}"));
            }
        }
    }
    None
}

fn hardy(k_max: u32, checked: &mut usize) -> Option<String> {
    for k in 1..=k_max {
        for od in dims(k) {
            *checked += 1;
            let beta = critical_exponent(od);
            if hardy_quotient_power(&beta, od) != alpha_const(od) {
                return Some(format!("pure-power quotient at β* differs from α at {od}"));
            }
            if stability_form_power(&beta, od) != stability_constants(od).p_k {
                return Some(format!("stability form at β* differs from P at {od}"));
            }
        }
    }
    None
}

fn ratio(k_max: u32, checked: &mut usize) -> Result<Option<String>> {
    for k in 1..=k_max {
        for big_n in 2 * k + 2..=4 * (k + 1) {
            *checked += 1;
            let here = OrderDim { k, n: big_n };
            let next = OrderDim { k, n: big_n + 1 };
            let rf = ratio_factors(k, big_n)?;
            if rf.gamma.iter().zip(&rf.beta).any(|(g, b)| g <= b) {
                return Ok(Some(format!("γ_i <= β_i for k={k}, N={big_n}")));
            }
            let (gp, bp) = (rf.gamma_product(), rf.beta_product());
            if gp <= bp {
                return Ok(Some(format!("Πγ <= Πβ for k={k}, N={big_n}")));
            }
            if &alpha_const(here) * &gp != alpha_const(next) || &a_const(here).abs() * &bp != a_const(next).abs() {
                return Ok(Some(format!("ratio factorization fails for k={k}, N={big_n}")));
            }
            let p_here = stability_constants(here).p_sign();
            let p_next = stability_constants(next).p_sign();
            if p_here != Ordering::Less && p_next != Ordering::Greater {
                return Ok(Some(format!("P_{k}({big_n}) >= 0 but P_{k}({}) <= 0", big_n + 1)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let r = run(suite, 12).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("golden".parse::<Suite>().is_err());
    }
}
