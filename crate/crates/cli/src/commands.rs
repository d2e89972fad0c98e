use std::cmp::Ordering;
use std::io::Write;

use anyhow::anyhow;
use rayon::prelude::*;
use serde_json::json;

use equator_core::exact::{stability_constants, ExactScalar, OrderDim};
use equator_core::numeric::{
    build_test_function, hardy_quotient_numeric, instability_certificate, CutoffSpec, LogGrid,
};
use equator_core::radial::{critical_exponent, hardy_quotient_power};
use equator_core::threshold::{classify, gap_analysis, threshold_binary, threshold_linear, thresholds};
use equator_core::verify::{self, Suite};
use equator_core::{Classification, Error, ThresholdRecord};

use crate::golden;
use crate::output::OutputRecord;
use crate::{Format, Method, SuiteArg};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BOUND: u8 = 3;
pub const EXIT_INVARIANT: u8 = 4;
pub const EXIT_NOT_FOUND: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn new(code: u8, error: anyhow::Error) -> Self {
        Failure { code, error }
    }

    pub fn internal(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundViolated { .. } | Error::SignPattern { .. } => EXIT_BOUND,
            Error::InvalidOrderDim { .. }
            | Error::InvalidRange { .. }
            | Error::InvalidGrid(_)
            | Error::GridTooSmall { .. }
            | Error::InvalidCutoff(_)
            | Error::NotUnstable { .. }
            | Error::OrderTooLarge(_)
            | Error::RatioDomain { .. } => EXIT_USAGE,
            _ => 1,
        };
        Failure::new(code, e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::internal(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(e.into())
    }
}

type CmdResult = Result<(), Failure>;

fn sign_word(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "negative",
        Ordering::Equal => "zero",
        Ordering::Greater => "positive",
    }
}

pub fn poly(k: u32, n: u32, out: &mut impl Write) -> CmdResult {
    let od = OrderDim::new(k, n)?;
    let c = stability_constants(od);
    let mut rec = OutputRecord::new("poly").param("k", k).param("n", n);
    rec.exact("a_k", c.a_k.to_string());
    rec.exact("alpha_k", c.alpha_k.to_string());
    rec.exact("p_k", c.p_k.to_string());
    rec.exact("sign", sign_word(c.p_sign()));
    rec.exact("classification", classify(od).to_string());
    rec.write_json(out)?;
    Ok(())
}

fn with_gaps(mut recs: Vec<ThresholdRecord>) -> Vec<ThresholdRecord> {
    for i in 1..recs.len() {
        recs[i].gap_prev = Some(recs[i].n_star as i64 - recs[i - 1].n_star as i64);
    }
    recs
}

pub fn threshold(lo: u32, hi: u32, method: Method, format: Format, out: &mut impl Write) -> CmdResult {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidRange { lo, hi }.into());
    }
    let recs = match method {
        Method::Binary if lo == hi => vec![threshold_binary(lo)?],
        Method::Binary => thresholds(lo, hi)?,
        Method::Linear => with_gaps(
            (lo..=hi).into_par_iter().map(threshold_linear).collect::<equator_core::Result<Vec<_>>>()?,
        ),
    };
    if let Some(bad) = recs.iter().find(|r| !r.bound_ok) {
        return Err(Failure::new(EXIT_BOUND, anyhow!("n_{}* = {} violates n_k* < 4(k+1)", bad.k, bad.n_star)));
    }
    match format {
        Format::Json => {
            let mut rec = OutputRecord::new("threshold")
                .param("k_range", [lo, hi])
                .param("method", format!("{method:?}").to_lowercase());
            for r in &recs {
                rec.exact("n_star", r);
            }
            rec.write_json(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["k", "n_star", "bound_ok", "gap_prev"]).map_err(anyhow::Error::from)?;
            for r in &recs {
                let gap = r.gap_prev.map(|g| g.to_string()).unwrap_or_default();
                w.write_record([r.k.to_string(), r.n_star.to_string(), r.bound_ok.to_string(), gap])
                    .map_err(anyhow::Error::from)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn gaps(lo: u32, hi: u32, out: &mut impl Write) -> CmdResult {
    let report = gap_analysis(lo, hi)?;
    let mut rec = OutputRecord::new("gaps").param("k_range", [lo, hi]);
    let counts: serde_json::Map<String, serde_json::Value> =
        report.gaps.iter().map(|(g, c)| (g.to_string(), json!(c))).collect();
    rec.exact("gap_counts", counts);
    rec.exact("gap_count", report.gap_count());
    rec.exact("positions_eq1", &report.positions_eq1);
    rec.exact("positions_ge3", &report.positions_ge3);
    rec.write_json(out)?;
    Ok(())
}

pub fn verify(suite: SuiteArg, k_max: Option<u32>, out: &mut impl Write) -> CmdResult {
    let core_suite = match suite {
        SuiteArg::Lemma => Suite::Lemma,
        SuiteArg::Bound => Suite::Bound,
        SuiteArg::Radial => Suite::Radial,
        SuiteArg::Hardy => Suite::Hardy,
        SuiteArg::Ratio => Suite::Ratio,
        SuiteArg::Golden => return verify_golden(k_max, out),
    };
    let k_max = k_max.ok_or_else(|| Failure::new(EXIT_USAGE, anyhow!("--k-max is required for suite {core_suite}")))?;
    let report = verify::run(core_suite, k_max)?;
    let mut rec = OutputRecord::new("verify").param("suite", core_suite.name()).param("k_max", k_max);
    rec.exact("checked", report.checked);
    rec.exact("passed", report.passed());
    rec.exact("violation", &report.violation);
    rec.write_json(out)?;
    match report.violation {
        Some(v) => Err(Failure::new(EXIT_INVARIANT, anyhow!("suite {core_suite} failed: {v}"))),
        None => Ok(()),
    }
}

fn verify_golden(k_max: Option<u32>, out: &mut impl Write) -> CmdResult {
    let rows: Vec<_> = golden::all_rows()?.into_iter().filter(|r| k_max.map_or(true, |m| r.k <= m)).collect();
    let computed = rows
        .par_iter()
        .map(|r| threshold_binary(r.k).map(|t| t.n_star))
        .collect::<equator_core::Result<Vec<_>>>()?;
    let mismatches: Vec<_> = rows
        .iter()
        .zip(&computed)
        .filter(|(r, c)| r.n_star != **c)
        .map(|(r, c)| json!({ "k": r.k, "expected": r.n_star, "computed": c }))
        .collect();
    let mut rec = OutputRecord::new("verify").param("suite", "golden").param("k_max", k_max);
    rec.exact("checked", rows.len());
    rec.exact("passed", mismatches.is_empty());
    rec.exact("mismatches", &mismatches);
    rec.write_json(out)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(EXIT_INVARIANT, anyhow!("{} golden rows differ, first {}", mismatches.len(), mismatches[0])))
    }
}

pub struct DemoArgs {
    pub k: u32,
    pub n: u32,
    pub beta: Option<f64>,
    pub epsilon: f64,
    pub width: Option<f64>,
    pub smoothness: Option<u32>,
    pub points: usize,
}

pub fn hardy_demo(a: DemoArgs, out: &mut impl Write) -> CmdResult {
    let od = OrderDim::new(a.k, a.n)?;
    let beta_star = critical_exponent(od);
    let beta = a.beta.unwrap_or_else(|| beta_star.to_f64());
    let width = a.width.unwrap_or(0.3 * (1.0 / a.epsilon).ln());
    let cut = CutoffSpec {
        inner_radius: a.epsilon,
        transition_width: width,
        smoothness_order: a.smoothness.unwrap_or(2 * a.k),
    };
    let grid = LogGrid::new(0.5 * a.epsilon, 1.0, a.points)?;
    let phi = build_test_function(beta, &cut, &grid, a.n)?;
    let quotient = hardy_quotient_numeric(&phi, a.k)?;
    let c = stability_constants(od);
    let alpha = c.alpha_k.to_f64();
    let mut rec = OutputRecord::new("hardy-demo")
        .param("k", a.k)
        .param("n", a.n)
        .param("beta", beta)
        .param("epsilon", a.epsilon)
        .param("width", width)
        .param("smoothness", cut.smoothness_order)
        .param("points", a.points);
    rec.exact("beta_star", beta_star.to_string());
    rec.exact("alpha_k", c.alpha_k.to_string());
    if let Some(b) = ExactScalar::from_f64(beta) {
        rec.exact("power_quotient", hardy_quotient_power(&b, od).to_string());
    }
    rec.numeric("quotient", quotient);
    rec.numeric("relative_excess", quotient / alpha - 1.0);
    rec.write_json(out)?;
    Ok(())
}

pub fn instability(k: u32, n: u32, budget: usize, out: &mut impl Write) -> CmdResult {
    let od = OrderDim::new(k, n)?;
    match classify(od) {
        Classification::Unstable => {}
        Classification::Minimizing => {
            return Err(Failure::new(
                EXIT_USAGE,
                anyhow!("P_{k}({n}) = {} >= 0: the second variation is nonnegative, nothing to certify", stability_constants(od).p_k),
            ))
        }
        Classification::NotAdmissible => {
            return Err(Failure::new(EXIT_USAGE, anyhow!("n = {n} < 2k+1: the equator map has infinite {k}-energy")))
        }
    }
    let cert = instability_certificate(od, budget)?;
    let mut rec = OutputRecord::new("instability").param("k", k).param("n", n).param("budget", budget);
    rec.exact("p_k", stability_constants(od).p_k.to_string());
    rec.numeric("found", cert.found);
    rec.numeric("witness", cert.witness);
    rec.numeric("value", cert.value);
    rec.numeric("normalized_value", cert.normalized_value);
    rec.numeric("evaluations", cert.evaluations);
    rec.write_json(out)?;
    if cert.found {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_NOT_FOUND,
            anyhow!("no negative second variation within {budget} candidates (search exhausted, not a theory violation)"),
        ))
    }
}
