//! Critical dimensions `n_k*`: the first `n >= 2k+1` with `P_k(n) >= 0`.
//!
//! `P_k` is negative on `[2k+1, n_k*)` and nonnegative from `n_k*` on, and
//! `n_k* < 4(k+1)`, so every search runs over the window `[2k+1, 4(k+1))`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{stability_constants, OrderDim, ScaledPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRecord {
    pub k: u32,
    pub n_star: u32,
    /// `n_star < 4(k+1)`.
    pub bound_ok: bool,
    /// `n_k* - n_{k-1}*`, filled when the previous threshold is known.
    pub gap_prev: Option<i64>,
}

/// Half-open search window `[2k+1, 4(k+1))`.
pub fn search_window(k: u32) -> (u32, u32) {
    (2 * k + 1, 4 * (k + 1))
}

fn record(k: u32, n_star: u32) -> ThresholdRecord {
    ThresholdRecord { k, n_star, bound_ok: n_star < 4 * (k + 1), gap_prev: None }
}

fn nonneg(poly: &ScaledPoly, n: u32) -> bool {
    poly.sign(n) != Ordering::Less
}

/// Scan upward from `2k+1`, one sign evaluation per dimension.
pub fn threshold_linear(k: u32) -> Result<ThresholdRecord> {
    if k == 0 {
        return Err(Error::InvalidOrderDim { k, n: 1 });
    }
    let poly = ScaledPoly::new(k);
    let (lo, hi) = search_window(k);
    for n in lo..hi {
        if nonneg(&poly, n) {
            if n == lo {
                return Err(Error::SignPattern { k, n });
            }
            return Ok(record(k, n));
        }
    }
    Err(Error::BoundViolated { k, lo, hi })
}

/// Binary search on the sign dichotomy; `O(log k)` exact evaluations.
pub fn threshold_binary(k: u32) -> Result<ThresholdRecord> {
    if k == 0 {
        return Err(Error::InvalidOrderDim { k, n: 1 });
    }
    let poly = ScaledPoly::new(k);
    let (lo, hi) = search_window(k);
    if nonneg(&poly, lo) {
        return Err(Error::SignPattern { k, n: lo });
    }
    if !nonneg(&poly, hi - 1) {
        return Err(Error::BoundViolated { k, lo, hi });
    }
    let n_star = bisect(&poly, lo, hi - 1);
    self_check(&poly, n_star)?;
    Ok(record(k, n_star))
}

/// Smallest nonnegative point in `(neg, pos]`, given `P(neg) < 0 <= P(pos)`.
fn bisect(poly: &ScaledPoly, mut neg: u32, mut pos: u32) -> u32 {
    while pos - neg > 1 {
        let mid = neg + (pos - neg) / 2;
        if nonneg(poly, mid) {
            pos = mid;
        } else {
            neg = mid;
        }
    }
    pos
}

fn self_check(poly: &ScaledPoly, n_star: u32) -> Result<()> {
    let k = poly.k();
    if n_star > 2 * k + 1 && nonneg(poly, n_star - 1) {
        return Err(Error::SignPattern { k, n: n_star - 1 });
    }
    Ok(())
}

/// Galloping search outward from `hint`, used when thresholds of neighbouring
/// orders are computed in sequence (the hint is then `n_{k-1}* + 2`).
pub fn threshold_from_hint(k: u32, hint: u32) -> Result<ThresholdRecord> {
    if k == 0 {
        return Err(Error::InvalidOrderDim { k, n: 1 });
    }
    let poly = ScaledPoly::new(k);
    let (lo, hi) = search_window(k);
    let start = hint.clamp(lo, hi - 1);
    let (neg, pos) = if nonneg(&poly, start) {
        let mut pos = start;
        let mut step = 1;
        loop {
            let probe = pos.saturating_sub(step).max(lo);
            if !nonneg(&poly, probe) {
                break (probe, pos);
            }
            if probe == lo {
                return Err(Error::SignPattern { k, n: lo });
            }
            pos = probe;
            step *= 2;
        }
    } else {
        let mut neg = start;
        let mut step = 1;
        loop {
            let probe = (neg + step).min(hi - 1);
            if nonneg(&poly, probe) {
                break (neg, probe);
            }
            if probe == hi - 1 {
                return Err(Error::BoundViolated { k, lo, hi });
            }
            neg = probe;
            step *= 2;
        }
    };
    let n_star = bisect(&poly, neg, pos);
    self_check(&poly, n_star)?;
    Ok(record(k, n_star))
}

fn chain(k_lo: u32, k_hi: u32) -> Result<Vec<ThresholdRecord>> {
    let mut out: Vec<ThresholdRecord> = Vec::with_capacity((k_hi - k_lo + 1) as usize);
    for k in k_lo..=k_hi {
        let rec = match out.last() {
            Some(prev) => {
                let mut rec = threshold_from_hint(k, prev.n_star + 2)?;
                rec.gap_prev = Some(rec.n_star as i64 - prev.n_star as i64);
                rec
            }
            None => threshold_binary(k)?,
        };
        out.push(rec);
    }
    Ok(out)
}

/// Thresholds for every `k` in `k_lo..=k_hi`, sorted by `k`, with `gap_prev`
/// set for all but the first record.
pub fn thresholds(k_lo: u32, k_hi: u32) -> Result<Vec<ThresholdRecord>> {
    if k_lo == 0 || k_lo > k_hi {
        return Err(Error::InvalidRange { lo: k_lo, hi: k_hi });
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let chunk = 256u32;
        let starts: Vec<u32> = (k_lo..=k_hi).step_by(chunk as usize).collect();
        let parts: Vec<Vec<ThresholdRecord>> = starts
            .par_iter()
            .map(|&a| chain(a, (a + chunk - 1).min(k_hi)))
            .collect::<Result<_>>()?;
        let mut out: Vec<ThresholdRecord> = Vec::with_capacity((k_hi - k_lo + 1) as usize);
        for part in parts {
            for mut rec in part {
                if let Some(prev) = out.last() {
                    rec.gap_prev = Some(rec.n_star as i64 - prev.n_star as i64);
                }
                out.push(rec);
            }
        }
        Ok(out)
    }
    #[cfg(not(feature = "parallel"))]
    {
        chain(k_lo, k_hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Minimizing,
    Unstable,
    NotAdmissible,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Minimizing => "Minimizing",
            Classification::Unstable => "Unstable",
            Classification::NotAdmissible => "NotAdmissible",
        })
    }
}

/// `P_k(n) = 0` counts as minimizing.
pub fn classify(od: OrderDim) -> Classification {
    if !od.sobolev_admissible() {
        Classification::NotAdmissible
    } else if stability_constants(od).is_nonnegative() {
        Classification::Minimizing
    } else {
        Classification::Unstable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub k_range: (u32, u32),
    /// Gap value -> number of occurrences.
    pub gaps: BTreeMap<i64, usize>,
    /// Orders `k` with `n_k* - n_{k-1}* >= 3`.
    pub positions_ge3: Vec<u32>,
    /// Orders `k` with `n_k* - n_{k-1}* == 1`.
    pub positions_eq1: Vec<u32>,
    #[serde(skip)]
    pub records: Vec<ThresholdRecord>,
}

impl GapReport {
    /// Assembles the report from records sorted by consecutive `k`; gaps are
    /// recomputed from `n_star` rather than trusted from `gap_prev`.
    pub fn from_records(records: Vec<ThresholdRecord>) -> Self {
        let k_range = (
            records.first().map_or(0, |r| r.k),
            records.last().map_or(0, |r| r.k),
        );
        let mut gaps = BTreeMap::new();
        let mut positions_ge3 = Vec::new();
        let mut positions_eq1 = Vec::new();
        for w in records.windows(2) {
            let gap = w[1].n_star as i64 - w[0].n_star as i64;
            *gaps.entry(gap).or_insert(0) += 1;
            if gap >= 3 {
                positions_ge3.push(w[1].k);
            }
            if gap == 1 {
                positions_eq1.push(w[1].k);
            }
        }
        GapReport { k_range, gaps, positions_ge3, positions_eq1, records }
    }

    pub fn gap_count(&self) -> usize {
        self.gaps.values().sum()
    }
}

pub fn gap_analysis(k_lo: u32, k_hi: u32) -> Result<GapReport> {
    if k_lo == 0 || k_lo >= k_hi {
        return Err(Error::InvalidRange { lo: k_lo, hi: k_hi });
    }
    Ok(GapReport::from_records(thresholds(k_lo, k_hi)?))
}
