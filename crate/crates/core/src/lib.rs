//! Exact and numerically verified stability analysis of the equator map
//! `u*(x) = (x/|x|, 0)` from the unit ball `B^n` into `S^n` for the extrinsic
//! k-energies `∫|Δ^s u|^2` (k = 2s) and `∫|∇Δ^s u|^2` (k = 2s + 1).

pub mod error;
pub mod exact;
pub mod numeric;
pub mod product;
pub mod radial;
pub mod threshold;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{
    a_const, a_const_recurrence, alpha_const, p1_p2_closed_forms, ratio_factors, stability_constants,
    ExactScalar, OrderDim, RatioFactors, ScaledPoly, StabilityConstants,
};
pub use threshold::{classify, gap_analysis, threshold_binary, threshold_linear, Classification, GapReport, ThresholdRecord};
