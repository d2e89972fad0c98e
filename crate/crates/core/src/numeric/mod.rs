//! Floating-point verification layer on log-spaced radial grids.
//!
//! With `t = log r` the radial Laplacian becomes `e^{-2t}(∂_t^2 + (n-2)∂_t)`
//! and `∫_{B^n} g dx = ω_{n-1} ∫ g r^n dt`. The sphere area `ω_{n-1}` is a
//! common positive factor of every quotient and sign test here and is dropped.

mod certificate;
mod cutoff;
mod fd;
mod grid;
mod hardy;
mod quadrature;

pub use certificate::{instability_certificate, Certificate, Witness, MAX_CERTIFICATE_ORDER};
pub use cutoff::{build_test_function, smoothstep, CutoffSpec};
pub use fd::{fd_radial_derivative, fd_scalar_laplacian, STENCIL_WIDTH};
pub use grid::{GridFunction, LogGrid};
pub use hardy::{hardy_quotient_numeric, stability_form_numeric, FormValue};
pub use quadrature::{radial_integral, GAUSS_LEGENDRE_4};
