//! Exact arithmetic for eta-quotient q-series.
//!
//! The crate expands eta quotients over the rationals, builds Eisenstein
//! series attached to real quadratic characters, evaluates Dirichlet
//! L-values at negative integers, tabulates Hurwitz class numbers, and
//! composes all of these through sieving, dilation, and Hecke operators.
//! On top sits a registry of named verifications: sign-pattern theorems for
//! coefficient sequences, closed-form expansion checks, and identity checks
//! that compute both sides by independent routes.
//!
//! All coefficients are exact `BigRational` values; nothing is floating
//! point. Heavy loops run data-parallel under the default `parallel`
//! feature and fall back to sequential code without it; the feature changes
//! throughput only, never results.

pub mod arith;
pub mod chars;
pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod hurwitz;
pub mod operators;
mod parallel;
pub mod series;
pub mod verify;

pub use chars::CharacterSpec;
pub use eisenstein::{eisenstein_coeffs, normalized_eisenstein, EisensteinSpec};
pub use error::{Error, Result};
pub use hurwitz::{hurwitz_class_number, HurwitzTable};
pub use series::{
    eta_quotient_fourier, eta_quotient_series, CoeffSeries, EtaQuotientSpec,
};
pub use verify::checks::{
    default_scan_set, named_checks, run_named, scan_qp_threshold, theorem_ids, verify_theorem,
    QpFamily,
};
pub use verify::{sturm_bound, Pipeline, Status, VerificationReport, Violation};
