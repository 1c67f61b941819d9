//! Exact-integer toolkit for two-point Weierstrass semigroup data on the
//! Skabelund maximal curve S̃_q and for minimum-distance estimates of the
//! duals of two-point AG codes built on it.
//!
//! The pipeline, bottom to top:
//!
//! - [`params`]: every numeric invariant of S̃_q derived from the single
//!   exponent s (q0 = 2^s, q = 2q0², genus, period ρ = q²+1, point
//!   counts, the five Weierstrass generators at P∞).
//! - [`semigroup`]: plain additive-closure numerical semigroups — the
//!   independent substrate the τ computations are checked against.
//! - [`tau`]: the closed-form τ_{P,P∞} via unique quadruple
//!   decomposition, one cached period, and the O(1) inverse.
//! - [`two_point`]: membership of H(P, P∞), Riemann-Roch dimensions,
//!   G-non-gaps, the ν counts, and semigroup scatter data.
//! - [`bound`]: the generalized order bound as a maximin lattice DP,
//!   Goppa dual bounds, dual dimensions, one-point competitors.
//! - [`report`]: the (a, b) sweep and the d-vs-d1 comparison table.
//!
//! The `skab` binary exposes all of it with JSON/CSV output.

pub mod bound;
pub mod error;
pub mod params;
pub mod report;
pub mod semigroup;
pub mod tau;
pub mod two_point;

pub use bound::{
    best_one_point, dual_dimension, goppa_dual, order_bound, order_bound_with_horizon, BoundEngine,
    BoundReport, BoundTable, OnePointBound,
};
pub use error::{Error, Result};
pub use params::{make_params, CurveParams};
pub use report::{sweep, SweepConfig, SweepResult, TableRow};
pub use semigroup::NumericalSemigroup;
pub use tau::{decompose, period_sum, tau, tau_inv_naive, Decomposition, TauTable};
pub use two_point::{
    figure_points, g_nongap_p, g_nongap_pinf, in_semigroup, nu_p, nu_pinf, rr_dim, DivisorSpec,
};
