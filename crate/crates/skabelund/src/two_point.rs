//! Everything the τ map yields about H(P, P∞): two-point membership,
//! Riemann-Roch dimensions, G-non-gap sets, the per-step ν counts of the
//! order bound, and the semigroup scatter data.
//!
//! Orientation is fixed once and for all: τ means τ_{P,P∞} and a pair
//! (i, j) always reads (pole order at P, pole order at P∞); a divisor
//! aP + bP∞ is the pair (a, b).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tau::TauTable;

/// Coefficients of the divisor G = aP + bP∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorSpec {
    pub a: i64,
    pub b: i64,
}

impl DivisorSpec {
    pub fn new(a: i64, b: i64) -> Self {
        DivisorSpec { a, b }
    }

    pub fn degree(&self) -> i64 {
        self.a + self.b
    }
}

/// (i, j) ∈ H(P, P∞) ⟺ τ(i) ≤ j and τ⁻¹(j) ≤ i.
pub fn in_semigroup(tt: &TauTable, i: i64, j: i64) -> bool {
    tt.tau(i) <= j && tt.tau_inv(j) <= i
}

/// dim L(aP + bP∞) = #{i ≤ a : τ(i) ≤ b}, for a, b ≥ 0.
///
/// Only i ∈ [−b, a] can qualify (below −b, τ(i) ≥ −i > b), so the count
/// is finite without further argument.
pub fn rr_dim(tt: &TauTable, d: DivisorSpec) -> Result<i64> {
    if d.a < 0 || d.b < 0 {
        return Err(Error::domain(
            "Riemann-Roch dimension requires a ≥ 0 and b ≥ 0",
        ));
    }
    Ok((-d.b..=d.a).filter(|&i| tt.tau(i) <= d.b).count() as i64)
}

/// i ∈ H(P; bP∞) ⟺ τ(i) ≤ b. The P-coefficient of G is irrelevant
/// because H(R; G + R) = H(R; G).
pub fn g_nongap_p(tt: &TauTable, b: i64, i: i64) -> bool {
    tt.tau(i) <= b
}

/// i ∈ H(P∞; aP) ⟺ τ⁻¹(i) ≤ a.
pub fn g_nongap_pinf(tt: &TauTable, a: i64, i: i64) -> bool {
    tt.tau_inv(i) <= a
}

/// ν(P; aP + bP∞) = #{(x, y) : x ∈ H(P), τ(y) ≤ b, x + y = a + 1}.
///
/// x runs over H(P) ∩ [0, a+1+b]: τ(y) ≤ b forces y ≥ −b, hence the cap.
pub fn nu_p(tt: &TauTable, d: DivisorSpec) -> i64 {
    let n = d.a + 1;
    let hi = n + d.b;
    if hi < 0 {
        return 0;
    }
    (0..=hi)
        .filter(|&x| tt.tau(x) <= 0 && tt.tau(n - x) <= d.b)
        .count() as i64
}

/// ν(P∞; aP + bP∞) = #{(x, y) : x ∈ H(P∞), τ⁻¹(y) ≤ a, x + y = b + 1};
/// the mirror of [`nu_p`] with the roles of a, b and of τ, τ⁻¹ swapped.
pub fn nu_pinf(tt: &TauTable, d: DivisorSpec) -> i64 {
    let n = d.b + 1;
    let hi = n + d.a;
    if hi < 0 {
        return 0;
    }
    (0..=hi)
        .filter(|&x| tt.tau_inv(x) <= 0 && tt.tau_inv(n - x) <= d.a)
        .count() as i64
}

/// All (i, j) ∈ H(P, P∞) with −wρ < i, j < wρ, lexicographically sorted.
pub fn figure_points(tt: &TauTable, window_multiple: i64) -> Result<Vec<(i64, i64)>> {
    if window_multiple < 1 {
        return Err(Error::domain("window multiple must be ≥ 1"));
    }
    let lim = window_multiple * tt.period();
    let mut pts = Vec::new();
    for i in (-lim + 1)..lim {
        let lo = tt.tau(i).max(-lim + 1);
        for j in lo..lim {
            if tt.tau_inv(j) <= i {
                pts.push((i, j));
            }
        }
    }
    Ok(pts)
}
