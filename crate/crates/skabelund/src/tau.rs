//! The closed-form τ = τ_{P,P∞} of the two-point Weierstrass semigroup
//! H(P, P∞) of S̃_q, together with its unique-decomposition underpinning
//! and the O(1) inverse τ⁻¹ = τ_{P∞,P}.
//!
//! Every integer i decomposes uniquely, with k = ⌊(i−1)/ρ⌋, as
//!
//! ```text
//! i = (k+1)ρ − (a_t + m·a_x + (q0+1)m·a_y + (2q0+1)m·a_z)
//! ```
//!
//! subject to 0 ≤ a_t ≤ m−1 and, writing r = i − kρ − 1 ∈ [0, ρ−1]:
//! either r < m(q0+1) (the "low" residues: a_y = 0, a_z = q0,
//! 0 ≤ a_x ≤ q0) or r ≥ m(q0+1) (0 ≤ a_y ≤ 1, 0 ≤ a_x ≤ q0−a_y,
//! 0 ≤ a_z ≤ q0−1). Then
//!
//! ```text
//! τ(i) = a_t·q² + a_z(q²−q+2q0) + a_y(q²−qq0+q0) + a_x(q²−2qq0+q) − (k+1)ρ
//! ```
//!
//! which satisfies −i ≤ τ(i) ≤ 2g−i, τ(i+ρ) = τ(i) − ρ, and
//! Σ_{i=c}^{c+ρ−1}(i + τ(i)) = ρg for every c.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CurveParams;

/// The unique admissible quadruple for one integer, plus the bookkeeping
/// values `k` and `r` it was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub i: i64,
    pub k: i64,
    pub r: i64,
    pub case_low: bool,
    pub a_t: i64,
    pub a_x: i64,
    pub a_y: i64,
    pub a_z: i64,
}

/// Decompose `i` in closed form, solving the congruences in the same
/// order the uniqueness argument runs: mod m, then mod 2q0+1, then the
/// split at q0+1.
pub fn decompose(p: &CurveParams, i: i64) -> Decomposition {
    let (q0, m, rho) = (p.q0, p.m, p.period);
    let k = (i - 1).div_euclid(rho);
    let r = i - k * rho - 1;
    debug_assert!((0..rho).contains(&r));
    // total = (k+1)ρ − i = ρ − 1 − r, the value the quadruple must realize
    let total = rho - 1 - r;
    let case_low = r < m * (q0 + 1);
    let (a_t, a_x, a_y, a_z);
    if case_low {
        let rest = total - (2 * q0 + 1) * m * q0;
        a_t = rest % m;
        a_x = rest / m;
        a_y = 0;
        a_z = q0;
    } else {
        a_t = total % m;
        let rest = total / m;
        let e = rest % (2 * q0 + 1);
        a_z = rest / (2 * q0 + 1);
        a_y = e / (q0 + 1);
        a_x = e - (q0 + 1) * a_y;
    }
    let d = Decomposition {
        i,
        k,
        r,
        case_low,
        a_t,
        a_x,
        a_y,
        a_z,
    };
    debug_assert_eq!(reconstruct(p, &d), i);
    d
}

/// The integer a decomposition stands for; inverse of [`decompose`].
pub fn reconstruct(p: &CurveParams, d: &Decomposition) -> i64 {
    let (q0, m, rho) = (p.q0, p.m, p.period);
    (d.k + 1) * rho - (d.a_t + m * d.a_x + (q0 + 1) * m * d.a_y + (2 * q0 + 1) * m * d.a_z)
}

/// τ(i) evaluated directly from the closed-form decomposition.
pub fn tau(p: &CurveParams, i: i64) -> i64 {
    let d = decompose(p, i);
    let (q0, q, rho) = (p.q0, p.q, p.period);
    let q2 = q * q;
    d.a_t * q2
        + d.a_z * (q2 - q + 2 * q0)
        + d.a_y * (q2 - q * q0 + q0)
        + d.a_x * (q2 - 2 * q * q0 + q)
        - (d.k + 1) * rho
}

/// Σ_{i=c}^{c+ρ−1} (i + τ(i)); equals ρ·g for every starting point c.
pub fn period_sum(p: &CurveParams, c: i64) -> i64 {
    (c..c + p.period).map(|i| i + tau(p, i)).sum()
}

/// Linear-scan inverse over an explicit window; the reference
/// implementation [`TauTable::tau_inv`] is checked against.
///
/// The window must contain the preimage — `[−j−1, 2g−j+ρ]` always does,
/// by the bound −i ≤ τ(i) ≤ 2g−i.
pub fn tau_inv_naive(p: &CurveParams, j: i64, window_lo: i64, window_hi: i64) -> Result<i64> {
    (window_lo..=window_hi)
        .find(|&i| tau(p, i) == j)
        .ok_or_else(|| Error::domain(format!("preimage of {j} not found in window")))
}

/// One cached period of τ plus the residue anchors that make the inverse
/// a constant-time lookup.
///
/// τ(i+ρ) = τ(i) − ρ means one period determines the whole map, and that
/// i ↦ τ(i) mod ρ permutes the residues: `inv_anchor[τ(i₀) mod ρ] = i₀`
/// for i₀ in the base window `[0, ρ−1]`.
#[derive(Debug, Clone)]
pub struct TauTable {
    params: CurveParams,
    window_lo: i64,
    window_hi: i64,
    tau_values: Vec<i64>,
    inv_anchor: Vec<i64>,
}

impl TauTable {
    pub fn new(params: CurveParams) -> Self {
        let rho = params.period;
        let mut tau_values = Vec::with_capacity(rho as usize);
        let mut inv_anchor = vec![i64::MIN; rho as usize];
        for i in 0..rho {
            let t = tau(&params, i);
            tau_values.push(t);
            inv_anchor[t.rem_euclid(rho) as usize] = i;
        }
        // Bijectivity of τ mod ρ guarantees every anchor slot is filled.
        assert!(
            inv_anchor.iter().all(|&v| v != i64::MIN),
            "tau is not a bijection on residues mod rho"
        );
        TauTable {
            params,
            window_lo: 0,
            window_hi: rho - 1,
            tau_values,
            inv_anchor,
        }
    }

    pub fn from_s(s: i64) -> Result<Self> {
        Ok(Self::new(CurveParams::new(s)?))
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn genus(&self) -> i64 {
        self.params.genus
    }

    pub fn period(&self) -> i64 {
        self.params.period
    }

    pub fn window(&self) -> (i64, i64) {
        (self.window_lo, self.window_hi)
    }

    /// τ(i) for any integer, answered from the cached window via
    /// periodicity.
    pub fn tau(&self, i: i64) -> i64 {
        let rho = self.params.period;
        let shift = i.div_euclid(rho);
        self.tau_values[(i - shift * rho) as usize] - shift * rho
    }

    /// The unique i with τ(i) = j.
    ///
    /// Finds the base-window i₀ whose τ value is congruent to j mod ρ;
    /// the exact preimage is then i₀ shifted by the (exactly divisible)
    /// ρ-multiple separating τ(i₀) from j.
    pub fn tau_inv(&self, j: i64) -> i64 {
        let rho = self.params.period;
        let i0 = self.inv_anchor[j.rem_euclid(rho) as usize];
        i0 + (self.tau_values[i0 as usize] - j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> CurveParams {
        CurveParams::new(1).unwrap()
    }

    #[test]
    fn decompose_spec_cases() {
        let p = s1();
        let d0 = decompose(&p, 0);
        assert_eq!((d0.k, d0.r, d0.case_low), (-1, 64, false));
        assert_eq!((d0.a_t, d0.a_x, d0.a_y, d0.a_z), (0, 0, 0, 0));

        let d1 = decompose(&p, 1);
        assert_eq!((d1.k, d1.r, d1.case_low), (0, 0, true));
        assert_eq!((d1.a_t, d1.a_x, d1.a_y, d1.a_z), (4, 2, 0, 2));

        let d40 = decompose(&p, 40);
        assert_eq!((d40.k, d40.r, d40.case_low), (0, 39, false));
        assert_eq!((d40.a_t, d40.a_x, d40.a_y, d40.a_z), (0, 0, 0, 1));
    }

    #[test]
    fn tau_spec_values() {
        let p = s1();
        assert_eq!(tau(&p, 0), 0);
        assert_eq!(tau(&p, 1), 391); // saturates the upper bound 2g − 1
        assert_eq!(tau(&p, 40), -5);
        assert_eq!(tau(&p, 65), -65);
    }

    #[test]
    fn period_sums() {
        let p = s1();
        assert_eq!(period_sum(&p, 0), 12740);
        assert_eq!(period_sum(&p, -100), 12740);
        let p2 = CurveParams::new(2).unwrap();
        assert_eq!(period_sum(&p2, 0), 1025 * 15376);
    }

    #[test]
    fn table_matches_direct_formula() {
        for s in [1, 2] {
            let tt = TauTable::from_s(s).unwrap();
            let rho = tt.period();
            for i in -3 * rho..=3 * rho {
                assert_eq!(tt.tau(i), tau(tt.params(), i));
            }
        }
    }

    #[test]
    fn inverse_spec_values() {
        let tt = TauTable::from_s(1).unwrap();
        assert_eq!(tt.tau_inv(0), 0);
        assert_eq!(tt.tau_inv(391), 1);
        assert_eq!(tt.tau_inv(-5), 40);
    }

    #[test]
    fn naive_inverse() {
        let p = s1();
        assert_eq!(tau_inv_naive(&p, 0, -10, 400).unwrap(), 0);
        assert_eq!(tau_inv_naive(&p, -65, 0, 200).unwrap(), 65);
        assert_eq!(tau_inv_naive(&p, -5, 0, 200).unwrap(), 40);
        // preimage of 0 is 0, outside this window
        assert!(tau_inv_naive(&p, 0, 5, 30).is_err());
    }

    #[test]
    fn admissible_quadruple_count_equals_period() {
        for s in [1, 2] {
            let p = CurveParams::new(s).unwrap();
            // m(q0+1) low-case quadruples + m(q+q0) high-case quadruples = ρ
            let low = p.m * (p.q0 + 1);
            let high = p.m * (p.q + p.q0);
            assert_eq!(low + high, p.period);
        }
    }
}
