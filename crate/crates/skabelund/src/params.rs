//! Numeric parameters of the Skabelund curve S̃_q.
//!
//! Everything downstream (τ, semigroups, bounds, sweeps) is driven by the
//! single exponent `s ≥ 1` through
//!
//! ```text
//! q0 = 2^s,   q = 2·q0²,   m = q − 2q0 + 1,
//! g  = q(q−1)²/2,          ρ = q² + 1,
//! #points over F_{q⁴} = q⁵ − q⁴ + q³ + 1,   N = #points − 2.
//! ```
//!
//! All arithmetic is exact signed 64-bit with overflow checks at
//! construction. The point count q⁵ − q⁴ + q³ + 1 is the tightest field:
//! it fits i64 for s ≤ 5 and overflows for s ≥ 6, so those inputs are
//! rejected with a range error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Derived numeric parameters of S̃_q for a fixed exponent `s`.
///
/// Immutable after construction; every other module takes it by shared
/// reference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveParams {
    pub s: i64,
    pub q0: i64,
    pub q: i64,
    pub m: i64,
    pub genus: i64,
    pub period: i64,
    pub num_points: i64,
    pub code_length: i64,
    pub semigroup_generators: Vec<i64>,
}

fn checked(v: Option<i64>, what: &str) -> Result<i64> {
    v.ok_or_else(|| Error::range(format!("{what} overflows 64-bit signed arithmetic")))
}

impl CurveParams {
    /// Derive all parameters from the exponent `s`.
    ///
    /// `s = 0` (or negative) is a domain error; any derived quantity that
    /// does not fit in `i64` (s ≥ 6, via the point count) is a range error.
    pub fn new(s: i64) -> Result<Self> {
        if s < 1 {
            return Err(Error::domain("s must be ≥ 1"));
        }
        if s > 7 {
            return Err(Error::range(format!(
                "s = {s} is beyond the supported range (s ≤ 7)"
            )));
        }
        let q0: i64 = 1i64 << s;
        let q = 2 * q0 * q0; // at most 2^15 for s = 7
        let m = q - 2 * q0 + 1;
        let q2 = q * q;
        let genus = q * (q - 1) * (q - 1) / 2;
        let period = q2 + 1;
        let q3 = checked(q2.checked_mul(q), "q^3")?;
        let q4 = checked(q3.checked_mul(q), "q^4")?;
        let q5 = checked(q4.checked_mul(q), "q^5")?;
        let num_points = checked(
            q5.checked_sub(q4)
                .and_then(|v| v.checked_add(q3))
                .and_then(|v| v.checked_add(1)),
            "point count q^5 - q^4 + q^3 + 1",
        )?;
        let code_length = num_points - 2;
        let qq0 = q * q0;
        let semigroup_generators =
            vec![q2 - 2 * qq0 + q, q2 - qq0 + q0, q2 - q + 2 * q0, q2, q2 + 1];
        Ok(CurveParams {
            s,
            q0,
            q,
            m,
            genus,
            period,
            num_points,
            code_length,
            semigroup_generators,
        })
    }
}

/// Convenience alias for [`CurveParams::new`].
pub fn make_params(s: i64) -> Result<CurveParams> {
    CurveParams::new(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s1_matches_known_values() {
        let p = CurveParams::new(1).unwrap();
        assert_eq!(p.q0, 2);
        assert_eq!(p.q, 8);
        assert_eq!(p.m, 5);
        assert_eq!(p.genus, 196);
        assert_eq!(p.period, 65);
        assert_eq!(p.num_points, 29185);
        assert_eq!(p.code_length, 29183);
        assert_eq!(p.semigroup_generators, vec![40, 50, 60, 64, 65]);
    }

    #[test]
    fn s2_matches_known_values() {
        let p = CurveParams::new(2).unwrap();
        assert_eq!(p.q0, 4);
        assert_eq!(p.q, 32);
        assert_eq!(p.m, 25);
        assert_eq!(p.genus, 15376);
        assert_eq!(p.period, 1025);
    }

    #[test]
    fn rejects_bad_s() {
        assert!(matches!(CurveParams::new(0), Err(Error::Domain(_))));
        assert!(matches!(CurveParams::new(-3), Err(Error::Domain(_))));
        assert!(matches!(CurveParams::new(8), Err(Error::Range(_))));
        // The point count q^5 - q^4 + q^3 + 1 exceeds i64 from s = 6 on.
        assert!(matches!(CurveParams::new(6), Err(Error::Range(_))));
        assert!(matches!(CurveParams::new(7), Err(Error::Range(_))));
    }

    #[test]
    fn period_genus_identity() {
        // ρ·g == 16q0^10 − 16q0^8 + 8q0^6 − 4q0^4 + q0²
        for s in 1..=5 {
            let p = CurveParams::new(s).unwrap();
            let w = p.q0;
            let pow = |e: u32| w.checked_pow(e).unwrap();
            let rhs = 16 * pow(10) - 16 * pow(8) + 8 * pow(6) - 4 * pow(4) + pow(2);
            assert_eq!(p.period * p.genus, rhs, "s = {s}");
        }
    }

    #[test]
    fn generator_and_point_count_invariants() {
        for s in 1..=5 {
            let p = CurveParams::new(s).unwrap();
            let gens = &p.semigroup_generators;
            assert!(gens.windows(2).all(|w| w[0] < w[1]));
            // last two generators are consecutive, so the gcd is 1
            assert_eq!(gens[4] - gens[3], 1);
            // smallest generator beats the bound used in the period argument
            assert!(gens[0] > 2 * p.q * p.q0 - p.q + 1);
            // m is odd and m(q0+1) is below the period
            assert_eq!(p.m % 2, 1);
            assert!(p.m * (p.q0 + 1) < p.period);
            assert_eq!(p.period - 1, 2 * p.q0 * p.q0 * p.q);
            assert_eq!(p.code_length, p.num_points - 2);
            // q³(q²−q+1) + 1 factorization
            let q3 = p.q * p.q * p.q;
            assert_eq!(p.num_points % q3, 1);
        }
    }
}
