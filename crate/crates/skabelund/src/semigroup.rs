//! Finitely generated numerical semigroups.
//!
//! Membership is a plain additive-closure dynamic program; the table is
//! extended until a run of `min(generators)` consecutive members appears,
//! which pins the conductor. Gaps, genus and O(1) membership queries fall
//! out of the table. This is deliberately the dumb-but-trustworthy
//! construction: it is the independent substrate the τ-based computations
//! are cross-checked against.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    conductor: i64,
    gaps: Vec<i64>,
    genus: i64,
    #[serde(skip)]
    membership: Vec<bool>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Build the semigroup generated by `gens`.
    ///
    /// Requires a non-empty list of positive integers with gcd 1
    /// (otherwise the complement of the "semigroup" would be infinite and
    /// it would not be a numerical semigroup).
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::domain("generator list must be non-empty"));
        }
        if gens.iter().any(|&g| g < 1) {
            return Err(Error::domain("generators must be positive"));
        }
        let mut generators: Vec<i64> = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        if generators.iter().copied().fold(0, gcd) != 1 {
            return Err(Error::domain("not a numerical semigroup"));
        }

        let min_gen = generators[0];
        let max_gen = *generators.last().unwrap();

        // ⟨1⟩ = ℕ: conductor 0, no gaps.
        if min_gen == 1 {
            return Ok(NumericalSemigroup {
                generators,
                conductor: 0,
                gaps: Vec::new(),
                genus: 0,
                membership: vec![true; (max_gen + 1) as usize],
            });
        }

        // Grow the closure table until min_gen consecutive members show up;
        // from the start of that run every larger integer is a member.
        let mut limit = (min_gen * max_gen).max(4 * max_gen) as usize;
        let (membership, conductor) = loop {
            let mut table = vec![false; limit + 1];
            table[0] = true;
            for n in 1..=limit {
                table[n] = generators
                    .iter()
                    .take_while(|&&g| g as usize <= n)
                    .any(|&g| table[n - g as usize]);
            }
            let mut run = 0usize;
            let mut conductor = None;
            for (n, &is_member) in table.iter().enumerate() {
                run = if is_member { run + 1 } else { 0 };
                if run == min_gen as usize {
                    conductor = Some((n + 1 - run) as i64);
                    break;
                }
            }
            match conductor {
                Some(c) => break (table, c),
                None => limit *= 2,
            }
        };

        let table_hi = (conductor + max_gen) as usize;
        let mut membership = membership;
        membership.resize(table_hi + 1, false);
        for entry in membership.iter_mut().skip(conductor as usize) {
            *entry = true;
        }
        let gaps: Vec<i64> = (1..conductor)
            .filter(|&n| !membership[n as usize])
            .collect();
        let genus = gaps.len() as i64;
        Ok(NumericalSemigroup {
            generators,
            conductor,
            gaps,
            genus,
            membership,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Smallest c such that every n ≥ c is a member.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Membership test; negative integers are never members and anything
    /// at or above the conductor is a member without a table lookup.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n >= self.conductor {
            true
        } else {
            self.membership[n as usize]
        }
    }

    /// All members in `[0, n]`, ascending.
    pub fn elements_up_to(&self, n: i64) -> Vec<i64> {
        (0..=n).filter(|&x| self.contains(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_naturals() {
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(s.genus(), 0);
        assert_eq!(s.conductor(), 0);
        assert!(s.gaps().is_empty());
        assert!(s.contains(0) && s.contains(17));
    }

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.elements_up_to(5), vec![0, 2, 3, 4, 5]);
    }

    #[test]
    fn skabelund_s1_semigroup() {
        let s = NumericalSemigroup::from_generators(&[40, 50, 60, 64, 65]).unwrap();
        assert_eq!(s.genus(), 196);
        assert_eq!(s.conductor(), 392);
        assert!(s.contains(0));
        assert!(s.contains(90)); // 40 + 50
        assert!(!s.contains(-3));
        assert!(!s.contains(39));
        assert_eq!(s.elements_up_to(0), vec![0]);
        assert_eq!(s.elements_up_to(41), vec![0, 40]);
    }

    #[test]
    fn rejects_non_semigroups() {
        assert!(matches!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn additive_closure_exhaustive_s1() {
        let s = NumericalSemigroup::from_generators(&[40, 50, 60, 64, 65]).unwrap();
        let hi = s.conductor() + s.generators().last().unwrap();
        let members = s.elements_up_to(hi);
        for &a in &members {
            for &b in &members {
                if a + b <= hi {
                    assert!(s.contains(a + b), "{a} + {b} escaped the closure");
                }
            }
        }
    }

    #[test]
    fn generator_order_is_normalized() {
        let s = NumericalSemigroup::from_generators(&[65, 40, 64, 50, 60, 40]).unwrap();
        assert_eq!(s.generators(), &[40, 50, 60, 64, 65]);
        assert_eq!(s.genus(), 196);
    }
}
