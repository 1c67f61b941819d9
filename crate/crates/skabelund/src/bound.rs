//! The generalized order bound d(G) for G = aP + bP∞, with sequences over
//! {P, P∞} and horizon 4g − 1 − deg(G), plus the Goppa dual bound and dual
//! code dimensions.
//!
//! d(G) is a maximin over lattice paths: from prefix state (u, v) (u steps
//! at P, v at P∞ so far) a step to P is dimension-increasing iff
//! τ(a+u+1) ≤ b+v and then contributes ν(P; (a+u)P + (b+v)P∞) to the
//! path's running minimum; a step to P∞ mirrors this through τ⁻¹. Steps
//! that do not increase the dimension contribute nothing. Every complete
//! path is finally min-ed with a tail floor: beyond the horizon each step
//! increases the dimension and has ν = deg + 2 − 2g, so an infinite tail
//! starting at degree D contributes exactly max(1, D + 2 − 2g). With the
//! default horizon the floor is 2g + 1; with a shorter one it is the
//! worst case of the ignored tail, which keeps truncation sound.
//!
//! The recursion depends only on the absolute state (A, B) = (a+u, b+v)
//! and on the boundary line A + B = deg + horizon, so sweeps share one
//! dense table over the triangle A + B ≤ 4g − 1 (see [`BoundTable`])
//! instead of re-running the per-divisor program.

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tau::TauTable;
use crate::two_point::{nu_p, nu_pinf, rr_dim, DivisorSpec};

/// Everything the CLI reports for one divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub a: i64,
    pub b: i64,
    pub degree: i64,
    pub rr_dimension: i64,
    pub dual_dimension: i64,
    pub goppa_dual: i64,
    pub order_bound: i64,
    pub horizon: i64,
}

/// Best one-point competitor at a fixed dual dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OnePointBound {
    pub k: i64,
    pub b_prime: i64,
    pub d1: i64,
}

/// Goppa bound for the dual code: deg(G) − 2g + 2 (may be ≤ 0; reported
/// as-is).
pub fn goppa_dual(tt: &TauTable, d: DivisorSpec) -> i64 {
    d.degree() - 2 * tt.genus() + 2
}

/// Dimension of C_L(D, G)^⊥, i.e. N − dim L(G); valid while
/// deg(G) < N, where L(G − D) = 0.
pub fn dual_dimension(tt: &TauTable, d: DivisorSpec) -> Result<i64> {
    let n = tt.params().code_length;
    if d.degree() >= n {
        return Err(Error::domain(format!(
            "deg(G) = {} must be below the code length {n}",
            d.degree()
        )));
    }
    Ok(n - rr_dim(tt, d)?)
}

/// The first 4g − 1 − deg(G) sequence entries determine d(G); later ones
/// contribute the tail floor only.
pub fn default_horizon(tt: &TauTable, d: DivisorSpec) -> i64 {
    (4 * tt.genus() - 1 - d.degree()).max(0)
}

fn tail_floor(genus: i64, degree: i64, horizon: i64) -> i64 {
    (degree + horizon + 2 - 2 * genus).max(1)
}

fn validate(d: DivisorSpec) -> Result<()> {
    if d.a < 0 || d.b < 0 {
        return Err(Error::domain("order bound requires a ≥ 0 and b ≥ 0"));
    }
    if d.degree() < 1 {
        return Err(Error::domain(
            "order bound requires a nonzero divisor (a + b ≥ 1)",
        ));
    }
    Ok(())
}

/// Order-bound evaluator with a ν memo shared across calls.
///
/// The memo is keyed by (point, a+u, b+v); concurrent fills are benign
/// because a key always maps to the same value.
pub struct BoundEngine<'a> {
    tt: &'a TauTable,
    nu_memo: DashMap<(bool, i64, i64), i64>,
}

impl<'a> BoundEngine<'a> {
    pub fn new(tt: &'a TauTable) -> Self {
        BoundEngine {
            tt,
            nu_memo: DashMap::new(),
        }
    }

    pub fn tau_table(&self) -> &TauTable {
        self.tt
    }

    fn nu(&self, at_p: bool, a: i64, b: i64) -> i64 {
        if let Some(v) = self.nu_memo.get(&(at_p, a, b)) {
            return *v;
        }
        let d = DivisorSpec::new(a, b);
        let v = if at_p {
            nu_p(self.tt, d)
        } else {
            nu_pinf(self.tt, d)
        };
        self.nu_memo.insert((at_p, a, b), v);
        v
    }

    /// d(G) at the default horizon 4g − 1 − deg(G).
    pub fn order_bound(&self, d: DivisorSpec) -> Result<i64> {
        validate(d)?;
        Ok(self.run_dp(d, default_horizon(self.tt, d)))
    }

    /// d(G) with an explicit horizon (number of sequence entries
    /// examined). Shorter horizons give sound but possibly weaker bounds;
    /// longer ones cannot change the default-horizon value.
    pub fn order_bound_with_horizon(&self, d: DivisorSpec, horizon: i64) -> Result<i64> {
        validate(d)?;
        if horizon < 0 {
            return Err(Error::domain("horizon must be ≥ 0"));
        }
        Ok(self.run_dp(d, horizon))
    }

    /// Backward induction over anti-diagonals u + v = t, keeping one
    /// diagonal in memory. A step that does not increase the dimension
    /// passes the continuation through, which realizes the "min over
    /// dimension-changing indices only" convention without a sentinel.
    fn run_dp(&self, d: DivisorSpec, horizon: i64) -> i64 {
        let g = self.tt.genus();
        let floor = tail_floor(g, d.degree(), horizon);
        let len = horizon as usize + 1;
        let mut next = vec![floor; len + 1];
        for t in (0..horizon).rev() {
            let mut cur = vec![0i64; t as usize + 1];
            for (u, slot) in cur.iter_mut().enumerate() {
                let (a, b) = (d.a + u as i64, d.b + t - u as i64);
                let cont_p = next[u + 1];
                let to_p = if self.tt.tau(a + 1) <= b {
                    cont_p.min(self.nu(true, a, b))
                } else {
                    cont_p
                };
                let cont_i = next[u];
                let to_inf = if self.tt.tau_inv(b + 1) <= a {
                    cont_i.min(self.nu(false, a, b))
                } else {
                    cont_i
                };
                *slot = to_p.max(to_inf);
            }
            next = cur;
        }
        next[0]
    }

    /// The best one-point code C_L(D, b′P∞)^⊥ of dual dimension k:
    /// the largest order bound over the (consecutive) run of b′ with
    /// matching dimension, with the smallest such b′ as witness.
    pub fn best_one_point(&self, k: i64) -> Result<OnePointBound> {
        let n = self.tt.params().code_length;
        let g = self.tt.genus();
        let want = n - k; // required dim L(b′P∞)
        if want < 1 {
            return Err(Error::domain(format!(
                "dimension {k} not achievable by one-point divisor"
            )));
        }
        // dim L(b′P∞) grows from 1 by unit steps: +1 at b′ exactly when
        // τ⁻¹(b′) ≤ 0. The run with a given value is consecutive.
        let mut dim = 1i64; // b′ = 0
        let mut run = Vec::new();
        let mut b_prime = 0i64;
        while dim <= want && b_prime <= want + g + 1 {
            b_prime += 1;
            if self.tt.tau_inv(b_prime) <= 0 {
                dim += 1;
            }
            if dim == want {
                run.push(b_prime);
            }
        }
        if run.is_empty() {
            return Err(Error::domain(format!(
                "dimension {k} not achievable by one-point divisor"
            )));
        }
        let mut best: Option<OnePointBound> = None;
        for bp in run {
            let d1 = self.order_bound(DivisorSpec::new(0, bp))?;
            if best.is_none_or(|cur| d1 > cur.d1) {
                best = Some(OnePointBound { k, b_prime: bp, d1 });
            }
        }
        Ok(best.unwrap())
    }

    /// Assemble the full per-divisor record.
    pub fn report(&self, d: DivisorSpec, horizon: Option<i64>) -> Result<BoundReport> {
        let rr = rr_dim(self.tt, d)?;
        let dual = dual_dimension(self.tt, d)?;
        let h = match horizon {
            Some(h) => h,
            None => default_horizon(self.tt, d),
        };
        let ob = self.order_bound_with_horizon(d, h)?;
        Ok(BoundReport {
            a: d.a,
            b: d.b,
            degree: d.degree(),
            rr_dimension: rr,
            dual_dimension: dual,
            goppa_dual: goppa_dual(self.tt, d),
            order_bound: ob,
            horizon: h,
        })
    }
}

/// One-shot wrapper around [`BoundEngine::order_bound`].
pub fn order_bound(tt: &TauTable, d: DivisorSpec) -> Result<i64> {
    BoundEngine::new(tt).order_bound(d)
}

/// One-shot wrapper around [`BoundEngine::order_bound_with_horizon`].
pub fn order_bound_with_horizon(tt: &TauTable, d: DivisorSpec, horizon: i64) -> Result<i64> {
    BoundEngine::new(tt).order_bound_with_horizon(d, horizon)
}

/// One-shot wrapper around [`BoundEngine::best_one_point`].
pub fn best_one_point(tt: &TauTable, k: i64) -> Result<OnePointBound> {
    BoundEngine::new(tt).best_one_point(k)
}

/// Dense order-bound values for every divisor with deg ≤ 4g − 1, stored
/// per anti-diagonal: `diags[deg][a] = d(aP + (deg−a)P∞)`.
///
/// One backward induction over the global triangle serves the entire
/// sweep, because the maximin recursion only sees absolute states and the
/// default-horizon boundary is the fixed line A + B = 4g − 1.
pub struct BoundTable {
    boundary: i64,
    diags: Vec<Vec<i64>>,
}

impl BoundTable {
    pub fn build(tt: &TauTable) -> Self {
        let g = tt.genus();
        let boundary = 4 * g - 1;
        let mut diags: Vec<Vec<i64>> = vec![Vec::new(); boundary as usize + 1];
        diags[boundary as usize] = vec![2 * g + 1; boundary as usize + 2];
        for deg in (0..boundary).rev() {
            let (head, tail) = diags.split_at_mut(deg as usize + 1);
            let next = &tail[0];
            head[deg as usize] = (0..=deg)
                .into_par_iter()
                .map(|a| {
                    let b = deg - a;
                    let cont_p = next[a as usize + 1];
                    let to_p = if tt.tau(a + 1) <= b {
                        cont_p.min(nu_p(tt, DivisorSpec::new(a, b)))
                    } else {
                        cont_p
                    };
                    let cont_i = next[a as usize];
                    let to_inf = if tt.tau_inv(b + 1) <= a {
                        cont_i.min(nu_pinf(tt, DivisorSpec::new(a, b)))
                    } else {
                        cont_i
                    };
                    to_p.max(to_inf)
                })
                .collect();
        }
        BoundTable { boundary, diags }
    }

    /// Largest degree the table covers (4g − 1).
    pub fn boundary(&self) -> i64 {
        self.boundary
    }

    /// d(aP + bP∞) at the default horizon; requires a, b ≥ 0,
    /// 1 ≤ a + b ≤ 4g − 1.
    pub fn order_bound(&self, d: DivisorSpec) -> Result<i64> {
        validate(d)?;
        if d.degree() > self.boundary {
            return Err(Error::domain(format!(
                "deg(G) = {} exceeds the table boundary {}",
                d.degree(),
                self.boundary
            )));
        }
        Ok(self.diags[d.degree() as usize][d.a as usize])
    }
}
