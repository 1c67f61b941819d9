//! Python bindings: a `Curve` class wrapping the τ machinery, semigroup
//! queries, order bounds and the comparison-table sweep.
//!
//! Build with `cargo build --release -p skabelund-py` and import the
//! produced cdylib as `skabelund_py` (see python/smoke_test.py).

use pyo3::exceptions::{PyIOError, PyOverflowError, PyValueError};
use pyo3::prelude::*;

use skabelund::bound::{default_horizon, BoundEngine};
use skabelund::report::{sweep, SweepConfig};
use skabelund::{tau as tau_formula, CurveParams, DivisorSpec, Error, TauTable};

/// (k, a, b, deg, d, goppa, d1, b_prime, delta)
type RowTuple = (i64, i64, i64, i64, i64, i64, i64, i64, i64);

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Domain(msg) => PyValueError::new_err(msg),
        Error::Range(msg) => PyOverflowError::new_err(msg),
        Error::Io { .. } => PyIOError::new_err(e.to_string()),
    }
}

/// Unique quadruple decomposition of an integer, as used by tau.
#[pyclass(name = "Decomposition", get_all, frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDecomposition {
    i: i64,
    k: i64,
    r: i64,
    case_low: bool,
    a_t: i64,
    a_x: i64,
    a_y: i64,
    a_z: i64,
}

#[pymethods]
impl PyDecomposition {
    fn __repr__(&self) -> String {
        format!(
            "Decomposition(i={}, k={}, r={}, case_low={}, a_t={}, a_x={}, a_y={}, a_z={})",
            self.i,
            self.k,
            self.r,
            if self.case_low { "True" } else { "False" },
            self.a_t,
            self.a_x,
            self.a_y,
            self.a_z
        )
    }
}

/// The Skabelund curve S̃_q for a chosen exponent s, with its two-point
/// Weierstrass semigroup H(P, P∞) and order-bound machinery.
#[pyclass]
struct Curve {
    tt: TauTable,
}

#[pymethods]
impl Curve {
    #[new]
    fn new(s: i64) -> PyResult<Self> {
        let params = CurveParams::new(s).map_err(to_py_err)?;
        Ok(Curve {
            tt: TauTable::new(params),
        })
    }

    #[getter]
    fn s(&self) -> i64 {
        self.tt.params().s
    }

    #[getter]
    fn q0(&self) -> i64 {
        self.tt.params().q0
    }

    #[getter]
    fn q(&self) -> i64 {
        self.tt.params().q
    }

    #[getter]
    fn m(&self) -> i64 {
        self.tt.params().m
    }

    #[getter]
    fn genus(&self) -> i64 {
        self.tt.params().genus
    }

    #[getter]
    fn period(&self) -> i64 {
        self.tt.params().period
    }

    #[getter]
    fn num_points(&self) -> i64 {
        self.tt.params().num_points
    }

    #[getter]
    fn code_length(&self) -> i64 {
        self.tt.params().code_length
    }

    #[getter]
    fn semigroup_generators(&self) -> Vec<i64> {
        self.tt.params().semigroup_generators.clone()
    }

    /// tau(i): smallest j with (i, j) in H(P, P∞).
    fn tau(&self, i: i64) -> i64 {
        self.tt.tau(i)
    }

    /// The unique i with tau(i) = j.
    fn tau_inv(&self, j: i64) -> i64 {
        self.tt.tau_inv(j)
    }

    fn decompose(&self, i: i64) -> PyDecomposition {
        let d = skabelund::decompose(self.tt.params(), i);
        PyDecomposition {
            i: d.i,
            k: d.k,
            r: d.r,
            case_low: d.case_low,
            a_t: d.a_t,
            a_x: d.a_x,
            a_y: d.a_y,
            a_z: d.a_z,
        }
    }

    /// Sum of i + tau(i) over one period starting at c; equals
    /// period * genus for every c.
    fn period_sum(&self, c: i64) -> i64 {
        skabelund::period_sum(self.tt.params(), c)
    }

    fn in_semigroup(&self, i: i64, j: i64) -> bool {
        skabelund::in_semigroup(&self.tt, i, j)
    }

    /// dim L(aP + bP∞) for a, b >= 0.
    fn rr_dim(&self, a: i64, b: i64) -> PyResult<i64> {
        skabelund::rr_dim(&self.tt, DivisorSpec::new(a, b)).map_err(to_py_err)
    }

    fn nu_p(&self, a: i64, b: i64) -> i64 {
        skabelund::nu_p(&self.tt, DivisorSpec::new(a, b))
    }

    fn nu_pinf(&self, a: i64, b: i64) -> i64 {
        skabelund::nu_pinf(&self.tt, DivisorSpec::new(a, b))
    }

    fn goppa_dual(&self, a: i64, b: i64) -> i64 {
        skabelund::goppa_dual(&self.tt, DivisorSpec::new(a, b))
    }

    fn dual_dimension(&self, a: i64, b: i64) -> PyResult<i64> {
        skabelund::dual_dimension(&self.tt, DivisorSpec::new(a, b)).map_err(to_py_err)
    }

    /// The generalized order bound d(aP + bP∞). A horizon shorter than
    /// the default 4g-1-deg gives a sound but possibly weaker bound;
    /// longer horizons cannot change the value.
    #[pyo3(signature = (a, b, horizon=None))]
    fn order_bound(&self, a: i64, b: i64, horizon: Option<i64>) -> PyResult<i64> {
        let d = DivisorSpec::new(a, b);
        let engine = BoundEngine::new(&self.tt);
        match horizon {
            Some(h) => engine.order_bound_with_horizon(d, h).map_err(to_py_err),
            None => engine.order_bound(d).map_err(to_py_err),
        }
    }

    fn default_horizon(&self, a: i64, b: i64) -> i64 {
        default_horizon(&self.tt, DivisorSpec::new(a, b))
    }

    /// Best one-point competitor of dual dimension k: (b_prime, d1).
    fn best_one_point(&self, k: i64) -> PyResult<(i64, i64)> {
        let one = BoundEngine::new(&self.tt)
            .best_one_point(k)
            .map_err(to_py_err)?;
        Ok((one.b_prime, one.d1))
    }

    /// Gaps of the Weierstrass semigroup H(P∞) = H(P), via tau.
    fn gaps(&self) -> Vec<i64> {
        let g = self.tt.genus();
        (1..2 * g).filter(|&i| self.tt.tau(i) > 0).collect()
    }

    fn conductor(&self) -> i64 {
        self.gaps().last().map_or(0, |last| last + 1)
    }

    /// Points of H(P, P∞) with |i|, |j| < window * period,
    /// lexicographically sorted.
    fn figure_points(&self, window: i64) -> PyResult<Vec<(i64, i64)>> {
        skabelund::figure_points(&self.tt, window).map_err(to_py_err)
    }

    /// Sweep all a, b >= 1 with a+b <= 4g-1 and return the comparison
    /// rows (k, a, b, deg, d, goppa, d1, b_prime, delta) with
    /// d - d1 >= min_delta, sorted by k.
    #[pyo3(signature = (min_delta=10, jobs=None))]
    fn table_rows(&self, min_delta: i64, jobs: Option<usize>) -> PyResult<Vec<RowTuple>> {
        let mut cfg = SweepConfig::new(self.tt.params().s);
        cfg.delta_threshold = min_delta;
        cfg.workers = jobs;
        let result = sweep(&cfg).map_err(to_py_err)?;
        Ok(result
            .rows
            .iter()
            .map(|r| (r.k, r.a, r.b, r.deg, r.d, r.goppa, r.d1, r.b_prime, r.delta))
            .collect())
    }

    fn __repr__(&self) -> String {
        let p = self.tt.params();
        format!(
            "Curve(s={}, q={}, genus={}, period={}, code_length={})",
            p.s, p.q, p.genus, p.period, p.code_length
        )
    }
}

/// Evaluate tau without keeping a table around.
#[pyfunction]
fn tau(s: i64, i: i64) -> PyResult<i64> {
    let params = CurveParams::new(s).map_err(to_py_err)?;
    Ok(tau_formula(&params, i))
}

#[pymodule]
fn skabelund_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Curve>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    Ok(())
}
