//! Python bindings: the stability test, disc counts, the root oracle, the
//! region parametrization and the recurrence simulator.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use trinom::recurrence::{self, RecurrenceSpec};
use trinom::region;
use trinom::{bohl, normalize, oracle, Complex, Tolerances, Trinomial};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn build(n: u32, m: u32, b: Complex, c: Complex, a: Option<Complex>) -> PyResult<Trinomial> {
    Trinomial::new(n, m, a.unwrap_or(Complex::new(1.0, 0.0)), b, c).map_err(err)
}

/// Stability verdict with its machine-checkable certificate.
#[pyclass(frozen)]
struct Verdict {
    #[pyo3(get)]
    stable: bool,
    #[pyo3(get)]
    marginal: bool,
    /// JSON-encoded certificate (degenerate table, Cohn membership,
    /// interval count, or parametrization).
    #[pyo3(get)]
    certificate: String,
}

#[pymethods]
impl Verdict {
    fn __repr__(&self) -> String {
        format!(
            "Verdict(stable={}, marginal={}, certificate={})",
            self.stable, self.marginal, self.certificate
        )
    }
}

/// Decide Schur stability of a*z^n + b*z^m + c.
#[pyfunction]
#[pyo3(signature = (n, m, b, c, a=None))]
fn is_schur_stable(n: u32, m: u32, b: Complex, c: Complex, a: Option<Complex>) -> PyResult<Verdict> {
    let verdict = trinom::is_schur_stable(&build(n, m, b, c, a)?, Tolerances::default()).map_err(err)?;
    Ok(Verdict {
        stable: verdict.stable,
        marginal: verdict.marginal,
        certificate: serde_json::to_string(&verdict.certificate).map_err(err)?,
    })
}

/// Number of roots in the open disc of radius r, plus the marginal flag.
/// Counted through the pivot interval, without computing roots.
#[pyfunction]
#[pyo3(signature = (n, m, b, c, r, a=None))]
fn count_roots_in_disc(
    n: u32,
    m: u32,
    b: Complex,
    c: Complex,
    r: f64,
    a: Option<Complex>,
) -> PyResult<(u64, bool)> {
    let nt = normalize(&build(n, m, b, c, a)?).map_err(err)?;
    let ell = nt.reduction();
    let counted =
        bohl::count_roots_in_disc(&nt, r.powi(ell as i32), Tolerances::default()).map_err(err)?;
    Ok((counted.count * ell as u64, counted.marginal))
}

/// All n roots, with multiplicity, by simultaneous iteration.
#[pyfunction]
#[pyo3(signature = (n, m, b, c, a=None))]
fn find_roots(n: u32, m: u32, b: Complex, c: Complex, a: Option<Complex>) -> PyResult<Vec<Complex>> {
    let roots = oracle::find_roots(&build(n, m, b, c, a)?).map_err(err)?;
    if !roots.converged {
        return Err(PyValueError::new_err("root iteration did not converge"));
    }
    Ok(roots.roots)
}

/// Largest root modulus.
#[pyfunction]
#[pyo3(signature = (n, m, b, c, a=None))]
fn max_root_modulus(n: u32, m: u32, b: Complex, c: Complex, a: Option<Complex>) -> PyResult<f64> {
    Ok(oracle::spectral_stable(&build(n, m, b, c, a)?)
        .map_err(err)?
        .max_modulus)
}

/// Interval half-width omega(u, v) for the triangle with sides (1, u, |v|).
#[pyfunction]
fn omega_uv(u: f64, v: f64, n: u32, m: u32) -> PyResult<f64> {
    region::omega_uv(u, v, n, m, Tolerances::default()).map_err(err)
}

/// Region tag of a plane point: "gamma", "delta", "cohn" or "outside",
/// with a trailing "(marginal)" when the classification sat on a boundary.
#[pyfunction]
fn classify_point(u: f64, v: f64, n: u32, m: u32) -> PyResult<String> {
    let class = region::classify_point(u, v, n, m, Tolerances::default());
    let tag = match class.tag {
        region::RegionTag::Cohn => "cohn",
        region::RegionTag::Gamma => "gamma",
        region::RegionTag::Delta => "delta",
        region::RegionTag::Outside => "outside",
    };
    Ok(if class.marginal {
        format!("{tag} (marginal)")
    } else {
        tag.to_string()
    })
}

/// Canonical parametrization (x, y, s, t) of a monic trinomial.
#[pyfunction]
fn decompose_parameters(n: u32, m: u32, b: Complex, c: Complex) -> PyResult<(f64, f64, f64, f64)> {
    let nt = normalize(&build(n, m, b, c, None)?).map_err(err)?;
    let p = region::decompose_parameters(&nt);
    Ok((p.x, p.y, p.s, p.t))
}

/// Coefficients (b, c) of z^n + x*e^{it}e^{-i(n-m)s}*z^m + y*e^{-ins}.
#[pyfunction]
fn compose_parameters(
    x: f64,
    y: f64,
    s: f64,
    t: f64,
    n: u32,
    m: u32,
) -> PyResult<(Complex, Complex)> {
    let nt = region::compose_parameters(x, y, s, t, n, m).map_err(err)?;
    Ok((nt.b(), nt.c()))
}

/// Trajectory of X(t) = -b*X(t-(n-m)) - c*X(t-n) from the initial string.
#[pyfunction]
fn simulate(
    n: u32,
    m: u32,
    b: Complex,
    c: Complex,
    initial: Vec<Complex>,
    horizon: usize,
) -> PyResult<Vec<Complex>> {
    let trajectory = recurrence::simulate(&RecurrenceSpec {
        n,
        m,
        b,
        c,
        initial,
        horizon,
    })
    .map_err(err)?;
    Ok(trajectory.samples)
}

/// Least-squares decay rate of a trajectory (windows of length n).
#[pyfunction]
fn empirical_decay_rate(samples: Vec<Complex>, n: u32) -> PyResult<f64> {
    let trajectory = recurrence::Trajectory {
        samples,
        divergent: false,
    };
    recurrence::empirical_decay_rate(&trajectory, n).map_err(err)
}

#[pymodule]
fn trinom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Verdict>()?;
    m.add_function(wrap_pyfunction!(is_schur_stable, m)?)?;
    m.add_function(wrap_pyfunction!(count_roots_in_disc, m)?)?;
    m.add_function(wrap_pyfunction!(find_roots, m)?)?;
    m.add_function(wrap_pyfunction!(max_root_modulus, m)?)?;
    m.add_function(wrap_pyfunction!(omega_uv, m)?)?;
    m.add_function(wrap_pyfunction!(classify_point, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_parameters, m)?)?;
    m.add_function(wrap_pyfunction!(compose_parameters, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(empirical_decay_rate, m)?)?;
    Ok(())
}
