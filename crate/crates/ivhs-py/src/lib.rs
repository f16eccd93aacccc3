//! Python bindings: thin JSON-oriented wrappers over the core library.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::sync::Arc;

use ivhs_core::certify;
use ivhs_core::ci::{check_ci as core_check_ci, ci_moduli, CIProblem};
use ivhs_core::error::Error;
use ivhs_core::hodge;
use ivhs_core::jacobian::CoxRing;
use ivhs_core::lattice::{Inequality, LatticePolytope};
use ivhs_core::symmetrizer::randomized_triviality_report;
use ivhs_core::toric::{Fan, TorusDivisor, WeightSystem};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_fan(fan_json: &str) -> PyResult<Fan> {
    let doc: serde_json::Value =
        serde_json::from_str(fan_json).map_err(|e| PyValueError::new_err(format!("bad fan JSON: {e}")))?;
    let rays: Vec<Vec<i64>> = serde_json::from_value(doc["rays"].clone())
        .map_err(|e| PyValueError::new_err(format!("bad rays: {e}")))?;
    let cones: Vec<Vec<usize>> = serde_json::from_value(doc["max_cones"].clone())
        .map_err(|e| PyValueError::new_err(format!("bad max_cones: {e}")))?;
    let dim = rays
        .first()
        .map(|r| r.len())
        .ok_or_else(|| PyValueError::new_err("fan has no rays"))?;
    Fan::new(dim, rays, cones).map_err(err)
}

fn toric_pair(fan_json: &str, divisor: Vec<i64>) -> PyResult<(CoxRing, TorusDivisor)> {
    let fan = Arc::new(parse_fan(fan_json)?);
    if divisor.len() != fan.n_rays() {
        return Err(PyValueError::new_err("one divisor coefficient per ray required"));
    }
    Ok((CoxRing::new(fan), TorusDivisor::from_i64(&divisor)))
}

/// Ehrhart coefficients (constant term first) as exact fraction strings.
#[pyfunction]
fn ehrhart_coefficients(polytope_json: &str) -> PyResult<Vec<String>> {
    let doc: serde_json::Value = serde_json::from_str(polytope_json)
        .map_err(|e| PyValueError::new_err(format!("bad polytope JSON: {e}")))?;
    let dim = doc["dim_ambient"]
        .as_u64()
        .ok_or_else(|| PyValueError::new_err("missing dim_ambient"))? as usize;
    let mut ineqs = Vec::new();
    for item in doc["inequalities"]
        .as_array()
        .ok_or_else(|| PyValueError::new_err("missing inequalities"))?
    {
        let a: Vec<i64> = serde_json::from_value(item["a"].clone())
            .map_err(|e| PyValueError::new_err(format!("bad inequality: {e}")))?;
        let c = item["c"]
            .as_i64()
            .ok_or_else(|| PyValueError::new_err("bad inequality offset"))?;
        ineqs.push(Inequality::new_i64(&a, c));
    }
    let p = LatticePolytope::new(dim, ineqs).map_err(err)?;
    let e = p.ehrhart().map_err(err)?;
    Ok(e.coeffs.iter().map(|c| c.to_string()).collect())
}

/// `(h_top, h_next)` of the generic hypersurface in `|t D|`, as decimal strings.
#[pyfunction]
fn hodge_numbers(fan_json: &str, divisor: Vec<i64>, t: i64) -> PyResult<(String, String)> {
    let (ring, div) = toric_pair(fan_json, divisor)?;
    let h = hodge::hypersurface_hodge(ring.fan(), &div, t).map_err(err)?;
    Ok((h.h_top.to_string(), h.h_next.to_string()))
}

/// Moduli dimension of the generic hypersurface in `|t D|`.
#[pyfunction]
#[pyo3(signature = (fan_json, divisor, t, seed = 1))]
fn moduli_dim(fan_json: &str, divisor: Vec<i64>, t: i64, seed: u64) -> PyResult<usize> {
    let (ring, div) = toric_pair(fan_json, divisor)?;
    hodge::moduli_dim(&ring, &div, t, seed).map_err(err)
}

/// Non-genericity certificate for a toric hypersurface, as JSON.
#[pyfunction]
#[pyo3(signature = (fan_json, divisor, t, seed = 1))]
fn check_toric(fan_json: &str, divisor: Vec<i64>, t: i64, seed: u64) -> PyResult<String> {
    let (ring, div) = toric_pair(fan_json, divisor)?;
    Ok(certify::check_toric(&ring, &div, t, seed).map_err(err)?.to_json())
}

/// Non-genericity certificate for a weighted-projective hypersurface, as JSON.
#[pyfunction]
#[pyo3(signature = (weights, d, seed = 1))]
fn check_wps(weights: Vec<i64>, d: i64, seed: u64) -> PyResult<String> {
    let w = WeightSystem::new(weights).map_err(err)?;
    Ok(certify::check_wps(&w, d, seed).map_err(err)?.to_json())
}

/// Non-genericity certificate for a complete intersection in P^n, as JSON.
#[pyfunction]
#[pyo3(signature = (n, degrees, seed = 1))]
fn check_ci(n: usize, degrees: Vec<i64>, seed: u64) -> PyResult<String> {
    let prob = CIProblem::new(n, degrees).map_err(err)?;
    Ok(core_check_ci(&prob, seed).map_err(err)?.to_json())
}

/// Moduli dimension of a complete intersection in P^n.
#[pyfunction]
#[pyo3(signature = (n, degrees, seed = 1))]
fn ci_moduli_dim(n: usize, degrees: Vec<i64>, seed: u64) -> PyResult<usize> {
    let prob = CIProblem::new(n, degrees).map_err(err)?;
    ci_moduli(&prob, seed).map_err(err)
}

/// Randomized symmetrizer triviality report as `(trials, failures, dims)`.
#[pyfunction]
#[pyo3(signature = (g0, g1, g2, d, trials = 20, seed = 1))]
fn symmetrizer_report(
    g0: usize,
    g1: usize,
    g2: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> PyResult<(usize, usize, Vec<usize>)> {
    let r = randomized_triviality_report(g0, g1, g2, d, trials, seed).map_err(err)?;
    Ok((r.trials, r.failures, r.dims))
}

#[pymodule]
fn ivhs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(ehrhart_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(hodge_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(moduli_dim, m)?)?;
    m.add_function(wrap_pyfunction!(check_toric, m)?)?;
    m.add_function(wrap_pyfunction!(check_wps, m)?)?;
    m.add_function(wrap_pyfunction!(check_ci, m)?)?;
    m.add_function(wrap_pyfunction!(ci_moduli_dim, m)?)?;
    m.add_function(wrap_pyfunction!(symmetrizer_report, m)?)?;
    Ok(())
}
