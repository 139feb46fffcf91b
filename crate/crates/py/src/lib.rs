//! Python bindings. Graphs cross the boundary as text: a catalog name, a
//! graph6 string, or a JSON pseudograph document.

use adrg::classify::GraphContext;
use adrg::perturb::{apply, verify_identity};
use adrg::sets::{generate_mates, MateOp};
use adrg::{AnalyzeOptions, Graph, PerturbationOp};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: adrg::Error) -> PyErr {
    match e {
        adrg::Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Reads a JSON document, a catalog name, or graph6 text, in that order.
pub fn resolve(spec: &str) -> adrg::Result<Graph> {
    let s = spec.trim();
    if s.starts_with('{') {
        return Graph::from_json(s);
    }
    match adrg::catalog(s) {
        Ok(g) => Ok(g),
        Err(adrg::Error::UnknownGraph { .. }) => adrg::parse_graph6(s),
        Err(e) => Err(e),
    }
}

fn graph(spec: &str) -> PyResult<Graph> {
    resolve(spec).map_err(py_err)
}

fn encode(g: &Graph) -> String {
    adrg::emit_graph6(g).unwrap_or_else(|_| g.to_json())
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    adrg::catalog::available()
}

/// graph6 for simple graphs, the JSON document otherwise.
#[pyfunction]
fn encode_graph(spec: &str) -> PyResult<String> {
    Ok(encode(&graph(spec)?))
}

/// Coefficients of `det(xI − A)`, constant term first.
#[pyfunction]
fn charpoly(spec: &str) -> PyResult<Vec<BigInt>> {
    Ok(adrg::charpoly(&graph(spec)?).coeffs().to_vec())
}

#[pyfunction]
fn cospectral(first: &str, second: &str) -> PyResult<bool> {
    Ok(adrg::cospectral(&graph(first)?, &graph(second)?))
}

/// An isomorphism `g → h` as a list, or `None`.
#[pyfunction]
fn isomorphism(first: &str, second: &str) -> PyResult<Option<Vec<usize>>> {
    adrg::are_isomorphic(&graph(first)?, &graph(second)?).map_err(py_err)
}

/// The analysis report as a JSON string.
#[pyfunction]
#[pyo3(signature = (spec, max_h=None, tol=None))]
fn analyze(spec: &str, max_h: Option<u32>, tol: Option<f64>) -> PyResult<String> {
    let g = graph(spec)?;
    let name = adrg::catalog(spec.trim()).ok().map(|_| spec.trim());
    let opts = AnalyzeOptions {
        tol,
        max_h,
        ..AnalyzeOptions::default()
    };
    Ok(adrg::analyze(&g, name, &opts).map_err(py_err)?.to_json())
}

/// `[walk, spectrum, cospectral, isospectral]` verdicts per distance.
#[pyfunction]
fn profile(spec: &str) -> PyResult<Vec<(u32, [bool; 4])>> {
    let ctx = GraphContext::new(&graph(spec)?).map_err(py_err)?;
    let p = ctx.profile().map_err(py_err)?;
    Ok(p.levels
        .iter()
        .map(|l| (l.h, l.statuses().map(|s| s == adrg::classify::Status::Holds)))
        .collect())
}

/// Applies a descriptor such as `"P5:2,7"`; returns the encoded result and
/// whether its characteristic-polynomial identity holds.
#[pyfunction]
fn perturb(spec: &str, op: &str) -> PyResult<(String, bool)> {
    let g = graph(spec)?;
    let op: PerturbationOp = op.parse().map_err(py_err)?;
    let out = apply(&g, &op).map_err(py_err)?;
    let check = verify_identity(&g, &op).map_err(py_err)?;
    Ok((encode(&out.graph), check.holds))
}

/// One encoded graph per isomorphism class of mates.
#[pyfunction]
fn mates(spec: &str, h: u32, op: &str) -> PyResult<Vec<String>> {
    let op: MateOp = op.parse().map_err(py_err)?;
    let family = generate_mates(&graph(spec)?, h, op).map_err(py_err)?;
    Ok(family.graphs().into_iter().map(encode).collect())
}

#[pymodule]
fn adrg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(encode_graph, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(perturb, m)?)?;
    m.add_function(wrap_pyfunction!(mates, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_resolve_in_order() {
        assert_eq!(resolve("petersen").unwrap().n(), 10);
        assert_eq!(resolve("Bw").unwrap().edge_count(), 3);
        assert_eq!(resolve(r#"{"n":1,"adj":[[1]]}"#).unwrap().trace(), 1);
        assert!(resolve("~~~").is_err());
    }

    #[test]
    fn pseudographs_encode_as_json() {
        let g = resolve(r#"{"n":1,"adj":[[1]]}"#).unwrap();
        assert!(encode(&g).starts_with('{'));
    }
}
