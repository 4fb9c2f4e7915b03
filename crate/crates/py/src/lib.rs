//! Python bindings: the construction catalog, the certificate engine and
//! the finite-field node lab, driven in-process from Python.

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use rand_core::SeedableRng;

use cicy_core::catalog::{self, CicyType};
use cicy_core::enumerate;
use cicy_core::nodelab;
use cicy_core::rules;

fn parse_type(label: &str) -> PyResult<CicyType> {
    let degrees: Result<Vec<u32>, _> = label.split(',').map(|t| t.trim().parse::<u32>()).collect();
    degrees
        .ok()
        .and_then(|d| CicyType::from_degrees(&d).ok())
        .ok_or_else(|| PyValueError::new_err(format!("not a CICY type: ({})", label)))
}

fn table_row(index: usize) -> PyResult<&'static catalog::ConstructionRow> {
    let table = catalog::load_catalog();
    if index == 0 || index > table.len() {
        return Err(PyValueError::new_err(format!(
            "row must be 1..{}",
            table.len()
        )));
    }
    Ok(&table[index - 1])
}

/// One row of the construction table.
#[pyclass(frozen, name = "CatalogRow")]
struct PyCatalogRow {
    #[pyo3(get)]
    row: usize,
    #[pyo3(get)]
    b: Vec<u32>,
    #[pyo3(get)]
    a: Vec<u32>,
    #[pyo3(get)]
    mu: u32,
    #[pyo3(get)]
    r: u32,
    #[pyo3(get)]
    ell: u32,
    #[pyo3(get)]
    a_penult: u32,
    #[pyo3(get)]
    a_last: u32,
    #[pyo3(get)]
    cicy_type: String,
    #[pyo3(get)]
    sing_desc: String,
}

#[pymethods]
impl PyCatalogRow {
    fn __repr__(&self) -> String {
        format!(
            "CatalogRow(row={}, b={:?}, a={:?}, mu={}, ell={})",
            self.row, self.b, self.a, self.mu, self.ell
        )
    }
}

/// Verdict for one (row, degree, genus) triple.
#[pyclass(frozen, name = "Certificate")]
struct PyCertificate {
    #[pyo3(get)]
    row: usize,
    #[pyo3(get)]
    d: u32,
    #[pyo3(get)]
    g: u32,
    #[pyo3(get)]
    exists_on_k3: String,
    #[pyo3(get)]
    cond_degree_window: bool,
    #[pyo3(get)]
    cond_node_budget: bool,
    #[pyo3(get)]
    cond_node_surplus: bool,
    #[pyo3(get)]
    admissible: bool,
    #[pyo3(get)]
    expected_count: Option<BigUint>,
}

#[pymethods]
impl PyCertificate {
    fn __repr__(&self) -> String {
        format!(
            "Certificate(row={}, d={}, g={}, admissible={}, branch={})",
            self.row, self.d, self.g, self.admissible, self.exists_on_k3
        )
    }
}

impl PyCertificate {
    fn of(cert: &rules::Certificate) -> PyCertificate {
        PyCertificate {
            row: cert.row.index + 1,
            d: cert.curve.d(),
            g: cert.curve.g(),
            exists_on_k3: cert.exists_on_k3.tag().to_string(),
            cond_degree_window: cert.cond_degree_window,
            cond_node_budget: cert.cond_node_budget,
            cond_node_surplus: cert.cond_node_surplus,
            admissible: cert.admissible,
            expected_count: cert.expected_count.clone(),
        }
    }
}

/// One full-spark outcome.
#[pyclass(frozen, name = "SparkReport")]
struct PySparkReport {
    #[pyo3(get)]
    d: u32,
    #[pyo3(get)]
    ell: usize,
    #[pyo3(get)]
    m: usize,
    #[pyo3(get)]
    passed: bool,
    #[pyo3(get)]
    witness: Option<Vec<usize>>,
}

#[pymethods]
impl PySparkReport {
    fn __repr__(&self) -> String {
        format!(
            "SparkReport(d={}, m={}, passed={})",
            self.d, self.m, self.passed
        )
    }
}

/// A node-lab run: the common extension field, the intersection points as
/// coefficient vectors over its modulus, and the requested spark checks.
#[pyclass(frozen, name = "NodeLabRun")]
struct PyNodeLabRun {
    #[pyo3(get)]
    prime: u64,
    #[pyo3(get)]
    ext_degree: usize,
    #[pyo3(get)]
    modulus: Vec<u64>,
    #[pyo3(get)]
    chart_attempts: u32,
    /// One `[coeffs_x, coeffs_y, coeffs_z]` triple per point.
    #[pyo3(get)]
    points: Vec<Vec<Vec<u64>>>,
    #[pyo3(get)]
    multiplicities: Vec<u32>,
    #[pyo3(get)]
    spark: Vec<Py<PySparkReport>>,
}

#[pymethods]
impl PyNodeLabRun {
    fn __repr__(&self) -> String {
        format!(
            "NodeLabRun(prime={}, ext_degree={}, points={})",
            self.prime,
            self.ext_degree,
            self.points.len()
        )
    }
}

/// The construction table, in table order.
#[pyfunction]
fn load_catalog() -> Vec<PyCatalogRow> {
    catalog::load_catalog()
        .iter()
        .map(|row| PyCatalogRow {
            row: row.index + 1,
            b: row.b.to_vec(),
            a: row.a.to_vec(),
            mu: row.mu,
            r: row.r,
            ell: row.ell,
            a_penult: row.a_penult,
            a_last: row.a_last,
            cicy_type: row.cicy_type().label().to_string(),
            sing_desc: row.sing_desc.to_string(),
        })
        .collect()
}

/// Certificate for one table row (1-based) at `(d, g)`.
#[pyfunction]
fn certify(row: usize, d: u32, g: u32) -> PyResult<PyCertificate> {
    let row = table_row(row)?;
    let curve = rules::CurveClass::new(d, g).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyCertificate::of(&rules::certify(row, curve)))
}

/// First admissible certificate for a CICY type at `(d, g)`, if any.
#[pyfunction]
fn admissible(cicy_type: &str, d: u32, g: u32) -> PyResult<Option<PyCertificate>> {
    let t = parse_type(cicy_type)?;
    if d == 0 {
        return Err(PyValueError::new_err("curve degree must be positive"));
    }
    Ok(enumerate::admissible(t, d, g).map(|c| PyCertificate::of(&c)))
}

/// Smallest admissible degree for a genus, scanning `1..=dmax`.
#[pyfunction]
#[pyo3(signature = (cicy_type, g, dmax = 40))]
fn min_degree(cicy_type: &str, g: u32, dmax: u32) -> PyResult<Option<u32>> {
    let t = parse_type(cicy_type)?;
    Ok(enumerate::min_degree(t, g, dmax).min)
}

/// The full admissible subset of `1..=dmax` for a genus.
#[pyfunction]
#[pyo3(signature = (cicy_type, g, dmax = 40))]
fn admissible_degrees(cicy_type: &str, g: u32, dmax: u32) -> PyResult<Vec<u32>> {
    let t = parse_type(cicy_type)?;
    Ok(enumerate::min_degree(t, g, dmax).admissible)
}

/// Check the engine against the embedded reference tables; `True` when every
/// cell, minimal degree and genus cap matches.
#[pyfunction]
#[pyo3(signature = (cicy_type = "all", dmax = 40, gmax = 30))]
fn verify_theorem(cicy_type: &str, dmax: u32, gmax: u32) -> PyResult<bool> {
    let types: Vec<CicyType> = if cicy_type == "all" {
        CicyType::ALL.to_vec()
    } else {
        vec![parse_type(cicy_type)?]
    };
    Ok(types
        .into_iter()
        .all(|t| enumerate::verify_theorem(t, dmax, gmax).passed()))
}

/// Independent transcription of the quintic conditions; cross-check only.
#[pyfunction]
fn quintic_oracle(d: u32, g: u32) -> bool {
    enumerate::quintic_oracle(d, g)
}

/// Largest admissible genus for a type, scanning `g <= gmax`.
#[pyfunction]
#[pyo3(signature = (cicy_type, gmax = 100, dmax = 40))]
fn genus_cap(cicy_type: &str, gmax: u32, dmax: u32) -> PyResult<Option<u32>> {
    let t = parse_type(cicy_type)?;
    Ok(enumerate::genus_cap(t, gmax, dmax))
}

/// Exact `C(ell - 2, g)` for a table row (1-based), as a Python int.
#[pyfunction]
fn expected_count(row: usize, g: u32) -> PyResult<BigUint> {
    let row = table_row(row)?;
    rules::expected_count(row, g).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Intersect two seeded random curves of the given degrees and run the
/// requested independence checks on the resulting points.
#[pyfunction]
#[pyo3(signature = (deg_a, deg_b, prime = 10007, seed = 0, spark = vec![], retries = 32))]
fn plane_nodes(
    py: Python<'_>,
    deg_a: u32,
    deg_b: u32,
    prime: u64,
    seed: u64,
    spark: Vec<u32>,
    retries: u32,
) -> PyResult<PyNodeLabRun> {
    if deg_a == 0 || deg_b == 0 {
        return Err(PyValueError::new_err("curve degrees must be positive"));
    }
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    let f = nodelab::form::random_form_with_rng(prime, deg_a, &mut rng);
    let g = nodelab::form::random_form_with_rng(prime, deg_b, &mut rng);
    let ix = nodelab::intersect_plane_curves(&f, &g, seed, retries)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    let mut reports = Vec::with_capacity(spark.len());
    for d in spark {
        let rep = nodelab::independence_check(&ix.points, d, &ix.field)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        reports.push(Py::new(
            py,
            PySparkReport {
                d,
                ell: rep.ell,
                m: rep.m,
                passed: rep.passed,
                witness: rep.witness,
            },
        )?);
    }
    Ok(PyNodeLabRun {
        prime: ix.field.prime(),
        ext_degree: ix.field.ext_degree(),
        modulus: ix.field.modulus().to_vec(),
        chart_attempts: ix.chart_attempts,
        points: ix
            .points
            .iter()
            .map(|pt| pt.coords.iter().map(|c| c.coeffs.clone()).collect())
            .collect(),
        multiplicities: ix.points.iter().map(|pt| pt.multiplicity).collect(),
        spark: reports,
    })
}

/// Draw a seeded coefficient matrix for a table row (1-based) and return its
/// null-space section: a list of `(degree, monomials)` pairs, each monomial
/// `(e0, e1, e2, coeff)`. The defining identity is verified before returning.
#[pyfunction]
#[pyo3(signature = (row, prime = 10007, seed = 0))]
fn kernel_section(
    row: usize,
    prime: u64,
    seed: u64,
) -> PyResult<Vec<(u32, Vec<(u32, u32, u32, u64)>)>> {
    let row = table_row(row)?;
    if !nodelab::is_prime(prime) || prime == 2 {
        return Err(PyValueError::new_err(format!("not an odd prime: {}", prime)));
    }
    let alphas = nodelab::random_alphas(row, prime, seed);
    let section =
        nodelab::kernel_section(row, &alphas).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(section
        .iter()
        .map(|nj| {
            (
                nj.degree(),
                nj.coeffs()
                    .map(|(&e, &c)| (e[0], e[1], e[2], c))
                    .collect(),
            )
        })
        .collect())
}

#[pymodule]
fn cicy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCatalogRow>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PySparkReport>()?;
    m.add_class::<PyNodeLabRun>()?;
    m.add_function(wrap_pyfunction!(load_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(admissible, m)?)?;
    m.add_function(wrap_pyfunction!(min_degree, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_degrees, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(quintic_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(genus_cap, m)?)?;
    m.add_function(wrap_pyfunction!(expected_count, m)?)?;
    m.add_function(wrap_pyfunction!(plane_nodes, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_section, m)?)?;
    Ok(())
}
