//! Python module `pywreath`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use wreathmatch::cli::suites;
use wreathmatch::genfun::{generating_function, Series};
use wreathmatch::oracle::{self, OracleOptions, Stat};
use wreathmatch::polyk::{fit, Target};
use wreathmatch::series::egf_counts;
use wreathmatch::signed;
use wreathmatch::{Assignment, Error, Family, Var};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn family(s: &str) -> PyResult<Family> {
    s.parse().map_err(to_py)
}

fn assignment(s: &str) -> PyResult<Assignment> {
    s.parse().map_err(to_py)
}

#[pyclass(name = "SignedPermutation", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PySignedPermutation(signed::SignedPermutation);

#[pymethods]
impl PySignedPermutation {
    #[new]
    fn new(sigma: Vec<u32>, word: Vec<u32>, k: u32) -> PyResult<Self> {
        signed::SignedPermutation::new(sigma, word, k).map(Self).map_err(to_py)
    }

    #[getter]
    fn sigma(&self) -> Vec<u32> {
        self.0.sigma().to_vec()
    }

    #[getter]
    fn word(&self) -> Vec<u32> {
        self.0.word().to_vec()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k()
    }

    /// `(name, value)` pairs, in the order inv, coinv, norm_w, des, ris, wdes, wris, sdes, sris.
    fn stats(&self) -> Vec<(&'static str, u32)> {
        let s = signed::stats(&self.0);
        vec![
            ("inv", s.inv),
            ("coinv", s.coinv),
            ("norm_w", s.norm_w),
            ("des", s.des),
            ("ris", s.ris),
            ("wdes", s.wdes),
            ("wris", s.wris),
            ("sdes", s.sdes),
            ("sris", s.sris),
        ]
    }

    /// 1-based starts of bi-matches from the given family.
    fn bi_match_starts(&self, family_tag: &str) -> PyResult<Vec<usize>> {
        Ok(signed::bi_match_starts(&self.0, &family(family_tag)?.pattern_set()))
    }

    fn nlap(&self, family_tag: &str) -> PyResult<usize> {
        Ok(signed::nlap(&self.0, &family(family_tag)?.pattern_set()))
    }

    fn __repr__(&self) -> String {
        format!("SignedPermutation({})", self.0)
    }
}

/// Integer counts `n! [t^n/n!]` of a series at `p = q = r = 1`, `x = 0`.
#[pyfunction]
fn series_counts(family_tag: &str, series: &str, k: u32, order: usize) -> PyResult<Vec<BigInt>> {
    let s: Series = series.parse().map_err(to_py)?;
    let spec = Assignment::all_ones().with(Var::X, 0);
    let g = generating_function(family(family_tag)?, s, k, order, &spec).map_err(to_py)?;
    (0..=order)
        .map(|n| egf_counts(&g, n, &Assignment::none()).map_err(to_py))
        .collect()
}

/// Normalized coefficients of a series as polynomial strings.
#[pyfunction]
#[pyo3(signature = (family_tag, series, k, order, specialize = ""))]
fn series_coefficients(family_tag: &str, series: &str, k: u32, order: usize, specialize: &str) -> PyResult<Vec<String>> {
    let s: Series = series.parse().map_err(to_py)?;
    let g = generating_function(family(family_tag)?, s, k, order, &assignment(specialize)?).map_err(to_py)?;
    Ok(g.coeffs().iter().map(ToString::to_string).collect())
}

/// Brute-force distribution of match counts (`stat="mch"`) or `nlap`.
#[pyfunction]
#[pyo3(signature = (n, k, family_tag, stat = "mch", specialize = ""))]
fn oracle_distribution(n: usize, k: u32, family_tag: &str, stat: &str, specialize: &str) -> PyResult<String> {
    let stat = match stat {
        "mch" => Stat::Mch,
        "nlap" => Stat::Nlap,
        other => return Err(PyValueError::new_err(format!("unknown statistic `{other}`"))),
    };
    let d = oracle::distribution_at(
        n,
        k,
        &family(family_tag)?.pattern_set(),
        stat,
        &assignment(specialize)?,
        &OracleOptions::default(),
    )
    .map_err(to_py)?;
    Ok(d.poly.to_string())
}

/// `(coefficients ascending as rational strings, factored form)`.
#[pyfunction]
fn poly(target: &str, family_tag: &str, n: u32) -> PyResult<(Vec<String>, String)> {
    let t: Target = target.parse().map_err(to_py)?;
    let p = fit(family(family_tag)?, t, n).map_err(to_py)?.poly;
    Ok((p.coeff_strings(), p.factored()))
}

/// `(name, passed, detail)` for every check in a suite.
#[pyfunction]
fn verify(suite: &str) -> PyResult<Vec<(String, bool, String)>> {
    let fams = Family::ALL;
    let checks = match suite {
        "oracle-gf" => suites::oracle_gf(&fams, &[2, 3], 4, &OracleOptions::default()),
        "involution" => suites::involution_suite(&fams, &[2], 4, 5),
        "lemmas" => Ok(suites::lemma_suite(6, 5)),
        "identities" => suites::identity_suite(6, 5),
        "conjectures" => suites::conjecture_suite(6),
        "avoidance" => suites::avoidance_suite(4, 3, 5),
        other => return Err(PyValueError::new_err(format!("unknown suite `{other}`"))),
    }
    .map_err(to_py)?;
    Ok(checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect())
}

#[pymodule]
fn pywreath(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySignedPermutation>()?;
    m.add_function(wrap_pyfunction!(series_counts, m)?)?;
    m.add_function(wrap_pyfunction!(series_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(poly, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
