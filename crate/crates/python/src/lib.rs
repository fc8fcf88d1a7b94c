//! Python bindings for the comparison-complexity laboratory: entropy
//! arithmetic, state-space models, instrumented algorithms, the minimax
//! oracle, and report rendering, importable as `infobound_py`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use infobound_core::algos::{self, Algorithm, ComparisonTally};
use infobound_core::entropy::{self, EntropyBits, ProbabilityDistribution};
use infobound_core::models::{
    self, EntropyMode, EnumerationCaps, KeyAssignment, KeyModel, ProblemKind,
};
use infobound_core::oracle::{self, OracleProblem};
use infobound_core::report;

fn value_error(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn caps() -> EnumerationCaps {
    EnumerationCaps::default()
}

fn distribution(probs: Vec<f64>) -> PyResult<ProbabilityDistribution> {
    ProbabilityDistribution::new(probs).map_err(value_error)
}

fn parse_algorithm(name: &str) -> PyResult<Algorithm> {
    name.parse().map_err(value_error)
}

/// A modeled problem: exact state count, entropy, and modeling flags.
#[pyclass(name = "ProblemModel", frozen)]
struct PyProblemModel {
    inner: models::ProblemModel,
}

#[pymethods]
impl PyProblemModel {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind.as_str()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn state_count(&self) -> BigUint {
        self.inner.state_count.clone()
    }

    #[getter]
    fn entropy_bits(&self) -> f64 {
        self.inner.entropy_bits.bits()
    }

    #[getter]
    fn information_independent(&self) -> bool {
        self.inner.information_independent
    }

    #[getter]
    fn zero_type(&self) -> bool {
        self.inner.zero_type
    }

    fn __repr__(&self) -> String {
        format!(
            "ProblemModel(kind='{}', n={}, state_count={}, entropy_bits={})",
            self.inner.kind, self.inner.n, self.inner.state_count, self.inner.entropy_bits
        )
    }
}

/// Verdict of the transitivity check on one pairwise assignment.
#[pyclass(name = "ConsistencyVerdict", frozen)]
struct PyConsistencyVerdict {
    line: String,
    consistent: bool,
    witness: Option<(usize, usize, usize)>,
}

#[pymethods]
impl PyConsistencyVerdict {
    #[getter]
    fn assignment(&self) -> &str {
        &self.line
    }

    #[getter]
    fn consistent(&self) -> bool {
        self.consistent
    }

    #[getter]
    fn witness(&self) -> Option<(usize, usize, usize)> {
        self.witness
    }

    fn __repr__(&self) -> String {
        format!(
            "ConsistencyVerdict(assignment='{}', consistent={}, witness={:?})",
            self.line, self.consistent, self.witness
        )
    }
}

/// Comparison-count extremes of one algorithm over a set of inputs.
#[pyclass(name = "MeasurementResult", frozen)]
struct PyMeasurementResult {
    inner: algos::MeasurementResult,
}

#[pymethods]
impl PyMeasurementResult {
    #[getter]
    fn algorithm(&self) -> &'static str {
        self.inner.algorithm.as_str()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn worst_case(&self) -> u64 {
        self.inner.worst_case
    }

    #[getter]
    fn best_case(&self) -> u64 {
        self.inner.best_case
    }

    #[getter]
    fn exhaustive(&self) -> bool {
        self.inner.exhaustive
    }

    #[getter]
    fn trials(&self) -> u64 {
        self.inner.trials
    }

    #[getter]
    fn seed(&self) -> Option<u64> {
        self.inner.seed
    }

    fn __repr__(&self) -> String {
        format!(
            "MeasurementResult(algorithm='{}', n={}, worst_case={}, best_case={}, exhaustive={}, trials={})",
            self.inner.algorithm,
            self.inner.n,
            self.inner.worst_case,
            self.inner.best_case,
            self.inner.exhaustive,
            self.inner.trials
        )
    }
}

/// Exact minimax value of one oracle problem.
#[pyclass(name = "OracleResult", frozen)]
struct PyOracleResult {
    inner: oracle::OracleResult,
}

#[pymethods]
impl PyOracleResult {
    #[getter]
    fn problem(&self) -> &'static str {
        self.inner.problem.as_str()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn min_worst_case(&self) -> u32 {
        self.inner.min_worst_case
    }

    #[getter]
    fn entropy_floor(&self) -> u64 {
        self.inner.entropy_floor
    }

    #[getter]
    fn optimal_first_comparison(&self) -> Option<(usize, usize)> {
        self.inner.optimal_first_comparison
    }

    #[getter]
    fn bound_met(&self) -> bool {
        u64::from(self.inner.min_worst_case) == self.inner.entropy_floor
    }

    fn __repr__(&self) -> String {
        format!(
            "OracleResult(problem='{}', n={}, min_worst_case={}, entropy_floor={})",
            self.inner.problem, self.inner.n, self.inner.min_worst_case, self.inner.entropy_floor
        )
    }
}

/// Shannon entropy of a probability distribution, in bits.
#[pyfunction]
fn shannon_entropy(probs: Vec<f64>) -> PyResult<f64> {
    Ok(entropy::shannon_entropy(&distribution(probs)?).bits())
}

/// Entropy eliminated by solving: initial minus final, both in bits.
#[pyfunction]
fn entropy_change(initial_bits: f64, final_bits: f64) -> PyResult<f64> {
    let initial = EntropyBits::new(initial_bits).map_err(value_error)?;
    let terminal = EntropyBits::new(final_bits).map_err(value_error)?;
    Ok(entropy::entropy_change(initial, terminal)
        .map_err(value_error)?
        .bits())
}

/// log2(n): entropy of a uniform distribution over n states.
#[pyfunction]
fn uniform_entropy(n: u64) -> PyResult<f64> {
    Ok(entropy::uniform_entropy(n).map_err(value_error)?.bits())
}

#[pyfunction]
fn log2_factorial_exact(n: u64) -> f64 {
    entropy::log2_factorial_exact(n).bits()
}

#[pyfunction]
fn stirling_log2_factorial(n: u64) -> f64 {
    entropy::stirling_log2_factorial(n)
}

/// Entropy in base-`base` information units.
#[pyfunction]
fn generalized_entropy(probs: Vec<f64>, base: f64) -> PyResult<f64> {
    entropy::generalized_entropy(&distribution(probs)?, base).map_err(value_error)
}

/// Partial sum of the Taylor series of e: sum of 1/k! for k = 0..terms.
#[pyfunction]
fn e_partial_sum(terms: u32) -> f64 {
    entropy::e_partial_sum(terms)
}

/// Build a problem model; kind is one of 'max', 'sort', 'pairwise',
/// 'search'.
#[pyfunction]
fn build_model(kind: &str, n: usize) -> PyResult<PyProblemModel> {
    let kind: ProblemKind = kind.parse().map_err(value_error)?;
    Ok(PyProblemModel {
        inner: models::build_model(kind, n).map_err(value_error)?,
    })
}

/// All 2^(n-1) max-key assignments as serialized lines.
#[pyfunction]
fn enumerate_max_keys(n: usize) -> PyResult<Vec<String>> {
    Ok(models::enumerate_max_keys(n, &caps())
        .map_err(value_error)?
        .map(|a| a.to_line())
        .collect())
}

/// All 2^(n(n-1)/2) pairwise assignments as serialized lines.
#[pyfunction]
fn enumerate_pairwise(n: usize) -> PyResult<Vec<String>> {
    Ok(models::enumerate_pairwise(n, &caps())
        .map_err(value_error)?
        .map(|a| a.to_line())
        .collect())
}

fn parse_bits(n: usize, bits: &str, kind: KeyModel) -> PyResult<KeyAssignment> {
    let expected = kind.key_count(n);
    if bits.len() != expected {
        return Err(value_error(format!(
            "expected {expected} bits for the {kind} model at n = {n}, got {}",
            bits.len()
        )));
    }
    let mut mask = 0u64;
    for (k, c) in bits.chars().enumerate() {
        match c {
            '1' => mask |= 1 << k,
            '0' => {}
            other => {
                return Err(value_error(format!(
                    "bit {k} is '{other}', expected 0 or 1"
                )))
            }
        }
    }
    KeyAssignment::new(kind, n, mask).map_err(value_error)
}

/// Check a pairwise assignment (given as a 0/1 string in canonical edge
/// order) for transitivity.
#[pyfunction]
fn check_consistency(n: usize, bits: &str) -> PyResult<PyConsistencyVerdict> {
    let assignment = parse_bits(n, bits, KeyModel::Pairwise)?;
    let verdict = models::check_consistency(&assignment).map_err(value_error)?;
    Ok(PyConsistencyVerdict {
        line: verdict.assignment.to_line(),
        consistent: verdict.consistent,
        witness: verdict.witness,
    })
}

/// Number of pairwise assignments that survive the transitivity filter.
#[pyfunction]
fn count_consistent_orderings(n: usize) -> PyResult<u64> {
    models::count_consistent_orderings(n, &caps()).map_err(value_error)
}

/// log2(n!), exactly or via the two-term Stirling approximation.
#[pyfunction]
#[pyo3(signature = (n, mode = "exact"))]
fn sorting_entropy(n: u64, mode: &str) -> PyResult<f64> {
    let mode = match mode {
        "exact" => EntropyMode::Exact,
        "stirling" => EntropyMode::Stirling,
        other => {
            return Err(value_error(format!(
                "unknown mode '{other}' (expected exact or stirling)"
            )))
        }
    };
    Ok(models::sorting_entropy(n, mode))
}

/// Entropy of the result-as-state model and whether it is valid for the
/// problem.
#[pyfunction]
fn result_as_state_entropy(model: &PyProblemModel) -> PyResult<(f64, bool)> {
    let (h, valid) = models::result_as_state_entropy(&model.inner).map_err(value_error)?;
    Ok((h.bits(), valid))
}

/// log2 of the consistent pairwise assignments left once `fixed_max`
/// dominates everything.
#[pyfunction]
fn residual_entropy(n: usize, fixed_max: usize) -> PyResult<f64> {
    Ok(models::residual_entropy(n, fixed_max, &caps())
        .map_err(value_error)?
        .bits())
}

#[pyfunction]
fn equiprobability_check(model: &PyProblemModel) -> PyResult<bool> {
    models::equiprobability_check(&model.inner, &caps()).map_err(value_error)
}

#[pyfunction]
fn zero_type_check(model: &PyProblemModel) -> PyResult<bool> {
    models::zero_type_check(&model.inner, &caps()).map_err(value_error)
}

/// Scan for the maximum; returns (max, comparisons).
#[pyfunction]
fn max_scan(values: Vec<i64>) -> PyResult<(i64, u64)> {
    let mut tally = ComparisonTally::new();
    let max = *algos::max_scan(&values, &mut tally).map_err(value_error)?;
    Ok((max, tally.count()))
}

/// Canonical bubble sort; returns (sorted, comparisons).
#[pyfunction]
fn bubble_sort(values: Vec<i64>) -> (Vec<i64>, u64) {
    let mut tally = ComparisonTally::new();
    let sorted = algos::bubble_sort(&values, &mut tally);
    (sorted, tally.count())
}

/// Insertion sort; returns (sorted, comparisons).
#[pyfunction]
fn insertion_sort(values: Vec<i64>) -> (Vec<i64>, u64) {
    let mut tally = ComparisonTally::new();
    let sorted = algos::insertion_sort(&values, &mut tally);
    (sorted, tally.count())
}

/// Top-down merge sort; returns (sorted, comparisons).
#[pyfunction]
fn merge_sort(values: Vec<i64>) -> (Vec<i64>, u64) {
    let mut tally = ComparisonTally::new();
    let sorted = algos::merge_sort(&values, &mut tally);
    (sorted, tally.count())
}

/// Two-way binary search over ascending values; returns (index or None,
/// probes).
#[pyfunction]
fn binary_search(sorted_values: Vec<i64>, target: i64) -> (Option<usize>, u64) {
    let mut tally = ComparisonTally::new();
    let position = algos::binary_search(&sorted_values, &target, &mut tally);
    (position, tally.count())
}

/// Worst-case probe count of binary search over n distinct items.
#[pyfunction]
fn binary_search_worst_case(n: usize) -> u64 {
    algos::binary_search_worst_case(n)
}

/// Run one algorithm with tracing on and return the `i j G|N` trace dump.
#[pyfunction]
fn trace_comparisons(algo: &str, values: Vec<i64>) -> PyResult<String> {
    let algorithm = parse_algorithm(algo)?;
    let mut tally = ComparisonTally::with_trace();
    match algorithm {
        Algorithm::MaxScan => {
            algos::max_scan(&values, &mut tally).map_err(value_error)?;
        }
        Algorithm::Bubble => {
            algos::bubble_sort(&values, &mut tally);
        }
        Algorithm::Insertion => {
            algos::insertion_sort(&values, &mut tally);
        }
        Algorithm::Merge => {
            algos::merge_sort(&values, &mut tally);
        }
    }
    Ok(tally.dump_trace().unwrap_or_default())
}

/// Exhaustive worst/best comparison counts over every permutation of
/// {1..n}; algo is one of 'max_scan', 'bubble', 'insertion', 'merge'.
#[pyfunction]
fn worst_case_exhaustive(algo: &str, n: usize) -> PyResult<PyMeasurementResult> {
    let algorithm = parse_algorithm(algo)?;
    Ok(PyMeasurementResult {
        inner: algos::worst_case_exhaustive(algorithm, n).map_err(value_error)?,
    })
}

/// Seeded random-permutation measurement for n beyond the exhaustive cap.
#[pyfunction]
fn measure_sampled(algo: &str, n: usize, trials: u64, seed: u64) -> PyResult<PyMeasurementResult> {
    let algorithm = parse_algorithm(algo)?;
    Ok(PyMeasurementResult {
        inner: algos::measure_sampled(algorithm, n, trials, seed).map_err(value_error)?,
    })
}

/// Exact minimum worst-case comparisons to sort n elements.
#[pyfunction]
fn min_comparisons_sort(n: usize) -> PyResult<PyOracleResult> {
    Ok(PyOracleResult {
        inner: oracle::min_comparisons_sort(n).map_err(value_error)?,
    })
}

/// Exact minimum worst-case comparisons to locate the maximum.
#[pyfunction]
fn min_comparisons_max(n: usize) -> PyResult<PyOracleResult> {
    Ok(PyOracleResult {
        inner: oracle::min_comparisons_max(n).map_err(value_error)?,
    })
}

/// The optimal strategy as an indented decision tree; problem is 'sort' or
/// 'max'.
#[pyfunction]
fn dump_strategy(problem: &str, n: usize) -> PyResult<String> {
    let problem: OracleProblem = problem.parse().map_err(value_error)?;
    oracle::dump_strategy(problem, n).map_err(value_error)
}

/// The bound report for lo..=hi as CSV text.
#[pyfunction]
fn report_csv(lo: usize, hi: usize) -> PyResult<String> {
    Ok(report::build_report(lo, hi)
        .map_err(value_error)?
        .render_csv())
}

/// The bound report for lo..=hi as a Markdown pipe table.
#[pyfunction]
fn report_markdown(lo: usize, hi: usize) -> PyResult<String> {
    Ok(report::build_report(lo, hi)
        .map_err(value_error)?
        .render_markdown())
}

#[pymodule]
fn infobound_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyProblemModel>()?;
    m.add_class::<PyConsistencyVerdict>()?;
    m.add_class::<PyMeasurementResult>()?;
    m.add_class::<PyOracleResult>()?;
    m.add_function(wrap_pyfunction!(shannon_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_change, m)?)?;
    m.add_function(wrap_pyfunction!(uniform_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(log2_factorial_exact, m)?)?;
    m.add_function(wrap_pyfunction!(stirling_log2_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(e_partial_sum, m)?)?;
    m.add_function(wrap_pyfunction!(build_model, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_max_keys, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pairwise, m)?)?;
    m.add_function(wrap_pyfunction!(check_consistency, m)?)?;
    m.add_function(wrap_pyfunction!(count_consistent_orderings, m)?)?;
    m.add_function(wrap_pyfunction!(sorting_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(result_as_state_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(residual_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(equiprobability_check, m)?)?;
    m.add_function(wrap_pyfunction!(zero_type_check, m)?)?;
    m.add_function(wrap_pyfunction!(max_scan, m)?)?;
    m.add_function(wrap_pyfunction!(bubble_sort, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_sort, m)?)?;
    m.add_function(wrap_pyfunction!(merge_sort, m)?)?;
    m.add_function(wrap_pyfunction!(binary_search, m)?)?;
    m.add_function(wrap_pyfunction!(binary_search_worst_case, m)?)?;
    m.add_function(wrap_pyfunction!(trace_comparisons, m)?)?;
    m.add_function(wrap_pyfunction!(worst_case_exhaustive, m)?)?;
    m.add_function(wrap_pyfunction!(measure_sampled, m)?)?;
    m.add_function(wrap_pyfunction!(min_comparisons_sort, m)?)?;
    m.add_function(wrap_pyfunction!(min_comparisons_max, m)?)?;
    m.add_function(wrap_pyfunction!(dump_strategy, m)?)?;
    m.add_function(wrap_pyfunction!(report_csv, m)?)?;
    m.add_function(wrap_pyfunction!(report_markdown, m)?)?;
    Ok(())
}
