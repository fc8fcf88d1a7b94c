//! Comparison-based algorithms instrumented with an exact comparison
//! counter, plus exhaustive worst-case measurement over all permutations at
//! small n and seeded sampling beyond.
//!
//! The unit of counting is one binary comparison outcome, Greater or
//! NotGreater. Element moves, swaps, and index arithmetic are never
//! counted.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest n for which exhaustive permutation sweeps are allowed
/// (8! = 40320 inputs).
pub const EXHAUSTIVE_CAP: usize = 8;

/// The two conditions a key comparison can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareOutcome {
    Greater,
    NotGreater,
}

impl CompareOutcome {
    pub fn letter(self) -> char {
        match self {
            CompareOutcome::Greater => 'G',
            CompareOutcome::NotGreater => 'N',
        }
    }
}

/// Comparison counter with an optional trace of (left, right, outcome)
/// triples. The count always equals the trace length when tracing is on.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComparisonTally {
    count: u64,
    trace: Option<Vec<(usize, usize, CompareOutcome)>>,
}

impl ComparisonTally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_trace() -> Self {
        Self {
            count: 0,
            trace: Some(Vec::new()),
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn trace(&self) -> Option<&[(usize, usize, CompareOutcome)]> {
        self.trace.as_deref()
    }

    /// Trace dump, one line per comparison: `i j G|N`.
    pub fn dump_trace(&self) -> Option<String> {
        self.trace.as_ref().map(|t| {
            t.iter()
                .map(|&(i, j, o)| format!("{i} {j} {}\n", o.letter()))
                .collect()
        })
    }

    /// Record one binary comparison: is `a` (at index `i`) greater than `b`
    /// (at index `j`)?
    fn greater<T: Ord>(&mut self, i: usize, j: usize, a: &T, b: &T) -> bool {
        let outcome = if a > b {
            CompareOutcome::Greater
        } else {
            CompareOutcome::NotGreater
        };
        self.count += 1;
        if let Some(trace) = &mut self.trace {
            trace.push((i, j, outcome));
        }
        outcome == CompareOutcome::Greater
    }
}

/// Single left-to-right scan keeping the running maximum. Spends exactly
/// n−1 comparisons on every input of size n.
pub fn max_scan<'a, T: Ord>(input: &'a [T], tally: &mut ComparisonTally) -> Result<&'a T> {
    if input.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut best = 0;
    for k in 1..input.len() {
        if !tally.greater(best, k, &input[best], &input[k]) {
            best = k;
        }
    }
    Ok(&input[best])
}

/// Canonical bubble sort without the early-exit optimization: every input
/// of size n costs exactly n(n−1)/2 comparisons.
pub fn bubble_sort<T: Ord + Clone>(input: &[T], tally: &mut ComparisonTally) -> Vec<T> {
    let mut v = input.to_vec();
    let n = v.len();
    for pass in 1..n {
        for j in 0..n - pass {
            if tally.greater(j, j + 1, &v[j], &v[j + 1]) {
                v.swap(j, j + 1);
            }
        }
    }
    v
}

/// Bubble sort that stops after a swap-free pass. Counts fewer comparisons
/// on nearly sorted inputs; its worst case (reverse order) still matches
/// the canonical variant.
pub fn bubble_sort_early_exit<T: Ord + Clone>(input: &[T], tally: &mut ComparisonTally) -> Vec<T> {
    let mut v = input.to_vec();
    let n = v.len();
    for pass in 1..n {
        let mut swapped = false;
        for j in 0..n - pass {
            if tally.greater(j, j + 1, &v[j], &v[j + 1]) {
                v.swap(j, j + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    v
}

/// Straight insertion sort. Worst case (reverse order) costs n(n−1)/2
/// comparisons; an already-sorted input costs n−1.
pub fn insertion_sort<T: Ord + Clone>(input: &[T], tally: &mut ComparisonTally) -> Vec<T> {
    let mut v = input.to_vec();
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && tally.greater(j - 1, j, &v[j - 1], &v[j]) {
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    v
}

/// Standard top-down merge sort, one comparison per merge step. Trace
/// indices refer to positions in the partially sorted layout at the moment
/// of each comparison.
pub fn merge_sort<T: Ord + Clone>(input: &[T], tally: &mut ComparisonTally) -> Vec<T> {
    fn sort<T: Ord + Clone>(v: &[T], offset: usize, tally: &mut ComparisonTally) -> Vec<T> {
        if v.len() <= 1 {
            return v.to_vec();
        }
        let mid = v.len() / 2;
        let left = sort(&v[..mid], offset, tally);
        let right = sort(&v[mid..], offset + mid, tally);

        let mut out = Vec::with_capacity(v.len());
        let (mut li, mut ri) = (0, 0);
        while li < left.len() && ri < right.len() {
            if tally.greater(offset + li, offset + mid + ri, &left[li], &right[ri]) {
                out.push(right[ri].clone());
                ri += 1;
            } else {
                out.push(left[li].clone());
                li += 1;
            }
        }
        out.extend_from_slice(&left[li..]);
        out.extend_from_slice(&right[ri..]);
        out
    }
    sort(input, 0, tally)
}

/// Two-way binary search over an ascending sequence of distinct items.
///
/// Each probe asks one binary question, "is the probed element greater than
/// the target", and narrows a half-open window until one candidate is left;
/// the worst case over all targets is floor(log2 n) + 1 probes. The final
/// presence confirmation is an equality test, not an order comparison, so
/// it is not tallied. Probe trace lines use the input length as the right
/// index to denote the external target.
pub fn binary_search<T: Ord>(
    sorted: &[T],
    target: &T,
    tally: &mut ComparisonTally,
) -> Option<usize> {
    let n = sorted.len();
    let (mut lo, mut hi) = (0, n);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if tally.greater(mid, n, &sorted[mid], target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if lo > 0 && sorted[lo - 1] == *target {
        Some(lo - 1)
    } else {
        None
    }
}

/// The permutation-sweepable algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    MaxScan,
    Bubble,
    Insertion,
    Merge,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::MaxScan,
        Algorithm::Bubble,
        Algorithm::Insertion,
        Algorithm::Merge,
    ];

    /// The comparison sorts among [`Algorithm::ALL`].
    pub const SORTS: [Algorithm; 3] = [Algorithm::Bubble, Algorithm::Insertion, Algorithm::Merge];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::MaxScan => "max_scan",
            Algorithm::Bubble => "bubble",
            Algorithm::Insertion => "insertion",
            Algorithm::Merge => "merge",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "max_scan" => Ok(Algorithm::MaxScan),
            "bubble" => Ok(Algorithm::Bubble),
            "insertion" => Ok(Algorithm::Insertion),
            "merge" => Ok(Algorithm::Merge),
            other => Err(format!(
                "unknown algorithm '{other}' (expected max_scan, bubble, insertion, or merge)"
            )),
        }
    }
}

/// Comparison-count extremes of one algorithm over a set of inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasurementResult {
    pub algorithm: Algorithm,
    pub n: usize,
    pub worst_case: u64,
    pub best_case: u64,
    /// True when every one of the n! permutations was run.
    pub exhaustive: bool,
    pub trials: u64,
    /// RNG seed, present exactly in sampled mode.
    pub seed: Option<u64>,
}

/// Run `algorithm` on one input and return its comparison count, verifying
/// the output on the way.
fn run_counted(algorithm: Algorithm, input: &[u32]) -> u64 {
    let mut tally = ComparisonTally::new();
    match algorithm {
        Algorithm::MaxScan => {
            let max = max_scan(input, &mut tally).expect("non-empty input");
            debug_assert_eq!(Some(max), input.iter().max());
        }
        Algorithm::Bubble | Algorithm::Insertion | Algorithm::Merge => {
            let sorted = match algorithm {
                Algorithm::Bubble => bubble_sort(input, &mut tally),
                Algorithm::Insertion => insertion_sort(input, &mut tally),
                _ => merge_sort(input, &mut tally),
            };
            debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
            debug_assert_eq!(sorted.len(), input.len());
        }
    }
    tally.count()
}

/// The `index`-th permutation of 1..=n in lexicographic order (factorial
/// number system decode).
pub fn nth_permutation(n: usize, mut index: u64) -> Vec<u32> {
    let mut factorials = vec![1u64; n];
    for k in 1..n {
        factorials[k] = factorials[k - 1] * k as u64;
    }
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let digit = (index / factorials[k]) as usize;
        index %= factorials[k];
        out.push(pool.remove(digit));
    }
    out
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

/// Run `algorithm` on every permutation of {1..n} and report the extreme
/// comparison counts. Permutations are swept in a fixed order and merged by
/// max/min, so the result is independent of how the sweep is scheduled.
pub fn worst_case_exhaustive(algorithm: Algorithm, n: usize) -> Result<MeasurementResult> {
    if n == 0 {
        return Err(Error::TooFewElements { n, min: 1 });
    }
    if n > EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive measurement",
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let trials = factorial_u64(n);
    let (worst_case, best_case) = (0..trials)
        .into_par_iter()
        .map(|index| {
            let count = run_counted(algorithm, &nth_permutation(n, index));
            (count, count)
        })
        .reduce(
            || (u64::MIN, u64::MAX),
            |(wa, ba), (wb, bb)| (wa.max(wb), ba.min(bb)),
        );
    Ok(MeasurementResult {
        algorithm,
        n,
        worst_case,
        best_case,
        exhaustive: true,
        trials,
        seed: None,
    })
}

/// splitmix64: a tiny self-contained generator so sampled measurements stay
/// byte-reproducible for a given seed across builds and platforms.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw below `bound` by widening multiply.
    fn below(&mut self, bound: u64) -> u64 {
        ((u128::from(self.next()) * u128::from(bound)) >> 64) as u64
    }
}

/// Run `algorithm` on `trials` seeded random permutations of {1..n}.
pub fn measure_sampled(
    algorithm: Algorithm,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<MeasurementResult> {
    if n == 0 {
        return Err(Error::TooFewElements { n, min: 1 });
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut rng = SplitMix64(seed);
    let mut worst_case = u64::MIN;
    let mut best_case = u64::MAX;
    let mut perm: Vec<u32> = (1..=n as u32).collect();
    for _ in 0..trials {
        for k in (1..perm.len()).rev() {
            perm.swap(k, rng.below(k as u64 + 1) as usize);
        }
        let count = run_counted(algorithm, &perm);
        worst_case = worst_case.max(count);
        best_case = best_case.min(count);
    }
    Ok(MeasurementResult {
        algorithm,
        n,
        worst_case,
        best_case,
        exhaustive: false,
        trials,
        seed: Some(seed),
    })
}

/// Worst-case probe count of [`binary_search`] over an ascending array of n
/// distinct items, sweeping every present element and every gap target.
pub fn binary_search_worst_case(n: usize) -> u64 {
    let sorted: Vec<u32> = (1..=n as u32).map(|x| 2 * x).collect();
    let mut worst = 0;
    for target in 1..=2 * n as u32 + 1 {
        let mut tally = ComparisonTally::new();
        let found = binary_search(&sorted, &target, &mut tally);
        debug_assert_eq!(found, sorted.iter().position(|&x| x == target));
        worst = worst.max(tally.count());
    }
    worst
}
