//! State spaces for comparison problems: key sequences for max-finding and
//! sorting, exhaustive enumeration with a transitivity filter, and the
//! modeling checks (information independence, 0-type, equiprobability).

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::entropy::{
    log2_factorial_exact, shannon_entropy, stirling_log2_factorial, uniform_entropy, EntropyBits,
    ProbabilityDistribution,
};
use crate::error::{Error, Result};

/// Tolerance used when comparing entropies of enumerated state sets.
pub const ENTROPY_TOLERANCE: f64 = 1e-9;

/// Upper bounds on the n accepted by the exhaustive enumerators.
///
/// The defaults keep every enumeration desk-scale: the pairwise model at
/// n = 6 scans 2^15 = 32768 assignments, the max-key model at n = 20 scans
/// 2^19 masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub pairwise: usize,
    pub max_keys: usize,
    pub permutations: usize,
    pub search: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        Self {
            pairwise: 6,
            max_keys: 20,
            permutations: 8,
            search: 1 << 20,
        }
    }
}

/// Number of unordered pairs over n elements: n(n−1)/2.
pub const fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Canonical bit index of the pair (i, j), i < j, in lexicographic order:
/// (0,1), (0,2), …, (0,n−1), (1,2), …
pub const fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Which key sequence an assignment ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyModel {
    /// n−1 keys between a designated top element (index 0) and the rest.
    MaxKeys,
    /// n(n−1)/2 keys, one per unordered pair, in canonical edge order.
    Pairwise,
}

impl KeyModel {
    pub fn as_str(self) -> &'static str {
        match self {
            KeyModel::MaxKeys => "maxkeys",
            KeyModel::Pairwise => "pairwise",
        }
    }

    pub fn key_count(self, n: usize) -> usize {
        match self {
            KeyModel::MaxKeys => n - 1,
            KeyModel::Pairwise => pair_count(n),
        }
    }
}

impl std::fmt::Display for KeyModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One complete assignment of "Greater" / "Not greater" conditions to the
/// keys of a model; a candidate state sequence.
///
/// Bit k = 1 means "Greater". For the max-key model, key k relates the top
/// element (index 0) to element k+1. For the pairwise model, the key for
/// pair (i, j) with i < j sits at [`pair_index`] and value 1 means element
/// i is greater than element j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KeyAssignment {
    kind: KeyModel,
    n: usize,
    bits: u64,
}

impl KeyAssignment {
    pub fn new(kind: KeyModel, n: usize, bits: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewElements { n, min: 2 });
        }
        let key_count = kind.key_count(n);
        if key_count > 63 {
            return Err(Error::CapExceeded {
                what: match kind {
                    KeyModel::MaxKeys => "maxkeys assignment",
                    KeyModel::Pairwise => "pairwise assignment",
                },
                n,
                cap: match kind {
                    KeyModel::MaxKeys => 64,
                    KeyModel::Pairwise => 11,
                },
            });
        }
        if bits >> key_count != 0 {
            return Err(Error::ExcessBits { key_count });
        }
        Ok(Self { kind, n, bits })
    }

    pub fn kind(&self) -> KeyModel {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn key_count(&self) -> usize {
        self.kind.key_count(self.n)
    }

    /// Condition of key `k`: true = "Greater".
    pub fn key(&self, k: usize) -> bool {
        debug_assert!(k < self.key_count());
        self.bits >> k & 1 == 1
    }

    /// Whether element `i` is greater than element `j` under a pairwise
    /// assignment, for any i ≠ j.
    pub fn greater(&self, i: usize, j: usize) -> bool {
        debug_assert_eq!(self.kind, KeyModel::Pairwise);
        if i < j {
            self.key(pair_index(self.n, i, j))
        } else {
            !self.key(pair_index(self.n, j, i))
        }
    }

    /// True when every key reads "Greater"; in the max-key model this is the
    /// unique assignment certifying the top element as the maximum.
    pub fn all_greater(&self) -> bool {
        self.bits == (1u64 << self.key_count()) - 1
    }

    /// The bit vector as a 0/1 string in canonical key order.
    pub fn bit_string(&self) -> String {
        (0..self.key_count())
            .map(|k| if self.key(k) { '1' } else { '0' })
            .collect()
    }

    /// Line serialization: `n`, model kind, then the bit string.
    pub fn to_line(&self) -> String {
        format!("{} {} {}", self.n, self.kind, self.bit_string())
    }
}

impl std::fmt::Display for KeyAssignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Outcome of the transitivity check on a pairwise assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyVerdict {
    pub assignment: KeyAssignment,
    pub consistent: bool,
    /// First element triple (a, b, c) whose three keys form a dominance
    /// cycle; present exactly when the assignment is inconsistent.
    pub witness: Option<(usize, usize, usize)>,
}

/// The modeled problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    MaxFind,
    SortPairwise,
    SortPermutation,
    Search,
}

impl ProblemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::MaxFind => "max",
            ProblemKind::SortPairwise => "pairwise",
            ProblemKind::SortPermutation => "sort",
            ProblemKind::Search => "search",
        }
    }
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ProblemKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "max" => Ok(ProblemKind::MaxFind),
            "pairwise" => Ok(ProblemKind::SortPairwise),
            "sort" => Ok(ProblemKind::SortPermutation),
            "search" => Ok(ProblemKind::Search),
            other => Err(format!(
                "unknown problem kind '{other}' (expected max, sort, pairwise, or search)"
            )),
        }
    }
}

/// A modeled problem: its exact state count, entropy, and modeling flags.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemModel {
    pub kind: ProblemKind,
    pub n: usize,
    pub state_count: BigUint,
    pub entropy_bits: EntropyBits,
    /// Whether the problem's final result by itself encodes all final
    /// relationships among the data, so the result can serve as the state.
    pub information_independent: bool,
    /// Whether fixing the final result forces every key of the model's
    /// sequence (final entropy zero). The pairwise model queried for a
    /// maximum leaves (n−1)! completions open, so it is 0-type only for
    /// n ≤ 2.
    pub zero_type: bool,
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// ceil(log2(count)) in exact integer arithmetic.
pub fn ceil_log2(count: &BigUint) -> u64 {
    let one = BigUint::from(1u32);
    if *count <= one {
        0
    } else {
        (count - one).bits()
    }
}

/// Build the descriptor of a modeled problem, with exact state count and
/// entropy.
///
/// ```
/// use infobound_core::models::{build_model, ProblemKind};
///
/// let m = build_model(ProblemKind::MaxFind, 8).unwrap();
/// assert_eq!(m.entropy_bits.bits(), 7.0);
/// ```
pub fn build_model(kind: ProblemKind, n: usize) -> Result<ProblemModel> {
    if n == 0 {
        return Err(Error::TooFewElements { n, min: 1 });
    }
    let (state_count, entropy_bits, information_independent, zero_type) = match kind {
        ProblemKind::MaxFind => (
            BigUint::from(1u32) << (n - 1),
            EntropyBits::new((n - 1) as f64)?,
            false,
            true,
        ),
        ProblemKind::SortPairwise => (
            BigUint::from(1u32) << pair_count(n),
            EntropyBits::new(pair_count(n) as f64)?,
            true,
            n <= 2,
        ),
        ProblemKind::SortPermutation => (
            factorial(n as u64),
            log2_factorial_exact(n as u64),
            true,
            true,
        ),
        ProblemKind::Search => (BigUint::from(n), uniform_entropy(n as u64)?, true, true),
    };
    Ok(ProblemModel {
        kind,
        n,
        state_count,
        entropy_bits,
        information_independent,
        zero_type,
    })
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

/// All 2^(n−1) assignments of the max-key model, in ascending mask order.
/// The stream is deterministic: the same n always yields the same sequence.
pub fn enumerate_max_keys(
    n: usize,
    caps: &EnumerationCaps,
) -> Result<impl Iterator<Item = KeyAssignment>> {
    if n < 2 {
        return Err(Error::TooFewElements { n, min: 2 });
    }
    check_cap("maxkeys enumeration", n, caps.max_keys)?;
    let total = 1u64 << (n - 1);
    Ok((0..total).map(move |bits| KeyAssignment {
        kind: KeyModel::MaxKeys,
        n,
        bits,
    }))
}

/// All 2^(n(n−1)/2) assignments of the pairwise model, in ascending mask
/// order, before any consistency filtering.
pub fn enumerate_pairwise(
    n: usize,
    caps: &EnumerationCaps,
) -> Result<impl Iterator<Item = KeyAssignment>> {
    if n < 2 {
        return Err(Error::TooFewElements { n, min: 2 });
    }
    check_cap("pairwise enumeration", n, caps.pairwise)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |bits| KeyAssignment {
        kind: KeyModel::Pairwise,
        n,
        bits,
    }))
}

/// First element triple (a, b, c), a < b < c in scan order, whose keys form
/// a dominance cycle. A tournament is a strict total order iff it has no
/// 3-cycle, so this is a complete consistency test.
fn find_cyclic_triple(n: usize, bits: u64) -> Option<(usize, usize, usize)> {
    let key = |i: usize, j: usize| bits >> pair_index(n, i, j) & 1 == 1;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let ab = key(a, b);
                let bc = key(b, c);
                let ac = key(a, c);
                // a>b>c>a reads (1,1,0); a<b<c<a reads (0,0,1).
                if ab == bc && ac != ab {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Judge whether a pairwise assignment's dominance relation is a strict
/// total order; inconsistent verdicts carry the first cyclic triple.
pub fn check_consistency(assignment: &KeyAssignment) -> Result<ConsistencyVerdict> {
    if assignment.kind != KeyModel::Pairwise {
        return Err(Error::WrongModelKind {
            expected: KeyModel::Pairwise,
            actual: assignment.kind,
        });
    }
    let witness = find_cyclic_triple(assignment.n, assignment.bits);
    Ok(ConsistencyVerdict {
        assignment: *assignment,
        consistent: witness.is_none(),
        witness,
    })
}

/// Count the pairwise assignments that survive the transitivity filter.
/// Scans all 2^(n(n−1)/2) assignments; the count must equal n!.
///
/// The mask space is split across threads; the merged count is independent
/// of the partitioning.
pub fn count_consistent_orderings(n: usize, caps: &EnumerationCaps) -> Result<u64> {
    if n < 2 {
        return Err(Error::TooFewElements { n, min: 2 });
    }
    check_cap("pairwise enumeration", n, caps.pairwise)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total)
        .into_par_iter()
        .filter(|&bits| find_cyclic_triple(n, bits).is_none())
        .count() as u64)
}

/// Which evaluation of log2(n!) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyMode {
    Exact,
    Stirling,
}

/// The sorting entropy log2(n!), either exactly or through the two-term
/// Stirling approximation (which may be negative for tiny n).
pub fn sorting_entropy(n: u64, mode: EntropyMode) -> f64 {
    match mode {
        EntropyMode::Exact => log2_factorial_exact(n).bits(),
        EntropyMode::Stirling => stirling_log2_factorial(n),
    }
}

/// Entropy of the model in which the problem's final result itself serves
/// as the state, together with whether that model is valid for the problem.
///
/// For max-finding this is the explicitly invalid log2(n) model: the result
/// is not information independent, so the pair carries `false`.
pub fn result_as_state_entropy(model: &ProblemModel) -> Result<(EntropyBits, bool)> {
    let entropy = match model.kind {
        ProblemKind::MaxFind | ProblemKind::Search => uniform_entropy(model.n as u64)?,
        ProblemKind::SortPermutation | ProblemKind::SortPairwise => {
            log2_factorial_exact(model.n as u64)
        }
    };
    Ok((entropy, model.information_independent))
}

fn count_consistent_with_max(n: usize, fixed_max: usize, caps: &EnumerationCaps) -> Result<u64> {
    if n < 2 {
        return Err(Error::TooFewElements { n, min: 2 });
    }
    check_cap("pairwise enumeration", n, caps.pairwise)?;
    if fixed_max >= n {
        return Err(Error::IndexOutOfRange {
            index: fixed_max,
            n,
        });
    }
    let total = 1u64 << pair_count(n);
    let count = (0..total)
        .into_par_iter()
        .filter(|&bits| {
            let a = KeyAssignment {
                kind: KeyModel::Pairwise,
                n,
                bits,
            };
            (0..n).all(|k| k == fixed_max || a.greater(fixed_max, k))
                && find_cyclic_triple(n, bits).is_none()
        })
        .count() as u64;
    Ok(count)
}

/// Entropy left in the pairwise model after the maximum is fixed: log2 of
/// the number of consistent assignments in which `fixed_max` dominates all
/// other elements. Equals log2((n−1)!).
pub fn residual_entropy(n: usize, fixed_max: usize, caps: &EnumerationCaps) -> Result<EntropyBits> {
    let count = count_consistent_with_max(n, fixed_max, caps)?;
    EntropyBits::new((count as f64).log2())
}

/// Number of states the model enumerates (after consistency filtering where
/// applicable), staying within the caps.
fn enumerated_state_count(model: &ProblemModel, caps: &EnumerationCaps) -> Result<u64> {
    match model.kind {
        ProblemKind::MaxFind => Ok(enumerate_max_keys(model.n, caps)?.count() as u64),
        ProblemKind::SortPairwise => count_consistent_orderings(model.n, caps),
        ProblemKind::SortPermutation => {
            check_cap("permutation enumeration", model.n, caps.permutations)?;
            let mut count = 0u64;
            permutations_visit(model.n, &mut |_| count += 1);
            Ok(count)
        }
        ProblemKind::Search => {
            check_cap("search enumeration", model.n, caps.search)?;
            Ok(model.n as u64)
        }
    }
}

/// Visit every permutation of 0..n once (Heap's algorithm).
fn permutations_visit(n: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k {
            rec(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    rec(n, &mut items, visit);
}

/// Verify that the model's enumerated states form a uniform distribution:
/// every state gets probability 1/count, the probabilities form a valid
/// distribution, and their Shannon entropy matches log2(count).
pub fn equiprobability_check(model: &ProblemModel, caps: &EnumerationCaps) -> Result<bool> {
    let count = enumerated_state_count(model, caps)?;
    let dist = ProbabilityDistribution::uniform(count as usize)?;
    let first = dist.probs()[0];
    let all_equal = dist.probs().iter().all(|&p| p == first);
    let entropy_matches =
        (shannon_entropy(&dist).bits() - (count as f64).log2()).abs() <= ENTROPY_TOLERANCE;
    Ok(all_equal && entropy_matches)
}

/// Empirically test the 0-type property: fix the problem's final result and
/// count the model states still compatible with it. The model is 0-type iff
/// exactly one state remains.
pub fn zero_type_check(model: &ProblemModel, caps: &EnumerationCaps) -> Result<bool> {
    let residual_states = match model.kind {
        // Result: the top element is the maximum. Only the all-Greater
        // assignment expresses it.
        ProblemKind::MaxFind => enumerate_max_keys(model.n, caps)?
            .filter(KeyAssignment::all_greater)
            .count() as u64,
        // Result: a maximum element (index 0 by convention); every
        // consistent completion of the remaining keys stays compatible.
        ProblemKind::SortPairwise => count_consistent_with_max(model.n, 0, caps)?,
        // Result: the sorted order, i.e. one particular permutation.
        ProblemKind::SortPermutation => {
            check_cap("permutation enumeration", model.n, caps.permutations)?;
            let fixed: Vec<usize> = (0..model.n).collect();
            let mut count = 0u64;
            permutations_visit(model.n, &mut |p| {
                if p == fixed.as_slice() {
                    count += 1;
                }
            });
            count
        }
        // Result: the position where the target sits.
        ProblemKind::Search => {
            check_cap("search enumeration", model.n, caps.search)?;
            (0..model.n).filter(|&cell| cell == 0).count() as u64
        }
    };
    Ok(residual_states == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> EnumerationCaps {
        EnumerationCaps::default()
    }

    fn pairwise(n: usize, bits: u64) -> KeyAssignment {
        KeyAssignment::new(KeyModel::Pairwise, n, bits).unwrap()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        assert_eq!(pair_index(3, 0, 1), 0);
        assert_eq!(pair_index(3, 0, 2), 1);
        assert_eq!(pair_index(3, 1, 2), 2);
        assert_eq!(pair_index(4, 2, 3), 5);
        assert_eq!(pair_count(4), 6);
    }

    #[test]
    fn model_state_counts_and_entropies() {
        let m = build_model(ProblemKind::MaxFind, 4).unwrap();
        assert_eq!(m.state_count, BigUint::from(8u32));
        assert_eq!(m.entropy_bits.bits(), 3.0);
        assert!(!m.information_independent);
        assert!(m.zero_type);

        let m = build_model(ProblemKind::SortPermutation, 1).unwrap();
        assert_eq!(m.state_count, BigUint::from(1u32));
        assert_eq!(m.entropy_bits.bits(), 0.0);

        let m = build_model(ProblemKind::SortPairwise, 3).unwrap();
        assert_eq!(m.state_count, BigUint::from(8u32));
        assert_eq!(m.entropy_bits.bits(), 3.0);

        let m = build_model(ProblemKind::Search, 8).unwrap();
        assert_eq!(m.state_count, BigUint::from(8u32));
        assert_eq!(m.entropy_bits.bits(), 3.0);

        assert!(matches!(
            build_model(ProblemKind::MaxFind, 0),
            Err(Error::TooFewElements { .. })
        ));
    }

    #[test]
    fn max_key_model_entropy_is_n_minus_one_exactly() {
        for n in 2..=64 {
            let m = build_model(ProblemKind::MaxFind, n).unwrap();
            assert_eq!(m.entropy_bits.bits(), (n - 1) as f64);
            assert_eq!(m.state_count, BigUint::from(1u32) << (n - 1));
        }
    }

    #[test]
    fn max_key_enumeration_counts() {
        let count = |n| enumerate_max_keys(n, &caps()).unwrap().count();
        assert_eq!(count(2), 2);
        assert_eq!(count(4), 8);
        assert_eq!(count(5), 16);

        let certifying: Vec<_> = enumerate_max_keys(4, &caps())
            .unwrap()
            .filter(KeyAssignment::all_greater)
            .collect();
        assert_eq!(certifying.len(), 1);
        assert_eq!(certifying[0].bit_string(), "111");
    }

    #[test]
    fn max_key_enumeration_respects_cap() {
        let err = enumerate_max_keys(21, &caps()).map(|_| ()).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "maxkeys enumeration",
                n: 21,
                cap: 20
            }
        );
    }

    #[test]
    fn transitive_chain_is_consistent() {
        // A>B, B>C, A>C
        let a = pairwise(3, 0b111);
        let verdict = check_consistency(&a).unwrap();
        assert!(verdict.consistent);
        assert_eq!(verdict.witness, None);
    }

    #[test]
    fn cyclic_triple_is_flagged_with_witness() {
        // A>B, B>C, but A not greater than C.
        let a = pairwise(3, 0b101);
        let verdict = check_consistency(&a).unwrap();
        assert!(!verdict.consistent);
        assert_eq!(verdict.witness, Some((0, 1, 2)));

        // The mirrored cycle: A<B, B<C, but A greater than C.
        let a = pairwise(3, 0b010);
        let verdict = check_consistency(&a).unwrap();
        assert!(!verdict.consistent);
        assert_eq!(verdict.witness, Some((0, 1, 2)));
    }

    #[test]
    fn exactly_two_inconsistent_assignments_at_n3() {
        let inconsistent: Vec<_> = enumerate_pairwise(3, &caps())
            .unwrap()
            .filter(|a| !check_consistency(a).unwrap().consistent)
            .collect();
        assert_eq!(inconsistent.len(), 2);
        let strings: Vec<_> = inconsistent.iter().map(|a| a.bit_string()).collect();
        assert_eq!(strings, vec!["010", "101"]);
    }

    #[test]
    fn embedded_cycles_poison_larger_assignments() {
        // Any n=4 assignment whose (0,1,2) sub-triple cycles is inconsistent.
        for bits in 0..1u64 << pair_count(4) {
            let a = pairwise(4, bits);
            let sub = (a.greater(0, 1), a.greater(1, 2), a.greater(0, 2));
            if sub == (true, true, false) || sub == (false, false, true) {
                assert!(!check_consistency(&a).unwrap().consistent);
            }
        }
    }

    #[test]
    fn consistency_check_rejects_max_key_assignments() {
        let a = KeyAssignment::new(KeyModel::MaxKeys, 3, 0b01).unwrap();
        assert_eq!(
            check_consistency(&a),
            Err(Error::WrongModelKind {
                expected: KeyModel::Pairwise,
                actual: KeyModel::MaxKeys
            })
        );
    }

    #[test]
    fn consistent_counts_collapse_to_factorials() {
        assert_eq!(count_consistent_orderings(2, &caps()).unwrap(), 2);
        assert_eq!(count_consistent_orderings(3, &caps()).unwrap(), 6);
        assert_eq!(count_consistent_orderings(4, &caps()).unwrap(), 24);
    }

    #[test]
    fn pairwise_cap_is_enforced_with_value_in_message() {
        let err = count_consistent_orderings(7, &caps()).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "pairwise enumeration",
                n: 7,
                cap: 6
            }
        );
        assert!(err.to_string().contains('6'));
    }

    #[test]
    fn sorting_entropy_modes() {
        assert!((sorting_entropy(3, EntropyMode::Exact) - 2.585).abs() < 1e-3);
        assert_eq!(sorting_entropy(1, EntropyMode::Exact), 0.0);
        let e5 = sorting_entropy(5, EntropyMode::Exact);
        assert!((e5 - 6.9069).abs() < 1e-4);
        assert_eq!(e5.ceil(), 7.0);
        assert!(sorting_entropy(1, EntropyMode::Stirling) < 0.0);
    }

    #[test]
    fn result_as_state_model_validity() {
        let (h, valid) =
            result_as_state_entropy(&build_model(ProblemKind::MaxFind, 8).unwrap()).unwrap();
        assert_eq!(h.bits(), 3.0);
        assert!(!valid);

        let (h, valid) =
            result_as_state_entropy(&build_model(ProblemKind::Search, 8).unwrap()).unwrap();
        assert_eq!(h.bits(), 3.0);
        assert!(valid);

        let (h, valid) =
            result_as_state_entropy(&build_model(ProblemKind::SortPermutation, 3).unwrap())
                .unwrap();
        assert!((h.bits() - 2.585).abs() < 1e-3);
        assert!(valid);
    }

    #[test]
    fn residual_entropy_is_log2_of_remaining_orderings() {
        assert_eq!(residual_entropy(3, 0, &caps()).unwrap().bits(), 1.0);
        assert_eq!(residual_entropy(2, 0, &caps()).unwrap().bits(), 0.0);
        let h = residual_entropy(4, 2, &caps()).unwrap().bits();
        assert!((h - 6.0f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn residual_entropy_validates_the_fixed_index() {
        assert_eq!(
            residual_entropy(3, 3, &caps()),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn equiprobability_holds_for_all_kinds() {
        for model in [
            build_model(ProblemKind::SortPairwise, 3).unwrap(),
            build_model(ProblemKind::MaxFind, 2).unwrap(),
            build_model(ProblemKind::Search, 10).unwrap(),
            build_model(ProblemKind::SortPermutation, 4).unwrap(),
        ] {
            assert!(equiprobability_check(&model, &caps()).unwrap());
        }
    }

    #[test]
    fn zero_type_flags() {
        let m = build_model(ProblemKind::MaxFind, 4).unwrap();
        assert!(zero_type_check(&m, &caps()).unwrap());

        let m = build_model(ProblemKind::SortPairwise, 3).unwrap();
        assert!(!zero_type_check(&m, &caps()).unwrap());
        assert!(!m.zero_type);

        let m = build_model(ProblemKind::SortPairwise, 2).unwrap();
        assert!(zero_type_check(&m, &caps()).unwrap());
        assert!(m.zero_type);

        let m = build_model(ProblemKind::SortPermutation, 1).unwrap();
        assert!(m.zero_type);
        let m = build_model(ProblemKind::SortPermutation, 5).unwrap();
        assert!(zero_type_check(&m, &caps()).unwrap());

        let m = build_model(ProblemKind::Search, 9).unwrap();
        assert!(zero_type_check(&m, &caps()).unwrap());
    }

    #[test]
    fn assignment_lines_are_canonical() {
        let a = pairwise(3, 0b011);
        assert_eq!(a.to_line(), "3 pairwise 110");
        let a = KeyAssignment::new(KeyModel::MaxKeys, 3, 0b10).unwrap();
        assert_eq!(a.to_line(), "3 maxkeys 01");
    }

    #[test]
    fn enumeration_streams_are_deterministic() {
        let run = || -> Vec<String> {
            enumerate_pairwise(4, &caps())
                .unwrap()
                .map(|a| a.to_line())
                .collect()
        };
        assert_eq!(run(), run());
        assert_eq!(run().len(), 64);
    }
}
