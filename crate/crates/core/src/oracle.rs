//! Exact minimum worst-case comparison counts, found by memoized minimax
//! over comparison strategies. A knowledge state is the set of total orders
//! still consistent with the comparisons made so far; the oracle is the
//! ground truth the entropy bounds and measured algorithms are compared
//! against.

use std::collections::HashMap;

use crate::algos::CompareOutcome;
use crate::error::{Error, Result};
use crate::models::{ceil_log2, factorial};

/// Largest n the oracle accepts; at n = 5 the 120 permutations still fit a
/// u128 bitmask and the reachable state space stays desk-scale.
pub const ORACLE_CAP: usize = 5;

/// Which question the oracle answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleProblem {
    Sort,
    Max,
}

impl OracleProblem {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleProblem::Sort => "sort",
            OracleProblem::Max => "max",
        }
    }
}

impl std::fmt::Display for OracleProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for OracleProblem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sort" => Ok(OracleProblem::Sort),
            "max" => Ok(OracleProblem::Max),
            other => Err(format!(
                "unknown oracle problem '{other}' (expected sort or max)"
            )),
        }
    }
}

/// Set of total orders (permutations of input positions, encoded as rank
/// vectors) still consistent with the comparisons made so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnowledgeState {
    n: usize,
    alive: u128,
}

impl KnowledgeState {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alive_count(&self) -> u32 {
        self.alive.count_ones()
    }

    /// Canonical encoding of the state: one bit per permutation id, so equal
    /// alive-sets yield equal keys regardless of how they were reached.
    pub fn canonical_key(&self) -> u128 {
        self.alive
    }
}

/// Precomputed permutation table for one n: rank vectors in lexicographic
/// order, the alive-set split mask of every comparison, and the mask of
/// permutations agreeing on each argmax position.
pub struct PermTable {
    n: usize,
    pairs: Vec<(usize, usize)>,
    pair_masks: Vec<u128>,
    argmax_masks: Vec<u128>,
    ranks: Vec<Vec<u8>>,
}

impl PermTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewElements { n, min: 1 });
        }
        if n > ORACLE_CAP {
            return Err(Error::CapExceeded {
                what: "oracle",
                n,
                cap: ORACLE_CAP,
            });
        }
        let ranks = lex_rank_vectors(n);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        let pair_masks = pairs
            .iter()
            .map(|&(i, j)| {
                ranks
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r[i] > r[j])
                    .fold(0u128, |m, (id, _)| m | 1 << id)
            })
            .collect();
        let argmax_masks = (0..n)
            .map(|pos| {
                ranks
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r[pos] as usize == n - 1)
                    .fold(0u128, |m, (id, _)| m | 1 << id)
            })
            .collect();
        Ok(Self {
            n,
            pairs,
            pair_masks,
            argmax_masks,
            ranks,
        })
    }

    /// The initial state: every one of the n! orders is alive.
    pub fn full_state(&self) -> KnowledgeState {
        KnowledgeState {
            n: self.n,
            alive: (1u128 << self.ranks.len()) - 1,
        }
    }

    /// Restrict a state by the outcome of comparing positions i and j.
    /// The Greater and NotGreater restrictions partition the alive set.
    pub fn restrict(
        &self,
        state: KnowledgeState,
        i: usize,
        j: usize,
        outcome: CompareOutcome,
    ) -> KnowledgeState {
        let (lo, hi, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        let idx = self.pairs.iter().position(|&p| p == (lo, hi)).unwrap();
        let mask = self.pair_masks[idx];
        let greater = match outcome {
            CompareOutcome::Greater => !flip,
            CompareOutcome::NotGreater => flip,
        };
        KnowledgeState {
            n: self.n,
            alive: if greater {
                state.alive & mask
            } else {
                state.alive & !mask
            },
        }
    }

    /// The position every alive order agrees is the maximum, if any.
    fn decided_max(&self, alive: u128) -> Option<usize> {
        (0..self.n).find(|&pos| alive & !self.argmax_masks[pos] == 0)
    }

    fn outcome_count(&self, goal: OracleProblem, alive: u128) -> u32 {
        match goal {
            OracleProblem::Sort => alive.count_ones(),
            OracleProblem::Max => (0..self.n)
                .filter(|&pos| alive & self.argmax_masks[pos] != 0)
                .count() as u32,
        }
    }

    fn is_terminal(&self, goal: OracleProblem, alive: u128) -> bool {
        match goal {
            OracleProblem::Sort => alive.count_ones() == 1,
            OracleProblem::Max => self.decided_max(alive).is_some(),
        }
    }
}

/// All rank vectors over n positions, id ordered lexicographically.
fn lex_rank_vectors(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(current.clone());
        // next_permutation in place
        let Some(pivot) = current.windows(2).rposition(|w| w[0] < w[1]) else {
            break;
        };
        let successor = current.iter().rposition(|&x| x > current[pivot]).unwrap();
        current.swap(pivot, successor);
        current[pivot + 1..].reverse();
    }
    out
}

fn ceil_log2_u32(x: u32) -> u32 {
    if x <= 1 {
        0
    } else {
        u32::BITS - (x - 1).leading_zeros()
    }
}

struct Searcher<'t> {
    table: &'t PermTable,
    goal: OracleProblem,
    memo: Option<HashMap<u128, u32>>,
    depth_cap: u32,
}

impl<'t> Searcher<'t> {
    fn new(table: &'t PermTable, goal: OracleProblem, memoized: bool) -> Self {
        let n = table.n as u32;
        Self {
            table,
            goal,
            memo: memoized.then(HashMap::new),
            depth_cap: n * n,
        }
    }

    /// Minimax cost of a state: 0 when the goal is decided, otherwise the
    /// min over comparisons of 1 + the worse branch. Comparisons whose
    /// outcome is already implied (one branch empty) are skipped.
    fn cost(&mut self, alive: u128, depth: u32) -> Result<u32> {
        if self.table.is_terminal(self.goal, alive) {
            return Ok(0);
        }
        if depth > self.depth_cap {
            return Err(Error::DepthCapExceeded);
        }
        if let Some(memo) = &self.memo {
            if let Some(&cached) = memo.get(&alive) {
                return Ok(cached);
            }
        }
        // No strategy can beat the information-theoretic floor of the
        // remaining outcomes; stop improving once a branch reaches it.
        let floor = ceil_log2_u32(self.table.outcome_count(self.goal, alive));
        let mut best = u32::MAX;
        for idx in 0..self.table.pairs.len() {
            let greater = alive & self.table.pair_masks[idx];
            let not_greater = alive & !self.table.pair_masks[idx];
            if greater == 0 || not_greater == 0 {
                continue;
            }
            let cost = 1 + self
                .cost(greater, depth + 1)?
                .max(self.cost(not_greater, depth + 1)?);
            if cost < best {
                best = cost;
                if best == floor {
                    break;
                }
            }
        }
        debug_assert_ne!(best, u32::MAX, "non-terminal state with no splitting pair");
        if let Some(memo) = &mut self.memo {
            memo.insert(alive, best);
        }
        Ok(best)
    }

    /// Lexicographically first comparison achieving the minimax cost of the
    /// initial state.
    fn best_first(&mut self, alive: u128) -> Result<Option<(usize, usize)>> {
        if self.table.is_terminal(self.goal, alive) {
            return Ok(None);
        }
        let total = self.cost(alive, 0)?;
        for idx in 0..self.table.pairs.len() {
            let greater = alive & self.table.pair_masks[idx];
            let not_greater = alive & !self.table.pair_masks[idx];
            if greater == 0 || not_greater == 0 {
                continue;
            }
            let cost = 1 + self.cost(greater, 1)?.max(self.cost(not_greater, 1)?);
            if cost == total {
                return Ok(Some(self.table.pairs[idx]));
            }
        }
        unreachable!("minimax cost unreachable from its own state");
    }
}

/// Exact minimax value of one oracle problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub problem: OracleProblem,
    pub n: usize,
    /// Minimum over strategies of the maximum comparisons spent on any
    /// input.
    pub min_worst_case: u32,
    /// ceil(log2) of the problem's valid state count: log2(n!) rounded up
    /// for sorting, n−1 for max-finding.
    pub entropy_floor: u64,
    pub optimal_first_comparison: Option<(usize, usize)>,
}

fn solve(problem: OracleProblem, n: usize) -> Result<OracleResult> {
    let table = PermTable::new(n)?;
    let alive = table.full_state().alive;
    let mut searcher = Searcher::new(&table, problem, true);
    let min_worst_case = searcher.cost(alive, 0)?;
    let optimal_first_comparison = searcher.best_first(alive)?;
    let entropy_floor = match problem {
        OracleProblem::Sort => ceil_log2(&factorial(n as u64)),
        OracleProblem::Max => (n - 1) as u64,
    };
    Ok(OracleResult {
        problem,
        n,
        min_worst_case,
        entropy_floor,
        optimal_first_comparison,
    })
}

/// Minimum worst-case comparisons any strategy needs to sort n elements.
pub fn min_comparisons_sort(n: usize) -> Result<OracleResult> {
    solve(OracleProblem::Sort, n)
}

/// Minimum worst-case comparisons any strategy needs to locate the maximum
/// of n elements.
pub fn min_comparisons_max(n: usize) -> Result<OracleResult> {
    solve(OracleProblem::Max, n)
}

/// Plain recursive minimax without the memo table; a cross-check for the
/// memoized path at small n.
pub fn min_worst_case_unmemoized(problem: OracleProblem, n: usize) -> Result<u32> {
    let table = PermTable::new(n)?;
    let alive = table.full_state().alive;
    Searcher::new(&table, problem, false).cost(alive, 0)
}

/// Render the optimal strategy as an indented decision tree: `cmp i j`
/// nodes with `G:`/`N:` branches, `order:` / `max:` leaves.
pub fn dump_strategy(problem: OracleProblem, n: usize) -> Result<String> {
    let table = PermTable::new(n)?;
    let mut searcher = Searcher::new(&table, problem, true);
    let mut out = String::new();
    render(
        &table,
        &mut searcher,
        table.full_state().alive,
        None,
        0,
        &mut out,
    )?;
    Ok(out)
}

fn leaf_text(table: &PermTable, goal: OracleProblem, alive: u128) -> String {
    match goal {
        OracleProblem::Sort => {
            let id = alive.trailing_zeros() as usize;
            let ranks = &table.ranks[id];
            let mut by_rank = vec![0usize; table.n];
            for (pos, &r) in ranks.iter().enumerate() {
                by_rank[r as usize] = pos;
            }
            let order: Vec<String> = by_rank.iter().map(ToString::to_string).collect();
            format!("order: {}", order.join(" "))
        }
        OracleProblem::Max => format!("max: {}", table.decided_max(alive).unwrap()),
    }
}

fn render(
    table: &PermTable,
    searcher: &mut Searcher<'_>,
    alive: u128,
    label: Option<&str>,
    indent: usize,
    out: &mut String,
) -> Result<()> {
    let pad = " ".repeat(indent);
    let prefix = label.map(|l| format!("{l}: ")).unwrap_or_default();
    if table.is_terminal(searcher.goal, alive) {
        out.push_str(&format!(
            "{pad}{prefix}{}\n",
            leaf_text(table, searcher.goal, alive)
        ));
        return Ok(());
    }
    let total = searcher.cost(alive, 0)?;
    for idx in 0..table.pairs.len() {
        let greater = alive & table.pair_masks[idx];
        let not_greater = alive & !table.pair_masks[idx];
        if greater == 0 || not_greater == 0 {
            continue;
        }
        let cost = 1 + searcher
            .cost(greater, 1)?
            .max(searcher.cost(not_greater, 1)?);
        if cost == total {
            let (i, j) = table.pairs[idx];
            out.push_str(&format!("{pad}{prefix}cmp {i} {j}\n"));
            render(table, searcher, greater, Some("G"), indent + 2, out)?;
            render(table, searcher, not_greater, Some("N"), indent + 2, out)?;
            return Ok(());
        }
    }
    unreachable!("minimax cost unreachable from its own state");
}
