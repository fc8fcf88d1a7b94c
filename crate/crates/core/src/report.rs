//! Side-by-side bound report: per problem and n, the exact state count, the
//! entropy bound, the oracle minimum, and measured worst cases, rendered as
//! CSV or a Markdown pipe table with a fixed column set.

use num_bigint::BigUint;

use crate::algos::{worst_case_exhaustive, Algorithm, EXHAUSTIVE_CAP};
use crate::error::{Error, Result};
use crate::models::{build_model, ProblemKind};
use crate::oracle::{min_comparisons_max, min_comparisons_sort, ORACLE_CAP};

/// CSV column set, in order. Every data line carries one algorithm.
pub const CSV_HEADER: &str = "problem,n,state_count,entropy_exact_bits,entropy_stirling_bits,ceil_entropy,oracle_min,algo,worst_case,bound_met";

/// Largest n accepted by the report builder; the exact state count column
/// stays cheap to materialize up to here.
pub const REPORT_RANGE_CAP: usize = 1000;

/// Fixed-width float rendering used in reports: seven digits after the
/// point, enough to reproduce every bound value bit-for-bit on re-parse.
pub fn format_bits(x: f64) -> String {
    format!("{x:.7}")
}

/// Worst case of one algorithm on one row; empty beyond the measurement
/// cap, never guessed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgoCell {
    pub algo: Algorithm,
    pub worst_case: Option<u64>,
}

/// One (problem, n) row of the report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub problem: ProblemKind,
    pub n: usize,
    pub state_count: BigUint,
    pub entropy_exact_bits: f64,
    /// Two-term Stirling approximation; sorting rows only.
    pub entropy_stirling_bits: Option<f64>,
    pub ceil_entropy: u64,
    /// Oracle minimum; present while n is within the oracle cap.
    pub oracle_min: Option<u32>,
    pub algos: Vec<AlgoCell>,
    /// Whether the ceiling of the entropy bound is met exactly by the
    /// oracle; empty when the oracle is out of range.
    pub bound_met: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub rows: Vec<ReportRow>,
}

fn max_row(n: usize) -> Result<ReportRow> {
    let model = build_model(ProblemKind::MaxFind, n)?;
    let ceil_entropy = (n - 1) as u64;
    let oracle_min = if n <= ORACLE_CAP {
        Some(min_comparisons_max(n)?.min_worst_case)
    } else {
        None
    };
    let worst_case = if n <= EXHAUSTIVE_CAP {
        Some(worst_case_exhaustive(Algorithm::MaxScan, n)?.worst_case)
    } else {
        None
    };
    Ok(ReportRow {
        problem: ProblemKind::MaxFind,
        n,
        state_count: model.state_count,
        entropy_exact_bits: model.entropy_bits.bits(),
        entropy_stirling_bits: None,
        ceil_entropy,
        oracle_min,
        algos: vec![AlgoCell {
            algo: Algorithm::MaxScan,
            worst_case,
        }],
        bound_met: oracle_min.map(|m| u64::from(m) == ceil_entropy),
    })
}

fn sort_row(n: usize) -> Result<ReportRow> {
    let model = build_model(ProblemKind::SortPermutation, n)?;
    let ceil_entropy = crate::models::ceil_log2(&model.state_count);
    let oracle_min = if n <= ORACLE_CAP {
        Some(min_comparisons_sort(n)?.min_worst_case)
    } else {
        None
    };
    let algos = Algorithm::SORTS
        .iter()
        .map(|&algo| {
            let worst_case = if n <= EXHAUSTIVE_CAP {
                Some(worst_case_exhaustive(algo, n)?.worst_case)
            } else {
                None
            };
            Ok(AlgoCell { algo, worst_case })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportRow {
        problem: ProblemKind::SortPermutation,
        n,
        state_count: model.state_count,
        entropy_exact_bits: model.entropy_bits.bits(),
        entropy_stirling_bits: Some(crate::entropy::stirling_log2_factorial(n as u64)),
        ceil_entropy,
        oracle_min,
        algos,
        bound_met: oracle_min.map(|m| u64::from(m) == ceil_entropy),
    })
}

/// Build the report for every n in lo..=hi, rows sorted by (problem, n)
/// with problems in name order (max before sort). Cells beyond the oracle
/// or measurement caps are left empty.
pub fn build_report(lo: usize, hi: usize) -> Result<BoundReport> {
    if lo == 0 {
        return Err(Error::TooFewElements { n: 0, min: 1 });
    }
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    if hi > REPORT_RANGE_CAP {
        return Err(Error::CapExceeded {
            what: "report range",
            n: hi,
            cap: REPORT_RANGE_CAP,
        });
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        rows.push(max_row(n)?);
    }
    for n in lo..=hi {
        rows.push(sort_row(n)?);
    }
    Ok(BoundReport { rows })
}

impl BoundReport {
    /// Verify the sandwich invariant on every row: ceil_entropy ≤
    /// oracle_min ≤ each measured worst case, over the cells present.
    pub fn self_check(&self) -> std::result::Result<(), String> {
        for row in &self.rows {
            let ceil = row.ceil_entropy;
            if let Some(oracle) = row.oracle_min {
                if u64::from(oracle) < ceil {
                    return Err(format!(
                        "{} n={}: oracle_min {} below entropy ceiling {}",
                        row.problem, row.n, oracle, ceil
                    ));
                }
            }
            for cell in &row.algos {
                let Some(worst) = cell.worst_case else {
                    continue;
                };
                if let Some(oracle) = row.oracle_min {
                    if worst < u64::from(oracle) {
                        return Err(format!(
                            "{} n={}: {} worst case {} below oracle_min {}",
                            row.problem, row.n, cell.algo, worst, oracle
                        ));
                    }
                } else if worst < ceil {
                    return Err(format!(
                        "{} n={}: {} worst case {} below entropy ceiling {}",
                        row.problem, row.n, cell.algo, worst, ceil
                    ));
                }
            }
        }
        Ok(())
    }

    fn cells(row: &ReportRow, cell: &AlgoCell) -> Vec<String> {
        vec![
            row.problem.to_string(),
            row.n.to_string(),
            row.state_count.to_string(),
            format_bits(row.entropy_exact_bits),
            row.entropy_stirling_bits
                .map(format_bits)
                .unwrap_or_default(),
            row.ceil_entropy.to_string(),
            row.oracle_min.map(|m| m.to_string()).unwrap_or_default(),
            cell.algo.to_string(),
            cell.worst_case.map(|w| w.to_string()).unwrap_or_default(),
            row.bound_met.map(|b| b.to_string()).unwrap_or_default(),
        ]
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            for cell in &row.algos {
                out.push_str(&Self::cells(row, cell).join(","));
                out.push('\n');
            }
        }
        out
    }

    pub fn render_markdown(&self) -> String {
        let columns: Vec<&str> = CSV_HEADER.split(',').collect();
        let mut out = format!("| {} |\n", columns.join(" | "));
        out.push_str(&format!("|{}\n", " --- |".repeat(columns.len())));
        for row in &self.rows {
            for cell in &row.algos {
                out.push_str(&format!("| {} |\n", Self::cells(row, cell).join(" | ")));
            }
        }
        out
    }
}

/// Parse a rendered CSV report back into its rows; the inverse of
/// [`BoundReport::render_csv`].
pub fn parse_csv(text: &str) -> Result<BoundReport> {
    let malformed = |msg: String| Error::MalformedReport(msg);
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| malformed("missing header".into()))?;
    if header != CSV_HEADER {
        return Err(malformed(format!("unexpected header '{header}'")));
    }
    let mut rows: Vec<ReportRow> = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 10 {
            return Err(malformed(format!(
                "line {}: expected 10 fields, got {}",
                lineno + 2,
                fields.len()
            )));
        }
        let parse_err = |what: &str| malformed(format!("line {}: bad {what}", lineno + 2));
        let problem: ProblemKind = fields[0].parse().map_err(|_| parse_err("problem"))?;
        let n: usize = fields[1].parse().map_err(|_| parse_err("n"))?;
        let state_count = BigUint::parse_bytes(fields[2].as_bytes(), 10)
            .ok_or_else(|| parse_err("state_count"))?;
        let entropy_exact_bits: f64 = fields[3].parse().map_err(|_| parse_err("entropy"))?;
        let entropy_stirling_bits = parse_optional(fields[4]).map_err(|_| parse_err("stirling"))?;
        let ceil_entropy: u64 = fields[5].parse().map_err(|_| parse_err("ceil"))?;
        let oracle_min: Option<u32> =
            parse_optional(fields[6]).map_err(|_| parse_err("oracle_min"))?;
        let algo: Algorithm = fields[7].parse().map_err(|_| parse_err("algo"))?;
        let worst_case: Option<u64> =
            parse_optional(fields[8]).map_err(|_| parse_err("worst_case"))?;
        let bound_met: Option<bool> =
            parse_optional(fields[9]).map_err(|_| parse_err("bound_met"))?;

        let cell = AlgoCell { algo, worst_case };
        match rows.last_mut() {
            Some(last) if last.problem == problem && last.n == n => last.algos.push(cell),
            _ => rows.push(ReportRow {
                problem,
                n,
                state_count,
                entropy_exact_bits,
                entropy_stirling_bits,
                ceil_entropy,
                oracle_min,
                algos: vec![cell],
                bound_met,
            }),
        }
    }
    Ok(BoundReport { rows })
}

fn parse_optional<T: std::str::FromStr>(s: &str) -> std::result::Result<Option<T>, T::Err> {
    if s.is_empty() {
        Ok(None)
    } else {
        s.parse().map(Some)
    }
}
