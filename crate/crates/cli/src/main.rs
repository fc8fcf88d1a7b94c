//! `infobound`: entropy bounds, state enumeration, instrumented
//! measurements, oracle minima, and side-by-side reports for comparison
//! problems.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or validation error,
//! 3 self-check violation in report output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use infobound_core::algos::{measure_sampled, worst_case_exhaustive, Algorithm};
use infobound_core::entropy::stirling_log2_factorial;
use infobound_core::models::{
    build_model, check_consistency, enumerate_max_keys, enumerate_pairwise, EnumerationCaps,
    ProblemKind,
};
use infobound_core::oracle::{
    dump_strategy, min_comparisons_max, min_comparisons_sort, OracleProblem,
};
use infobound_core::report::{build_report, format_bits};

#[derive(Parser)]
#[command(
    name = "infobound",
    version,
    about = "Comparison-complexity laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the entropy bound of a problem: state count, entropy, ceiling.
    Bound {
        /// Problem kind to model.
        #[arg(long)]
        problem: ProblemArg,
        /// Element count.
        #[arg(long)]
        n: usize,
        /// Which log2(n!) evaluation to print for sorting.
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Enumerate a key-sequence model, filtering pairwise assignments by
    /// consistency.
    Enumerate {
        /// Key model to enumerate.
        #[arg(long)]
        model: ModelArg,
        /// Element count.
        #[arg(long)]
        n: usize,
        /// Stream every assignment, one line each, before the summary.
        #[arg(long)]
        list: bool,
    },
    /// Measure the comparison counts of an instrumented algorithm.
    Measure {
        /// Algorithm to run.
        #[arg(long)]
        algo: AlgoArg,
        /// Input size.
        #[arg(long)]
        n: usize,
        /// Exhaustive sweeps all n! permutations (n <= 8); sampled draws
        /// seeded random permutations.
        #[arg(long)]
        mode: MeasureModeArg,
        /// Number of sampled permutations (sampled mode only).
        #[arg(long)]
        trials: Option<u64>,
        /// RNG seed (required in sampled mode).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the exact minimax comparison count for sorting or max-finding.
    Oracle {
        /// Oracle problem.
        #[arg(long)]
        problem: OracleArg,
        /// Element count (n <= 5).
        #[arg(long)]
        n: usize,
        /// Also print the optimal strategy as a decision tree.
        #[arg(long)]
        dump_strategy: bool,
    },
    /// Emit the bound report for a range of n as CSV or Markdown.
    Report {
        /// Inclusive range, written A..B (a single n is A..A).
        #[arg(long, value_name = "A..B")]
        n_range: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Max,
    Sort,
    Pairwise,
    Search,
}

impl ProblemArg {
    fn kind(self) -> ProblemKind {
        match self {
            ProblemArg::Max => ProblemKind::MaxFind,
            ProblemArg::Sort => ProblemKind::SortPermutation,
            ProblemArg::Pairwise => ProblemKind::SortPairwise,
            ProblemArg::Search => ProblemKind::Search,
        }
    }

    /// Largest n for which the exact decimal state count stays cheap.
    fn n_cap(self) -> usize {
        match self {
            ProblemArg::Max | ProblemArg::Search => 100_000,
            ProblemArg::Sort => 10_000,
            ProblemArg::Pairwise => 1_000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    Exact,
    Stirling,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Pairwise,
    Maxkeys,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    #[value(name = "max_scan")]
    MaxScan,
    Bubble,
    Insertion,
    Merge,
}

impl AlgoArg {
    fn algorithm(self) -> Algorithm {
        match self {
            AlgoArg::MaxScan => Algorithm::MaxScan,
            AlgoArg::Bubble => Algorithm::Bubble,
            AlgoArg::Insertion => Algorithm::Insertion,
            AlgoArg::Merge => Algorithm::Merge,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MeasureModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Sort,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Md,
}

enum CliError {
    /// Bad flag values or cap violations: exit 2.
    Usage(String),
    /// Failed writes: exit 1.
    Io(String),
    /// A report row broke the sandwich invariant: exit 3.
    Violation(String),
}

impl CliError {
    fn usage(flag: &str, detail: impl std::fmt::Display) -> Self {
        CliError::Usage(format!("{flag}: {detail}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Violation(msg)) => {
            eprintln!("error: report self-check violation: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Bound { problem, n, mode } => cmd_bound(problem, n, mode),
        Command::Enumerate { model, n, list } => cmd_enumerate(model, n, list),
        Command::Measure {
            algo,
            n,
            mode,
            trials,
            seed,
        } => cmd_measure(algo.algorithm(), n, mode, trials, seed),
        Command::Oracle {
            problem,
            n,
            dump_strategy,
        } => cmd_oracle(problem, n, dump_strategy),
        Command::Report {
            n_range,
            out,
            format,
        } => cmd_report(&n_range, out.as_deref(), format),
    }
}

fn cmd_bound(problem: ProblemArg, n: usize, mode: ModeArg) -> Result<(), CliError> {
    if n > problem.n_cap() {
        return Err(CliError::usage(
            "--n",
            format!(
                "n = {n} exceeds the bound cap of {} for this problem",
                problem.n_cap()
            ),
        ));
    }
    let kind = problem.kind();
    if mode == ModeArg::Stirling && kind != ProblemKind::SortPermutation {
        return Err(CliError::usage(
            "--mode",
            "stirling only applies to --problem sort",
        ));
    }
    let model = build_model(kind, n).map_err(|e| CliError::usage("--n", e))?;
    println!("problem: {}", model.kind);
    println!("n: {n}");
    println!("state_count: {}", model.state_count);
    match mode {
        ModeArg::Exact => {
            println!(
                "entropy_exact_bits: {}",
                format_bits(model.entropy_bits.bits())
            );
            if kind == ProblemKind::SortPermutation {
                println!(
                    "entropy_stirling_bits: {}",
                    format_bits(stirling_log2_factorial(n as u64))
                );
            }
            println!("ceil_entropy: {}", model.entropy_bits.bits().ceil() as u64);
        }
        ModeArg::Stirling => {
            println!(
                "entropy_stirling_bits: {}",
                format_bits(stirling_log2_factorial(n as u64))
            );
        }
    }
    Ok(())
}

fn cmd_enumerate(model: ModelArg, n: usize, list: bool) -> Result<(), CliError> {
    let caps = EnumerationCaps::default();
    match model {
        ModelArg::Pairwise => {
            let mut total = 0u64;
            let mut consistent = 0u64;
            for assignment in enumerate_pairwise(n, &caps).map_err(|e| CliError::usage("--n", e))? {
                let verdict =
                    check_consistency(&assignment).map_err(|e| CliError::usage("--model", e))?;
                total += 1;
                if verdict.consistent {
                    consistent += 1;
                }
                if list {
                    let tag = if verdict.consistent {
                        "consistent"
                    } else {
                        "inconsistent"
                    };
                    println!("{} {tag}", assignment.to_line());
                }
            }
            println!("model: pairwise");
            println!("n: {n}");
            println!("total: {total}");
            println!("consistent: {consistent}");
            println!("inconsistent: {}", total - consistent);
        }
        ModelArg::Maxkeys => {
            let mut total = 0u64;
            for assignment in enumerate_max_keys(n, &caps).map_err(|e| CliError::usage("--n", e))? {
                total += 1;
                if list {
                    println!("{}", assignment.to_line());
                }
            }
            println!("model: maxkeys");
            println!("n: {n}");
            println!("total: {total}");
        }
    }
    Ok(())
}

fn cmd_measure(
    algorithm: Algorithm,
    n: usize,
    mode: MeasureModeArg,
    trials: Option<u64>,
    seed: Option<u64>,
) -> Result<(), CliError> {
    let result = match mode {
        MeasureModeArg::Exhaustive => {
            if seed.is_some() {
                return Err(CliError::usage("--seed", "only applies to --mode sampled"));
            }
            if trials.is_some() {
                return Err(CliError::usage(
                    "--trials",
                    "only applies to --mode sampled",
                ));
            }
            worst_case_exhaustive(algorithm, n).map_err(|e| CliError::usage("--n", e))?
        }
        MeasureModeArg::Sampled => {
            let seed =
                seed.ok_or_else(|| CliError::usage("--seed", "required when --mode sampled"))?;
            measure_sampled(algorithm, n, trials.unwrap_or(1000), seed)
                .map_err(|e| CliError::usage("--n", e))?
        }
    };
    println!("algorithm: {}", result.algorithm);
    println!("n: {}", result.n);
    println!(
        "mode: {}",
        if result.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        }
    );
    println!("trials: {}", result.trials);
    if let Some(seed) = result.seed {
        println!("seed: {seed}");
    }
    println!("worst_case: {}", result.worst_case);
    println!("best_case: {}", result.best_case);
    Ok(())
}

fn cmd_oracle(problem: OracleArg, n: usize, with_strategy: bool) -> Result<(), CliError> {
    let (oracle_problem, result) = match problem {
        OracleArg::Sort => (
            OracleProblem::Sort,
            min_comparisons_sort(n).map_err(|e| CliError::usage("--n", e))?,
        ),
        OracleArg::Max => (
            OracleProblem::Max,
            min_comparisons_max(n).map_err(|e| CliError::usage("--n", e))?,
        ),
    };
    println!("problem: {}", result.problem);
    println!("n: {}", result.n);
    println!("min_worst_case: {}", result.min_worst_case);
    println!("entropy_floor: {}", result.entropy_floor);
    match result.optimal_first_comparison {
        Some((i, j)) => println!("optimal_first_comparison: {i} {j}"),
        None => println!("optimal_first_comparison: none"),
    }
    println!(
        "bound_met: {}",
        u64::from(result.min_worst_case) == result.entropy_floor
    );
    if with_strategy {
        let tree = dump_strategy(oracle_problem, n).map_err(|e| CliError::usage("--n", e))?;
        println!("strategy:");
        print!("{tree}");
    }
    Ok(())
}

fn parse_range(raw: &str) -> Result<(usize, usize), CliError> {
    let invalid = || {
        CliError::usage(
            "--n-range",
            format!("expected an inclusive range A..B, got '{raw}'"),
        )
    };
    let (lo, hi) = raw.split_once("..").ok_or_else(invalid)?;
    let lo: usize = lo.parse().map_err(|_| invalid())?;
    let hi: usize = hi.parse().map_err(|_| invalid())?;
    Ok((lo, hi))
}

fn cmd_report(
    n_range: &str,
    out: Option<&std::path::Path>,
    format: FormatArg,
) -> Result<(), CliError> {
    let (lo, hi) = parse_range(n_range)?;
    let report = build_report(lo, hi).map_err(|e| CliError::usage("--n-range", e))?;
    report.self_check().map_err(CliError::Violation)?;
    let rendered = match format {
        FormatArg::Csv => report.render_csv(),
        FormatArg::Md => report.render_markdown(),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}
