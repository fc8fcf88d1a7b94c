//! A comparison-complexity laboratory.
//!
//! Comparison-based problems carry an information-theoretic floor: a binary
//! comparison yields at most one bit, so no strategy can beat the log2 of
//! the number of equiprobable states it must distinguish. This crate
//! computes those entropy bounds exactly, rebuilds the underlying state
//! spaces by brute-force enumeration, measures instrumented algorithms
//! against them, and pins the true minimum with a decision-tree minimax
//! oracle.
//!
//! - [`entropy`]: Shannon entropy, entropy change, log-factorials, the
//!   two-term Stirling approximation, generalized bases.
//! - [`models`]: key-sequence state spaces for max-finding and sorting,
//!   transitivity filtering, and the modeling checks.
//! - [`algos`]: comparison-counting algorithm implementations and
//!   exhaustive/sampled worst-case measurement.
//! - [`oracle`]: exact minimax comparison counts for sorting and
//!   max-finding at small n.
//! - [`report`]: side-by-side CSV / Markdown bound reports.

pub mod algos;
pub mod entropy;
mod error;
pub mod models;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
