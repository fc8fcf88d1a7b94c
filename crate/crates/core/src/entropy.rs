//! Exact and approximate entropy arithmetic in bits: Shannon entropy over
//! finite distributions, entropy change, log-factorials, the two-term
//! Stirling approximation, generalized-base entropy, and the partial sums
//! of the Taylor series of e.

use crate::error::{Error, Result};

/// Tolerance on the sum of a probability distribution.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A finite probability distribution over mutually exclusive outcomes.
///
/// Construction validates that every probability lies in [0, 1] and that
/// the probabilities sum to 1 within [`SUM_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probs: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::ProbabilityOutOfRange { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::DistributionSum {
                sum,
                tolerance: SUM_TOLERANCE,
            });
        }
        Ok(Self { probs })
    }

    /// The uniform distribution over `n` outcomes.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroStates);
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// A non-negative amount of information in bits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropyBits(f64);

impl EntropyBits {
    pub fn new(bits: f64) -> Result<Self> {
        if !bits.is_finite() || bits < 0.0 {
            return Err(Error::NegativeEntropy(bits));
        }
        Ok(Self(bits))
    }

    pub const ZERO: EntropyBits = EntropyBits(0.0);

    pub fn bits(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for EntropyBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Shannon entropy −Σ pᵢ·log2(pᵢ) of a distribution, in bits.
///
/// Zero-probability outcomes contribute nothing (0·log2(0) = 0).
///
/// ```
/// use infobound_core::entropy::{shannon_entropy, ProbabilityDistribution};
///
/// let d = ProbabilityDistribution::new(vec![0.5, 0.5]).unwrap();
/// assert_eq!(shannon_entropy(&d).bits(), 1.0);
/// ```
pub fn shannon_entropy(dist: &ProbabilityDistribution) -> EntropyBits {
    EntropyBits(-neg_entropy_acc(dist.probs(), f64::log2))
}

/// Entropy eliminated by solving a problem: initial minus final.
///
/// Rejects a final entropy larger than the initial one, which signals an
/// inverted model.
pub fn entropy_change(initial: EntropyBits, terminal: EntropyBits) -> Result<EntropyBits> {
    if terminal.bits() > initial.bits() {
        return Err(Error::InvertedEntropyChange {
            initial_bits: initial.bits(),
            final_bits: terminal.bits(),
        });
    }
    Ok(EntropyBits(initial.bits() - terminal.bits()))
}

/// log2(n): the entropy of a uniform distribution over `n` states.
pub fn uniform_entropy(n: u64) -> Result<EntropyBits> {
    if n == 0 {
        return Err(Error::ZeroStates);
    }
    Ok(EntropyBits((n as f64).log2()))
}

/// log2(n!) summed term by term in the log domain, so no factorial is ever
/// materialized. Exact to double precision; 0 for n ∈ {0, 1}.
pub fn log2_factorial_exact(n: u64) -> EntropyBits {
    let mut acc = 0.0;
    for k in 2..=n {
        acc += (k as f64).log2();
    }
    EntropyBits(acc)
}

/// The two-term Stirling approximation of log2(n!): n·log2(n) − n·log2(e).
///
/// Deliberately omits the √(2πn) correction, so the value undershoots
/// [`log2_factorial_exact`] for every n ≥ 1 and is negative for tiny n.
pub fn stirling_log2_factorial(n: u64) -> f64 {
    let x = n as f64;
    x * x.log2() - x * std::f64::consts::LOG2_E
}

/// Entropy of a distribution in base-`base` information units.
///
/// With `base` = 2 this equals [`shannon_entropy`] bit for bit: the per-term
/// division by log2(2) = 1 is exact, and the accumulation order is shared.
pub fn generalized_entropy(dist: &ProbabilityDistribution, base: f64) -> Result<f64> {
    if !base.is_finite() || base <= 1.0 {
        return Err(Error::InvalidBase(base));
    }
    let scale = base.log2();
    Ok(-neg_entropy_acc(dist.probs(), |p| p.log2() / scale))
}

/// Shared accumulator: Σ pᵢ·f(pᵢ) over the non-zero probabilities.
fn neg_entropy_acc(probs: &[f64], log_fn: impl Fn(f64) -> f64) -> f64 {
    let mut acc = 0.0;
    for &p in probs {
        if p > 0.0 {
            acc += p * log_fn(p);
        }
    }
    acc
}

/// Partial sum Σ_{k=0..terms} 1/k! of the Taylor series of e.
///
/// Monotone non-decreasing in `terms` and bounded above by e; the value at
/// `terms` = 1 is exactly 2, the base of the binary system.
pub fn e_partial_sum(terms: u32) -> f64 {
    let mut term = 1.0;
    let mut acc = 1.0;
    for k in 1..=u64::from(terms) {
        term /= k as f64;
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    const LOG2_6: f64 = 2.584_962_500_721_156;

    #[test]
    fn distribution_rejects_malformed_inputs() {
        assert_eq!(
            ProbabilityDistribution::new(vec![]),
            Err(Error::EmptyDistribution)
        );
        assert!(matches!(
            ProbabilityDistribution::new(vec![0.5, -0.1, 0.6]),
            Err(Error::ProbabilityOutOfRange { index: 1, .. })
        ));
        assert!(matches!(
            ProbabilityDistribution::new(vec![1.2]),
            Err(Error::ProbabilityOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            ProbabilityDistribution::new(vec![0.5, 0.4]),
            Err(Error::DistributionSum { .. })
        ));
        assert!(matches!(
            ProbabilityDistribution::new(vec![f64::NAN, 1.0]),
            Err(Error::ProbabilityOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn certain_outcome_has_zero_entropy() {
        let d = ProbabilityDistribution::new(vec![1.0]).unwrap();
        assert_eq!(shannon_entropy(&d).bits(), 0.0);
    }

    #[test]
    fn two_equiprobable_outcomes_carry_one_bit() {
        let d = ProbabilityDistribution::new(vec![0.5, 0.5]).unwrap();
        assert_eq!(shannon_entropy(&d).bits(), 1.0);
    }

    #[test]
    fn uniform_eight_outcomes_carry_three_bits() {
        let d = ProbabilityDistribution::uniform(8).unwrap();
        assert_eq!(shannon_entropy(&d).bits(), 3.0);
    }

    #[test]
    fn hand_evaluated_mixed_distribution() {
        // −(0.5·log2 0.5 + 0.25·log2 0.25 + 0.25·log2 0.25) = 0.5 + 0.5 + 0.5
        let d = ProbabilityDistribution::new(vec![0.5, 0.25, 0.25]).unwrap();
        assert_eq!(shannon_entropy(&d).bits(), 1.5);
    }

    #[test]
    fn zero_probability_outcomes_are_ignored() {
        let d = ProbabilityDistribution::new(vec![0.5, 0.5, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&d).bits(), 1.0);
    }

    #[test]
    fn entropy_change_subtracts() {
        let h = |x| EntropyBits::new(x).unwrap();
        assert_eq!(entropy_change(h(7.0), h(0.0)).unwrap().bits(), 7.0);
        assert_eq!(entropy_change(h(3.0), h(3.0)).unwrap().bits(), 0.0);
        assert!((entropy_change(h(LOG2_6), h(0.0)).unwrap().bits() - 2.585).abs() < 1e-3);
    }

    #[test]
    fn entropy_change_rejects_inverted_models() {
        let h = |x| EntropyBits::new(x).unwrap();
        assert_eq!(
            entropy_change(h(1.0), h(2.0)),
            Err(Error::InvertedEntropyChange {
                initial_bits: 1.0,
                final_bits: 2.0
            })
        );
    }

    #[test]
    fn uniform_entropy_values() {
        assert_eq!(uniform_entropy(1).unwrap().bits(), 0.0);
        assert_eq!(uniform_entropy(1024).unwrap().bits(), 10.0);
        assert!((uniform_entropy(6).unwrap().bits() - LOG2_6).abs() < 1e-12);
        assert_eq!(uniform_entropy(0), Err(Error::ZeroStates));
    }

    #[test]
    fn uniform_entropy_matches_shannon_of_uniform() {
        for n in 1..=64usize {
            let d = ProbabilityDistribution::uniform(n).unwrap();
            let direct = uniform_entropy(n as u64).unwrap().bits();
            assert!((shannon_entropy(&d).bits() - direct).abs() < 1e-9, "n={n}");
        }
    }

    #[test]
    fn log2_factorial_small_values() {
        assert_eq!(log2_factorial_exact(0).bits(), 0.0);
        assert_eq!(log2_factorial_exact(1).bits(), 0.0);
        assert!((log2_factorial_exact(3).bits() - LOG2_6).abs() < 1e-12);
        assert!((log2_factorial_exact(4).bits() - (LOG2_6 + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn log2_factorial_matches_direct_factorials_up_to_20() {
        // 20! still fits u64, so the plain route is an independent check.
        let mut fact: u64 = 1;
        for n in 1..=20u64 {
            fact *= n;
            let direct = (fact as f64).log2();
            assert!(
                (log2_factorial_exact(n).bits() - direct).abs() < 1e-9,
                "n={n}"
            );
        }
    }

    #[test]
    fn stirling_is_the_bare_two_term_form() {
        // n = 1 plugs into n·log2(n) − n·log2(e) as −log2(e).
        let expected = -std::f64::consts::LOG2_E;
        assert!((stirling_log2_factorial(1) - expected).abs() < 1e-12);
        assert!((stirling_log2_factorial(100) - 520.1).abs() < 0.1);
    }

    #[test]
    fn stirling_accuracy_against_summation() {
        let rel_err = |n: u64| {
            let exact = log2_factorial_exact(n).bits();
            (stirling_log2_factorial(n) - exact).abs() / exact
        };
        assert!(rel_err(100) < 0.01);
        assert!(rel_err(1000) < 0.001);
        assert!(rel_err(1000) < rel_err(100));
    }

    #[test]
    fn generalized_entropy_reduces_to_shannon_in_base_two() {
        let d = ProbabilityDistribution::new(vec![0.5, 0.5]).unwrap();
        assert_eq!(generalized_entropy(&d, 2.0).unwrap(), 1.0);

        let d = ProbabilityDistribution::new(vec![0.2, 0.3, 0.1, 0.4]).unwrap();
        assert_eq!(
            generalized_entropy(&d, 2.0).unwrap().to_bits(),
            shannon_entropy(&d).bits().to_bits()
        );
    }

    #[test]
    fn generalized_entropy_other_bases() {
        let d = ProbabilityDistribution::uniform(8).unwrap();
        assert!((generalized_entropy(&d, 8.0).unwrap() - 1.0).abs() < 1e-12);

        let d = ProbabilityDistribution::uniform(6).unwrap();
        let nats = generalized_entropy(&d, std::f64::consts::E).unwrap();
        assert!((nats - 6.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn generalized_entropy_rejects_degenerate_bases() {
        let d = ProbabilityDistribution::uniform(2).unwrap();
        assert_eq!(generalized_entropy(&d, 1.0), Err(Error::InvalidBase(1.0)));
        assert_eq!(generalized_entropy(&d, 0.5), Err(Error::InvalidBase(0.5)));
    }

    #[test]
    fn e_partial_sums() {
        assert_eq!(e_partial_sum(0), 1.0);
        assert_eq!(e_partial_sum(1), 2.0);
        assert!((e_partial_sum(10) - std::f64::consts::E).abs() < 1e-6);
    }

    #[test]
    fn e_partial_sum_is_monotone_and_bounded() {
        let mut prev = 0.0;
        for k in 0..=30 {
            let s = e_partial_sum(k);
            assert!(s >= prev);
            assert!(s <= std::f64::consts::E + 1e-15);
            prev = s;
        }
    }
}
