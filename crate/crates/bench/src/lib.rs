//! Shared fixtures for the backend benchmarks.

use genseq_core::Params;

/// Parameter sets exercised by every backend benchmark: the Fibonacci,
/// Padovan and a wider mixed-step case.
pub fn fixtures() -> Vec<(&'static str, Params)> {
    [("fibonacci", (1, 2, 1, 1)), ("padovan", (2, 3, 1, 1)), ("mixed", (2, 4, 3, 2))]
        .into_iter()
        .map(|(name, (i, k, r, s))| (name, Params::new(i, k, r, s).expect("fixture parameters are valid")))
        .collect()
}
