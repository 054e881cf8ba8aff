//! Sequence parameters and index bounds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sequence index. Every sequence here starts at n = -1.
pub type SeqIndex = i64;

/// Smallest legal index.
pub const MIN_INDEX: SeqIndex = -1;

/// The four parameters `(i, k, r, s)`.
///
/// `i` and `k` are the lengths of the two rectangle kinds (the two steps of the
/// recurrence), `r` and `s` their color counts (the recurrence coefficients).
/// All four are at least 1; no ordering between `i` and `k` is imposed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    i: u32,
    k: u32,
    r: u32,
    s: u32,
}

impl Params {
    /// Validates raw integers, naming the first offending parameter.
    pub fn new(i: i64, k: i64, r: i64, s: i64) -> Result<Self> {
        fn check(name: &'static str, value: i64) -> Result<u32> {
            if value < 1 {
                return Err(Error::InvalidParam { name, value });
            }
            u32::try_from(value).map_err(|_| Error::InvalidParam { name, value })
        }
        Ok(Self { i: check("i", i)?, k: check("k", k)?, r: check("r", r)?, s: check("s", s)? })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub(crate) fn iu(&self) -> usize {
        self.i as usize
    }

    pub(crate) fn ku(&self) -> usize {
        self.k as usize
    }

    pub(crate) fn ii(&self) -> i64 {
        i64::from(self.i)
    }

    pub(crate) fn ki(&self) -> i64 {
        i64::from(self.k)
    }

    pub fn max_step(&self) -> u32 {
        self.i.max(self.k)
    }

    pub fn min_step(&self) -> u32 {
        self.i.min(self.k)
    }

    /// Last index covered by the initial conditions; the recurrence takes over
    /// at `initial_end() + 1 = max(i, k) - 1`.
    pub fn initial_end(&self) -> SeqIndex {
        i64::from(self.max_step()) - 2
    }

    pub(crate) fn require_k_ge_i(&self, what: &str) -> Result<()> {
        if self.k < self.i {
            return crate::error::hypothesis(format!("{what} requires k ≥ i (got i = {}, k = {})", self.i, self.k));
        }
        Ok(())
    }

    pub(crate) fn require_k_gt_i(&self, what: &str) -> Result<()> {
        if self.k <= self.i {
            return crate::error::hypothesis(format!("{what} requires k > i (got i = {}, k = {})", self.i, self.k));
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i={}, k={}, r={}, s={})", self.i, self.k, self.r, self.s)
    }
}

pub(crate) fn check_index(n: SeqIndex, min: SeqIndex) -> Result<()> {
    if n < min {
        return Err(Error::IndexOutOfRange { min, value: n });
    }
    Ok(())
}
