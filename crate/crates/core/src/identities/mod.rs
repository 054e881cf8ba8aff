//! Executable identity registry and grid verifier.
//!
//! Every identity is an exact equality `lhs = rhs` between integers built from
//! F and L values. Each registry entry carries the hypotheses of its theorem as
//! an applicability predicate, so out-of-domain bindings are skipped rather
//! than reported as counterexamples.

mod corollaries;
mod registry;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::central_f;
use crate::error::{Error, Result};
use crate::params::{Params, SeqIndex};
use crate::sequence::{lucas_from_table, FTable};

pub use corollaries::{check_corollaries, COROLLARY_IDS};

/// Named auxiliary integers of one binding (m, l, t, ...).
pub type Aux = BTreeMap<String, i64>;

type Sides = (BigInt, BigInt);
type Evaluator = fn(&mut Ctx, &Params, &Aux, SeqIndex) -> Sides;

/// Which reading of an identity's right-hand side to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reading {
    /// The reading that the registry asserts.
    Standard,
    /// The alternative, as-printed reading kept for comparison; identities
    /// without one fall back to the standard reading.
    Literal,
}

/// One registry entry.
#[derive(Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    /// The equality in plain notation.
    pub statement: &'static str,
    /// Names of the auxiliary parameters.
    pub aux: &'static [&'static str],
    applicable: fn(&Params, &Aux, SeqIndex) -> bool,
    aux_candidates: fn(&Params, SeqIndex, &Grid) -> Vec<Aux>,
    eval: Evaluator,
    literal: Option<Evaluator>,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("aux", &self.aux)
            .finish_non_exhaustive()
    }
}

impl IdentitySpec {
    /// Whether the theorem's hypotheses hold for these bindings. Bindings must
    /// name exactly the identity's auxiliary parameters.
    pub fn is_applicable(&self, p: &Params, aux: &Aux, n: SeqIndex) -> bool {
        aux.len() == self.aux.len() && self.aux.iter().all(|a| aux.contains_key(*a)) && (self.applicable)(p, aux, n)
    }

    /// True when a separate as-printed reading exists.
    pub fn has_literal_reading(&self) -> bool {
        self.literal.is_some()
    }
}

/// Evaluation context: a growing F table for one parameter set.
pub(crate) struct Ctx {
    table: FTable,
}

impl Ctx {
    fn new(p: Params) -> Self {
        Self { table: FTable::new(p) }
    }

    /// F(x), zero below -1.
    fn f(&mut self, x: SeqIndex) -> BigInt {
        BigInt::from(self.table.get_or_zero(x))
    }

    /// L(x); callers only use it where k > i and x ≥ -1.
    fn l(&mut self, x: SeqIndex) -> BigInt {
        BigInt::from(lucas_from_table(&mut self.table, x).expect("L defined on the applicable domain"))
    }

    fn central(&mut self, p: &Params, t: i64, n: SeqIndex) -> BigInt {
        BigInt::from(central_f(p.r(), p.s(), t as u32, n).expect("central sum hypotheses checked"))
    }
}

/// Result of one evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub params: Params,
    pub aux: Aux,
    pub n: SeqIndex,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub pass: bool,
}

/// A failing binding, with both sides as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: Params,
    pub n: SeqIndex,
    pub aux: Aux,
    pub lhs: String,
    pub rhs: String,
}

/// At most this many counterexamples are kept per identity.
pub const MAX_COUNTEREXAMPLES: usize = 16;

/// Tally for one identity (or one reference comparison).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>) -> Self {
        Self { identity: identity.into(), checked: 0, passed: 0, failed: 0, counterexamples: Vec::new() }
    }

    /// Records one comparison.
    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(failure());
            }
        }
    }

    /// Appends `other`'s tally; counterexamples keep their order.
    pub fn merge(mut self, other: IdentityReport) -> IdentityReport {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        let room = MAX_COUNTEREXAMPLES - self.counterexamples.len();
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
        self
    }
}

/// Aggregate over several identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub identities: Vec<IdentityReport>,
}

impl VerificationReport {
    pub fn from_reports(identities: Vec<IdentityReport>) -> Self {
        Self {
            checked: identities.iter().map(|r| r.checked).sum(),
            passed: identities.iter().map(|r| r.passed).sum(),
            failed: identities.iter().map(|r| r.failed).sum(),
            identities,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Parameter grid: i ∈ 1..=imax, k ∈ 1..=kmax, r ∈ 1..=rmax, s ∈ 1..=smax,
/// n ∈ -1..=nmax. Unbounded auxiliary parameters (m of the breakability and
/// m-fold shift identities) range up to `aux_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub imax: i64,
    pub kmax: i64,
    pub rmax: i64,
    pub smax: i64,
    pub nmax: i64,
    pub aux_max: i64,
}

impl Grid {
    /// The default verification grid: i,k ≤ 4, r,s ≤ 3, n ≤ 24.
    pub const fn acceptance() -> Self {
        Self { imax: 4, kmax: 4, rmax: 3, smax: 3, nmax: 24, aux_max: 24 }
    }

    /// Every parameter set of the grid, in lexicographic (i, k, r, s) order.
    pub fn params(&self) -> Vec<Params> {
        let mut out = Vec::new();
        for i in 1..=self.imax {
            for k in 1..=self.kmax {
                for r in 1..=self.rmax {
                    for s in 1..=self.smax {
                        out.push(Params::new(i, k, r, s).expect("grid values are ≥ 1"));
                    }
                }
            }
        }
        out
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self::acceptance()
    }
}

/// The full registry.
pub fn list_identities() -> Vec<IdentitySpec> {
    registry::registry()
}

/// Registry entry by id.
pub fn lookup(id: &str) -> Result<IdentitySpec> {
    list_identities().into_iter().find(|spec| spec.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn evaluate(spec: &IdentitySpec, ctx: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex, reading: Reading) -> IdentityCheck {
    let eval = match reading {
        Reading::Literal => spec.literal.unwrap_or(spec.eval),
        Reading::Standard => spec.eval,
    };
    let (lhs, rhs) = eval(ctx, p, aux, n);
    IdentityCheck { id: spec.id, params: *p, aux: aux.clone(), n, pass: lhs == rhs, lhs, rhs }
}

/// Evaluates both sides of one identity at one binding.
pub fn check_identity(id: &str, p: &Params, aux: &Aux, n: SeqIndex) -> Result<IdentityCheck> {
    let spec = lookup(id)?;
    if !spec.is_applicable(p, aux, n) {
        return Err(Error::Hypothesis(format!("{id} does not apply to {p}, n = {n}, aux = {aux:?}")));
    }
    Ok(evaluate(&spec, &mut Ctx::new(*p), p, aux, n, Reading::Standard))
}

fn verify_spec(spec: &IdentitySpec, grid: &Grid, reading: Reading) -> IdentityReport {
    let label = match reading {
        Reading::Literal if spec.literal.is_some() => format!("{} (literal)", spec.id),
        _ => spec.id.to_string(),
    };
    grid.params()
        .par_iter()
        .map(|p| {
            let mut report = IdentityReport::new(label.clone());
            let mut ctx = Ctx::new(*p);
            for n in -1..=grid.nmax {
                for aux in (spec.aux_candidates)(p, n, grid) {
                    if !spec.is_applicable(p, &aux, n) {
                        continue;
                    }
                    let check = evaluate(spec, &mut ctx, p, &aux, n, reading);
                    report.record(check.pass, || Counterexample {
                        params: check.params,
                        n,
                        aux: check.aux.clone(),
                        lhs: check.lhs.to_string(),
                        rhs: check.rhs.to_string(),
                    });
                }
            }
            report
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(IdentityReport::new(label.clone()), IdentityReport::merge)
}

/// Checks one identity over every applicable binding of the grid.
pub fn verify_grid(id: &str, grid: &Grid) -> Result<VerificationReport> {
    let spec = lookup(id)?;
    Ok(VerificationReport::from_reports(vec![verify_spec(&spec, grid, Reading::Standard)]))
}

/// Checks one identity under the chosen reading.
pub fn verify_grid_reading(id: &str, grid: &Grid, reading: Reading) -> Result<VerificationReport> {
    let spec = lookup(id)?;
    Ok(VerificationReport::from_reports(vec![verify_spec(&spec, grid, reading)]))
}

/// Checks the whole registry; one report entry per identity, in registry order.
pub fn verify_all(grid: &Grid) -> VerificationReport {
    VerificationReport::from_reports(
        list_identities().iter().map(|spec| verify_spec(spec, grid, Reading::Standard)).collect(),
    )
}

/// Runs the as-printed readings of the identities that have one. These are
/// expected to fail; the report shows by how much.
pub fn verify_literal_readings(grid: &Grid) -> VerificationReport {
    VerificationReport::from_reports(
        list_identities()
            .iter()
            .filter(|spec| spec.has_literal_reading())
            .map(|spec| verify_spec(spec, grid, Reading::Literal))
            .collect(),
    )
}
