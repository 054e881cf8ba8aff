//! Named sequences as parameter choices plus index offsets, reference-data
//! ingestion in b-file format, and parameter presets for the classical
//! families that the four-parameter numbers generalize.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{hypothesis, Error, Result};
use crate::identities::{Aux, Counterexample, IdentityReport, VerificationReport};
use crate::params::{Params, SeqIndex};
use crate::sequence::{eval_f, eval_l, SeqValue};

/// Which of the two families a named sequence comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeqKind {
    F,
    L,
}

/// A classical sequence `a(m) = F(n)` or `L(n)` with `n = m + offset`, for
/// `m ≥ min_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedSequence {
    pub name: &'static str,
    pub oeis: &'static str,
    /// (i, k, r, s).
    pub steps: (i64, i64, i64, i64),
    pub kind: SeqKind,
    pub offset: i64,
    pub min_m: i64,
    /// (m, a(m)) pairs the offset was fitted to.
    pub anchors: &'static [(i64, u64)],
    reference: &'static str,
}

impl NamedSequence {
    pub fn params(&self) -> Params {
        let (i, k, r, s) = self.steps;
        Params::new(i, k, r, s).expect("table parameters are valid")
    }

    /// Internal index for external index m.
    pub fn internal_index(&self, m: i64) -> SeqIndex {
        m + self.offset
    }

    /// The bundled reference terms (offset 0, one b-file per sequence).
    pub fn reference(&self) -> BFile {
        parse_bfile(self.reference).expect("bundled reference data parses")
    }

    pub fn value(&self, m: i64) -> Result<SeqValue> {
        if m < self.min_m {
            return Err(Error::IndexOutOfRange { min: self.min_m, value: m });
        }
        let n = self.internal_index(m);
        match self.kind {
            SeqKind::F => eval_f(&self.params(), n),
            SeqKind::L => eval_l(&self.params(), n),
        }
    }
}

/// The named rows: Fibonacci and Lucas via (1,2,1,1), Pell, Jacobsthal,
/// Padovan, Narayana's cows and A003269.
pub const NAMED_SEQUENCES: &[NamedSequence] = &[
    NamedSequence {
        name: "Fibonacci",
        oeis: "A000045",
        steps: (1, 2, 1, 1),
        kind: SeqKind::F,
        offset: -2,
        min_m: 1,
        anchors: &[(1, 1), (2, 1), (3, 2), (4, 3), (5, 5), (10, 55)],
        reference: include_str!("../../../data/fibonacci.txt"),
    },
    NamedSequence {
        name: "Lucas",
        oeis: "A000032",
        steps: (1, 2, 1, 1),
        kind: SeqKind::L,
        offset: 0,
        min_m: 1,
        anchors: &[(1, 1), (2, 3), (3, 4), (4, 7), (5, 11)],
        reference: include_str!("../../../data/lucas.txt"),
    },
    NamedSequence {
        name: "Pell",
        oeis: "A000129",
        steps: (1, 2, 2, 1),
        kind: SeqKind::F,
        offset: -2,
        min_m: 1,
        anchors: &[(1, 1), (2, 2), (3, 5), (4, 12), (5, 29)],
        reference: include_str!("../../../data/pell.txt"),
    },
    NamedSequence {
        name: "Jacobsthal",
        oeis: "A001045",
        steps: (1, 2, 1, 2),
        kind: SeqKind::F,
        offset: -2,
        min_m: 1,
        anchors: &[(1, 1), (2, 1), (3, 3), (4, 5), (5, 11)],
        reference: include_str!("../../../data/jacobsthal.txt"),
    },
    NamedSequence {
        name: "Padovan",
        oeis: "A000931",
        steps: (2, 3, 1, 1),
        kind: SeqKind::F,
        offset: -6,
        min_m: 5,
        anchors: &[(5, 1), (6, 1), (7, 1), (8, 2), (9, 2), (10, 3), (11, 4), (12, 5), (13, 7)],
        reference: include_str!("../../../data/padovan.txt"),
    },
    NamedSequence {
        name: "Narayana",
        oeis: "A000930",
        steps: (1, 3, 1, 1),
        kind: SeqKind::F,
        offset: -1,
        min_m: 0,
        anchors: &[(0, 1), (1, 1), (2, 1), (3, 2), (4, 3), (5, 4), (6, 6)],
        reference: include_str!("../../../data/narayana.txt"),
    },
    NamedSequence {
        name: "A003269",
        oeis: "A003269",
        steps: (1, 4, 1, 1),
        kind: SeqKind::F,
        offset: -2,
        min_m: 1,
        anchors: &[(1, 1), (2, 1), (3, 1), (4, 1), (5, 2), (6, 3), (7, 4)],
        reference: include_str!("../../../data/a003269.txt"),
    },
];

/// Looks a sequence up by name or A-number, ignoring case.
pub fn named_sequence(name: &str) -> Result<&'static NamedSequence> {
    NAMED_SEQUENCES
        .iter()
        .find(|seq| seq.name.eq_ignore_ascii_case(name) || seq.oeis.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownSequence(name.to_string()))
}

/// The m-th term of a named sequence, in its usual indexing.
pub fn named_value(name: &str, m: i64) -> Result<SeqValue> {
    named_sequence(name)?.value(m)
}

/// Reference terms: strictly increasing `(index, value)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFile {
    pub entries: Vec<(i64, BigUint)>,
}

impl BFile {
    pub fn get(&self, index: i64) -> Option<&BigUint> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|pos| &self.entries[pos].1)
    }
}

/// Parses `index value` lines; `#` starts a comment line, blank lines are
/// skipped, and indices must strictly increase.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigUint)> = Vec::new();
    for (pos, raw) in text.lines().enumerate() {
        let line_no = pos + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut tokens = line.split_whitespace();
        let (Some(idx), Some(val), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(err(format!("expected `index value`, got `{line}`")));
        };
        let index = i64::from_str(idx).map_err(|_| err(format!("bad index `{idx}`")))?;
        let value = BigUint::from_str(val).map_err(|_| err(format!("bad value `{val}`")))?;
        if let Some((prev, _)) = entries.last() {
            if index <= *prev {
                return Err(err(format!("index {index} does not increase (previous {prev})")));
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { entries })
}

/// Compares the named sequence with reference terms for m in `lo..=hi`.
/// An empty range checks nothing; a missing reference index is an error.
pub fn compare_reference(name: &str, reference: &BFile, lo: i64, hi: i64) -> Result<VerificationReport> {
    let seq = named_sequence(name)?;
    let mut report = IdentityReport::new(seq.name);
    for m in lo..=hi {
        let expected = reference.get(m).ok_or(Error::MissingCoverage(m))?;
        let actual = seq.value(m)?;
        report.record(&actual == expected, || Counterexample {
            params: seq.params(),
            n: seq.internal_index(m),
            aux: Aux::from([("m".to_string(), m)]),
            lhs: actual.to_string(),
            rhs: expected.to_string(),
        });
    }
    Ok(VerificationReport::from_reports(vec![report]))
}

/// Offsets `o` for which every reference term a(m) with `m + o ≥ min_internal`
/// equals the chosen family at `m + o`, requiring at least `min_matches`
/// compared terms. Candidates are scanned over the reference's own index span.
pub fn fit_offset(
    p: &Params,
    kind: SeqKind,
    reference: &BFile,
    min_internal: SeqIndex,
    min_matches: usize,
) -> Vec<i64> {
    let (Some(first), Some(last)) = (reference.entries.first(), reference.entries.last()) else {
        return Vec::new();
    };
    let span = last.0 - first.0 + 1;
    let mut fits = Vec::new();
    for offset in -span..=span {
        let mut compared = 0usize;
        let mut ok = true;
        for (m, value) in &reference.entries {
            let n = m + offset;
            if n < min_internal {
                continue;
            }
            let ours = match kind {
                SeqKind::F => eval_f(p, n),
                SeqKind::L => eval_l(p, n),
            };
            match ours {
                Ok(v) if &v == value => compared += 1,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && compared >= min_matches {
            fits.push(offset);
        }
    }
    fits
}

/// Parametric families; each maps its own parameters to (i, k, r, s) and checks
/// the family's documented initial conditions when built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// p_n^{a,b}: a p_{n-1} + b p_{n-2}.
    Pab { a: u32, b: u32 },
    /// {n}_{s,t}: s {n-1} + t {n-2}.
    St { s: u32, t: u32 },
    /// J(k,t,n): J(n-1) + t J(n-k).
    Jkt { k: u32, t: u32 },
    /// k-Fibonacci F_{k,n}: k F_{n-1} + F_{n-2}.
    KFibonacci { k: u32 },
    /// F_1(k,n): F(n-1) + F(n-k).
    Distance1 { k: u32 },
    /// F_2(k,n): F(n-2) + F(n-k).
    Distance2 { k: u32 },
    /// F_{k-1}(k,n): F(n-k+1) + F(n-k).
    DistanceKm1 { k: u32 },
    /// F_{k,n}(r): k F(n-r) + F(n-2).
    KFibonacciR { k: u32, r: u32 },
    /// k-Jacobsthal J_{k,n}: k J_{n-1} + 2 J_{n-2}.
    KJacobsthal { k: u32 },
    /// k-Pell P_k(n): 2 P_{n-1} + k P_{n-2}.
    KPell { k: u32 },
    /// G_n: G_{n-1} + G_{n-c}.
    Gc { c: u32 },
}

impl Family {
    fn raw(&self) -> ((u32, u32, u32, u32), Vec<(SeqIndex, u64)>) {
        let ones = |last: i64| (-1..=last).map(|n| (n, 1u64)).collect::<Vec<_>>();
        match *self {
            Family::Pab { a, b } => ((1, 2, a, b), vec![(-1, 1), (0, u64::from(a))]),
            Family::St { s, t } => ((1, 2, s, t), vec![(-1, 1), (0, u64::from(s))]),
            Family::Jkt { k, t } => ((1, k, 1, t), ones(i64::from(k) - 2)),
            Family::KFibonacci { k } => ((1, 2, k, 1), vec![(-1, 1), (0, u64::from(k))]),
            Family::Distance1 { k } => ((1, k, 1, 1), ones(i64::from(k) - 2)),
            Family::Distance2 { k } => ((2, k, 1, 1), ones(i64::from(k) - 2)),
            Family::DistanceKm1 { k } => ((k.saturating_sub(1), k, 1, 1), ones(i64::from(k) - 2)),
            Family::KFibonacciR { k, r } => ((r, 2, k, 1), ones(i64::from(r) - 2)),
            Family::KJacobsthal { k } => ((1, 2, k, 2), vec![(-1, 1), (0, u64::from(k))]),
            Family::KPell { k } => ((1, 2, 2, k), vec![(-1, 1), (0, 2)]),
            Family::Gc { c } => ((1, c, 1, 1), ones(i64::from(c) - 2)),
        }
    }

    /// Parameters of the family member, after checking its initial conditions.
    pub fn params(&self) -> Result<Params> {
        let ((i, k, r, s), initial) = self.raw();
        let p = Params::new(i.into(), k.into(), r.into(), s.into())?;
        for (n, expected) in initial {
            let got = eval_f(&p, n)?;
            if got != SeqValue::from(expected) {
                return hypothesis(format!("{self:?}: F({n}) = {got}, expected {expected}"));
            }
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> SeqValue {
        SeqValue::from(v)
    }

    #[test]
    fn named_examples() {
        assert_eq!(named_value("Fibonacci", 10).unwrap(), u(55));
        assert_eq!(named_value("Lucas", 2).unwrap(), u(3));
        assert_eq!(named_value("Pell", 2).unwrap(), u(2));
        assert_eq!(named_value("Narayana", 4).unwrap(), u(3));
        assert_eq!(named_value("a000045", 10).unwrap(), u(55));
        assert!(matches!(named_value("Tribonacci", 3), Err(Error::UnknownSequence(_))));
        assert!(matches!(named_value("Padovan", 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn anchors_hold() {
        for seq in NAMED_SEQUENCES {
            for &(m, v) in seq.anchors {
                assert_eq!(seq.value(m).unwrap(), u(v), "{} m={m}", seq.name);
            }
        }
    }

    #[test]
    fn bfile_examples() {
        let b = parse_bfile("0 0\n1 1\n2 1\n").unwrap();
        assert_eq!(b.entries, vec![(0, u(0)), (1, u(1)), (2, u(1))]);
        assert_eq!(parse_bfile("# comment\n5 5\n").unwrap().entries, vec![(5, u(5))]);
        assert_eq!(parse_bfile("\n  \n7 8\n").unwrap().entries, vec![(7, u(8))]);
        assert!(matches!(parse_bfile("3 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("1 1\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_bfile("# c\n2 1\n1 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_bfile("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("1 -2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn bundled_references_match() {
        for seq in NAMED_SEQUENCES {
            let reference = seq.reference();
            assert!(reference.entries.len() >= 30);
            let report = compare_reference(seq.name, &reference, seq.min_m, seq.min_m + 40).unwrap();
            assert_eq!(report.failed, 0, "{}: {:?}", seq.name, report.identities[0].counterexamples);
            assert_eq!(report.checked, 41);
        }
    }

    #[test]
    fn comparison_edge_cases() {
        let fib = named_sequence("Fibonacci").unwrap().reference();
        assert_eq!(compare_reference("Fibonacci", &fib, 5, 4).unwrap().checked, 0);
        assert_eq!(compare_reference("Fibonacci", &fib, 1000, 1000), Err(Error::MissingCoverage(1000)));
        let wrong = parse_bfile("1 1\n2 1\n3 3\n").unwrap();
        let report = compare_reference("Fibonacci", &wrong, 1, 3).unwrap();
        assert_eq!((report.checked, report.failed), (3, 1));
        assert_eq!(report.identities[0].counterexamples[0].rhs, "3");
    }

    #[test]
    fn offsets_are_the_unique_fit() {
        for seq in NAMED_SEQUENCES {
            let min_internal = seq.internal_index(seq.min_m);
            let fits = fit_offset(&seq.params(), seq.kind, &seq.reference(), min_internal, 5);
            assert_eq!(fits, vec![seq.offset], "{}", seq.name);
        }
    }

    #[test]
    fn both_fibonacci_embeddings_agree() {
        let a = Params::new(1, 2, 1, 1).unwrap();
        let b = Params::new(2, 1, 1, 1).unwrap();
        for n in -1..=60 {
            assert_eq!(eval_f(&a, n).unwrap(), eval_f(&b, n).unwrap());
        }
    }

    #[test]
    fn family_initial_conditions() {
        for a in 1..=3 {
            for b in 1..=3 {
                let p = Family::Pab { a, b }.params().unwrap();
                assert_eq!(eval_f(&p, 0).unwrap(), u(a.into()));
                Family::St { s: a, t: b }.params().unwrap();
            }
        }
        for k in 2..=6 {
            Family::Jkt { k, t: 3 }.params().unwrap();
            Family::KFibonacci { k }.params().unwrap();
            Family::Distance1 { k }.params().unwrap();
            Family::Distance2 { k }.params().unwrap();
            Family::DistanceKm1 { k }.params().unwrap();
            Family::KJacobsthal { k }.params().unwrap();
            Family::KPell { k }.params().unwrap();
            Family::Gc { c: k }.params().unwrap();
            for r in 1..=4 {
                Family::KFibonacciR { k, r }.params().unwrap();
            }
        }
        assert!(Family::DistanceKm1 { k: 1 }.params().is_err());
        assert_eq!(Family::KJacobsthal { k: 2 }.params().unwrap(), Params::new(1, 2, 2, 2).unwrap());
        assert_eq!(Family::Gc { c: 2 }.params().unwrap(), named_sequence("Fibonacci").unwrap().params());
    }

    #[test]
    fn k_fibonacci_with_r_follows_its_recurrence() {
        for k in 1..=3u32 {
            for r in 1..=4u32 {
                let p = Family::KFibonacciR { k, r }.params().unwrap();
                for n in i64::from(r.max(2)) - 1..=20 {
                    let lhs = eval_f(&p, n).unwrap();
                    let rhs = u(k.into()) * eval_f(&p, n - i64::from(r)).unwrap() + eval_f(&p, n - 2).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
