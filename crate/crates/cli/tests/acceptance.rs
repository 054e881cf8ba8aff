//! Acceptance suite: one PASS/FAIL line per criterion, with its runtime and
//! time budget. Runs without the libtest harness so the lines always appear in
//! `cargo test` output; exits non-zero if any criterion fails.
//!
//! Every criterion is exact integer arithmetic, so the only tolerances are the
//! time budgets below and a discrepancy count of exactly zero.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use genseq_core::{
    build_a, build_q, cassini, check_corollaries, closed_f, compare_reference, count_f_tilings, count_l_tilings, det,
    det_q_formula, enumerate_color_decompositions, enumerate_f_tilings, eval_f, eval_l, eval_l_by_recurrence, f_matrix,
    named_sequence, parse_bfile, rational_genfun, render_tiling, series_coeffs, Params, NAMED_SEQUENCES,
};
use num_bigint::BigInt;

const BUDGET_POINT: Duration = Duration::from_secs(1);
const BUDGET_BACKENDS: Duration = Duration::from_secs(5 * 60);
const BUDGET_REGRESSION: Duration = Duration::from_secs(10 * 60);
const BUDGET_DEFAULT: Duration = Duration::from_secs(5 * 60);

/// Reference Lucas numbers, read from the bundled b-file written by the
/// stand-alone generator script.
const LUCAS_BFILE: &str = include_str!("../../../data/lucas.txt");

fn grid() -> Vec<Params> {
    let mut out = Vec::new();
    for i in 1..=4 {
        for k in 1..=4 {
            for r in 1..=3 {
                for s in 1..=3 {
                    out.push(Params::new(i, k, r, s).unwrap());
                }
            }
        }
    }
    out
}

fn p(i: i64, k: i64, r: i64, s: i64) -> Params {
    Params::new(i, k, r, s).unwrap()
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

/// Collects discrepancies as readable strings; a criterion passes when empty.
#[derive(Default)]
struct Problems(Vec<String>);

impl Problems {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }
}

fn criterion_1() -> Problems {
    let mut pr = Problems::default();
    let pad = p(2, 3, 1, 1);
    let value = eval_f(&pad, 7).unwrap();
    pr.check(value == 7u32.into(), || format!("eval_f = {value}"));
    let count = count_f_tilings(&pad, 7).unwrap();
    pr.check(count == 7u32.into(), || format!("count_f_tilings = {count}"));
    let listed: Vec<String> = enumerate_f_tilings(&pad, 7).unwrap().map(|t| render_tiling(&t)).collect();
    let distinct: BTreeSet<&String> = listed.iter().collect();
    pr.check(listed.len() == 7 && distinct.len() == 7, || {
        format!("enumerated {} tilings, {} distinct", listed.len(), distinct.len())
    });
    pr
}

fn criterion_2() -> Problems {
    let mut pr = Problems::default();
    // (params, n, value) as printed in the table of initial conditions
    let f_anchors: &[((i64, i64, i64, i64), i64, u32)] = &[
        ((1, 2, 1, 1), -1, 1),
        ((1, 2, 1, 1), 0, 1),
        ((1, 2, 2, 1), -1, 1),
        ((1, 2, 2, 1), 0, 2),
        ((1, 2, 1, 2), -1, 1),
        ((1, 2, 1, 2), 0, 1),
        ((2, 3, 1, 1), -1, 1),
        ((2, 3, 1, 1), 0, 1),
        ((2, 3, 1, 1), 1, 1),
        ((1, 3, 1, 1), -1, 1),
        ((1, 3, 1, 1), 0, 1),
        ((1, 3, 1, 1), 1, 1),
    ];
    for &((i, k, r, s), n, want) in f_anchors {
        let got = eval_f(&p(i, k, r, s), n).unwrap();
        pr.check(got == want.into(), || format!("F({i},{k},{r},{s}; {n}) = {got}, want {want}"));
    }
    for (n, want) in [(1, 1u32), (2, 3)] {
        let got = eval_l(&p(1, 2, 1, 1), n).unwrap();
        pr.check(got == want.into(), || format!("L(1,2,1,1; {n}) = {got}, want {want}"));
    }
    pr
}

fn criterion_3() -> Problems {
    let mut pr = Problems::default();
    for q in grid() {
        let (i, k) = (q.i(), q.k());
        let f: Vec<BigInt> = (-1..=26).map(|n| big(eval_f(&q, n).unwrap())).collect();
        let at = |n: i64| &f[(n + 1) as usize];
        let coeffs = (k >= i).then(|| series_coeffs(&rational_genfun(&q).unwrap(), 22));
        for n in -1..=20 {
            let tiles = big(count_f_tilings(&q, n).unwrap());
            pr.check(&tiles == at(n), || format!("{q} n={n}: tilings {tiles} vs {}", at(n)));
            if let Some(coeffs) = &coeffs {
                let closed = big(closed_f(&q, n).unwrap());
                pr.check(&closed == at(n), || format!("{q} n={n}: closed {closed} vs {}", at(n)));
                let c = &coeffs[(n + 1) as usize];
                pr.check(c == at(n), || format!("{q} n={n}: genfun {c} vs {}", at(n)));
            }
            if k >= i && k >= 2 {
                let m = f_matrix(&q, n).unwrap();
                let ku = k as usize;
                for t in 1..=ku {
                    for j in 1..=ku {
                        let want = at(n + 2 * k as i64 - t as i64 - j as i64);
                        let got = m.get(t - 1, j - 1);
                        pr.check(got == want, || format!("{q} n={n}: matrix ({t},{j}) {got} vs {want}"));
                    }
                }
            }
        }
    }
    pr
}

fn criterion_4() -> Problems {
    let mut pr = Problems::default();
    for q in grid().into_iter().filter(|q| q.k() > q.i()) {
        // decompositions are defined from n = i - 1 on
        for n in q.i() as i64 - 1..=16 {
            let dec = enumerate_color_decompositions(&q, n).unwrap();
            let f = eval_f(&q, n).unwrap();
            pr.check(dec == f, || format!("{q} n={n}: decompositions {dec} vs F {f}"));
        }
    }
    pr
}

fn criterion_5() -> Problems {
    let mut pr = Problems::default();
    for q in grid().into_iter().filter(|q| q.k() > q.i()) {
        for n in -1..=20 {
            let (a, b, c) = (eval_l(&q, n), count_l_tilings(&q, n), eval_l_by_recurrence(&q, n));
            pr.check(a.is_ok() && a == b && b == c, || {
                format!("{q} n={n}: formula {a:?}, tilings {b:?}, recurrence {c:?}")
            });
        }
    }
    let reference = parse_bfile(LUCAS_BFILE).unwrap();
    for n in 1..=25 {
        let got = eval_l(&p(1, 2, 1, 1), n).unwrap();
        let want = reference.get(n).cloned();
        pr.check(Some(&got) == want.as_ref(), || format!("L(1,2,1,1; {n}) = {got}, reference {want:?}"));
    }
    pr
}

fn criterion_6() -> Problems {
    let mut pr = Problems::default();
    let out = Command::new(env!("CARGO_BIN_EXE_genseq"))
        .args(["verify", "--identity", "all", "--format", "json"])
        .output()
        .expect("genseq runs");
    pr.check(out.status.code() == Some(0), || format!("exit code {:?}", out.status.code()));
    match serde_json::from_slice::<serde_json::Value>(&out.stdout) {
        Ok(doc) => {
            let ids = doc["identities"].as_array().map_or(0, Vec::len);
            pr.check(ids >= 21, || format!("only {ids} identities reported"));
            pr.check(doc["failed"] == 0, || format!("failed = {}", doc["failed"]));
            if let Some(list) = doc["identities"].as_array() {
                for r in list {
                    pr.check(r["checked"].as_u64().unwrap_or(0) > 0, || format!("{} checked nothing", r["identity"]));
                }
            }
        }
        Err(e) => pr.check(false, || format!("unparseable report: {e}")),
    }
    pr
}

fn criterion_7() -> Problems {
    let mut pr = Problems::default();
    for q in grid().into_iter().filter(|q| q.k() >= q.i() && q.k() >= 2) {
        let got = det(&build_q(&q).unwrap());
        let want = det_q_formula(&q).unwrap();
        pr.check(got == want, || format!("{q}: det Q {got} vs theorem {want}"));
    }
    for k in 2..=5i64 {
        for r in 1..=3 {
            for s in 1..=3 {
                let q = p(1, k, r, s);
                // s^(k-1) (-1)^((k-1)(k+6)/2), written out here independently
                let sign = if ((k - 1) * (k + 6) / 2) % 2 == 0 { 1 } else { -1 };
                let want = big(sign) * num_traits::pow(big(s), (k - 1) as usize);
                let got = det(&build_a(&q).unwrap());
                pr.check(got == want, || format!("{q}: det A {got} vs {want}"));
                for n in 0..=12 {
                    let formula = cassini(&q, n).unwrap();
                    let direct = det(&f_matrix(&q, n).unwrap());
                    pr.check(formula == direct, || format!("{q} n={n}: Cassini {formula} vs det {direct}"));
                }
            }
        }
    }
    for n in 0..=12i64 {
        let want = big(if (n + 1) % 2 == 0 { 1 } else { -1 });
        let got = cassini(&p(1, 2, 1, 1), n).unwrap();
        pr.check(got == want, || format!("Fibonacci Cassini n={n}: {got} vs {want}"));
    }
    pr
}

fn criterion_8() -> Problems {
    let mut pr = Problems::default();
    let report = check_corollaries(30);
    for r in &report.identities {
        pr.check(r.checked > 0 && r.failed == 0, || {
            format!("{}: checked {} failed {}", r.identity, r.checked, r.failed)
        });
    }
    for needed in ["COR-LUCAS-MINUS-F", "COR-LUCAS-MINUS-F3", "COR-PADOVAN-PARITY", "COR-JACOBSTHAL-PRODUCT"] {
        pr.check(report.identities.iter().any(|r| r.identity == needed), || format!("{needed} missing"));
    }
    pr
}

fn criterion_9() -> Problems {
    let mut pr = Problems::default();
    pr.check(NAMED_SEQUENCES.len() == 7, || format!("{} named sequences", NAMED_SEQUENCES.len()));
    for seq in NAMED_SEQUENCES {
        let reference = named_sequence(seq.name).unwrap().reference();
        let lo = seq.min_m;
        let hi = lo + 39;
        match compare_reference(seq.name, &reference, lo, hi) {
            Ok(report) => pr.check(report.failed == 0 && report.checked >= 30, || {
                format!("{}: checked {} failed {}", seq.name, report.checked, report.failed)
            }),
            Err(e) => pr.check(false, || format!("{}: {e}", seq.name)),
        }
    }
    pr
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Problems); 9] = [
        ("point value F(2,3,1,1; 7) = 7 with 7 distinct tilings", BUDGET_POINT, criterion_1),
        ("initial-condition anchors of the named rows", BUDGET_DEFAULT, criterion_2),
        ("backend equivalence on i,k ≤ 4, r,s ≤ 3, n ≤ 20", BUDGET_BACKENDS, criterion_3),
        ("color decompositions equal F for k > i, n ≤ 16", BUDGET_DEFAULT, criterion_4),
        ("Lucas layer: formula = tilings = recurrence; Lucas reference 1..25", BUDGET_DEFAULT, criterion_5),
        ("`verify --identity all` on the default grid: zero failures, exit 0", BUDGET_REGRESSION, criterion_6),
        ("determinants: det Q, det A, Cassini", BUDGET_DEFAULT, criterion_7),
        ("corollary parity and Jacobsthal product up to 30", BUDGET_DEFAULT, criterion_8),
        ("seven named sequences against bundled b-files", BUDGET_DEFAULT, criterion_9),
    ];
    let mut all_pass = true;
    for (number, (title, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let problems = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let pass = problems.0.is_empty() && in_time;
        all_pass &= pass;
        println!(
            "{} criterion {}: {title} ({:.2}s, budget {}s)",
            if pass { "PASS" } else { "FAIL" },
            number + 1,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        for line in problems.0.iter().take(10) {
            println!("    {line}");
        }
        if problems.0.len() > 10 {
            println!("    ... {} more discrepancies", problems.0.len() - 10);
        }
        if !in_time {
            println!("    over the time budget");
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
