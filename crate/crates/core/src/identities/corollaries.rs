//! Checks for classical consequences stated in terms of named sequences
//! (summation, Jacobsthal product, Lucas parity and Padovan parity), which are
//! not single instances of a registry identity.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{Aux, Counterexample, IdentityReport, VerificationReport};
use crate::sequence::SeqValue;
use crate::specializations::named_sequence;

/// Ids of the corollary checks, in report order.
pub const COROLLARY_IDS: &[&str] = &[
    "COR-FIB-SUM",
    "COR-JACOBSTHAL-PRODUCT",
    "COR-LUCAS-MINUS-F",
    "COR-LUCAS-MINUS-F3",
    "COR-LUCAS-SPLIT",
    "COR-PADOVAN-PARITY",
];

fn term(name: &str, m: i64) -> SeqValue {
    named_sequence(name).and_then(|seq| seq.value(m)).expect("index inside the named range")
}

/// Classical J_m with J_0 = 0.
fn jacobsthal(m: i64) -> SeqValue {
    if m == 0 {
        SeqValue::zero()
    } else {
        term("Jacobsthal", m)
    }
}

fn even(v: &BigUint) -> bool {
    !v.bit(0)
}

fn record(report: &mut IdentityReport, seq: &str, m: i64, aux: Aux, lhs: &SeqValue, rhs: &SeqValue) {
    report.record(lhs == rhs, || {
        let s = named_sequence(seq).expect("known sequence");
        Counterexample { params: s.params(), n: m, aux, lhs: lhs.to_string(), rhs: rhs.to_string() }
    });
}

fn one_index(m: i64) -> Aux {
    Aux::from([("m".to_string(), m)])
}

/// Runs every corollary check for indices up to `max` (at least the smallest
/// index each statement covers). Parity statements are checked both through
/// their explicit formulas and as parities.
pub fn check_corollaries(max: i64) -> VerificationReport {
    let one = SeqValue::from(1u32);
    let two = SeqValue::from(2u32);

    // Σ_{j=1}^{n} F_j = F_{n+2} - 1
    let mut fib_sum = IdentityReport::new(COROLLARY_IDS[0]);
    let mut acc = SeqValue::zero();
    for n in 1..=max {
        acc += term("Fibonacci", n);
        let rhs = term("Fibonacci", n + 2) - &one;
        record(&mut fib_sum, "Fibonacci", n, one_index(n), &acc, &rhs);
    }

    // J_{m+n} = J_{m+1} J_n + 2 J_m J_{n-1}, m, n ≥ 1
    let mut jac = IdentityReport::new(COROLLARY_IDS[1]);
    for m in 1..=max {
        for n in 1..=max {
            let lhs = jacobsthal(m + n);
            let rhs = jacobsthal(m + 1) * jacobsthal(n) + &two * jacobsthal(m) * jacobsthal(n - 1);
            let aux = Aux::from([("m".to_string(), m), ("n".to_string(), n)]);
            record(&mut jac, "Jacobsthal", m + n, aux, &lhs, &rhs);
        }
    }

    // L_n = 2 + F_n + 2 Σ_{j=1}^{n-3} F_j, hence L_n - F_n even (n ≥ 4)
    let mut lf = IdentityReport::new(COROLLARY_IDS[2]);
    for n in 4..=max {
        let lucas = term("Lucas", n);
        let fib = term("Fibonacci", n);
        let sum: SeqValue = (1..=n - 3).map(|j| term("Fibonacci", j)).sum();
        let rhs = &two + &fib + &two * sum;
        record(&mut lf, "Lucas", n, one_index(n), &lucas, &rhs);
        let parity = if even(&(&lucas - &fib)) { one.clone() } else { SeqValue::zero() };
        record(&mut lf, "Lucas", n, one_index(n), &parity, &one);
    }

    // L_n = 2(n-1) + F_{n-3} + Σ_{j=0}^{n-5} 2(j+1) F_{n-4-j}, hence
    // L_n - F_{n-3} even (n ≥ 6)
    let mut lf3 = IdentityReport::new(COROLLARY_IDS[3]);
    for n in 6..=max {
        let lucas = term("Lucas", n);
        let fib3 = term("Fibonacci", n - 3);
        let sum: SeqValue =
            (0..=n - 5).map(|j| SeqValue::from(2 * (j + 1) as u64) * term("Fibonacci", n - 4 - j)).sum();
        let rhs = SeqValue::from(2 * (n - 1) as u64) + &fib3 + sum;
        record(&mut lf3, "Lucas", n, one_index(n), &lucas, &rhs);
        let parity = if lucas >= fib3 && even(&(&lucas - &fib3)) { one.clone() } else { SeqValue::zero() };
        record(&mut lf3, "Lucas", n, one_index(n), &parity, &one);
    }

    // even n: L_n = 2 + F_n + 2 Σ_{j=0}^{n/2-2} F_{n-2-2j};
    // odd n:  L_n = F_n + 2 Σ_{j=0}^{(n-3)/2} F_{n-2-2j}   (n ≥ 4)
    let mut split = IdentityReport::new(COROLLARY_IDS[4]);
    for n in 4..=max {
        let top = if n % 2 == 0 { n / 2 - 2 } else { (n - 3) / 2 };
        let sum: SeqValue = (0..=top).map(|j| term("Fibonacci", n - 2 - 2 * j)).sum();
        let base = if n % 2 == 0 { &two + term("Fibonacci", n) } else { term("Fibonacci", n) };
        record(&mut split, "Lucas", n, one_index(n), &term("Lucas", n), &(base + &two * sum));
    }

    // Pv(n+7) = Pv(n+1) + Pv(n) + Pv(n+2) + Pv(n+4), and Pv(n+7) ≡ Pv(n) mod 2
    let mut pad = IdentityReport::new(COROLLARY_IDS[5]);
    let min = named_sequence("Padovan").expect("known sequence").min_m;
    for n in min..=max.max(min) {
        let lhs = term("Padovan", n + 7);
        let rhs = term("Padovan", n + 1) + term("Padovan", n) + term("Padovan", n + 2) + term("Padovan", n + 4);
        record(&mut pad, "Padovan", n, one_index(n), &lhs, &rhs);
        let same = SeqValue::from(u8::from(even(&lhs) == even(&term("Padovan", n))));
        record(&mut pad, "Padovan", n, one_index(n), &same, &one);
    }

    VerificationReport::from_reports(vec![fib_sum, jac, lf, lf3, split, pad])
}
