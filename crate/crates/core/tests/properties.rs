//! Randomized invariants over parameters and indices.

use genseq_core::{
    build_q, cassini, det, det_q_formula, eval_f, eval_f_range, f_matrix, mat_mul, mat_pow, named_value, parse_bfile,
    rational_genfun, series_coeffs, Params,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = Params> {
    (1i64..=6, 1i64..=6, 1i64..=5, 1i64..=5).prop_map(|(i, k, r, s)| Params::new(i, k, r, s).unwrap())
}

fn ordered_params() -> impl Strategy<Value = Params> {
    params().prop_filter("k ≥ i", |p| p.k() >= p.i())
}

proptest! {
    #[test]
    fn recurrence_holds(p in params(), n in 0i64..80) {
        let n = n + i64::from(p.max_step()) - 1;
        let lhs = eval_f(&p, n).unwrap();
        let rhs = BigUint::from(p.r()) * eval_f(&p, n - i64::from(p.i())).unwrap()
            + BigUint::from(p.s()) * eval_f(&p, n - i64::from(p.k())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ranges_match_points(p in params(), lo in -1i64..30, len in 0i64..30) {
        let values = eval_f_range(&p, lo, lo + len).unwrap();
        for (offset, v) in values.iter().enumerate() {
            prop_assert_eq!(v, &eval_f(&p, lo + offset as i64).unwrap());
        }
    }

    #[test]
    fn values_are_positive(p in params(), n in -1i64..200) {
        prop_assert!(eval_f(&p, n).unwrap() >= BigUint::from(1u8));
    }

    #[test]
    fn series_reproduces_values(p in ordered_params(), count in 1usize..60) {
        let coeffs = series_coeffs(&rational_genfun(&p).unwrap(), count);
        for (m, c) in coeffs.iter().enumerate() {
            prop_assert_eq!(c, &BigInt::from(eval_f(&p, m as i64 - 1).unwrap()));
        }
    }

    #[test]
    fn q_powers_multiply(p in ordered_params().prop_filter("k ≥ 2", |p| p.k() >= 2), a in 0u64..12, b in 0u64..12) {
        let q = build_q(&p).unwrap();
        prop_assert_eq!(mat_mul(&mat_pow(&q, a), &mat_pow(&q, b)).unwrap(), mat_pow(&q, a + b));
        prop_assert_eq!(det(&q), det_q_formula(&p).unwrap());
    }

    #[test]
    fn cassini_matches_determinant(k in 2i64..=5, r in 1i64..=3, s in 1i64..=3, n in 0i64..=12) {
        let p = Params::new(1, k, r, s).unwrap();
        prop_assert_eq!(cassini(&p, n).unwrap(), det(&f_matrix(&p, n).unwrap()));
    }

    #[test]
    fn bfile_round_trip(values in proptest::collection::vec(0u64..u64::MAX, 0..40), start in -5i64..5) {
        let text: String = values.iter().enumerate().map(|(j, v)| format!("{} {v}\n", start + j as i64)).collect();
        let parsed = parse_bfile(&text).unwrap();
        prop_assert_eq!(parsed.entries.len(), values.len());
        for ((idx, v), (j, expected)) in parsed.entries.iter().zip(values.iter().enumerate()) {
            prop_assert_eq!(*idx, start + j as i64);
            prop_assert_eq!(v, &BigUint::from(*expected));
        }
    }

    #[test]
    fn fibonacci_addition_formula(m in 1i64..60, n in 2i64..60) {
        // F_{m+n} = F_{m+1} F_n + F_m F_{n-1}
        let f = |x| named_value("Fibonacci", x).unwrap();
        prop_assert_eq!(f(m + n), f(m + 1) * f(n) + f(m) * f(n - 1));
    }
}

#[test]
fn rejects_invalid_parameters() {
    assert!(Params::new(0, 2, 1, 1).is_err());
    assert!(Params::new(1, 2, -3, 1).is_err());
    assert!(eval_f(&Params::new(1, 2, 1, 1).unwrap(), -2).is_err());
}
