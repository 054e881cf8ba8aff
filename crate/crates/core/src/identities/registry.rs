//! The identity table. Each entry pairs a hypothesis predicate with an exact
//! evaluator of both sides. Case-defined correction terms are computed inside
//! the evaluator that uses them.

use num_bigint::BigInt;

use super::{Aux, Ctx, Grid, IdentitySpec, Sides};
use crate::closed_form::binomial;
use crate::params::{Params, SeqIndex};

fn pw(base: u32, exp: i64) -> BigInt {
    assert!(exp >= 0, "negative exponent {exp}");
    num_traits::pow(BigInt::from(base), exp as usize)
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Floor division.
fn fl(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn get(aux: &Aux, name: &str) -> i64 {
    aux[name]
}

fn dims(p: &Params) -> (i64, i64, u32, u32) {
    (i64::from(p.i()), i64::from(p.k()), p.r(), p.s())
}

fn max_step(p: &Params) -> i64 {
    i64::from(p.max_step())
}

fn no_aux(_: &Params, _: SeqIndex, _: &Grid) -> Vec<Aux> {
    vec![Aux::new()]
}

fn single(name: &str, values: impl IntoIterator<Item = i64>) -> Vec<Aux> {
    values.into_iter().map(|v| Aux::from([(name.to_string(), v)])).collect()
}

// --- Lucas recurrence -------------------------------------------------------

fn lrec_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    k > i && n >= 2 * k + (k - 1) * i - 1
}

fn lrec(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    (c.l(n), int(r.into()) * c.l(n - i) + int(s.into()) * c.l(n - k))
}

// --- black square insertion -------------------------------------------------

fn black_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    i >= 2 && k % i == 0 && n >= 0
}

fn black(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let i = i64::from(p.i());
    (c.f(n * i - 1), c.f(n * i))
}

// --- last k-rectangle sums --------------------------------------------------

fn n_nonneg(_: &Params, _: &Aux, n: SeqIndex) -> bool {
    n >= 0
}

/// Tilings of an (ni+k+1)-board without k-rectangles.
fn u_ki(p: &Params, n: SeqIndex) -> BigInt {
    let (i, k, r, _) = dims(p);
    if k >= i {
        pw(r, fl(n * i + k + 1, i))
    } else if i == k + 1 {
        pw(r, n + 1)
    } else {
        int(0)
    }
}

fn sum_k(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let lhs = c.f(n * i + k);
    let rhs = if i == 1 {
        let mut acc = pw(r, n + k + 1);
        for j in -1..=n {
            acc += pw(r, n - j) * int(s.into()) * c.f(j);
        }
        acc
    } else {
        let mut acc = u_ki(p, n);
        for j in 0..=n {
            acc += pw(r, n - j) * int(s.into()) * c.f(i * j);
        }
        acc
    };
    (lhs, rhs)
}

/// Tilings of an (ni+k+2)-board without k-rectangles.
fn v_ki(p: &Params, n: SeqIndex) -> BigInt {
    let (i, k, r, _) = dims(p);
    if k >= i {
        pw(r, fl(n * i + k + 2, i))
    } else if (i == k + 1 && i >= 3) || i == k + 2 {
        pw(r, n + 1)
    } else {
        int(0)
    }
}

fn sum_k1_with(c: &mut Ctx, p: &Params, n: SeqIndex, head: BigInt) -> Sides {
    let (i, k, r, s) = dims(p);
    let lower = match i {
        1 => -2,
        2 => -1,
        _ => 0,
    };
    let mut rhs = head;
    for j in lower..=n {
        rhs += pw(r, n - j) * int(s.into()) * c.f(j * i + 1);
    }
    (c.f(n * i + k + 1), rhs)
}

fn sum_k1(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    sum_k1_with(c, p, n, v_ki(p, n))
}

fn sum_k1_literal(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    sum_k1_with(c, p, n, u_ki(p, n))
}

// --- last i-rectangle sums --------------------------------------------------

fn sum_i_aux(p: &Params, _: SeqIndex, _: &Grid) -> Vec<Aux> {
    let (i, k, ..) = dims(p);
    single("m", -1..=k - i - 1)
}

fn sum_i_ok(p: &Params, aux: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    let m = get(aux, "m");
    n >= 0 && k > i && (-1..=k - i - 1).contains(&m)
}

fn sum_i(c: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let m = get(aux, "m");
    let mut rhs = if m + i + 1 == k { pw(s, n + 1) } else { int(0) };
    for j in 0..=n {
        rhs += int(r.into()) * pw(s, n - j) * c.f(j * k + m);
    }
    (c.f(n * k + m + i), rhs)
}

fn sum_i2_aux(p: &Params, _: SeqIndex, _: &Grid) -> Vec<Aux> {
    let (i, k, ..) = dims(p);
    single("m", k - i..=k - 1)
}

fn sum_i2_ok(p: &Params, aux: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    let m = get(aux, "m");
    n >= 0 && k > i && (k - i..k).contains(&m)
}

fn sum_i2(c: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex) -> Sides {
    let (_, k, r, s) = dims(p);
    let m = get(aux, "m");
    let mut rhs = if m <= k - 2 { pw(s, n + 1) } else { int(r.into()) * pw(s, n + 1) };
    for j in 0..=n {
        rhs += int(r.into()) * pw(s, n - j) * c.f(j * k + m);
    }
    (c.f(n * k + m + i64::from(p.i())), rhs)
}

// --- four-term recurrence ---------------------------------------------------

fn fourterm_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    n >= (i - 1).max(2 * k - i - 1)
}

fn fourterm(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let (r, s) = (int(r.into()), int(s.into()));
    let rhs = (&s - &r) * c.f(n - k) + &r * c.f(n - i) + c.f(n - k + i) - &s * c.f(n - 2 * k + i);
    (c.f(n), rhs)
}

// --- central cell -----------------------------------------------------------

fn central_aux(p: &Params, _: SeqIndex, _: &Grid) -> Vec<Aux> {
    let k = i64::from(p.k());
    if k % 2 == 0 {
        single("t", [k / 2])
    } else {
        Vec::new()
    }
}

fn central_ok(p: &Params, aux: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    let t = get(aux, "t");
    i == 1 && t >= 1 && k == 2 * t && n >= 2 * t - 1
}

fn central(c: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex) -> Sides {
    (c.f(2 * n), c.central(p, get(aux, "t"), n))
}

// --- last l pieces ----------------------------------------------------------

fn lstep_aux(p: &Params, n: SeqIndex, _: &Grid) -> Vec<Aux> {
    single("l", 0..=fl(n + 1, max_step(p)))
}

fn lstep_ok(p: &Params, aux: &Aux, n: SeqIndex) -> bool {
    let l = get(aux, "l");
    l >= 0 && n >= max_step(p) * l - 1
}

fn lstep(c: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let l = get(aux, "l");
    let mut rhs = int(0);
    for j in 0..=l {
        let ways = BigInt::from(binomial(l as u64, j as u64));
        rhs += pw(r, l - j) * pw(s, j) * ways * c.f(n - j * k - (l - j) * i);
    }
    (c.f(n), rhs)
}

// --- k = 2i, s = 1 ----------------------------------------------------------

fn two_r2_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, _, s) = dims(p);
    k == 2 * i && s == 1 && n >= k - 1
}

fn two_r2(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (_, k, r, _) = dims(p);
    ((int(2) + pw(r, 2)) * c.f(n), c.f(n + k) + c.f(n - k))
}

// --- rightmost i-rectangle --------------------------------------------------

fn n_ge_max_minus_one(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    n >= max_step(p) - 1
}

fn last_i(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let l = (n + 1).rem_euclid(k);
    // tilings without i-rectangles
    let t = if i >= k || l <= i - 1 { pw(s, fl(n + 1, k)) } else { int(0) };
    let mut rhs = t;
    for j in 0..=fl(n + 1 - i, k) {
        rhs += int(r.into()) * pw(s, j) * c.f(n - i - j * k);
    }
    (c.f(n), rhs)
}

// --- shifts by ik and mk ----------------------------------------------------

fn shift_ik_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    n >= (k - i - 1).max(-1)
}

fn shift_ik(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let mut rhs = pw(r, k) * c.f(n);
    for j in 0..k {
        rhs += pw(r, j) * int(s.into()) * c.f(n + i * k - k - j * i);
    }
    (c.f(n + i * k), rhs)
}

fn shift_mk_aux(_: &Params, _: SeqIndex, g: &Grid) -> Vec<Aux> {
    single("m", 1..=g.aux_max)
}

fn shift_mk_ok(p: &Params, aux: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    get(aux, "m") >= 1 && n >= (i - k - 1).max(-1)
}

fn shift_mk(c: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let m = get(aux, "m");
    let mut rhs = pw(s, m) * c.f(n);
    for j in 0..m {
        rhs += int(r.into()) * pw(s, j) * c.f(n + m * k - j * k - i);
    }
    (c.f(n + m * k), rhs)
}

// --- last two k-rectangles --------------------------------------------------

fn n_ge_twice_max(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    n >= 2 * max_step(p) - 1
}

/// Splits the tilings with at most one k-rectangle (`none` without any,
/// `one` with exactly one) by the remainder of n + 1 modulo i.
fn at_most_one_k(p: &Params, n: SeqIndex, none: BigInt, one: BigInt) -> BigInt {
    let (i, k, ..) = dims(p);
    let l = (n + 1).rem_euclid(i);
    if k >= i || l <= 2 * k - i - 1 {
        none + one
    } else if l <= k - 1 {
        none
    } else if l <= 2 * k - 1 {
        one
    } else {
        int(0)
    }
}

fn twok(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let q = fl(n + 1 - k, i);
    let u = at_most_one_k(p, n, pw(r, fl(n + 1, i)), int(s.into()) * pw(r, q) * int(q + 1));
    let mut rhs = u;
    for j in 0..=fl(n + 1 - 2 * k, i) {
        for t in 0..=fl(n + 1 - 2 * k - i * j, i) {
            rhs += pw(s, 2) * pw(r, j + t) * c.f(n - 2 * k - t * i - j * i);
        }
    }
    (c.f(n), rhs)
}

fn twok2(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let v = at_most_one_k(p, n, pw(r, fl(n + 1, i)), int(s.into()) * pw(r, fl(n + 1 - k, i)));
    let mut rhs = v;
    for j in 0..=fl(n + 1 - 2 * k, i) {
        rhs += pw(r, j) * pw(s, 2) * c.f(n - 2 * k - j * i);
    }
    for j in 0..=fl(n + 1 - k - i, i) {
        rhs += pw(r, j + 1) * int(s.into()) * c.f(n - i - k - j * i);
    }
    (c.f(n), rhs)
}

// --- breakability -----------------------------------------------------------

fn break_aux(p: &Params, _: SeqIndex, g: &Grid) -> Vec<Aux> {
    single("m", i64::from(p.k())..=g.aux_max)
}

fn break_ok(p: &Params, aux: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    i == 1 && k >= 2 && get(aux, "m") >= k && n >= 0
}

fn breakable(c: &mut Ctx, p: &Params, aux: &Aux, n: SeqIndex) -> Sides {
    let (_, k, _, s) = dims(p);
    let m = get(aux, "m");
    let mut unbroken = int(0);
    for j in 0..=k - 2 {
        unbroken += c.f(m - j - 2) * c.f(n - k + j + 1);
    }
    (c.f(m + n), c.f(m - 1) * c.f(n) + int(s.into()) * unbroken)
}

// --- Lucas tails ------------------------------------------------------------

fn tail1_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    k > i && n >= k * (1 + i) - i - 1
}

fn tail1(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let rhs = int(k) * int(s.into()) * pw(r, k - 1) * c.f(n - (1 + i) * k + i) + pw(r, k) * c.f(n - k * i);
    (c.l(n), rhs)
}

fn tail2_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    k > i && n >= k * (2 + i) - i - 1
}

/// L tilings without k-rectangles before the tail.
fn no_k_before_tail(p: &Params, n: SeqIndex) -> BigInt {
    let (i, k, r, s) = dims(p);
    int(k - 1) * int(s.into()) * pw(r, fl(n + 1 - k, i)) + pw(r, fl(n + 1, i))
}

fn tail2(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let mut rhs = no_k_before_tail(p, n);
    for j in 0..=fl(n + 1 - k * (2 + i) + i, i) {
        rhs += int(k - 1) * pw(s, 2) * pw(r, k - 1 + j) * c.f(n - k * (2 + i) + i - i * j);
    }
    for t in 0..=fl(n + 1 - k * (1 + i) + i, i) {
        rhs += int(s.into()) * pw(r, k - 1 + t) * c.f(n - k * (1 + i) + i - i * t);
    }
    (c.l(n), rhs)
}

fn tail3_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    k > i && n >= k * (3 + i) - i - 1
}

fn tail3(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let mut rhs = no_k_before_tail(p, n);
    rhs += int(k - 1) * pw(s, 2) * pw(r, fl(n + 1 - 2 * k, i)) * int(fl(n + 1 - k * (2 + i) + i, i) + 1);
    rhs += int(s.into()) * pw(r, fl(n + 1 - k, i)) * int(fl(n + 1 - k * (1 + i) + i, i) + 1);
    let base = n - k * (3 + i) + i;
    for j in 0..=fl(base + 1, i) {
        for t in 0..=fl(base + 1 - j * i, i) {
            rhs += int(k - 1) * pw(s, 3) * pw(r, k - 1 + j + t) * c.f(base - j * i - t * i);
        }
    }
    let base = n - k * (i + 2) + i;
    for j in 0..=fl(base + 1, i) {
        for t in 0..=fl(base + 1 - j * i, i) {
            rhs += pw(s, 2) * pw(r, k - 1 + j + t) * c.f(base - j * i - t * i);
        }
    }
    (c.l(n), rhs)
}

// --- Lucas by residue class -------------------------------------------------

fn lmod_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    k > i && i >= 2 && n >= 2 * k + (k - 1) * i - 1 && (n + 1 - (k - 1) * i).rem_euclid(k) <= i - 1
}

/// The two sums over j shared by both readings.
fn lmod_sums(c: &mut Ctx, p: &Params, n: SeqIndex) -> BigInt {
    let (i, k, r, s) = dims(p);
    let a = n + 1 - (k - 1) * i;
    let mut acc = int(0);
    for j in 0..=fl(a, k) {
        acc += pw(r, k) * pw(s, j) * c.f(n - k * i - j * k);
    }
    for j in 0..=fl(a - k, k) {
        acc += int(k - 1) * pw(r, k) * pw(s, j + 1) * c.f(n - i * k - j * k - k);
    }
    acc
}

fn lmod(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, r, s) = dims(p);
    let head = int(k) * pw(r, k - 1) * pw(s, fl(n + 1 - (k - 1) * i, k));
    (c.l(n), head + lmod_sums(c, p, n))
}

fn lmod_literal(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    let (i, k, _, s) = dims(p);
    let head = pw(s, fl(n + 1 - (k - 1) * i, k)) + int(k - 1) * pw(s, fl(n + 1 + i - k * (i + 1), k));
    (c.l(n), head + lmod_sums(c, p, n))
}

// --- Lucas with i = 1 -------------------------------------------------------

fn li1_ok(p: &Params, _: &Aux, n: SeqIndex) -> bool {
    let (i, k, ..) = dims(p);
    i == 1 && k > 1 && n >= 3 * k - 2
}

fn li1_with(c: &mut Ctx, p: &Params, n: SeqIndex, second_exp_shift: i64) -> Sides {
    let (_, k, r, s) = dims(p);
    let mut rhs = if (n + 2 - k).rem_euclid(k) == 0 {
        pw(r, k - 1) * pw(s, fl(n + 2 - k, k))
            + int(k - 1) * pw(r, k - 1) * pw(s, fl(n + 2 - 2 * k, k) + second_exp_shift)
    } else {
        int(0)
    };
    for j in 0..=fl(n + 1 - k, k) {
        rhs += pw(r, k) * pw(s, j) * c.f(n - j * k - k);
    }
    for j in 0..=fl(n + 1 - 2 * k, k) {
        rhs += pw(r, k) * int(k - 1) * pw(s, j + 1) * c.f(n - j * k - 2 * k);
    }
    (c.l(n), rhs)
}

fn li1(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    li1_with(c, p, n, 1)
}

fn li1_literal(c: &mut Ctx, p: &Params, _: &Aux, n: SeqIndex) -> Sides {
    li1_with(c, p, n, 0)
}

pub(super) fn registry() -> Vec<IdentitySpec> {
    fn plain(
        id: &'static str,
        statement: &'static str,
        applicable: fn(&Params, &Aux, SeqIndex) -> bool,
        eval: super::Evaluator,
    ) -> IdentitySpec {
        IdentitySpec { id, statement, aux: &[], applicable, aux_candidates: no_aux, eval, literal: None }
    }
    vec![
        plain("ID-LREC", "L(n) = r L(n-i) + s L(n-k)  [k > i, n ≥ 2k+(k-1)i-1]", lrec_ok, lrec),
        plain("ID-BLACK", "F(ni-1) = F(ni)  [i ≥ 2, i | k, n ≥ 0]", black_ok, black),
        plain(
            "ID-SUM-K",
            "F(ni+k) = u(k,i) + Σ_{j=0}^{n} r^(n-j) s F(ij); for i = 1: r^(n+k+1) + Σ_{j=-1}^{n} r^(n-j) s F(j)  [n ≥ 0]",
            n_nonneg,
            sum_k,
        ),
        IdentitySpec {
            id: "ID-SUM-K1",
            statement: "F(ni+k+1) = v(k,i) + Σ_{j=l}^{n} r^(n-j) s F(ji+1), l = -2, -1, 0 for i = 1, 2, ≥3  [n ≥ 0]",
            aux: &[],
            applicable: n_nonneg,
            aux_candidates: no_aux,
            eval: sum_k1,
            literal: Some(sum_k1_literal),
        },
        IdentitySpec {
            id: "ID-SUM-I",
            statement: "F(nk+m+i) = [m+i+1 = k] s^(n+1) + Σ_{j=0}^{n} r s^(n-j) F(jk+m)  [n ≥ 0, k > i, -1 ≤ m ≤ k-i-1]",
            aux: &["m"],
            applicable: sum_i_ok,
            aux_candidates: sum_i_aux,
            eval: sum_i,
            literal: None,
        },
        IdentitySpec {
            id: "ID-SUM-I2",
            statement: "F(nk+m+i) = (s^(n+1) if m ≤ k-2 else r s^(n+1)) + Σ_{j=0}^{n} r s^(n-j) F(jk+m)  [n ≥ 0, k > i, k-i ≤ m < k]",
            aux: &["m"],
            applicable: sum_i2_ok,
            aux_candidates: sum_i2_aux,
            eval: sum_i2,
            literal: None,
        },
        plain(
            "ID-FOURTERM",
            "F(n) = (s-r) F(n-k) + r F(n-i) + F(n-k+i) - s F(n-2k+i)  [n ≥ max(i-1, 2k-i-1)]",
            fourterm_ok,
            fourterm,
        ),
        IdentitySpec {
            id: "ID-CENTRAL",
            statement: "F^1_{r,s}(2t,2n) = Σ_{j,l} r^(2(n-t(j+l))+1) s^(j+l) C(n-t(j+l)+j, j) C(n-t(j+l)+l, l)  [i = 1, k = 2t, n ≥ 2t-1]",
            aux: &["t"],
            applicable: central_ok,
            aux_candidates: central_aux,
            eval: central,
            literal: None,
        },
        IdentitySpec {
            id: "ID-LSTEP",
            statement: "F(n) = Σ_{j=0}^{l} r^(l-j) s^j C(l,j) F(n-jk-(l-j)i)  [l ≥ 0, n ≥ max(i,k) l - 1]",
            aux: &["l"],
            applicable: lstep_ok,
            aux_candidates: lstep_aux,
            eval: lstep,
            literal: None,
        },
        plain("ID-2R2", "(2+r²) F(n) = F(n+k) + F(n-k)  [k = 2i, s = 1, n ≥ k-1]", two_r2_ok, two_r2),
        plain(
            "ID-LAST-I",
            "F(n) = t(i,k,n) + Σ_{j=0}^{⌊(n+1-i)/k⌋} r s^j F(n-i-jk)  [n ≥ max(i,k)-1]",
            n_ge_max_minus_one,
            last_i,
        ),
        plain(
            "ID-SHIFT-IK",
            "F(n+ik) = r^k F(n) + Σ_{j=0}^{k-1} r^j s F(n+ik-k-ji)  [n ≥ max(k-i-1, -1)]",
            shift_ik_ok,
            shift_ik,
        ),
        IdentitySpec {
            id: "ID-SHIFT-MK",
            statement: "F(n+mk) = s^m F(n) + Σ_{j=0}^{m-1} r s^j F(n+mk-jk-i)  [m ≥ 1, n ≥ max(i-k-1, -1)]",
            aux: &["m"],
            applicable: shift_mk_ok,
            aux_candidates: shift_mk_aux,
            eval: shift_mk,
            literal: None,
        },
        plain(
            "ID-TWOK",
            "F(n) = u(i,k,n) + Σ_j Σ_t s² r^(j+t) F(n-2k-ti-ji)  [n ≥ 2 max(i,k) - 1]",
            n_ge_twice_max,
            twok,
        ),
        plain(
            "ID-TWOK2",
            "F(n) = v(i,k,n) + Σ_j r^j s² F(n-2k-ji) + Σ_j r^(j+1) s F(n-i-k-ji)  [n ≥ 2 max(i,k) - 1]",
            n_ge_twice_max,
            twok2,
        ),
        IdentitySpec {
            id: "ID-BREAK",
            statement: "F^1(m+n) = F^1(m-1) F^1(n) + s Σ_{j=0}^{k-2} F^1(m-j-2) F^1(n-k+j+1)  [m ≥ k ≥ 2, n ≥ 0]",
            aux: &["m"],
            applicable: break_ok,
            aux_candidates: break_aux,
            eval: breakable,
            literal: None,
        },
        plain(
            "ID-L-TAIL1",
            "L(n) = k s r^(k-1) F(n-(1+i)k+i) + r^k F(n-ki)  [k > i, n ≥ k(1+i)-i-1]",
            tail1_ok,
            tail1,
        ),
        plain(
            "ID-L-TAIL2",
            "L(n) by the number of i-rectangles between the tail and the last k-rectangle  [k > i, n ≥ k(2+i)-i-1]",
            tail2_ok,
            tail2,
        ),
        plain(
            "ID-L-TAIL3",
            "L(n) by the i-rectangles around the last two k-rectangles before the tail  [k > i, n ≥ k(3+i)-i-1]",
            tail3_ok,
            tail3,
        ),
        IdentitySpec {
            id: "ID-L-MOD",
            statement: "L(n) = k r^(k-1) s^⌊a/k⌋ + Σ_{j=0}^{⌊a/k⌋} r^k s^j F(n-ki-jk) + Σ_{j=0}^{⌊(a-k)/k⌋} (k-1) r^k s^(j+1) F(n-ik-jk-k), a = n+1-(k-1)i  [k > i ≥ 2, n ≥ 2k+(k-1)i-1, a mod k ≤ i-1]",
            aux: &[],
            applicable: lmod_ok,
            aux_candidates: no_aux,
            eval: lmod,
            literal: Some(lmod_literal),
        },
        IdentitySpec {
            id: "ID-L-I1",
            statement: "L(n) = u(n) + Σ_{j=0}^{⌊(n+1-k)/k⌋} r^k s^j F(n-jk-k) + Σ_{j=0}^{⌊(n+1-2k)/k⌋} (k-1) r^k s^(j+1) F(n-jk-2k)  [k > i = 1, n ≥ 3k-2]",
            aux: &[],
            applicable: li1_ok,
            aux_candidates: no_aux,
            eval: li1,
            literal: Some(li1_literal),
        },
    ]
}
