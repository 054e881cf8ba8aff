//! Recurrence backend for F^i_{r,s}(k,n) and L^i_{r,s}(k,n).
//!
//! Values are indexed from n = -1; tables store n at slot n + 1.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::params::{check_index, Params, SeqIndex, MIN_INDEX};

/// Arbitrary-precision sequence value.
pub type SeqValue = BigUint;

pub(crate) fn upow(base: u32, exp: i64) -> BigUint {
    debug_assert!(exp >= 0, "negative exponent {exp}");
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `r^⌊(n+1)/i⌋` for i ≤ k, `s^⌊(n+1)/k⌋` for k < i, on the initial range
/// `-1 ..= max(i,k) - 2`. `None` once the recurrence applies.
pub(crate) fn initial_value(p: &Params, n: SeqIndex) -> Option<SeqValue> {
    if n > p.initial_end() {
        return None;
    }
    if p.i() <= p.k() {
        Some(upow(p.r(), (n + 1).div_euclid(p.ii())))
    } else {
        Some(upow(p.s(), (n + 1).div_euclid(p.ki())))
    }
}

/// Growable table of F values for one parameter set.
#[derive(Debug, Clone)]
pub struct FTable {
    params: Params,
    values: Vec<SeqValue>,
}

impl FTable {
    pub fn new(params: Params) -> Self {
        // The two initial branches end exactly where the recurrence starts.
        debug_assert_eq!(
            params.initial_end(),
            if params.i() <= params.k() { params.ki() - 2 } else { params.ii() - 2 }
        );
        Self { params, values: Vec::new() }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// F(n) for n ≥ -1, extending the table as needed.
    pub fn get(&mut self, n: SeqIndex) -> &SeqValue {
        assert!(n >= MIN_INDEX, "F index {n} below -1");
        self.extend_to(n);
        &self.values[(n + 1) as usize]
    }

    /// F(n), with F(n) = 0 for n < -1 (a board of negative length has no tilings).
    pub fn get_or_zero(&mut self, n: SeqIndex) -> SeqValue {
        if n < MIN_INDEX {
            SeqValue::zero()
        } else {
            self.get(n).clone()
        }
    }

    fn extend_to(&mut self, n: SeqIndex) {
        let (i, k) = (self.params.iu(), self.params.ku());
        let (r, s) = (BigUint::from(self.params.r()), BigUint::from(self.params.s()));
        while (self.values.len() as i64) <= n + 1 {
            let m = self.values.len() as i64 - 1;
            let next = match initial_value(&self.params, m) {
                Some(v) => v,
                None => {
                    let slot = self.values.len();
                    &r * &self.values[slot - i] + &s * &self.values[slot - k]
                }
            };
            self.values.push(next);
        }
    }
}

/// F^i_{r,s}(k,n), computed ascending with a window of max(i,k) values.
pub fn eval_f(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    check_index(n, MIN_INDEX)?;
    if let Some(v) = initial_value(p, n) {
        return Ok(v);
    }
    let width = p.max_step() as usize;
    let (i, k) = (p.iu(), p.ku());
    let (r, s) = (BigUint::from(p.r()), BigUint::from(p.s()));
    // ring[(m + 1) % width] holds F(m) for the last `width` indices
    let mut ring: Vec<SeqValue> =
        (MIN_INDEX..=p.initial_end()).map(|m| initial_value(p, m).expect("initial range")).collect();
    debug_assert_eq!(ring.len(), width);
    for m in p.initial_end() + 1..=n {
        let slot = (m + 1) as usize;
        let next = &r * &ring[(slot - i) % width] + &s * &ring[(slot - k) % width];
        ring[slot % width] = next;
    }
    Ok(ring[((n + 1) as usize) % width].clone())
}

/// F(lo), ..., F(hi) in one ascending pass.
pub fn eval_f_range(p: &Params, lo: SeqIndex, hi: SeqIndex) -> Result<Vec<SeqValue>> {
    check_index(lo, MIN_INDEX)?;
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let mut table = FTable::new(*p);
    table.get(hi);
    Ok(table.values[(lo + 1) as usize..=(hi + 1) as usize].to_vec())
}

/// First index at which L is given by the tail formula: k + (k-1)i - 1.
pub fn lucas_formula_start(p: &Params) -> SeqIndex {
    p.ki() + (p.ki() - 1) * p.ii() - 1
}

/// L(n) from a table of F values. Caller guarantees k > i.
pub(crate) fn lucas_from_table(table: &mut FTable, n: SeqIndex) -> Result<SeqValue> {
    let p = *table.params();
    let (i, k) = (p.ii(), p.ki());
    if n <= k - 2 {
        return Ok(table.get(n).clone());
    }
    if n < lucas_formula_start(&p) {
        let f = table.get(n).clone();
        let no_k_rect = upow(p.r(), (n + 1).div_euclid(i));
        return if f >= no_k_rect { Ok(f - no_k_rect) } else { Err(Error::NegativeLucasInitial { n }) };
    }
    let tail_k = BigUint::from((p.k() - 1) * p.s()) * table.get(n - k - (k - 1) * i);
    let tail_i = table.get(n - (k - 1) * i).clone();
    Ok(upow(p.r(), k - 1) * (tail_k + tail_i))
}

/// L^i_{r,s}(k,n), defined for k > i.
pub fn eval_l(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    p.require_k_gt_i("L")?;
    check_index(n, MIN_INDEX)?;
    lucas_from_table(&mut FTable::new(*p), n)
}

/// L computed by the two-term L recurrence `L(n) = r L(n-i) + s L(n-k)` from
/// n = 2k + (k-1)i - 1 on, seeded by [`eval_l`] below that point.
pub fn eval_l_by_recurrence(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    p.require_k_gt_i("L")?;
    check_index(n, MIN_INDEX)?;
    let start = lucas_recurrence_start(p);
    let mut table = FTable::new(*p);
    if n < start {
        return lucas_from_table(&mut table, n);
    }
    let (i, k) = (p.iu(), p.ku());
    let (r, s) = (BigUint::from(p.r()), BigUint::from(p.s()));
    let mut values = Vec::with_capacity((n + 2) as usize);
    for m in MIN_INDEX..start {
        values.push(lucas_from_table(&mut table, m)?);
    }
    for _ in start..=n {
        let slot = values.len();
        let next = &r * &values[slot - i] + &s * &values[slot - k];
        values.push(next);
    }
    Ok(values.pop().expect("non-empty"))
}

/// First index where the L recurrence holds: 2k + (k-1)i - 1.
pub fn lucas_recurrence_start(p: &Params) -> SeqIndex {
    2 * p.ki() + (p.ki() - 1) * p.ii() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: i64, k: i64, r: i64, s: i64) -> Params {
        Params::new(i, k, r, s).unwrap()
    }

    fn u(v: u64) -> SeqValue {
        SeqValue::from(v)
    }

    #[test]
    fn point_values() {
        assert_eq!(eval_f(&p(2, 3, 1, 1), 7).unwrap(), u(7));
        assert_eq!(eval_f(&p(1, 2, 2, 1), 0).unwrap(), u(2));
        assert_eq!(eval_f(&p(1, 2, 1, 1), -1).unwrap(), u(1));
        assert_eq!(eval_f(&p(1, 2, 1, 1), 4).unwrap(), u(8));
        assert_eq!(eval_f(&p(2, 1, 1, 1), 5).unwrap(), u(13));
    }

    #[test]
    fn index_below_minus_one_is_rejected() {
        assert_eq!(eval_f(&p(1, 2, 1, 1), -2), Err(Error::IndexOutOfRange { min: -1, value: -2 }));
    }

    #[test]
    fn equal_steps_degenerate_to_single_term() {
        // i = k: F(n) = (r+s) F(n-k)
        let q = p(2, 2, 2, 3);
        let v = eval_f_range(&q, -1, 10).unwrap();
        for n in 1..=10usize {
            assert_eq!(v[n + 1], u(5) * &v[n - 1]);
        }
    }

    #[test]
    fn ranges() {
        let to_u = |xs: &[u64]| xs.iter().map(|&x| u(x)).collect::<Vec<_>>();
        assert_eq!(eval_f_range(&p(1, 2, 1, 1), -1, 3).unwrap(), to_u(&[1, 1, 2, 3, 5]));
        assert_eq!(eval_f_range(&p(2, 3, 1, 1), -1, 1).unwrap(), to_u(&[1, 1, 1]));
        assert_eq!(eval_f_range(&p(1, 2, 1, 1), 2, 2).unwrap(), to_u(&[3]));
        assert_eq!(eval_f_range(&p(1, 2, 1, 1), 3, 2), Err(Error::EmptyRange { lo: 3, hi: 2 }));
    }

    #[test]
    fn lucas_values() {
        let fib = p(1, 2, 1, 1);
        assert_eq!(eval_l(&fib, 1).unwrap(), u(1));
        assert_eq!(eval_l(&fib, 2).unwrap(), u(3));
        assert_eq!(eval_l(&fib, 5).unwrap(), u(11));
        assert!(matches!(eval_l(&p(2, 1, 1, 1), 3), Err(Error::Hypothesis(_))));
        assert!(matches!(eval_l(&p(2, 2, 1, 1), 3), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn lucas_recurrence_values() {
        let fib = p(1, 2, 1, 1);
        assert_eq!(eval_l_by_recurrence(&fib, 6).unwrap(), u(18));
        assert_eq!(eval_l_by_recurrence(&fib, 2).unwrap(), u(3));
        let q = p(1, 3, 1, 1);
        assert_eq!(eval_l_by_recurrence(&q, 10).unwrap(), eval_l(&q, 10).unwrap());
    }

    #[test]
    fn table_matches_windowed_evaluation() {
        for (i, k) in [(1, 1), (1, 4), (3, 2), (4, 4), (4, 1)] {
            let q = p(i, k, 2, 3);
            let mut t = FTable::new(q);
            for n in -1..30 {
                assert_eq!(t.get(n), &eval_f(&q, n).unwrap(), "{q} n={n}");
            }
        }
    }
}
