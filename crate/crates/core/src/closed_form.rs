//! Explicit binomial-sum formulas.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{hypothesis, Result};
use crate::params::{check_index, Params, SeqIndex, MIN_INDEX};
use crate::sequence::{upow, SeqValue};

/// Pascal-triangle cache of binomial coefficients, grown row by row.
#[derive(Debug, Clone, Default)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// C(a, b); zero when b > a.
    pub fn get(&mut self, a: usize, b: usize) -> SeqValue {
        if b > a {
            return SeqValue::zero();
        }
        while self.rows.len() <= a {
            let next = match self.rows.last() {
                None => vec![BigUint::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(BigUint::one());
                    row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
                    row.push(BigUint::one());
                    row
                }
            };
            self.rows.push(next);
        }
        self.rows[a][b].clone()
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }
}

/// C(a, b) by the multiplicative formula; zero when b > a.
pub fn binomial(a: u64, b: u64) -> SeqValue {
    if b > a {
        return SeqValue::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for j in 0..b {
        acc *= a - j;
        acc /= j + 1;
    }
    acc
}

/// Σ_{j=0}^{⌊(n+1)/k⌋} r^{t_j} s^j C(j + t_j, j) with t_j = ⌊(n+1-jk)/i⌋; k ≥ i.
pub fn closed_f(p: &Params, n: SeqIndex) -> Result<SeqValue> {
    p.require_k_ge_i("the closed formula")?;
    check_index(n, MIN_INDEX)?;
    let len = n + 1;
    let (i, k) = (p.ii(), p.ki());
    let mut total = SeqValue::zero();
    for j in 0..=len / k {
        let t = (len - j * k) / i;
        total += upow(p.r(), t) * upow(p.s(), j) * binomial((j + t) as u64, j as u64);
    }
    Ok(total)
}

/// Narayana's cows number u_n = Σ_{j=0}^{⌊n/3⌋} C(n-2j, j), n ≥ 1.
pub fn narayana_closed(n: i64) -> Result<SeqValue> {
    if n < 1 {
        return hypothesis(format!("Narayana closed form requires n ≥ 1 (got {n})"));
    }
    Ok((0..=n / 3).map(|j| binomial((n - 2 * j) as u64, j as u64)).sum())
}

/// Central-cell decomposition of F^1_{r,s}(2t, 2n), for t ≥ 1 and n ≥ 2t - 1.
///
/// Counts tilings of a (2n+1)-board by the number j (resp. l) of long pieces
/// left (resp. right) of the middle cell. Terms stop once n - t(j+l) < 0.
pub fn central_f(r: u32, s: u32, t: u32, n: SeqIndex) -> Result<SeqValue> {
    if r < 1 || s < 1 || t < 1 {
        return hypothesis(format!("central sum requires r, s, t ≥ 1 (got r={r}, s={s}, t={t})"));
    }
    let t = i64::from(t);
    if n < 2 * t - 1 {
        return hypothesis(format!("central sum requires n ≥ 2t - 1 = {} (got {n})", 2 * t - 1));
    }
    let mut total = SeqValue::zero();
    for pieces in 0..=n / t {
        let side = n - t * pieces;
        let weight = upow(r, 2 * side + 1) * upow(s, pieces);
        for j in 0..=pieces {
            let l = pieces - j;
            total += &weight * binomial((side + j) as u64, j as u64) * binomial((side + l) as u64, l as u64);
        }
    }
    Ok(total)
}
