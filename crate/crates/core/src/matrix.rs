//! Matrix generators: the companion matrix Q_k, the initial-condition matrix
//! A_k, their products, determinants and the Cassini formula.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{hypothesis, Error, Result};
use crate::params::{check_index, Params, SeqIndex, MIN_INDEX};
use crate::sequence::FTable;

/// Dense square matrix of exact signed integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for t in 0..dim {
            m.data[t * dim + t] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            data.extend(row.iter().cloned().map(Into::into));
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.data[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.dim.max(1)).map(<[BigInt]>::to_vec).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, row) in self.data.chunks(self.dim.max(1)).enumerate() {
            if t > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn require_generator(p: &Params) -> Result<()> {
    p.require_k_ge_i("matrix generators")?;
    if p.k() < 2 {
        return hypothesis(format!("matrix generators require k ≥ 2 (got k = {})", p.k()));
    }
    Ok(())
}

/// Q_k: ones on the superdiagonal, first column holding the recurrence
/// coefficients (r at row i, s at row k, or r+s at row k when i = k).
pub fn build_q(p: &Params) -> Result<IntMatrix> {
    require_generator(p)?;
    let k = p.ku();
    let mut q = IntMatrix::zeros(k);
    for t in 0..k - 1 {
        q.set(t, t + 1, BigInt::one());
    }
    if p.i() < p.k() {
        q.set(p.iu() - 1, 0, BigInt::from(p.r()));
        q.set(k - 1, 0, BigInt::from(p.s()));
    } else {
        q.set(k - 1, 0, BigInt::from(p.r()) + BigInt::from(p.s()));
    }
    Ok(q)
}

/// A_k with 1-based entry (t, j) = F(2k - 1 - t - j): F(2k-3) top-left down to
/// F(-1) bottom-right.
pub fn build_a(p: &Params) -> Result<IntMatrix> {
    require_generator(p)?;
    let k = p.ku();
    let mut table = FTable::new(*p);
    let mut a = IntMatrix::zeros(k);
    for t in 1..=k {
        for j in 1..=k {
            let n = (2 * k) as i64 - 1 - (t + j) as i64;
            a.set(t - 1, j - 1, BigInt::from(table.get(n).clone()));
        }
    }
    let kk = p.ki();
    debug_assert_eq!(a.get(0, 0), &BigInt::from(table.get(2 * kk - 3).clone()));
    debug_assert_eq!(a.get(0, k - 1), &BigInt::from(table.get(kk - 2).clone()));
    debug_assert_eq!(a.get(k - 1, 0), &BigInt::from(table.get(kk - 2).clone()));
    debug_assert_eq!(a.get(k - 1, k - 1), &BigInt::from(table.get(-1).clone()));
    Ok(a)
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { left: a.dim, right: b.dim });
    }
    let n = a.dim;
    let mut out = IntMatrix::zeros(n);
    for t in 0..n {
        for l in 0..n {
            let x = a.get(t, l);
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = b.get(l, j);
                if !y.is_zero() {
                    out.data[t * n + j] += x * y;
                }
            }
        }
    }
    Ok(out)
}

/// `m^e` by repeated squaring; `m^0` is the identity.
pub fn mat_pow(m: &IntMatrix, mut e: u64) -> IntMatrix {
    let mut acc = IntMatrix::identity(m.dim);
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base).expect("same dimension");
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base).expect("same dimension");
        }
    }
    acc
}

/// A_k Q_k^{n+1}, whose 1-based entry (t, j) is F(n + 2k - t - j).
pub fn f_matrix(p: &Params, n: SeqIndex) -> Result<IntMatrix> {
    check_index(n, MIN_INDEX)?;
    let a = build_a(p)?;
    let q = build_q(p)?;
    mat_mul(&a, &mat_pow(&q, (n + 1) as u64))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    let n = m.dim;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.data.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n - 1 {
        if a[c * n + c].is_zero() {
            let Some(swap) = (c + 1..n).find(|&t| !a[t * n + c].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(c * n + j, swap * n + j);
            }
            sign = -sign;
        }
        let pivot = a[c * n + c].clone();
        for t in c + 1..n {
            for j in c + 1..n {
                let v = (&pivot * &a[t * n + j] - &a[t * n + c] * &a[c * n + j]) / &prev;
                a[t * n + j] = v;
            }
            a[t * n + c] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * &a[n * n - 1]
}

fn minus_one_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// det Q_k: s(-1)^{k+1} if i < k, (r+s)(-1)^{k+1} if i = k.
pub fn det_q_formula(p: &Params) -> Result<BigInt> {
    require_generator(p)?;
    let base = if p.i() < p.k() { BigInt::from(p.s()) } else { BigInt::from(p.r()) + BigInt::from(p.s()) };
    Ok(base * minus_one_pow(p.ki() + 1))
}

fn require_unit_step(p: &Params, what: &str) -> Result<()> {
    if p.i() != 1 {
        return hypothesis(format!("{what} requires i = 1 (got i = {})", p.i()));
    }
    if p.k() < 2 {
        return hypothesis(format!("{what} requires k ≥ 2 (got k = {})", p.k()));
    }
    Ok(())
}

/// det A_k = s^{k-1} (-1)^{(k-1)(k+6)/2}, stated for i = 1 only.
pub fn det_a_formula(p: &Params) -> Result<BigInt> {
    require_unit_step(p, "the det A_k formula")?;
    let k = p.ki();
    let twice = (k - 1) * (k + 6);
    assert_eq!(twice % 2, 0, "(k-1)(k+6) is always even");
    Ok(num_traits::pow(BigInt::from(p.s()), (k - 1) as usize) * minus_one_pow(twice / 2))
}

/// Cassini value det(A_k Q_k^{n+1}) = s^{n+k} (-1)^{((k-1)(k+6) + 2(k+1)(n+1))/2}
/// for i = 1, k ≥ 2, n ≥ 0.
pub fn cassini(p: &Params, n: SeqIndex) -> Result<BigInt> {
    require_unit_step(p, "the Cassini formula")?;
    check_index(n, 0)?;
    let k = p.ki();
    let twice = (k - 1) * (k + 6) + 2 * (k + 1) * (n + 1);
    assert_eq!(twice % 2, 0, "Cassini sign exponent must be even before halving");
    let magnitude = num_traits::pow(BigInt::from(p.s()), (n + k) as usize);
    Ok(magnitude * minus_one_pow(twice / 2))
}

/// Sign helper exposed for reports: -1, 0 or 1.
pub fn sign_of(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::eval_f;

    fn p(i: i64, k: i64, r: i64, s: i64) -> Params {
        Params::new(i, k, r, s).unwrap()
    }

    /// Cofactor expansion along the first row, independent of Bareiss.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.dim();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut total = BigInt::zero();
        for c in 0..n {
            if m.get(0, c).is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> =
                (1..n).map(|t| (0..n).filter(|&j| j != c).map(|j| m.get(t, j).clone()).collect()).collect();
            let term = m.get(0, c) * det_cofactor(&IntMatrix::from_rows(&minor));
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn q_examples() {
        assert_eq!(
            build_q(&p(2, 3, 5, 7)).unwrap(),
            IntMatrix::from_rows(&[vec![0, 1, 0], vec![5, 0, 1], vec![7, 0, 0]])
        );
        assert_eq!(build_q(&p(2, 2, 5, 7)).unwrap(), IntMatrix::from_rows(&[vec![0, 1], vec![12, 0]]));
        assert_eq!(build_q(&p(1, 2, 1, 1)).unwrap(), IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]));
        assert!(build_q(&p(3, 2, 1, 1)).is_err());
        assert!(build_q(&p(1, 1, 1, 1)).is_err());
    }

    #[test]
    fn a_examples() {
        assert_eq!(build_a(&p(1, 2, 1, 1)).unwrap(), IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]));
        let a = build_a(&p(1, 3, 1, 1)).unwrap();
        assert_eq!(a.get(0, 0), &BigInt::from(3));
        assert_eq!(a.get(2, 2), &BigInt::from(1));
        assert_eq!(build_a(&p(2, 2, 1, 1)).unwrap(), IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]));
    }

    #[test]
    fn powers() {
        let q = build_q(&p(1, 2, 1, 1)).unwrap();
        assert_eq!(mat_pow(&q, 0), IntMatrix::identity(2));
        assert_eq!(mat_pow(&q, 5), IntMatrix::from_rows(&[vec![8, 5], vec![5, 3]]));
        let a = build_a(&p(2, 3, 2, 1)).unwrap();
        assert_eq!(mat_mul(&IntMatrix::identity(3), &a).unwrap(), a);
        assert!(mat_mul(&IntMatrix::identity(2), &a).is_err());
    }

    #[test]
    fn f_matrix_examples() {
        let fib = p(1, 2, 1, 1);
        // top-left entry is F(n + 2k - 2)
        assert_eq!(f_matrix(&fib, 3).unwrap(), IntMatrix::from_rows(&[vec![13, 8], vec![8, 5]]));
        assert_eq!(f_matrix(&fib, -1).unwrap(), build_a(&fib).unwrap());
        let pad = p(2, 3, 1, 1);
        assert_eq!(f_matrix(&pad, 0).unwrap().get(2, 2), &BigInt::from(1));
    }

    #[test]
    fn f_matrix_entries_match_recurrence() {
        for k in 2..=4i64 {
            for i in 1..=k {
                for r in 1..=2 {
                    for s in 1..=2 {
                        let q = p(i, k, r, s);
                        for n in -1..=12 {
                            let m = f_matrix(&q, n).unwrap();
                            for t in 1..=k {
                                for j in 1..=k {
                                    let want = eval_f(&q, n + 2 * k - t - j).unwrap();
                                    assert_eq!(m.get((t - 1) as usize, (j - 1) as usize), &BigInt::from(want));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det(&IntMatrix::identity(3)), BigInt::one());
        assert_eq!(det(&build_q(&p(2, 3, 1, 1)).unwrap()), BigInt::one());
        assert_eq!(det(&IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]])), BigInt::one());
        assert_eq!(det(&IntMatrix::from_rows(&[vec![0, 2, 1], vec![0, 3, 4], vec![5, 6, 7]])), BigInt::from(25));
        assert_eq!(det(&IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]])), BigInt::zero());
    }

    #[test]
    fn bareiss_agrees_with_cofactor_expansion() {
        for k in 2..=5i64 {
            for i in 1..=k {
                let q = p(i, k, 2, 3);
                for n in [-1, 0, 3, 7] {
                    let m = f_matrix(&q, n).unwrap();
                    assert_eq!(det(&m), det_cofactor(&m), "{q} n={n}");
                }
            }
        }
    }

    #[test]
    fn det_q_examples() {
        assert_eq!(det_q_formula(&p(1, 2, 1, 1)).unwrap(), BigInt::from(-1));
        assert_eq!(det_q_formula(&p(2, 2, 2, 3)).unwrap(), BigInt::from(-5));
        assert_eq!(det_q_formula(&p(1, 3, 1, 4)).unwrap(), BigInt::from(4));
    }

    #[test]
    fn cassini_examples() {
        let fib = p(1, 2, 1, 1);
        assert_eq!(cassini(&fib, 0).unwrap(), BigInt::from(-1));
        assert_eq!(cassini(&fib, 1).unwrap(), BigInt::from(1));
        let q = p(1, 3, 1, 2);
        assert_eq!(cassini(&q, 2).unwrap(), det(&f_matrix(&q, 2).unwrap()));
        assert!(cassini(&p(2, 3, 1, 1), 2).is_err());
        assert!(cassini(&fib, -1).is_err());
    }

    #[test]
    fn display_is_row_per_line() {
        let m = IntMatrix::from_rows(&[vec![1, -2], vec![3, 4]]);
        assert_eq!(m.to_string(), "1 -2\n3 4");
        assert_eq!(sign_of(&BigInt::from(-3)), -1);
    }
}
