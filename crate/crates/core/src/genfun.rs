//! Rational generating function of F^i_{r,s}(k,·) and power-series extraction.
//!
//! The series is F(-1) + F(0) x + F(1) x² + …, so the coefficient of x^m is F(m-1).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::params::Params;

/// `numerator / denominator` as dense coefficient lists (index = power of x).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl RationalSeries {
    /// Copy with trailing zero coefficients removed from both polynomials.
    pub fn trimmed(&self) -> Self {
        fn trim(v: &[BigInt]) -> Vec<BigInt> {
            let end = v.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1);
            v[..end].to_vec()
        }
        Self { numerator: trim(&self.numerator), denominator: trim(&self.denominator) }
    }
}

fn ipow(base: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// Builds the generating function for k ≥ i.
///
/// For k > i the numerator is `Σ_{m<k} r^⌊m/i⌋ x^m - r Σ_{i≤m<k} r^⌊(m-i)/i⌋ x^m`
/// over `1 - r x^i - s x^k`; for k = i the subtracted sum is absent and the
/// denominator is `1 - (r+s) x^k`. Cancelled terms stay in place as zeros.
pub fn rational_genfun(p: &Params) -> Result<RationalSeries> {
    p.require_k_ge_i("the generating function")?;
    let (i, k) = (p.iu(), p.ku());
    let mut numerator: Vec<BigInt> = (0..k).map(|m| ipow(p.r(), m / i)).collect();
    let mut denominator = vec![BigInt::zero(); k + 1];
    denominator[0] = BigInt::one();
    if k > i {
        for m in i..k {
            numerator[m] -= BigInt::from(p.r()) * ipow(p.r(), (m - i) / i);
        }
        denominator[i] -= BigInt::from(p.r());
        denominator[k] -= BigInt::from(p.s());
    } else {
        denominator[k] -= BigInt::from(p.r()) + BigInt::from(p.s());
    }
    Ok(RationalSeries { numerator, denominator })
}

/// First `count` coefficients of `numerator / denominator`, pulled through
/// `c_m = numerator[m] - Σ_{j≥1} denominator[j] c_{m-j}`.
///
/// The denominator's constant term must be 1.
pub fn series_coeffs(rs: &RationalSeries, count: usize) -> Vec<BigInt> {
    assert!(rs.denominator.first().is_some_and(|c| c.is_one()), "denominator constant term must be 1");
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for m in 0..count {
        let mut c = rs.numerator.get(m).cloned().unwrap_or_default();
        for (j, d) in rs.denominator.iter().enumerate().skip(1).take(m) {
            if !d.is_zero() {
                c -= d * &out[m - j];
            }
        }
        out.push(c);
    }
    out
}
