use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// First decimal digit of `|x|`, or 0 for zero.
pub fn leading_digit(x: &BigInt) -> u8 {
    if x.is_zero() {
        return 0;
    }
    let magnitude = x.abs();
    if let Some(mut v) = magnitude.to_u64() {
        while v >= 10 {
            v /= 10;
        }
        return v as u8;
    }
    magnitude.to_str_radix(10).as_bytes()[0] - b'0'
}

/// Leading-digit proportions over all terms (index 0 counts zero terms) and
/// the proportion of strictly positive terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DigitDistribution {
    pub b_d: [f64; 10],
    pub p_z: f64,
}

impl DigitDistribution {
    /// Proportions over digits 1..9 among the nonzero terms only.
    pub fn nonzero_digits(&self) -> Result<[f64; 9]> {
        let mass: f64 = self.b_d[1..].iter().sum();
        if mass <= 0.0 {
            return Err(Error::UndefinedDistance);
        }
        let mut p = [0.0; 9];
        for (out, &v) in p.iter_mut().zip(&self.b_d[1..]) {
            *out = v / mass;
        }
        Ok(p)
    }
}

/// Empty input yields an all-zero distribution.
pub fn digit_distribution(terms: &[BigInt]) -> DigitDistribution {
    let mut counts = [0usize; 10];
    let mut positive = 0usize;
    for t in terms {
        counts[leading_digit(t) as usize] += 1;
        positive += t.is_positive() as usize;
    }
    let n = terms.len().max(1) as f64;
    let mut b_d = [0.0; 10];
    for (p, &c) in b_d.iter_mut().zip(&counts) {
        *p = c as f64 / n;
    }
    DigitDistribution {
        b_d,
        p_z: positive as f64 / n,
    }
}
