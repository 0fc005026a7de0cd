use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};

/// A real number `mantissa * 2^exponent` with `|mantissa|` in `[1, 2)`.
///
/// Keeps binary64 precision while the exponent ranges far past `f64`, so the
/// mean and variance of 1000-digit terms stay representable and have finite logs.
#[derive(Clone, Copy, PartialEq)]
pub struct WideReal {
    mantissa: f64,
    exponent: i64,
}

const EXP_MASK: u64 = 0x7ff << 52;

/// 2^k for k in the normal exponent range.
fn pow2(k: i64) -> f64 {
    debug_assert!((-1022..=1023).contains(&k));
    f64::from_bits(((k + 1023) as u64) << 52)
}

impl WideReal {
    pub const ZERO: WideReal = WideReal {
        mantissa: 0.0,
        exponent: 0,
    };

    fn normalized(mut m: f64, mut e: i64) -> Self {
        if m == 0.0 || !m.is_finite() {
            return if m == 0.0 {
                WideReal::ZERO
            } else {
                WideReal {
                    mantissa: m,
                    exponent: 0,
                }
            };
        }
        let mut bits = m.to_bits();
        if bits & EXP_MASK == 0 {
            // subnormal
            m *= pow2(64);
            e -= 64;
            bits = m.to_bits();
        }
        let k = ((bits & EXP_MASK) >> 52) as i64 - 1023;
        let mantissa = f64::from_bits((bits & !EXP_MASK) | (1023u64 << 52));
        WideReal {
            mantissa,
            exponent: e + k,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        WideReal::normalized(x, 0)
    }

    pub fn from_u64(x: u64) -> Self {
        WideReal::normalized(x as f64, 0)
    }

    /// Nearest wide value to `x`; relative error at most 2^-52.
    pub fn from_bigint(x: &BigInt) -> Self {
        let bits = x.bits();
        if bits == 0 {
            return WideReal::ZERO;
        }
        let shift = bits.saturating_sub(64);
        let top: u64 = (x.magnitude() >> shift)
            .iter_u64_digits()
            .next()
            .unwrap_or(0);
        let signed = if x.sign() == Sign::Minus {
            -(top as f64)
        } else {
            top as f64
        };
        WideReal::normalized(signed, shift as i64)
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn is_sign_positive(&self) -> bool {
        self.mantissa > 0.0
    }

    /// Natural logarithm; `-inf` for zero, NaN for negative values.
    pub fn ln(&self) -> f64 {
        self.mantissa.ln() + self.exponent as f64 * std::f64::consts::LN_2
    }

    /// Converts to `f64`, saturating to infinity or zero outside its range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if self.exponent > 1023 {
            return self.mantissa.signum() * f64::INFINITY;
        }
        if self.exponent < -1100 {
            return 0.0;
        }
        let half = self.exponent / 2;
        self.mantissa * pow2(half) * pow2(self.exponent - half)
    }

    pub fn abs(self) -> Self {
        WideReal {
            mantissa: self.mantissa.abs(),
            ..self
        }
    }
}

impl Default for WideReal {
    fn default() -> Self {
        WideReal::ZERO
    }
}

impl fmt::Debug for WideReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Display for WideReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let log10 = (self.abs().ln()) / std::f64::consts::LN_10;
        let exp10 = log10.floor();
        let lead = 10f64.powf(log10 - exp10) * self.mantissa.signum();
        write!(f, "{lead:.6}e{exp10}")
    }
}

impl Neg for WideReal {
    type Output = WideReal;

    fn neg(self) -> WideReal {
        WideReal {
            mantissa: -self.mantissa,
            ..self
        }
    }
}

impl Add for WideReal {
    type Output = WideReal;

    fn add(self, rhs: WideReal) -> WideReal {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exponent >= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let gap = big.exponent - small.exponent;
        if gap > 60 {
            return big;
        }
        WideReal::normalized(big.mantissa + small.mantissa * pow2(-gap), big.exponent)
    }
}

impl Sub for WideReal {
    type Output = WideReal;

    fn sub(self, rhs: WideReal) -> WideReal {
        self + (-rhs)
    }
}

impl Mul for WideReal {
    type Output = WideReal;

    fn mul(self, rhs: WideReal) -> WideReal {
        WideReal::normalized(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Div for WideReal {
    type Output = WideReal;

    fn div(self, rhs: WideReal) -> WideReal {
        WideReal::normalized(self.mantissa / rhs.mantissa, self.exponent - rhs.exponent)
    }
}

impl PartialOrd for WideReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = *self - *other;
        diff.mantissa.partial_cmp(&0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_is_canonical() {
        let z = WideReal::from_bigint(&BigInt::from(0));
        assert_eq!(z.mantissa(), 0.0);
        assert_eq!(z.exponent(), 0);
        assert_eq!(WideReal::from_f64(3.0) - WideReal::from_f64(3.0), WideReal::ZERO);
    }

    #[test]
    fn small_integers_exact() {
        let w = WideReal::from_bigint(&BigInt::from(-5));
        assert_eq!(w.mantissa(), -1.25);
        assert_eq!(w.exponent(), 2);
        assert_eq!(w.to_f64(), -5.0);
    }

    #[test]
    fn huge_power_of_ten_log() {
        let x: BigInt = format!("1{}", "0".repeat(309)).parse().unwrap();
        let w = WideReal::from_bigint(&x);
        assert!(w.to_f64().is_infinite());
        // oracle: ln of the leading 17 digits plus the remaining digit count times ln 10
        let text = x.to_string();
        let lead: f64 = text[..17].parse().unwrap();
        let oracle = lead.ln() + (text.len() - 17) as f64 * std::f64::consts::LN_10;
        let got = w.ln();
        assert!(((got - oracle) / oracle).abs() < 1e-9, "{got} vs {oracle}");
        assert!(((got - 309.0 * std::f64::consts::LN_10) / got).abs() < 1e-9);
    }

    #[test]
    fn arithmetic_beyond_f64_range() {
        let a = WideReal::from_bigint(&(BigInt::from(1) << 5000usize));
        let b = a * a;
        assert_eq!(b.exponent(), 10000);
        assert_eq!((b / a).exponent(), 5000);
        assert_eq!(a + WideReal::from_u64(1), a);
        assert!(a > WideReal::from_f64(1e300));
        assert!(-a < WideReal::ZERO);
    }

    proptest! {
        #[test]
        fn bigint_conversion_relative_error(digits in "[1-9][0-9]{0,600}", negative in any::<bool>()) {
            let mut x: BigInt = digits.parse().unwrap();
            if negative { x = -x; }
            let w = WideReal::from_bigint(&x);
            prop_assert_eq!(w.is_sign_positive(), !negative);
            // compare with the exact top 120 bits
            let shift = x.bits().saturating_sub(120);
            let exact_top: f64 = (x.magnitude() >> shift).to_string().parse().unwrap();
            let approx = w.abs().mantissa() * 2f64.powi((w.exponent() - shift as i64) as i32);
            let rel = (approx / exact_top - 1.0).abs();
            prop_assert!(rel < 2f64.powi(-50), "rel {}", rel);
        }

        #[test]
        fn ops_match_f64_in_range(a in -1e100f64..1e100, b in -1e100f64..1e100) {
            prop_assume!(b.abs() > 1e-100);
            let (wa, wb) = (WideReal::from_f64(a), WideReal::from_f64(b));
            let close = |w: WideReal, x: f64| (w.to_f64() - x).abs() <= 1e-15 * x.abs().max(1e-300);
            prop_assert!(close(wa * wb, a * b));
            prop_assert!(close(wa / wb, a / b));
            let s = a + b;
            prop_assert!((( wa + wb).to_f64() - s).abs() <= 1e-15 * (a.abs() + b.abs()));
        }
    }
}
