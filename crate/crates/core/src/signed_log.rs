//! Real numbers stored as a sign and the natural log of the magnitude.

use std::cmp::Ordering;
use std::ops::{Div, Mul};

/// A real number `sign * exp(log_magnitude)`.
///
/// Products and quotients of gamma values stay representable even when the
/// values themselves would overflow an `f64`. Zero is `sign == 0`, with the
/// log magnitude fixed at negative infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue {
    sign: i8,
    log_magnitude: f64,
}

impl SignedLogValue {
    pub const ZERO: SignedLogValue = SignedLogValue {
        sign: 0,
        log_magnitude: f64::NEG_INFINITY,
    };
    pub const ONE: SignedLogValue = SignedLogValue {
        sign: 1,
        log_magnitude: 0.0,
    };

    /// Builds a value from its parts. A zero sign forces the zero value.
    pub fn new(sign: i8, log_magnitude: f64) -> Self {
        if sign == 0 || log_magnitude == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            SignedLogValue {
                sign: sign.signum(),
                log_magnitude,
            }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self::new(if x > 0.0 { 1 } else { -1 }, x.abs().ln())
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log_magnitude(&self) -> f64 {
        self.log_magnitude
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Converts to `f64`; overflows to an infinity of the right sign.
    pub fn to_f64(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_magnitude.exp(),
        }
    }

    /// Reciprocal. The reciprocal of zero is reported as `None`.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(SignedLogValue {
                sign: self.sign,
                log_magnitude: -self.log_magnitude,
            })
        }
    }

    pub fn neg(&self) -> Self {
        SignedLogValue {
            sign: -self.sign,
            log_magnitude: self.log_magnitude,
        }
    }

    /// Sum of a sequence of values, scaled by the largest magnitude so that
    /// terms of astronomically different size can be combined.
    pub fn sum<I>(values: I) -> Self
    where
        I: IntoIterator<Item = SignedLogValue>,
    {
        let values: Vec<_> = values.into_iter().filter(|v| !v.is_zero()).collect();
        let scale = values
            .iter()
            .map(|v| v.log_magnitude)
            .max_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
        let Some(scale) = scale else {
            return Self::ZERO;
        };
        let total: f64 = values
            .iter()
            .map(|v| f64::from(v.sign) * (v.log_magnitude - scale).exp())
            .sum();
        let scaled = Self::from_f64(total);
        if scaled.is_zero() {
            scaled
        } else {
            SignedLogValue {
                sign: scaled.sign,
                log_magnitude: scaled.log_magnitude + scale,
            }
        }
    }
}

impl Mul for SignedLogValue {
    type Output = SignedLogValue;

    fn mul(self, rhs: SignedLogValue) -> SignedLogValue {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        SignedLogValue {
            sign: self.sign * rhs.sign,
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
        }
    }
}

/// Division by zero yields a NaN magnitude with the dividend's sign; callers
/// check divisors before dividing.
impl Div for SignedLogValue {
    type Output = SignedLogValue;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: SignedLogValue) -> SignedLogValue {
        if self.is_zero() {
            return Self::ZERO;
        }
        match rhs.recip() {
            Some(r) => self * r,
            None => SignedLogValue {
                sign: self.sign,
                log_magnitude: f64::NAN,
            },
        }
    }
}

impl From<f64> for SignedLogValue {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_is_canonical() {
        let z = SignedLogValue::new(1, f64::NEG_INFINITY);
        assert_eq!(z, SignedLogValue::ZERO);
        assert_eq!(SignedLogValue::new(0, 3.0), SignedLogValue::ZERO);
        assert_eq!(SignedLogValue::from_f64(0.0).to_f64(), 0.0);
        assert!(SignedLogValue::ZERO.recip().is_none());
    }

    #[test]
    fn huge_products_stay_finite_in_log_space() {
        let big = SignedLogValue::new(-1, 800.0);
        let p = big * big;
        assert_eq!(p.sign(), 1);
        assert_eq!(p.log_magnitude(), 1600.0);
        assert!(p.to_f64().is_infinite());
        let q = p / big;
        assert_eq!(q, big);
    }

    #[test]
    fn sum_of_huge_terms_cancels() {
        let a = SignedLogValue::new(1, 1000.0);
        let b = SignedLogValue::new(-1, 1000.0);
        assert!(SignedLogValue::sum([a, b]).is_zero());
        let s = SignedLogValue::sum([a, a]);
        assert!((s.log_magnitude() - (1000.0 + 2f64.ln())).abs() < 1e-12);
        assert!(SignedLogValue::sum(std::iter::empty()).is_zero());
    }

    proptest! {
        #[test]
        fn product_matches_real_product(x in -1e3f64..1e3, y in -1e3f64..1e3) {
            let p = (SignedLogValue::from(x) * SignedLogValue::from(y)).to_f64();
            let want = x * y;
            prop_assert!((p - want).abs() <= 1e-13 * want.abs().max(1e-300));
        }

        #[test]
        fn sum_matches_real_sum(xs in proptest::collection::vec(-1e6f64..1e6, 0..20)) {
            let s = SignedLogValue::sum(xs.iter().map(|&x| SignedLogValue::from(x))).to_f64();
            let want: f64 = xs.iter().sum();
            let scale: f64 = xs.iter().map(|x| x.abs()).sum();
            prop_assert!((s - want).abs() <= 1e-13 * scale.max(1.0));
        }
    }
}
