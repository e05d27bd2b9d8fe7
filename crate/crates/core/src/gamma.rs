//! Gamma, log-gamma with sign tracking, and Pochhammer symbols.
//!
//! Everything here returns [`SignedLogValue`]s so that callers can multiply
//! and divide gamma values whose magnitudes span hundreds of orders.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::signed_log::SignedLogValue;

/// Distance to a non-positive integer below which `x` counts as a pole of Γ.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LN_PI: f64 = 1.144_729_885_849_400_2;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Arguments at or above this use the Stirling series directly.
const STIRLING_MIN: f64 = 10.0;

/// B_{2k} / (2k (2k-1)) for k = 1..=8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// (-1)^k ζ(k) / k for k = 2..=30, the Taylor coefficients of ln Γ(1+ε).
#[allow(clippy::excessive_precision)]
const LN_GAMMA_1P_COEFFS: [f64; 29] = [
    0.822_467_033_424_113_2,
    -0.400_685_634_386_531_4,
    0.270_580_808_427_784_55,
    -0.207_385_551_028_673_99,
    0.169_557_176_997_408_19,
    -0.144_049_896_768_846_12,
    0.125_509_669_524_743_04,
    -0.111_334_265_869_564_69,
    0.100_099_457_512_781_81,
    -0.090_954_017_145_829_04,
    0.083_353_840_546_109_00,
    -0.076_932_516_411_352_19,
    0.071_432_946_295_361_34,
    -0.066_668_705_882_420_47,
    0.062_500_955_141_213_04,
    -0.058_823_978_658_684_58,
    0.055_555_767_627_403_61,
    -0.052_631_679_379_616_66,
    0.050_000_047_698_101_69,
    -0.047_619_070_330_142_23,
    0.045_454_556_293_204_67,
    -0.043_478_266_053_040_26,
    0.041_666_669_150_341_21,
    -0.040_000_001_192_140_14,
    0.038_461_539_034_675_19,
    -0.037_037_037_312_989_33,
    0.035_714_285_847_333_36,
    -0.034_482_758_684_919_30,
    0.033_333_333_364_377_58,
];

/// True iff `x` is within [`POLE_TOLERANCE`] of a non-positive integer.
pub fn is_gamma_pole(x: f64) -> bool {
    let r = x.round();
    r <= 0.0 && (x - r).abs() < POLE_TOLERANCE
}

/// True iff `x` is within [`POLE_TOLERANCE`] of any integer.
pub fn is_near_integer(x: f64) -> bool {
    (x - x.round()).abs() < POLE_TOLERANCE
}

/// sin(πx), reduced to sin(πr) with r = x - round(x) before scaling by π.
pub fn sin_pi(x: f64) -> f64 {
    let k = x.round();
    let s = (PI * (x - k)).sin();
    if (k * 0.5).fract() == 0.0 {
        s
    } else {
        -s
    }
}

/// Sign of Γ(x) and ln|Γ(x)|.
///
/// Positive arguments go through a Taylor series around 1 and 2 or an
/// upward shift into the Stirling series; negative arguments use the
/// reflection formula Γ(x)Γ(1-x) = π / sin(πx).
pub fn log_gamma_signed(x: f64) -> Result<SignedLogValue> {
    if !x.is_finite() {
        return Err(Error::NonFinite { name: "x" });
    }
    if is_gamma_pole(x) {
        return Err(Error::Pole { x });
    }
    if x > 0.0 {
        return Ok(SignedLogValue::new(1, ln_gamma_positive(x)));
    }
    let s = sin_pi(x);
    let sign = if s > 0.0 { 1 } else { -1 };
    let log_magnitude = LN_PI - s.abs().ln() - ln_gamma_positive(1.0 - x);
    Ok(SignedLogValue::new(sign, log_magnitude))
}

/// Γ(x) as a plain `f64`. Overflows to infinity past x ≈ 171.6.
pub fn gamma(x: f64) -> Result<f64> {
    log_gamma_signed(x).map(|v| v.to_f64())
}

fn ln_gamma_positive(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if (x - 1.0).abs() <= 0.25 {
        return ln_gamma_1p(x - 1.0);
    }
    if (x - 2.0).abs() <= 0.25 {
        let eps = x - 2.0;
        return eps.ln_1p() + ln_gamma_1p(eps);
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    // ln Γ(x) = ln Γ(x + k) - ln(x (x+1) ... (x+k-1))
    let shift = (STIRLING_MIN - x).ceil() as usize;
    let shifted = x + shift as f64;
    stirling(shifted) - product_signed_log((0..shift).map(|i| x + i as f64)).log_magnitude()
}

fn ln_gamma_1p(eps: f64) -> f64 {
    let tail = LN_GAMMA_1P_COEFFS
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * eps + c);
    eps * (-EULER_GAMMA + eps * tail)
}

fn stirling(z: f64) -> f64 {
    let w = 1.0 / (z * z);
    let series = STIRLING_COEFFS.iter().rev().fold(0.0, |acc, &c| acc * w + c) / z;
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series
}

/// Product of the factors in signed-log form. The running mantissa is folded
/// into the log accumulator whenever it leaves [1e-150, 1e150], so the result
/// carries only the rounding of the individual multiplications.
pub(crate) fn product_signed_log<I>(factors: I) -> SignedLogValue
where
    I: IntoIterator<Item = f64>,
{
    let mut sign = 1i8;
    let mut mantissa = 1.0f64;
    let mut log = 0.0f64;
    for f in factors {
        if f == 0.0 {
            return SignedLogValue::ZERO;
        }
        if f < 0.0 {
            sign = -sign;
        }
        mantissa *= f.abs();
        if !(1e-150..=1e150).contains(&mantissa) {
            log += mantissa.ln();
            mantissa = 1.0;
        }
    }
    SignedLogValue::new(sign, log + mantissa.ln())
}

/// Rising factorial (x)_m = x (x+1) ... (x+m-1), by direct multiplication.
pub fn pochhammer(x: f64, m: usize) -> SignedLogValue {
    product_signed_log((0..m).map(|i| x + i as f64))
}

/// (x)_n = Γ(x+n)/Γ(x) for any integer n. For n < 0 this is
/// 1 / ((x+n)(x+n+1) ... (x-1)).
pub fn pochhammer_signed_n(x: f64, n: i64) -> Result<SignedLogValue> {
    if n >= 0 {
        return Ok(pochhammer(x, n as usize));
    }
    let factors: Vec<f64> = (1..=n.unsigned_abs()).map(|k| x - k as f64).collect();
    if let Some(&zero) = factors.iter().find(|f| f.abs() < POLE_TOLERANCE) {
        return Err(Error::ZeroDivisor { x: zero, n });
    }
    let denominator = product_signed_log(factors);
    Ok(denominator.recip().expect("denominator factors are non-zero"))
}
