//! Independent checks: a Pochhammer-product route to the gamma ratio, the
//! golden tables, and the property suites.

pub mod fixtures;
pub mod suite;
pub mod tables;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::expansion::exact_ratio;
use crate::gamma::{log_gamma_signed, pochhammer_signed_n};
use crate::params::EvalPoint;

pub use fixtures::{Fixture, FixtureError, FixtureRow, FixtureSource, TableId, TableSpec, FIXTURE_DIR_ENV};
pub use suite::{run_suite, CheckResult, Suite, SuiteOptions, SuiteReport};
pub use tables::{compare, format_fixed, reproduce_table, Mismatch, ReproducedTable, TableComparison, TableRow};

/// The gamma ratio for integer n as
/// [(a)_n (b)_n / ((c)_n (d)_n)] · [Γ(a)Γ(b) / (Γ(c)Γ(d))].
///
/// Only the base parameters go through log-gamma; the n-dependence is pure
/// products, so this shares no large-argument gamma evaluation with
/// [`exact_ratio`].
pub fn oracle_ratio_pochhammer(pt: &EvalPoint) -> Result<f64> {
    let n = pt.n();
    if n.fract() != 0.0 {
        return Err(Error::NotInteger { name: "n", value: n });
    }
    let n = n as i64;
    let p = pt.params;
    let numerator = pochhammer_signed_n(p.a(), n)?
        * pochhammer_signed_n(p.b(), n)?
        * log_gamma_signed(p.a())?
        * log_gamma_signed(p.b())?;
    let denominator = pochhammer_signed_n(p.c(), n)?
        * pochhammer_signed_n(p.d(), n)?
        * log_gamma_signed(p.c())?
        * log_gamma_signed(p.d())?;
    if denominator.is_zero() {
        return Err(Error::ZeroDivisor { x: 0.0, n });
    }
    Ok((numerator / denominator).to_f64())
}

/// Deterministic sample of points with a, b, c uniform in [-5, 5] and integer
/// n uniform in [-20, 40], keeping only those where both ratio routes are
/// defined.
pub fn random_oracle_points(count: usize, seed: u64) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let a = rng.random_range(-5.0..=5.0);
        let b = rng.random_range(-5.0..=5.0);
        let c = rng.random_range(-5.0..=5.0);
        let n = f64::from(rng.random_range(-20i32..=40));
        let Ok(pt) = EvalPoint::from_parts(a, b, c, n) else {
            continue;
        };
        if exact_ratio(&pt).is_ok() && oracle_ratio_pochhammer(&pt).is_ok() {
            points.push(pt);
        }
    }
    points
}

/// |x - y| / |y|, or |x - y| when y is zero.
pub fn relative_error(x: f64, y: f64) -> f64 {
    let diff = (x - y).abs();
    if y == 0.0 {
        diff
    } else {
        diff / y.abs()
    }
}
