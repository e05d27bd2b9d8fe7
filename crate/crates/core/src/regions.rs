//! Which half-plane of n a point lies in, for each series.
//!
//! The e4 series converges for n < 1 - c and is an asymptotic expansion of
//! the gamma ratio for n >= 1 - c; e5 has its line at n = 1 + c - a - b. On
//! the convergent side the series sum to the sine-weighted closed form, not
//! to the ratio.

use std::fmt;

use crate::expansion::Variant;
use crate::gamma::POLE_TOLERANCE;
use crate::params::{EvalPoint, ParamSet};

/// Distance from the transition line that counts as lying on it.
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Represented {
    /// The series is an asymptotic expansion of the gamma ratio.
    LhsRatio,
    /// The series converges to the closed form with sine factors.
    Eq6Limit,
    /// n lies on the transition line.
    Boundary,
}

impl Represented {
    pub fn name(&self) -> &'static str {
        match self {
            Represented::LhsRatio => "lhs_ratio",
            Represented::Eq6Limit => "eq6_limit",
            Represented::Boundary => "boundary",
        }
    }
}

impl fmt::Display for Represented {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionReport {
    pub variant: Variant,
    pub series_convergent: bool,
    pub expansion_valid: bool,
    pub transition_n: f64,
    pub represented_value: Represented,
    /// c-a or c-b is an integer; the convergent sum may then coincide with
    /// the ratio.
    pub is_degenerate_coincidence: bool,
}

/// n = 1 - c
pub fn transition_line_e4(p: &ParamSet) -> f64 {
    1.0 - p.c()
}

/// n = 1 + c - a - b
pub fn transition_line_e5(p: &ParamSet) -> f64 {
    transition_line_e4(&p.substituted())
}

pub fn transition_line(p: &ParamSet, variant: Variant) -> f64 {
    match variant {
        Variant::E4 => transition_line_e4(p),
        Variant::E5 => transition_line_e5(p),
    }
}

fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() < POLE_TOLERANCE
}

pub fn classify(pt: &EvalPoint, variant: Variant) -> RegionReport {
    let p = match variant {
        Variant::E4 => pt.params,
        Variant::E5 => pt.params.substituted(),
    };
    let transition_n = transition_line_e4(&p);
    let n = pt.n();
    let represented_value = if (n - transition_n).abs() <= BOUNDARY_TOLERANCE {
        Represented::Boundary
    } else if n > transition_n {
        Represented::LhsRatio
    } else {
        Represented::Eq6Limit
    };
    let series_convergent = represented_value == Represented::Eq6Limit;
    RegionReport {
        variant,
        series_convergent,
        expansion_valid: !series_convergent,
        transition_n,
        represented_value,
        is_degenerate_coincidence: near_integer(p.c() - p.a()) || near_integer(p.c() - p.b()),
    }
}
