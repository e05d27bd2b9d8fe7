//! Ratios of gamma functions Γ(a+n)Γ(b+n) / (Γ(c+n)Γ(a+b-c+n)) and their
//! asymptotic expansions in the large parameter n.
//!
//! The ratio admits two complementary expansions,
//!
//! ```text
//! 1 + Σ_{m>=1} (c-a)_m (c-b)_m / (m! (1+c-a-b-n)_m)      (e4)
//! 1 + Σ_{m>=1} (a-c)_m (b-c)_m / (m! (1-c-n)_m)          (e5)
//! ```
//!
//! which are divergent asymptotic series for n to the right of a transition
//! line and convergent series for a different function to its left. This
//! crate evaluates the ratio and both series, classifies points by region,
//! and carries the golden tables and property suites that check them.
//!
//! ```
//! use gamma_ratio::{exact_ratio, partial_sum_e4, EvalPoint};
//!
//! let pt = EvalPoint::from_parts(0.7, 1.2, 0.4, 10.0).unwrap();
//! let sum = partial_sum_e4(&pt, 5).unwrap();
//! assert!((sum.value - exact_ratio(&pt).unwrap()).abs() < 1e-6);
//! ```

pub mod error;
pub mod expansion;
pub mod gamma;
pub mod params;
pub mod regions;
pub mod signed_log;
pub mod verify;

pub use error::{Error, GammaArg, Result, SineFactor};
pub use expansion::{
    exact_ratio, gauss_limit_e6, optimal_truncation, partial_sum, partial_sum_e3, partial_sum_e4,
    partial_sum_e5, OptimalTruncation, PartialSumResult, Variant,
};
pub use gamma::{gamma, is_gamma_pole, log_gamma_signed, pochhammer, pochhammer_signed_n, sin_pi, POLE_TOLERANCE};
pub use params::{EvalPoint, ParamSet};
pub use regions::{classify, transition_line, transition_line_e4, transition_line_e5, RegionReport, Represented};
pub use signed_log::SignedLogValue;
