//! The gamma ratio Γ(a+n)Γ(b+n) / (Γ(c+n)Γ(a+b-c+n)), its two truncated
//! asymptotic series, the unnormalised gamma-sum form, and the closed form
//! the series sum to when they converge.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, GammaArg, Result, SineFactor};
use crate::gamma::{is_gamma_pole, is_near_integer, log_gamma_signed, pochhammer, sin_pi};
use crate::params::{EvalPoint, ParamSet};
use crate::signed_log::SignedLogValue;

/// Which of the two complementary series.
///
/// `E4` has terms (c-a)_m (c-b)_m / (m! (1+c-a-b-n)_m); `E5` is the same
/// series with c replaced by a+b-c, i.e. (a-c)_m (b-c)_m / (m! (1-c-n)_m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    E4,
    E5,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::E4, Variant::E5];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::E4 => "e4",
            Variant::E5 => "e5",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "e4" => Ok(Variant::E4),
            "e5" => Ok(Variant::E5),
            other => Err(format!("unknown variant '{other}' (expected e4 or e5)")),
        }
    }
}

/// A truncated series together with its terms.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumResult {
    /// Sum of `terms`, accumulated left to right.
    pub value: f64,
    /// Terms m = 0..=M; term 0 is the leading 1.
    pub terms: Vec<f64>,
    pub truncation_order: usize,
    /// argmin over m >= 1 of |term_m|, first index on ties; 0 when M = 0.
    pub smallest_term_index: usize,
    /// |term_M| > |term_{M-1}|.
    pub diverging_tail: bool,
}

impl PartialSumResult {
    fn from_terms(terms: Vec<f64>) -> Self {
        let truncation_order = terms.len() - 1;
        let value = terms.iter().sum();
        let smallest_term_index = smallest_index(&terms);
        let diverging_tail =
            truncation_order >= 1 && terms[truncation_order].abs() > terms[truncation_order - 1].abs();
        PartialSumResult {
            value,
            terms,
            truncation_order,
            smallest_term_index,
            diverging_tail,
        }
    }

    /// Partial sum over terms 0..=m.
    pub fn value_at(&self, m: usize) -> f64 {
        self.terms[..=m.min(self.truncation_order)].iter().sum()
    }
}

fn smallest_index(terms: &[f64]) -> usize {
    let mut best = 0;
    for (m, t) in terms.iter().enumerate().skip(1) {
        if best == 0 || t.abs() < terms[best].abs() {
            best = m;
        }
    }
    best
}

fn gamma_at(x: f64, arg: GammaArg) -> Result<SignedLogValue> {
    log_gamma_signed(x).map_err(|e| match e {
        Error::Pole { x } => Error::RatioPole { arg, x },
        other => other,
    })
}

fn ratio_signed_log(pt: &EvalPoint) -> Result<SignedLogValue> {
    let p = pt.params;
    let n = pt.n();
    let ga = gamma_at(p.a() + n, GammaArg::APlusN)?;
    let gb = gamma_at(p.b() + n, GammaArg::BPlusN)?;
    let gc = gamma_at(p.c() + n, GammaArg::CPlusN)?;
    let gd = gamma_at(p.d() + n, GammaArg::DPlusN)?;
    Ok(ga * gb / (gc * gd))
}

/// Γ(a+n)Γ(b+n) / (Γ(c+n)Γ(a+b-c+n)), evaluated in signed-log form.
pub fn exact_ratio(pt: &EvalPoint) -> Result<f64> {
    ratio_signed_log(pt).map(|v| v.to_f64())
}

/// Terms of 1 + Σ (c-a)_m (c-b)_m / (m! (1+c-a-b-n)_m), m = 1..=M.
fn series_terms(p: &ParamSet, n: f64, order: usize) -> Result<Vec<f64>> {
    let first = p.c() - p.a();
    let second = p.c() - p.b();
    // 1 + c - a - b - n, grouped so that it is symmetric in a and b
    let lower = 1.0 - p.d() - n;
    // (lower)_m vanishes from m = 1 - lower onwards when lower is a
    // non-positive integer.
    if is_gamma_pole(lower) {
        let m = (1.0 - lower.round()) as usize;
        if m <= order {
            return Err(Error::TermPole {
                m,
                x: lower + (m - 1) as f64,
            });
        }
    }
    let mut terms = Vec::with_capacity(order + 1);
    terms.push(1.0);
    for m in 1..=order {
        let term = pochhammer(first, m) * pochhammer(second, m)
            / (pochhammer(1.0, m) * pochhammer(lower, m));
        terms.push(term.to_f64());
    }
    Ok(terms)
}

/// Right-hand side of the expansion in (c-a), (c-b) truncated after m = M.
pub fn partial_sum_e4(pt: &EvalPoint, order: usize) -> Result<PartialSumResult> {
    series_terms(&pt.params, pt.n(), order).map(PartialSumResult::from_terms)
}

/// Right-hand side of the expansion in (a-c), (b-c) truncated after m = M.
/// Evaluated as the e4 series at c -> a+b-c.
pub fn partial_sum_e5(pt: &EvalPoint, order: usize) -> Result<PartialSumResult> {
    partial_sum_e4(&pt.with_params(pt.params.substituted()), order)
}

pub fn partial_sum(pt: &EvalPoint, variant: Variant, order: usize) -> Result<PartialSumResult> {
    match variant {
        Variant::E4 => partial_sum_e4(pt, order),
        Variant::E5 => partial_sum_e5(pt, order),
    }
}

/// Σ_{m=0}^{M} (-1)^m (c-a)_m (c-b)_m / m! · Γ(a+b-c-m+n), unnormalised.
///
/// Dividing by Γ(a+b-c+n) gives the e4 partial sum of the same order.
pub fn partial_sum_e3(pt: &EvalPoint, order: usize) -> Result<SignedLogValue> {
    let p = pt.params;
    let base = p.d() + pt.n();
    let mut terms = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let x = base - m as f64;
        if is_gamma_pole(x) {
            return Err(Error::ShiftedPole { m, x });
        }
        let g = log_gamma_signed(x)?;
        let coeff = pochhammer(p.c() - p.a(), m) * pochhammer(p.c() - p.b(), m)
            / pochhammer(1.0, m);
        let term = coeff * g;
        terms.push(if m % 2 == 1 { term.neg() } else { term });
    }
    Ok(SignedLogValue::sum(terms))
}

/// The value the series converge to when they converge:
/// ratio · sin(π[a+n]) sin(π[b+n]) / (sin(π[c+n]) sin(π[a+b-c+n])).
pub fn gauss_limit_e6(pt: &EvalPoint) -> Result<f64> {
    let ratio = ratio_signed_log(pt)?;
    let p = pt.params;
    let n = pt.n();
    if is_near_integer(p.c() + n) {
        return Err(Error::SineZero {
            factor: SineFactor::CPlusN,
        });
    }
    if is_near_integer(p.d() + n) {
        return Err(Error::SineZero {
            factor: SineFactor::DPlusN,
        });
    }
    let sines = SignedLogValue::from(sin_pi(p.a() + n)) * SignedLogValue::from(sin_pi(p.b() + n))
        / (SignedLogValue::from(sin_pi(p.c() + n)) * SignedLogValue::from(sin_pi(p.d() + n)));
    Ok((ratio * sines).to_f64())
}

/// Result of smallest-term truncation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalTruncation {
    pub order: usize,
    pub value: f64,
}

/// Smallest-term truncation: picks the order M in 1..=max_order whose first
/// omitted term |term_{M+1}| is smallest (first on ties), i.e. the series is
/// cut just before its smallest term.
pub fn optimal_truncation(
    pt: &EvalPoint,
    variant: Variant,
    max_order: usize,
) -> Result<OptimalTruncation> {
    let max_order = max_order.max(1);
    let sum = partial_sum(pt, variant, max_order + 1)?;
    let mut order = 1;
    for m in 2..=max_order {
        if sum.terms[m + 1].abs() < sum.terms[order + 1].abs() {
            order = m;
        }
    }
    Ok(OptimalTruncation {
        order,
        value: sum.value_at(order),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(a: f64, b: f64, c: f64, n: f64) -> EvalPoint {
        EvalPoint::from_parts(a, b, c, n).unwrap()
    }

    fn rel(x: f64, y: f64) -> f64 {
        (x - y).abs() / y.abs()
    }

    #[test]
    fn exact_ratio_table_values() {
        assert!((exact_ratio(&pt(0.7, 1.2, 0.4, 10.0)).unwrap() - 0.97729983).abs() < 5e-9);
        assert!((exact_ratio(&pt(-11.7, -11.2, -11.4, 20.0)).unwrap() - 1.00747290).abs() < 5e-9);
        assert!((exact_ratio(&pt(11.7, 11.2, 11.4, -15.0)).unwrap() - 1.97071532).abs() < 5e-9);
        assert_eq!(exact_ratio(&pt(2.3, -4.1, 2.3, 6.5)).unwrap(), 1.0);
    }

    #[test]
    fn exact_ratio_names_the_pole() {
        let err = exact_ratio(&pt(0.5, 1.0, 0.25, -3.0)).unwrap_err();
        assert_eq!(err, Error::RatioPole { arg: GammaArg::BPlusN, x: -2.0 });
        let err = exact_ratio(&pt(0.5, 0.75, 2.0, -5.0)).unwrap_err();
        assert!(matches!(err, Error::RatioPole { arg: GammaArg::CPlusN, .. }));
    }

    #[test]
    fn e4_table_rows() {
        let t1 = pt(0.7, 1.2, 0.4, 10.0);
        assert!((partial_sum_e4(&t1, 1).unwrap().value - 0.9771429).abs() < 5e-8);
        assert!((partial_sum_e4(&t1, 5).unwrap().value - 0.9772995).abs() < 5e-8);
        let t2 = pt(-0.7, -1.2, -0.4, 10.0);
        let blow_up = partial_sum_e4(&t2, 10).unwrap();
        assert!((blow_up.value - 26.430946).abs() < 5e-7);
        assert!(blow_up.diverging_tail);
        assert_eq!(blow_up.terms.len(), 11);
        assert_eq!(blow_up.smallest_term_index, 4);
    }

    #[test]
    fn e5_table_rows() {
        let t1 = pt(0.7, 1.2, 0.4, 10.0);
        assert!((partial_sum_e5(&t1, 1).unwrap().value - 0.9744681).abs() < 5e-8);
        let t2 = pt(-0.7, -1.2, -0.4, 10.0);
        assert!((partial_sum_e5(&t2, 6).unwrap().value - 0.972330).abs() < 5e-7);
    }

    #[test]
    fn zeroth_order_is_one() {
        let p = pt(0.7, 1.2, 0.4, 10.0);
        for v in Variant::ALL {
            let s = partial_sum(&p, v, 0).unwrap();
            assert_eq!(s.value, 1.0);
            assert_eq!(s.terms, vec![1.0]);
            assert!(!s.diverging_tail);
        }
    }

    #[test]
    fn equal_a_and_c_collapse_to_one() {
        let p = pt(0.35, -2.6, 0.35, 7.5);
        let e4 = partial_sum_e4(&p, 12).unwrap();
        assert_eq!(e4.value, 1.0);
        assert!(e4.terms[1..].iter().all(|&t| t == 0.0));
        // with c = a, e5 is e4 at c = b
        let e5 = partial_sum_e5(&p, 12).unwrap();
        let swapped = partial_sum_e4(&pt(0.35, -2.6, -2.6, 7.5), 12).unwrap();
        assert_eq!(e5.terms, swapped.terms);
        let best = optimal_truncation(&p, Variant::E4, 10).unwrap();
        assert_eq!(best, OptimalTruncation { order: 1, value: 1.0 });
        assert!((gauss_limit_e6(&p).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn term_pole_is_reported() {
        // 1 + c - a - b - n = -3, so (.)_m vanishes from m = 4
        let p = pt(0.5, 0.5, 0.0, 3.0);
        assert!(partial_sum_e4(&p, 3).is_ok());
        assert_eq!(
            partial_sum_e4(&p, 4).unwrap_err(),
            Error::TermPole { m: 4, x: 0.0 }
        );
        // 1 - c - n = -2 for e5
        let p = pt(0.25, 0.5, 0.0, 3.0);
        assert!(matches!(partial_sum_e5(&p, 5), Err(Error::TermPole { m: 3, .. })));
    }

    #[test]
    fn e3_leading_term_is_gamma() {
        let p = pt(0.7, 1.2, 0.4, 10.0);
        let got = partial_sum_e3(&p, 0).unwrap();
        let want = log_gamma_signed(p.params.d() + 10.0).unwrap();
        assert_eq!(got, want);
        let normalised = (partial_sum_e3(&p, 5).unwrap() / want).to_f64();
        assert!((normalised - 0.9772995).abs() < 5e-8);
    }

    #[test]
    fn e3_pole() {
        // d + n - m = 0 at m = 3
        let p = pt(1.0, 1.0, 2.0, 3.0);
        assert!(matches!(partial_sum_e3(&p, 5), Err(Error::ShiftedPole { m: 3, .. })));
    }

    #[test]
    fn gauss_limit_table_values() {
        let t3 = gauss_limit_e6(&pt(-11.7, -11.2, -11.4, 10.0)).unwrap();
        assert!((t3 - 0.97022640).abs() < 5e-9);
        let t4 = gauss_limit_e6(&pt(11.7, 11.2, 11.4, -5.0)).unwrap();
        assert!((t4 - 0.50505719).abs() < 5e-9);
    }

    #[test]
    fn gauss_limit_sine_zero() {
        assert_eq!(
            gauss_limit_e6(&pt(0.5, 0.25, 2.0, 1.0)).unwrap_err(),
            Error::SineZero { factor: SineFactor::CPlusN }
        );
        assert_eq!(
            gauss_limit_e6(&pt(0.5, 0.75, 0.25, 2.0)).unwrap_err(),
            Error::SineZero { factor: SineFactor::DPlusN }
        );
    }

    #[test]
    fn optimal_truncation_hits_marked_rows() {
        let t1 = pt(0.7, 1.2, 0.4, 10.0);
        let best = optimal_truncation(&t1, Variant::E4, 10).unwrap();
        assert!([5, 6].contains(&best.order), "{best:?}");
        assert_eq!(best.value, partial_sum_e4(&t1, best.order).unwrap().value);
        let t2 = pt(-0.7, -1.2, -0.4, 10.0);
        let best = optimal_truncation(&t2, Variant::E5, 10).unwrap();
        assert!([5, 6].contains(&best.order), "{best:?}");
    }

    #[test]
    fn decay_ratio_is_close_to_power_law() {
        let err = |m, n| {
            let p = pt(0.3, 0.9, 0.5, n);
            (partial_sum_e4(&p, m).unwrap().value - exact_ratio(&p).unwrap()).abs()
        };
        for m in 1..=3 {
            let ratio = err(m, 160.0) / err(m, 80.0);
            let predicted = 2f64.powi(-(m as i32 + 1));
            assert!((ratio / predicted - 1.0).abs() < 0.5, "M={m}: {ratio}");
        }
    }

    fn param() -> impl Strategy<Value = f64> {
        -5.0f64..5.0
    }

    proptest! {
        #[test]
        fn e5_is_e4_with_substituted_c(a in param(), b in param(), c in param(), n in 10.0f64..50.0, m in 0usize..12) {
            let p = pt(a, b, c, n);
            let sub = pt(a, b, a + b - c, n);
            if let (Ok(x), Ok(y)) = (partial_sum_e5(&p, m), partial_sum_e4(&sub, m)) {
                prop_assert_eq!(x.terms, y.terms);
            }
        }

        #[test]
        fn symmetric_in_a_and_b(a in param(), b in param(), c in param(), n in -20.0f64..50.0, m in 0usize..12) {
            let p = pt(a, b, c, n);
            let q = pt(b, a, c, n);
            for v in Variant::ALL {
                if let (Ok(x), Ok(y)) = (partial_sum(&p, v, m), partial_sum(&q, v, m)) {
                    prop_assert!((x.value - y.value).abs() <= 1e-14 * x.value.abs().max(1.0));
                }
            }
            if let (Ok(x), Ok(y)) = (exact_ratio(&p), exact_ratio(&q)) {
                prop_assert!(rel(x, y) <= 1e-14);
            }
        }

        #[test]
        fn e3_normalises_to_e4(a in param(), b in param(), c in param(), n in 20.0f64..60.0, m in 0usize..10) {
            let p = pt(a, b, c, n);
            let e3 = partial_sum_e3(&p, m).unwrap();
            let g = log_gamma_signed(p.params.d() + n).unwrap();
            let e4 = partial_sum_e4(&p, m).unwrap().value;
            prop_assert!(rel((e3 / g).to_f64(), e4) <= 1e-12);
        }

        #[test]
        fn partial_sum_bookkeeping(a in param(), b in param(), c in param(), n in -20.0f64..50.0, m in 0usize..15) {
            if let Ok(s) = partial_sum_e4(&pt(a, b, c, n), m) {
                prop_assert_eq!(s.terms.len(), m + 1);
                prop_assert_eq!(s.truncation_order, m);
                let abs_sum: f64 = s.terms.iter().map(|t| t.abs()).sum();
                let sum: f64 = s.terms.iter().sum();
                prop_assert!((s.value - sum).abs() <= 1e-14 * abs_sum);
                if m >= 1 {
                    let k = s.smallest_term_index;
                    prop_assert!(s.terms[1..].iter().all(|t| t.abs() >= s.terms[k].abs()));
                    prop_assert!(s.terms[1..k].iter().all(|t| t.abs() > s.terms[k].abs()));
                }
            }
        }
    }
}
