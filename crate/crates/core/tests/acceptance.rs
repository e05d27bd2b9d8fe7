//! Acceptance criteria. Each test prints one PASS/FAIL line.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use gamma_ratio::gamma::is_near_integer;
use gamma_ratio::verify::suite::{decay_error, DEFAULT_SEED};
use gamma_ratio::verify::{
    compare, oracle_ratio_pochhammer, random_oracle_points, relative_error, reproduce_table,
    FixtureSource, TableId,
};
use gamma_ratio::{
    exact_ratio, gamma, gauss_limit_e6, is_gamma_pole, log_gamma_signed, partial_sum,
    partial_sum_e3, partial_sum_e4, partial_sum_e5, transition_line_e4, transition_line_e5,
    EvalPoint, ParamSet, SignedLogValue, Variant,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: &str, passed: bool, detail: String) {
    println!("[{}] {id}: {detail}", if passed { "PASS" } else { "FAIL" });
    assert!(passed, "{id} failed: {detail}");
}

const TABLE_RUNTIME: Duration = Duration::from_secs(1);
const EXACT_TOLERANCE: f64 = 5e-9;

fn table_criterion(id: &str, tables: &[TableId]) {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut entries = 0;
    let mut worst_exact = 0.0f64;
    for &t in tables {
        let fixture = FixtureSource::Embedded.load(t).unwrap();
        let table = reproduce_table(&fixture.spec).unwrap();
        let cmp = compare(&fixture, &table);
        entries += cmp.entries_checked;
        mismatches.extend(cmp.mismatches.iter().map(|m| format!("{t} {}", m.field)));
        worst_exact = worst_exact.max(cmp.max_exact_deviation);
        let exact = (table.exact_lhs - fixture.spec.exact_lhs).abs();
        let eq6 = match (table.exact_eq6, fixture.spec.exact_eq6) {
            (Some(x), Some(y)) => (x - y).abs(),
            (None, None) => 0.0,
            _ => f64::INFINITY,
        };
        worst_exact = worst_exact.max(exact).max(eq6);
    }
    let elapsed = start.elapsed();
    report(
        id,
        mismatches.is_empty() && worst_exact <= EXACT_TOLERANCE && elapsed < TABLE_RUNTIME,
        format!(
            "{entries} entries, mismatches {mismatches:?}, max exact deviation {worst_exact:.2e} (tol {EXACT_TOLERANCE:.0e}), {elapsed:?}"
        ),
    );
}

#[test]
fn ac01_table_1() {
    table_criterion("AC1 table 1 (a=0.7, b=1.2, c=0.4, n=10)", &[TableId::T1]);
}

#[test]
fn ac02_table_2() {
    table_criterion("AC2 table 2 (a=-0.7, b=-1.2, c=-0.4, n=10)", &[TableId::T2]);
}

#[test]
fn ac03_table_3() {
    table_criterion("AC3 table 3 (a=-11.7, b=-11.2, c=-11.4, n=10,20)", &[TableId::T3a, TableId::T3b]);
}

#[test]
fn ac04_table_4() {
    table_criterion("AC4 table 4 (a=11.7, b=11.2, c=11.4, n=-15,-5)", &[TableId::T4a, TableId::T4b]);
}

#[test]
fn ac05_transition_lines() {
    let t3 = ParamSet::new(-11.7, -11.2, -11.4).unwrap();
    let t4 = ParamSet::new(11.7, 11.2, 11.4).unwrap();
    let cases = [
        (transition_line_e4(&t3), 12.4),
        (transition_line_e4(&t4), -10.4),
        (transition_line_e5(&t3), 12.5),
        (transition_line_e5(&t4), -10.5),
    ];
    let worst = cases.iter().map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    report(
        "AC5 transition lines",
        worst <= 1e-12,
        format!("{cases:?}, max deviation {worst:.1e} (tol 1e-12)"),
    );
}

#[test]
fn ac06_convergent_limit() {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut ok = true;
    for (a, b, c, n) in [(-11.7, -11.2, -11.4, 10.0), (11.7, 11.2, 11.4, -15.0)] {
        let pt = EvalPoint::from_parts(a, b, c, n).unwrap();
        let limit = gauss_limit_e6(&pt).unwrap();
        let exact = exact_ratio(&pt).unwrap();
        for v in Variant::ALL {
            let sum = partial_sum(&pt, v, 200).unwrap().value;
            let dev = relative_error(sum, limit);
            let factor = exact / sum;
            ok &= dev <= 1e-6 && (factor - 2.0).abs() <= 1e-3;
            lines.push(format!("n={n} {v}: rel dev {dev:.1e}, ratio/sum {factor:.6}"));
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    report(
        "AC6 convergent-region limit (M=200, tol 1e-6, factor 2 +- 1e-3)",
        ok,
        format!("{} ; {elapsed:?}", lines.join("; ")),
    );
}

#[test]
fn ac07_oracle_equivalence() {
    let points = random_oracle_points(1000, DEFAULT_SEED);
    let mut failures = 0;
    let mut worst = 0.0f64;
    for pt in &points {
        let err = relative_error(exact_ratio(pt).unwrap(), oracle_ratio_pochhammer(pt).unwrap());
        worst = worst.max(err);
        // NaN counts as a failure
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(err <= 1e-10) {
            failures += 1;
        }
    }
    report(
        "AC7 oracle equivalence",
        points.len() == 1000 && failures == 0,
        format!("{} points, {failures} failures, max rel err {worst:.2e} (tol 1e-10)", points.len()),
    );
}

#[test]
fn ac08_error_decay() {
    let mut ok = true;
    let mut lines = Vec::new();
    for m in 1..=3 {
        let e40 = decay_error(m, 40.0).unwrap();
        let e80 = decay_error(m, 80.0).unwrap();
        let predicted = 2f64.powi(-(m as i32 + 1));
        let factor = (e80 / e40) / predicted;
        ok &= (1.0 / 1.5..=1.5).contains(&factor);
        lines.push(format!("M={m}: E(80)/E(40) = {:.5} vs {predicted}", e80 / e40));
    }
    report("AC8 error decay (within factor 1.5)", ok, lines.join("; "));
}

#[test]
fn ac09_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);

    let mut collapse_ok = true;
    for _ in 0..100 {
        let a = rng.random_range(-5.0..5.0);
        let b = rng.random_range(-5.0..5.0);
        let n = rng.random_range(-20.0..40.0);
        let pt = EvalPoint::from_parts(a, b, a, n).unwrap();
        for m in 0..=10 {
            if let Ok(s) = partial_sum_e4(&pt, m) {
                collapse_ok &= s.value == 1.0;
            }
        }
    }

    let mut e3_worst = 0.0f64;
    let mut e3_count = 0;
    while e3_count < 100 {
        let a = rng.random_range(-5.0..5.0);
        let b = rng.random_range(-5.0..5.0);
        let c = rng.random_range(-5.0..5.0);
        let n = rng.random_range(20.0..60.0);
        let m = rng.random_range(0..=10);
        let pt = EvalPoint::from_parts(a, b, c, n).unwrap();
        let (Ok(e3), Ok(g), Ok(e4)) = (
            partial_sum_e3(&pt, m),
            log_gamma_signed(pt.params.d() + n),
            partial_sum_e4(&pt, m),
        ) else {
            continue;
        };
        e3_worst = e3_worst.max(relative_error((e3 / g).to_f64(), e4.value));
        e3_count += 1;
    }

    let mut sub_worst = 0.0f64;
    for _ in 0..100 {
        let a = rng.random_range(-5.0..5.0);
        let b = rng.random_range(-5.0..5.0);
        let c = rng.random_range(-5.0..5.0);
        let n = rng.random_range(-20.0..40.0);
        let m = rng.random_range(0..=10);
        let pt = EvalPoint::from_parts(a, b, c, n).unwrap();
        let sub = EvalPoint::from_parts(a, b, a + b - c, n).unwrap();
        if let (Ok(x), Ok(y)) = (partial_sum_e5(&pt, m), partial_sum_e4(&sub, m)) {
            for (s, t) in x.terms.iter().zip(&y.terms) {
                sub_worst = sub_worst.max(relative_error(*s, *t));
            }
        }
    }

    report(
        "AC9 identities",
        collapse_ok && e3_worst <= 1e-12 && sub_worst <= 1e-14,
        format!(
            "c=a sums all 1: {collapse_ok}; e3/e4 max rel {e3_worst:.1e} (tol 1e-12); e5 vs substituted e4 max rel {sub_worst:.1e} (tol 1e-14)"
        ),
    );
}

#[test]
fn ac10_gamma_core() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut recurrence_worst = 0.0f64;
    let mut reflection_worst = 0.0f64;
    let mut sampled = 0;
    while sampled < 10_000 {
        let x: f64 = rng.random_range(-30.0..30.0);
        if is_gamma_pole(x) || is_gamma_pole(x + 1.0) || is_near_integer(x) {
            continue;
        }
        sampled += 1;
        let next = log_gamma_signed(x + 1.0).unwrap();
        let scaled = log_gamma_signed(x).unwrap() * SignedLogValue::from(x);
        let rec = if next.sign() == scaled.sign() {
            ((next.log_magnitude() - scaled.log_magnitude()).exp() - 1.0).abs()
        } else {
            f64::INFINITY
        };
        recurrence_worst = recurrence_worst.max(rec);

        let prod = log_gamma_signed(x).unwrap()
            * log_gamma_signed(1.0 - x).unwrap()
            * SignedLogValue::from(gamma_ratio::sin_pi(x) / PI);
        reflection_worst = reflection_worst.max((prod.to_f64() - 1.0).abs());
    }
    let half = relative_error(gamma(0.5).unwrap(), PI.sqrt());
    report(
        "AC10 gamma core",
        recurrence_worst <= 1e-11 && reflection_worst <= 1e-10 && half <= 1e-13,
        format!(
            "{sampled} points: recurrence max rel {recurrence_worst:.1e} (tol 1e-11), reflection max rel {reflection_worst:.1e} (tol 1e-10), Γ(0.5) rel {half:.1e} (tol 1e-13)"
        ),
    );
}
