use std::fmt::Write as _;

use gamma_ratio::verify::{
    compare, format_fixed, reproduce_table, run_suite, CheckResult, FixtureSource, Suite,
    SuiteOptions, TableId,
};
use gamma_ratio::{
    classify, exact_ratio, gauss_limit_e6, partial_sum, Error, EvalPoint, PartialSumResult,
    RegionReport, Represented, Variant,
};

use crate::record::Record;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_FIXTURE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Decimals used for exact values and partial sums in text mode.
const TEXT_EXACT_DECIMALS: usize = 8;
const TEXT_SUM_DECIMALS: usize = 7;

/// What a command produced: records for json/csv, prose for text.
pub struct Output {
    pub records: Vec<Record>,
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn usage(message: String) -> Output {
        Output {
            records: vec![Record::new("error")
                .field("kind", "usage")
                .field("message", message.clone())],
            text: format!("error: {message}\n"),
            exit_code: EXIT_USAGE,
        }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Pole { .. } => "pole",
        Error::RatioPole { .. } => "ratio_pole",
        Error::ZeroDivisor { .. } => "zero_divisor",
        Error::TermPole { .. } => "term_pole",
        Error::ShiftedPole { .. } => "shifted_pole",
        Error::SineZero { .. } => "sine_zero",
        Error::NotInteger { .. } => "not_integer",
        Error::NonFinite { .. } => "non_finite",
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PointArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub n: f64,
    pub order: Option<usize>,
    pub variant: Option<Variant>,
}

impl PointArgs {
    fn variants(&self) -> Vec<Variant> {
        if self.order.is_none() {
            return Vec::new();
        }
        match self.variant {
            Some(v) => vec![v],
            None => Variant::ALL.to_vec(),
        }
    }
}

struct PointEval {
    /// `None` when the command does not evaluate values.
    exact: Option<Result<f64, Error>>,
    sums: Vec<(Variant, Result<PartialSumResult, Error>)>,
    eq6: Option<Result<f64, Error>>,
    regions: [RegionReport; 2],
}

impl PointEval {
    fn new(pt: &EvalPoint, args: &PointArgs, with_values: bool) -> Self {
        let sums = match args.order {
            Some(order) => args
                .variants()
                .into_iter()
                .map(|v| (v, partial_sum(pt, v, order)))
                .collect(),
            None => Vec::new(),
        };
        let (exact, eq6) = if with_values {
            (Some(exact_ratio(pt)), Some(gauss_limit_e6(pt)))
        } else {
            (None, None)
        };
        PointEval {
            exact,
            sums,
            eq6,
            regions: [classify(pt, Variant::E4), classify(pt, Variant::E5)],
        }
    }

    fn sum(&self, v: Variant) -> Option<&PartialSumResult> {
        self.sums
            .iter()
            .find(|(s, _)| *s == v)
            .and_then(|(_, r)| r.as_ref().ok())
    }

    /// Errors that make the point undefined: the ratio or a requested sum.
    fn errors(&self) -> Vec<&Error> {
        let mut errs: Vec<&Error> = self.exact.iter().filter_map(|r| r.as_ref().err()).collect();
        errs.extend(self.sums.iter().filter_map(|(_, r)| r.as_ref().err()));
        errs
    }

    fn flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        for r in &self.regions {
            match r.represented_value {
                Represented::Eq6Limit => flags.push(format!("{}_sums_to_eq6", r.variant)),
                Represented::Boundary => flags.push(format!("{}_on_boundary", r.variant)),
                Represented::LhsRatio => {}
            }
        }
        if self.regions[0].is_degenerate_coincidence {
            flags.push("degenerate_coincidence".to_owned());
        }
        for (v, r) in &self.sums {
            if let Ok(s) = r {
                if s.diverging_tail {
                    flags.push(format!("{v}_diverging_tail"));
                }
            }
        }
        if let Some(Err(e)) = &self.eq6 {
            flags.push(format!("eq6_undefined:{}", error_kind(e)));
        }
        flags
    }
}

fn point_record(command: &str, args: &PointArgs, ev: &PointEval) -> Record {
    let value = |r: &Option<Result<f64, Error>>| r.as_ref().and_then(|r| r.as_ref().ok()).copied();
    let exact = value(&ev.exact);
    let sum_value = |v| ev.sum(v).map(|s| s.value);
    let abs_error = |v| match (sum_value(v), exact) {
        (Some(s), Some(x)) => Some((s - x).abs()),
        _ => None,
    };
    let errors = ev.errors();
    let error = if !errors.is_empty() {
        Some(errors.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))
    } else {
        None
    };
    let [r4, r5] = &ev.regions;
    Record::new("point")
        .field("command", command)
        .field("a", args.a)
        .field("b", args.b)
        .field("c", args.c)
        .field("n", args.n)
        .field("M", args.order)
        .field("variant", args.variant.map(|v| v.name().to_owned()))
        .field("exact", exact)
        .field("e4", sum_value(Variant::E4))
        .field("e5", sum_value(Variant::E5))
        .field("eq6", value(&ev.eq6))
        .field("e4_abs_error", abs_error(Variant::E4))
        .field("e5_abs_error", abs_error(Variant::E5))
        .field("e4_convergent", r4.series_convergent)
        .field("e4_valid", r4.expansion_valid)
        .field("e4_transition_n", r4.transition_n)
        .field("e4_region", r4.represented_value.name())
        .field("e5_convergent", r5.series_convergent)
        .field("e5_valid", r5.expansion_valid)
        .field("e5_transition_n", r5.transition_n)
        .field("e5_region", r5.represented_value.name())
        .field("e4_smallest_term_index", ev.sum(Variant::E4).map(|s| s.smallest_term_index))
        .field("e4_diverging_tail", ev.sum(Variant::E4).map(|s| s.diverging_tail))
        .field("e5_smallest_term_index", ev.sum(Variant::E5).map(|s| s.smallest_term_index))
        .field("e5_diverging_tail", ev.sum(Variant::E5).map(|s| s.diverging_tail))
        .field("flags", ev.flags().join(";"))
        .field("error", error)
}

fn error_record(command: &str, args: &PointArgs, e: &Error) -> Record {
    Record::new("error")
        .field("command", command)
        .field("a", args.a)
        .field("b", args.b)
        .field("c", args.c)
        .field("n", args.n)
        .field("M", args.order)
        .field("kind", error_kind(e))
        .field("message", e.to_string())
}

fn region_line(r: &RegionReport) -> String {
    let line = match r.variant {
        Variant::E4 => "1-c",
        Variant::E5 => "1+c-a-b",
    };
    let what = match r.represented_value {
        Represented::LhsRatio => "divergent; asymptotic expansion of the gamma ratio",
        Represented::Eq6Limit => "convergent; sums to the sine-weighted limit, not the ratio",
        Represented::Boundary => "on the transition line; counted as expansion valid",
    };
    let mut s = format!(
        "{} region       {what} (transition n = {line} = {})",
        r.variant,
        format_fixed(r.transition_n, 6)
    );
    if r.is_degenerate_coincidence {
        s.push_str(" [c-a or c-b is an integer]");
    }
    s
}

pub fn eval(args: PointArgs) -> Output {
    let pt = match EvalPoint::from_parts(args.a, args.b, args.c, args.n) {
        Ok(pt) => pt,
        Err(e) => return Output::usage(e.to_string()),
    };
    let ev = PointEval::new(&pt, &args, true);
    if let Some(e) = ev.errors().first() {
        return Output {
            records: vec![error_record("eval", &args, e)],
            text: format!("error [{}]: {e}\n", error_kind(e)),
            exit_code: EXIT_DOMAIN,
        };
    }

    let mut text = String::new();
    let _ = writeln!(
        text,
        "a = {}  b = {}  c = {}  n = {}  M = {}",
        args.a,
        args.b,
        args.c,
        args.n,
        args.order.map_or("-".to_owned(), |m| m.to_string())
    );
    if let Some(Ok(x)) = ev.exact {
        let _ = writeln!(text, "exact ratio     {}", format_fixed(x, TEXT_EXACT_DECIMALS));
    }
    for (v, sum) in &ev.sums {
        if let Ok(s) = sum {
            let _ = writeln!(
                text,
                "{v} partial sum  {}   smallest term at m = {}{}",
                format_fixed(s.value, TEXT_SUM_DECIMALS),
                s.smallest_term_index,
                if s.diverging_tail { ", tail diverging" } else { "" }
            );
        }
    }
    match &ev.eq6 {
        Some(Ok(x)) => {
            let _ = writeln!(text, "eq6 limit       {}", format_fixed(*x, TEXT_EXACT_DECIMALS));
        }
        Some(Err(e)) => {
            let _ = writeln!(text, "eq6 limit       undefined ({e})");
        }
        None => {}
    }
    for r in &ev.regions {
        let _ = writeln!(text, "{}", region_line(r));
    }
    Output {
        records: vec![point_record("eval", &args, &ev)],
        text,
        exit_code: EXIT_OK,
    }
}

pub fn classify_point(args: PointArgs) -> Output {
    let pt = match EvalPoint::from_parts(args.a, args.b, args.c, args.n) {
        Ok(pt) => pt,
        Err(e) => return Output::usage(e.to_string()),
    };
    let ev = PointEval::new(&pt, &args, false);
    let mut text = format!("a = {}  b = {}  c = {}  n = {}\n", args.a, args.b, args.c, args.n);
    for r in &ev.regions {
        let _ = writeln!(text, "{}", region_line(r));
    }
    Output {
        records: vec![point_record("classify", &args, &ev)],
        text,
        exit_code: EXIT_OK,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ScanArgs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub n_min: f64,
    pub n_max: f64,
    pub n_step: f64,
    pub order: usize,
    pub variant: Option<Variant>,
}

/// Grid n_min, n_min + step, ... up to n_max (inclusive, with a relative
/// slack of 1e-9 steps for accumulated rounding).
pub fn scan_grid(n_min: f64, n_max: f64, n_step: f64) -> Result<Vec<f64>, String> {
    if !(n_min.is_finite() && n_max.is_finite() && n_step.is_finite()) {
        return Err("scan bounds must be finite".to_owned());
    }
    if n_min > n_max {
        return Err(format!("n-min ({n_min}) exceeds n-max ({n_max})"));
    }
    if n_step <= 0.0 {
        return Err(format!("n-step must be positive, got {n_step}"));
    }
    let count = ((n_max - n_min) / n_step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| n_min + k as f64 * n_step).collect())
}

pub fn scan(args: ScanArgs) -> Output {
    let grid = match scan_grid(args.n_min, args.n_max, args.n_step) {
        Ok(g) => g,
        Err(e) => return Output::usage(e),
    };
    if let Err(e) = gamma_ratio::ParamSet::new(args.a, args.b, args.c) {
        return Output::usage(e.to_string());
    }
    let mut records = Vec::with_capacity(grid.len());
    let mut text = format!(
        "a = {}  b = {}  c = {}  M = {}\n{:>12}  {:>12}  {:>12}  {:>12}  {:>10}  {:>10}  {:<10}  {:<10}\n",
        args.a, args.b, args.c, args.order, "n", "exact", "e4", "e5", "|e4-exact|", "|e5-exact|", "e4 region", "e5 region"
    );
    for n in grid {
        let point_args = PointArgs {
            a: args.a,
            b: args.b,
            c: args.c,
            n,
            order: Some(args.order),
            variant: args.variant,
        };
        let pt = EvalPoint::from_parts(args.a, args.b, args.c, n).expect("finite inputs");
        let ev = PointEval::new(&pt, &point_args, true);
        let record = point_record("scan", &point_args, &ev);
        let cell = |name: &str, decimals: usize| match record.get(name) {
            Some(crate::record::Value::Num(x)) => format_fixed(*x, decimals),
            _ => "-".to_owned(),
        };
        let sci = |name: &str| match record.get(name) {
            Some(crate::record::Value::Num(x)) => format!("{x:.3e}"),
            _ => "-".to_owned(),
        };
        let _ = writeln!(
            text,
            "{:>12}  {:>12}  {:>12}  {:>12}  {:>10}  {:>10}  {:<10}  {:<10}{}",
            n,
            cell("exact", TEXT_EXACT_DECIMALS),
            cell("e4", TEXT_SUM_DECIMALS),
            cell("e5", TEXT_SUM_DECIMALS),
            sci("e4_abs_error"),
            sci("e5_abs_error"),
            ev.regions[0].represented_value.name(),
            ev.regions[1].represented_value.name(),
            if ev.errors().is_empty() { "" } else { "  (skipped: precondition failed)" }
        );
        records.push(record);
    }
    Output {
        records,
        text,
        exit_code: EXIT_OK,
    }
}

pub fn table(which: Option<TableId>, source: &FixtureSource) -> Output {
    let ids: Vec<TableId> = match which {
        Some(id) => vec![id],
        None => TableId::ALL.to_vec(),
    };
    let mut records = Vec::new();
    let mut text = String::new();
    let mut exit_code = EXIT_OK;
    for id in ids {
        let fixture = match source.load(id) {
            Ok(f) => f,
            Err(e) => {
                let _ = writeln!(text, "table {id}: fixture error: {e}");
                records.push(
                    Record::new("error")
                        .field("table", id.name())
                        .field("kind", "fixture")
                        .field("message", e.to_string()),
                );
                exit_code = EXIT_FIXTURE;
                continue;
            }
        };
        let spec = &fixture.spec;
        let reproduced = match reproduce_table(spec) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(text, "table {id}: {e}");
                records.push(
                    Record::new("error")
                        .field("table", id.name())
                        .field("kind", error_kind(&e))
                        .field("message", e.to_string()),
                );
                exit_code = exit_code.max(EXIT_DOMAIN);
                continue;
            }
        };
        let cmp = compare(&fixture, &reproduced);
        let decimals = spec.printed_decimals;
        let p = spec.params;
        let _ = writeln!(
            text,
            "Table {id}: a = {}, b = {}, c = {}, n = {}",
            p.a(),
            p.b(),
            p.c(),
            spec.n
        );
        let _ = writeln!(text, "{:>4}  {:>14}     {:>14}", "M", "rhs e4", "rhs e5");
        for (row, printed) in reproduced.rows.iter().zip(&fixture.rows) {
            let e4 = format_fixed(row.rhs_e4, decimals);
            let e5 = format_fixed(row.rhs_e5, decimals);
            let mark = |m: bool| if m { "<-" } else { "  " };
            let _ = writeln!(
                text,
                "{:>4}  {e4:>14} {}  {e5:>14} {}",
                row.order,
                mark(row.marked_e4),
                mark(row.marked_e5)
            );
            records.push(
                Record::new("table_row")
                    .field("table", id.name())
                    .field("M", row.order)
                    .field("rhs_e4", row.rhs_e4)
                    .field("rhs_e5", row.rhs_e5)
                    .field("printed_e4", e4.clone())
                    .field("printed_e5", e5.clone())
                    .field("expected_e4", printed.rhs_e4.clone())
                    .field("expected_e5", printed.rhs_e5.clone())
                    .field("marked_e4", row.marked_e4)
                    .field("marked_e5", row.marked_e5)
                    .field("exact", reproduced.exact_lhs)
                    .field("eq6", reproduced.exact_eq6)
                    .field("match", e4 == printed.rhs_e4 && e5 == printed.rhs_e5),
            );
        }
        let _ = writeln!(
            text,
            "exact value of the ratio: {}",
            format_fixed(reproduced.exact_lhs, TEXT_EXACT_DECIMALS)
        );
        if let Some(eq6) = reproduced.exact_eq6 {
            let _ = writeln!(text, "exact value of eq6:       {}", format_fixed(eq6, TEXT_EXACT_DECIMALS));
        }
        if cmp.matches() {
            let _ = writeln!(text, "fixture: match ({} entries)\n", cmp.entries_checked);
        } else {
            exit_code = exit_code.max(EXIT_FIXTURE);
            let _ = writeln!(text, "fixture: {} mismatch(es)", cmp.mismatches.len());
            for m in &cmp.mismatches {
                let _ = writeln!(text, "  {}: expected {}, got {}", m.field, m.expected, m.got);
            }
            let _ = writeln!(text);
        }
    }
    Output {
        records,
        text,
        exit_code,
    }
}

fn check_record(c: &CheckResult) -> Record {
    Record::new("check")
        .field("suite", c.suite.name())
        .field("name", c.name.clone())
        .field("tolerance", c.tolerance)
        .field("observed", c.observed)
        .field("passed", c.passed)
        .field("detail", c.detail.clone())
}

pub fn verify(which: Suite, options: &SuiteOptions) -> Output {
    let report = run_suite(which, options);
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(
            text,
            "{}  {}  observed {:.3e}  tolerance {:.1e}  {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.observed,
            c.tolerance,
            c.detail
        );
    }
    let _ = writeln!(
        text,
        "{}/{} checks passed",
        report.passed_count(),
        report.checks.len()
    );
    Output {
        records: report.checks.iter().map(check_record).collect(),
        text,
        exit_code: if report.all_passed() { EXIT_OK } else { EXIT_VERIFY },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid() {
        assert_eq!(scan_grid(40.0, 160.0, 40.0).unwrap(), vec![40.0, 80.0, 120.0, 160.0]);
        assert_eq!(scan_grid(3.0, 3.0, 1.0).unwrap(), vec![3.0]);
        assert_eq!(scan_grid(0.0, 0.3, 0.1).unwrap().len(), 4);
        assert!(scan_grid(2.0, 1.0, 1.0).is_err());
        assert!(scan_grid(1.0, 2.0, 0.0).is_err());
    }

    #[test]
    fn all_error_kinds_are_named() {
        let e = Error::TermPole { m: 2, x: 0.0 };
        assert_eq!(error_kind(&e), "term_pole");
    }
}
