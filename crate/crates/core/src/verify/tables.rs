//! Recomputing the printed tables and diffing them against the fixtures.

use crate::error::Result;
use crate::expansion::{exact_ratio, gauss_limit_e6, optimal_truncation, partial_sum, Variant};
use crate::params::EvalPoint;
use crate::regions::classify;

use super::fixtures::{Fixture, TableId, TableSpec};

/// Highest truncation order printed in every table.
pub const TABLE_ORDERS: usize = 10;

/// One reproduced row. `marked_*` is set on the row picked by
/// [`optimal_truncation`], and only where the series is an asymptotic
/// expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub order: usize,
    pub rhs_e4: f64,
    pub rhs_e5: f64,
    pub marked_e4: bool,
    pub marked_e5: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReproducedTable {
    pub id: TableId,
    pub printed_decimals: usize,
    pub rows: Vec<TableRow>,
    pub exact_lhs: f64,
    pub exact_eq6: Option<f64>,
}

/// Fixed-point rendering with round-half-even on the exact binary value.
/// Negative zero prints without its sign.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

/// Number of digits after the decimal point of a printed number.
pub fn decimals_of(printed: &str) -> usize {
    printed.split_once('.').map_or(0, |(_, frac)| frac.len())
}

pub fn reproduce_table(spec: &TableSpec) -> Result<ReproducedTable> {
    let pt = EvalPoint::new(spec.params, spec.n)?;
    let e4 = partial_sum(&pt, Variant::E4, TABLE_ORDERS)?;
    let e5 = partial_sum(&pt, Variant::E5, TABLE_ORDERS)?;
    let best = |variant: Variant| -> Result<Option<usize>> {
        if !classify(&pt, variant).expansion_valid {
            return Ok(None);
        }
        Ok(Some(optimal_truncation(&pt, variant, TABLE_ORDERS)?.order))
    };
    let best_e4 = best(Variant::E4)?;
    let best_e5 = best(Variant::E5)?;
    let rows = (1..=TABLE_ORDERS)
        .map(|m| TableRow {
            order: m,
            rhs_e4: e4.value_at(m),
            rhs_e5: e5.value_at(m),
            marked_e4: best_e4 == Some(m),
            marked_e5: best_e5 == Some(m),
        })
        .collect();
    let exact_eq6 = match spec.exact_eq6 {
        Some(_) => Some(gauss_limit_e6(&pt)?),
        None => None,
    };
    Ok(ReproducedTable {
        id: spec.id,
        printed_decimals: spec.printed_decimals,
        rows,
        exact_lhs: exact_ratio(&pt)?,
        exact_eq6,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub field: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableComparison {
    pub id: TableId,
    pub entries_checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Largest |computed - printed| over the exact-value lines.
    pub max_exact_deviation: f64,
}

impl TableComparison {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_exact(
    field: &str,
    printed: &str,
    computed: Option<f64>,
    mismatches: &mut Vec<Mismatch>,
) -> f64 {
    let expected: f64 = printed.parse().unwrap_or(f64::NAN);
    let decimals = decimals_of(printed);
    let tolerance = 0.5 * 10f64.powi(-(decimals as i32));
    let deviation = computed.map_or(f64::INFINITY, |c| (c - expected).abs());
    // NaN counts as a failure
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(deviation <= tolerance) {
        mismatches.push(Mismatch {
            field: field.to_owned(),
            expected: printed.to_owned(),
            got: computed.map_or_else(|| "undefined".to_owned(), |c| format_fixed(c, decimals + 2)),
        });
    }
    deviation
}

/// Diffs a reproduced table against its fixture: every printed partial sum
/// string-exact, exact values within half a unit of their last printed
/// digit, and the smallest-term order inside the marked set wherever the
/// fixture marks rows.
pub fn compare(fixture: &Fixture, table: &ReproducedTable) -> TableComparison {
    let decimals = fixture.spec.printed_decimals;
    let mut mismatches = Vec::new();
    let mut entries_checked = 0;

    for expected in &fixture.rows {
        let got = table.rows.iter().find(|r| r.order == expected.order);
        for (variant, printed) in [(Variant::E4, &expected.rhs_e4), (Variant::E5, &expected.rhs_e5)] {
            entries_checked += 1;
            let value = got.map(|r| match variant {
                Variant::E4 => r.rhs_e4,
                Variant::E5 => r.rhs_e5,
            });
            let text = value.map_or_else(|| "missing".to_owned(), |v| format_fixed(v, decimals));
            if &text != printed {
                mismatches.push(Mismatch {
                    field: format!("M={} {variant}", expected.order),
                    expected: printed.clone(),
                    got: text,
                });
            }
        }
    }

    for variant in Variant::ALL {
        let marked: Vec<usize> = fixture
            .rows
            .iter()
            .filter(|r| match variant {
                Variant::E4 => r.marked_e4,
                Variant::E5 => r.marked_e5,
            })
            .map(|r| r.order)
            .collect();
        if marked.is_empty() {
            continue;
        }
        let picked = table
            .rows
            .iter()
            .find(|r| match variant {
                Variant::E4 => r.marked_e4,
                Variant::E5 => r.marked_e5,
            })
            .map(|r| r.order);
        if !picked.is_some_and(|m| marked.contains(&m)) {
            mismatches.push(Mismatch {
                field: format!("best truncation {variant}"),
                expected: format!("{marked:?}"),
                got: picked.map_or_else(|| "none".to_owned(), |m| m.to_string()),
            });
        }
    }

    let mut max_exact_deviation =
        check_exact("exact", &fixture.exact_text, Some(table.exact_lhs), &mut mismatches);
    if let Some(printed) = &fixture.eq6_text {
        let dev = check_exact("eq6", printed, table.exact_eq6, &mut mismatches);
        max_exact_deviation = max_exact_deviation.max(dev);
    }

    TableComparison {
        id: fixture.spec.id,
        entries_checked,
        mismatches,
        max_exact_deviation,
    }
}
