//! Golden table files.
//!
//! One comma-separated file per table. `#` lines are comments; those of the
//! form `# key = value` carry the table parameters and the printed exact
//! values. The remaining lines are a header and one row per truncation order:
//!
//! ```text
//! # id = T1
//! # a = 0.7
//! # b = 1.2
//! # c = 0.4
//! # n = 10
//! # decimals = 7
//! # exact = 0.97729983
//! M,rhs_e4,rhs_e5,marked_e4,marked_e5
//! 1,0.9771429,0.9744681,0,0
//! ```

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::params::ParamSet;

/// Environment variable that points the CLI at a directory of fixture files
/// instead of the copies compiled into the library.
pub const FIXTURE_DIR_ENV: &str = "GAMMA_RATIO_FIXTURE_DIR";

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing header key '{0}'")]
    MissingKey(&'static str),
    #[error("fixture id {found} does not match requested table {expected}")]
    WrongTable { expected: TableId, found: TableId },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    T1,
    T2,
    T3a,
    T3b,
    T4a,
    T4b,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::T1,
        TableId::T2,
        TableId::T3a,
        TableId::T3b,
        TableId::T4a,
        TableId::T4b,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TableId::T1 => "T1",
            TableId::T2 => "T2",
            TableId::T3a => "T3a",
            TableId::T3b => "T3b",
            TableId::T4a => "T4a",
            TableId::T4b => "T4b",
        }
    }

    pub fn file_name(&self) -> String {
        format!("table_{}.csv", self.name())
    }

    fn embedded_text(&self) -> &'static str {
        match self {
            TableId::T1 => include_str!("../../fixtures/table_T1.csv"),
            TableId::T2 => include_str!("../../fixtures/table_T2.csv"),
            TableId::T3a => include_str!("../../fixtures/table_T3a.csv"),
            TableId::T3b => include_str!("../../fixtures/table_T3b.csv"),
            TableId::T4a => include_str!("../../fixtures/table_T4a.csv"),
            TableId::T4b => include_str!("../../fixtures/table_T4b.csv"),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TableId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown table '{s}' (expected one of T1, T2, T3a, T3b, T4a, T4b)"))
    }
}

/// Parameters and reference values of one printed table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub id: TableId,
    pub params: ParamSet,
    pub n: f64,
    /// Decimals printed in the partial-sum columns.
    pub printed_decimals: usize,
    pub exact_lhs: f64,
    pub exact_eq6: Option<f64>,
}

/// One row as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub order: usize,
    pub rhs_e4: String,
    pub rhs_e5: String,
    pub marked_e4: bool,
    pub marked_e5: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub spec: TableSpec,
    pub exact_text: String,
    pub eq6_text: Option<String>,
    pub rows: Vec<FixtureRow>,
}

/// Where fixture files come from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum FixtureSource {
    #[default]
    Embedded,
    Dir(PathBuf),
}

impl FixtureSource {
    /// The directory named by [`FIXTURE_DIR_ENV`], or the embedded copies.
    pub fn from_env() -> Self {
        match std::env::var_os(FIXTURE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => FixtureSource::Dir(PathBuf::from(dir)),
            _ => FixtureSource::Embedded,
        }
    }

    pub fn load(&self, id: TableId) -> Result<Fixture, FixtureError> {
        let fixture = match self {
            FixtureSource::Embedded => Fixture::parse(id.embedded_text())?,
            FixtureSource::Dir(dir) => Fixture::from_file(&dir.join(id.file_name()))?,
        };
        if fixture.spec.id != id {
            return Err(FixtureError::WrongTable {
                expected: id,
                found: fixture.spec.id,
            });
        }
        Ok(fixture)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> FixtureError {
    FixtureError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_flag(s: &str, line: usize) -> Result<bool, FixtureError> {
    match s.trim() {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(parse_err(line, format!("marker must be 0 or 1, got '{other}'"))),
    }
}

impl Fixture {
    pub fn from_file(path: &Path) -> Result<Self, FixtureError> {
        let text = fs::read_to_string(path).map_err(|source| FixtureError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let mut header: HashMap<String, (usize, String)> = HashMap::new();
        let mut rows = Vec::new();
        let mut seen_columns = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((k, v)) = comment.split_once('=') {
                    header.insert(k.trim().to_owned(), (line_no, v.trim().to_owned()));
                }
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if !seen_columns {
                if fields != ["M", "rhs_e4", "rhs_e5", "marked_e4", "marked_e5"] {
                    return Err(parse_err(line_no, format!("unexpected column header '{line}'")));
                }
                seen_columns = true;
                continue;
            }
            if fields.len() != 5 {
                return Err(parse_err(line_no, format!("expected 5 fields, got {}", fields.len())));
            }
            let order = fields[0]
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad order '{}'", fields[0])))?;
            for f in &fields[1..3] {
                f.parse::<f64>()
                    .map_err(|_| parse_err(line_no, format!("bad value '{f}'")))?;
            }
            rows.push(FixtureRow {
                order,
                rhs_e4: fields[1].to_owned(),
                rhs_e5: fields[2].to_owned(),
                marked_e4: parse_flag(fields[3], line_no)?,
                marked_e5: parse_flag(fields[4], line_no)?,
            });
        }

        let get = |key: &'static str| header.get(key).ok_or(FixtureError::MissingKey(key));
        let number = |key: &'static str| -> Result<f64, FixtureError> {
            let (line, v) = get(key)?;
            v.parse()
                .map_err(|_| parse_err(*line, format!("'{key}' is not a number: '{v}'")))
        };
        let (id_line, id_text) = get("id")?;
        let id: TableId = id_text.parse().map_err(|e| parse_err(*id_line, e))?;
        let params = ParamSet::new(number("a")?, number("b")?, number("c")?)
            .map_err(|e| parse_err(*id_line, e.to_string()))?;
        let (dec_line, dec_text) = get("decimals")?;
        let printed_decimals = dec_text
            .parse()
            .map_err(|_| parse_err(*dec_line, format!("bad decimals '{dec_text}'")))?;
        let exact_text = get("exact")?.1.clone();
        let eq6_text = header.get("eq6").map(|(_, v)| v.clone());
        let spec = TableSpec {
            id,
            params,
            n: number("n")?,
            printed_decimals,
            exact_lhs: number("exact")?,
            exact_eq6: match eq6_text {
                Some(_) => Some(number("eq6")?),
                None => None,
            },
        };
        Ok(Fixture {
            spec,
            exact_text,
            eq6_text,
            rows,
        })
    }
}
