//! Flat output records and their json/csv renderings.

use std::io::Write;

/// A field value. Numbers carry 17 significant digits when serialized.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Str(String),
    Null,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Null, Value::Num)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<Option<bool>> for Value {
    fn from(x: Option<bool>) -> Self {
        x.map_or(Value::Null, Value::Bool)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<Option<usize>> for Value {
    fn from(x: Option<usize>) -> Self {
        x.map_or(Value::Null, |v| Value::Int(v as i64))
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Str(x.to_owned())
    }
}

impl From<String> for Value {
    fn from(x: String) -> Self {
        Value::Str(x)
    }
}

impl From<Option<String>> for Value {
    fn from(x: Option<String>) -> Self {
        x.map_or(Value::Null, Value::Str)
    }
}

/// Round-trippable rendering with 17 significant digits.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

impl Value {
    fn json(&self) -> String {
        match self {
            Value::Num(x) if x.is_finite() => sig17(*x),
            Value::Num(_) | Value::Null => "null".to_owned(),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Str(s) => serde_json::to_string(s).expect("strings serialize"),
        }
    }

    fn csv(&self) -> String {
        match self {
            Value::Num(x) if x.is_finite() => sig17(*x),
            Value::Num(_) | Value::Null => String::new(),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Str(s) => s.clone(),
        }
    }
}

/// An ordered list of named fields; the first is always `record`.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    fields: Vec<(&'static str, Value)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            fields: vec![("record", Value::from(kind))],
        }
    }

    pub fn field(mut self, name: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((name, value.into()));
        self
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.fields.iter().map(|(k, _)| *k)
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .fields
            .iter()
            .map(|(k, v)| format!("\"{k}\":{}", v.json()))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

/// One JSON object per line.
pub fn write_json(out: &mut impl Write, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(())
}

/// Header from the first record; every record of one command shares the
/// same field list.
pub fn write_csv(out: &mut impl Write, records: &[Record]) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if let Some(first) = records.first() {
        writer.write_record(first.names())?;
    }
    for r in records {
        writer.write_record(r.fields.iter().map(|(_, v)| v.csv()))?;
    }
    writer.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.97729983, -3.41881, 1e-300, 12.4, 0.1 + 0.2] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let digits = s.split('e').next().unwrap().replace(['-', '.'], "");
            assert_eq!(digits.len(), 17);
        }
    }

    #[test]
    fn json_rendering() {
        let r = Record::new("point")
            .field("a", 0.5)
            .field("M", Some(3usize))
            .field("e5", None::<f64>)
            .field("nan", f64::NAN)
            .field("flags", "x\"y");
        assert_eq!(
            r.to_json(),
            r#"{"record":"point","a":5.0000000000000000e-1,"M":3,"e5":null,"nan":null,"flags":"x\"y"}"#
        );
        let parsed: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed["a"], 0.5);
    }

    #[test]
    fn csv_rendering() {
        let rows = [
            Record::new("point").field("a", 1.0).field("flags", "p;q"),
            Record::new("point").field("a", None::<f64>).field("flags", "r,s"),
        ];
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "record,a,flags\npoint,1.0000000000000000e0,p;q\npoint,,\"r,s\"\n"
        );
    }
}
