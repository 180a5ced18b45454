//! Output rendering: one table schema, two byte-stable renderings.
//!
//! Exact rationals travel as explicit "num/den" strings in both formats
//! so no value is ever squeezed through a float round-trip. Floats are
//! printed with 17 significant digits in CSV; JSON numbers use the
//! shortest round-trip form. Cells never contain commas or quotes, so
//! the CSV needs no escaping.

use std::collections::BTreeMap;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Exact(String),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Exact(s) | Cell::Text(s) => s.clone(),
            Cell::Float(v) => format_float(*v),
            Cell::Bool(v) => v.to_string(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Int(v) => ser.serialize_i64(*v),
            Cell::Exact(s) | Cell::Text(s) => ser.serialize_str(s),
            Cell::Float(v) => ser.serialize_f64(*v),
            Cell::Bool(v) => ser.serialize_bool(*v),
        }
    }
}

/// 17 significant digits: enough to reconstruct any double exactly.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: String,
    pub params: BTreeMap<String, Cell>,
    pub columns: Vec<&'static str>,
    #[serde(serialize_with = "serialize_rows")]
    pub rows: Vec<Vec<Cell>>,
}

fn serialize_rows<S: Serializer>(rows: &[Vec<Cell>], ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(rows.len()))?;
    for row in rows {
        seq.serialize_element(row)?;
    }
    seq.end()
}

impl OutputRecord {
    pub fn new(command: &str, columns: Vec<&'static str>) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            params: BTreeMap::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: Cell) {
        self.params.insert(key.to_string(), value);
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string(self).expect("record serializes");
                s.push('\n');
                s
            }
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            debug_assert!(
                line.iter().all(|c| !c.contains([',', '"', '\n'])),
                "cell would need CSV escaping: {line:?}"
            );
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}
