use std::fmt::Display;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected text, csv or json)")),
        }
    }
}

/// One checked identity `lhs = rhs` on one instance.
///
/// `known` marks a documented gap: the record is counted as passing when
/// `equal` is false and the observed value matches the documented one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub instance: String,
    pub check: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub known: bool,
}

impl Record {
    pub fn new(instance: impl Into<String>, check: &str, lhs: impl Display, rhs: impl Display) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        Record { instance: instance.into(), check: check.into(), equal: lhs == rhs, lhs, rhs, known: false }
    }

    /// A record for `lhs <= rhs` style relations; `holds` is the verdict.
    pub fn relation(instance: impl Into<String>, check: &str, lhs: impl Display, rhs: impl Display, holds: bool) -> Self {
        Record { instance: instance.into(), check: check.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), equal: holds, known: false }
    }

    pub fn passes(&self) -> bool {
        self.equal || self.known
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub suite: String,
    pub timestamp: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub header: Header,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(suite: &str, records: Vec<Record>) -> Self {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Report { header: Header { suite: suite.into(), timestamp }, records }
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.passes()).count()
    }

    pub fn known(&self) -> usize {
        self.records.iter().filter(|r| !r.equal && r.known).count()
    }

    /// Writes the records. CSV and text carry no timestamp, so they are
    /// byte-identical across runs; JSON keeps it in the header object.
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in &self.records {
                    w.serialize(r)?;
                }
                Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?).expect("csv output is utf-8"))
            }
            Format::Text => {
                let mut out = String::new();
                for r in &self.records {
                    let mark = if r.equal { "ok  " } else if r.known { "KNOWN" } else { "FAIL" };
                    out += &format!("{mark} {} {}: {} vs {}\n", r.instance, r.check, r.lhs, r.rhs);
                }
                out += &format!(
                    "{}: {} records, {} failed, {} known\n",
                    self.header.suite,
                    self.records.len(),
                    self.failures(),
                    self.known()
                );
                Ok(out)
            }
        }
    }
}

/// A rectangular table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?).expect("csv output is utf-8"))
            }
            Format::Json => {
                let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
                    .rows
                    .iter()
                    .map(|row| self.columns.iter().map(|c| c.to_string()).zip(row.iter().map(|v| json_value(v))).collect())
                    .collect();
                Ok(serde_json::to_string_pretty(&rows)? + "\n")
            }
            Format::Text => {
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| self.rows.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(self.columns.clone());
                for row in &self.rows {
                    out += &line(row.iter().map(String::as_str).collect());
                }
                Ok(out)
            }
        }
    }
}

fn json_value(v: &str) -> serde_json::Value {
    // Integers too big for i64 stay strings so that no precision is lost.
    if let Ok(i) = v.parse::<i64>() {
        return i.into();
    }
    match v.parse::<f64>() {
        Ok(f) if v.contains('.') => serde_json::Number::from_f64(f).map_or_else(|| v.into(), serde_json::Value::Number),
        _ => v.into(),
    }
}

/// Writes `text` to `out`, or to stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(CliError::Io)
        }
    }
}
