use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Table => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Table rows shown when rendering as text. Refutations beyond this many are
/// only counted; JSON always carries all of them.
const SHOWN_REFUTATIONS: usize = 10;

/// Everything a subcommand produces. JSON is the source of truth: `records`
/// are the data, `summary` the tallies, `refutations` the failing witnesses.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub summary: Map<String, Value>,
    pub records: Vec<Value>,
    pub refutations: Vec<Value>,
    #[serde(skip)]
    pub header: Vec<&'static str>,
    #[serde(skip)]
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(command: &'static str, header: Vec<&'static str>) -> Self {
        Report { command, header, ..Default::default() }
    }

    pub fn record<T: Serialize>(&mut self, value: &T) {
        self.records.push(to_value(value));
    }

    pub fn refute<T: Serialize>(&mut self, value: &T) {
        self.refutations.push(to_value(value));
    }

    pub fn note<T: Serialize>(&mut self, key: &str, value: T) {
        self.summary.insert(key.to_owned(), to_value(&value));
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.render_csv(out),
            Format::Table => self.render_table(out),
        }
    }

    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        if !self.header.is_empty() {
            let mut width: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
            for r in &self.rows {
                for (w, c) in width.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_owned()
            };
            writeln!(out, "{}", line(self.header.clone()))?;
            for r in &self.rows {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
            writeln!(out)?;
        }
        for (k, v) in &self.summary {
            writeln!(out, "{k}: {}", plain(v))?;
        }
        for r in self.refutations.iter().take(SHOWN_REFUTATIONS) {
            writeln!(out, "refutation: {r}")?;
        }
        if self.refutations.len() > SHOWN_REFUTATIONS {
            writeln!(out, "... {} more refutations", self.refutations.len() - SHOWN_REFUTATIONS)?;
        }
        Ok(())
    }

    /// Records flattened to one row each; nested keys are joined with `.`,
    /// arrays are written as compact JSON.
    fn render_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let flat: Vec<Vec<(String, String)>> = self
            .records
            .iter()
            .map(|r| {
                let mut cells = Vec::new();
                flatten("", r, &mut cells);
                cells
            })
            .collect();
        let mut columns: Vec<String> = Vec::new();
        for cells in &flat {
            for (k, _) in cells {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&columns)?;
        for cells in &flat {
            let row = columns.iter().map(|c| cells.iter().find(|(k, _)| k == c).map_or("", |(_, v)| v.as_str()));
            w.write_record(row)?;
        }
        w.flush()
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Null => out.push((prefix.to_owned(), String::new())),
        other => out.push((prefix.to_owned(), plain(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_flattens_nested_records() {
        let mut r = Report::new("t", vec![]);
        r.records.push(json!({"a": 1, "b": {"c": "x", "d": [1, 2]}}));
        r.records.push(json!({"a": 2, "e": null}));
        let mut buf = Vec::new();
        r.render(Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b.c,b.d,e\n1,x,\"[1,2]\",\n2,,,\n");
    }

    #[test]
    fn table_aligns_columns() {
        let mut r = Report::new("t", vec!["n", "value"]);
        r.row(vec!["10".into(), "x".into()]);
        r.row(vec!["2".into(), "yyy".into()]);
        r.note("total", 2);
        let mut buf = Vec::new();
        r.render(Format::Table, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n   value\n10  x\n2   yyy\n\ntotal: 2\n");
    }
}
