//! Tables rendered as aligned text, CSV, or JSON.
//!
//! Integers travel as decimal strings in every format; floats are printed with
//! four significant figures.

use std::fmt::Write as _;

use serde_json::{Map, Value};
use tanglekit::asymptotics::sci4;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(String),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn int(x: impl ToString) -> Self {
        Cell::Int(x.to_string())
    }

    fn plain(&self) -> String {
        match self {
            Cell::Int(s) | Cell::Text(s) => s.clone(),
            Cell::Float(x) => sci4(*x),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(s) | Cell::Text(s) => Value::String(s.clone()),
            Cell::Float(x) => rounded(*x),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

/// The float shown by [`sci4`], as a JSON number.
pub fn rounded(x: f64) -> Value {
    sci4(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_text(&self) -> String {
        let plain: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                plain
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.headers[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&mut out, &self.headers);
        for r in &plain {
            line(&mut out, r);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::plain)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> = self.headers.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        pretty(&self.to_json_value())
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(["n", "count", "ratio"]);
        t.push(vec![Cell::int(1), Cell::int("123456789012345678901234567890"), Cell::Float(6.50712e-18)]);
        t.push(vec![Cell::int(10), Cell::int(2), Cell::Float(0.125)]);
        t
    }

    #[test]
    fn text_is_right_aligned() {
        let text = sample().to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with(" 1  123456789012345678901234567890"));
        assert!(lines[2].ends_with("1.250e-1"));
    }

    #[test]
    fn csv_and_json() {
        let t = sample();
        assert_eq!(
            t.to_csv(),
            "n,count,ratio\n1,123456789012345678901234567890,6.507e-18\n10,2,1.250e-1\n"
        );
        let v = t.to_json_value();
        assert_eq!(v[0]["count"], Value::String("123456789012345678901234567890".into()));
        assert_eq!(v[0]["ratio"].as_f64(), Some(6.507e-18));
        assert_eq!(v[1]["n"], Value::String("10".into()));
    }
}
