//! Column-oriented output tables and their text, CSV and JSON renderings.
//!
//! CSV has a header row and `.` decimals; numbers are written in the
//! shortest form that parses back to the same `f64`. Missing values are empty
//! cells in CSV and `null` in JSON. JSON is an object mapping each column name
//! to an array of its values, in column order.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};
use subdebt_core::SweepTable;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Missing,
    Text(String),
    Flag(bool),
}

impl Cell {
    /// A number, or missing when NaN.
    pub fn number(x: f64) -> Self {
        if x.is_nan() {
            Cell::Missing
        } else {
            Cell::Number(x)
        }
    }

    pub fn optional(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::number)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Number(x) => format_number(*x),
            Cell::Missing => String::new(),
            Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn text(&self) -> String {
        match self {
            Cell::Number(x) => format!("{x:.6}"),
            Cell::Missing => "n/a".into(),
            Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Number(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Missing => Value::Null,
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Flag(b) => Value::Bool(*b),
        }
    }
}

/// Shortest round-trip decimal form; infinities as `inf` / `-inf`.
pub fn format_number(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:?}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    /// Independent column first, then the sweep's output columns.
    pub fn from_sweep(sweep: &SweepTable) -> Self {
        let mut table = Table::new(
            std::iter::once(sweep.independent_name().to_string())
                .chain(sweep.columns().iter().cloned()),
        );
        for row in sweep.rows() {
            table.push(
                std::iter::once(Cell::number(row.independent))
                    .chain(row.values.iter().map(|&v| Cell::number(v)))
                    .collect(),
            );
        }
        table
    }

    /// Prefix every row with constant leading cells.
    pub fn with_leading(self, names: &[&str], cells: Vec<Cell>) -> Self {
        let mut table = Table::new(names.iter().map(|s| s.to_string()).chain(self.columns));
        for row in self.rows {
            table.push(cells.iter().cloned().chain(row).collect());
        }
        table
    }

    /// Rows of `other` appended below; headers must match.
    pub fn append(&mut self, other: Table) {
        assert_eq!(
            self.columns, other.columns,
            "appended table must share the header"
        );
        self.rows.extend(other.rows);
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text()),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn csv(&self) -> Result<String, CliError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let output = |e: csv::Error| CliError::Output(e.to_string());
        writer.write_record(&self.columns).map_err(output)?;
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::csv))
                .map_err(output)?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }

    fn json(&self) -> Result<String, CliError> {
        let mut object = Map::new();
        for (i, name) in self.columns.iter().enumerate() {
            let values = self.rows.iter().map(|row| row[i].json()).collect();
            object.insert(name.clone(), Value::Array(values));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(object))
            .map_err(|e| CliError::Output(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }

    /// A single row prints as one `name  value` line per column, longer tables
    /// as aligned columns.
    fn text(&self) -> String {
        let mut out = String::new();
        if self.rows.len() == 1 {
            let width = self.columns.iter().map(String::len).max().unwrap_or(0);
            for (name, cell) in self.columns.iter().zip(&self.rows[0]) {
                let _ = writeln!(out, "{name:<width$}  {}", cell.text());
            }
            return out;
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::text).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|row| row[i].len())
                    .chain(std::iter::once(self.columns[i].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |fields: &[String]| {
            fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let _ = writeln!(out, "{}", line(&self.columns));
        for row in &cells {
            let _ = writeln!(out, "{}", line(row));
        }
        out
    }
}
