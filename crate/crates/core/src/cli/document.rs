use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::combinatorics::Partition;
use crate::exactmath::{GradedPolynomial, Rational};

pub const SCHEMA_VERSION: u32 = 1;

/// Output format of a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Latex,
}

/// One table cell with its renderings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub latex: Option<String>,
    pub json: Value,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        let s = s.into();
        Cell {
            json: Value::String(s.clone()),
            text: s,
            latex: None,
        }
    }

    pub fn int(v: impl Into<BigInt>) -> Self {
        let v = v.into();
        Cell {
            text: v.to_string(),
            latex: None,
            json: integer_json(&v),
        }
    }

    pub fn rational(q: &Rational) -> Self {
        Cell {
            text: q.to_string(),
            latex: (!q.is_integer()).then(|| format!("${}/{}$", q.numer(), q.denom())),
            json: rational_json(q),
        }
    }

    pub fn flag(b: bool) -> Self {
        Cell {
            text: if b { "yes" } else { "no" }.to_string(),
            latex: None,
            json: Value::Bool(b),
        }
    }

    pub fn partition(p: &Partition) -> Self {
        Cell::text(p.to_string())
    }

    pub fn int_list(values: &[i64]) -> Self {
        Cell {
            text: join(values.iter().map(i64::to_string)),
            latex: None,
            json: Value::Array(values.iter().map(|&v| json!(v)).collect()),
        }
    }

    pub fn polynomial(p: &GradedPolynomial) -> Self {
        let terms = p
            .ordered_terms()
            .into_iter()
            .map(|(m, c)| json!({ "coeff": rational_json(c), "vars": m.indices() }))
            .collect();
        Cell {
            text: p.to_string(),
            latex: Some(format!("${}$", latex_polynomial(p))),
            json: Value::Array(terms),
        }
    }

    /// `(3): 1, (1,1): 1`, as `[{pi, coeff}]` in JSON.
    pub fn expansion(terms: &[(Partition, BigInt)]) -> Self {
        let text = if terms.is_empty() {
            "0".to_string()
        } else {
            terms
                .iter()
                .map(|(p, c)| format!("{p}: {c}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let latex = if terms.is_empty() {
            "$0$".to_string()
        } else {
            let body: Vec<String> = terms
                .iter()
                .map(|(p, c)| {
                    let coeff = if *c == BigInt::from(1) {
                        String::new()
                    } else {
                        c.to_string()
                    };
                    format!(
                        "{coeff}\\Sigma_{{{}}}",
                        p.to_string().trim_matches(['(', ')'])
                    )
                })
                .collect();
            format!("${}$", body.join(" + "))
        };
        Cell {
            text,
            latex: Some(latex),
            json: Value::Array(
                terms
                    .iter()
                    .map(|(p, c)| json!({ "pi": p.parts(), "coeff": integer_json(c) }))
                    .collect(),
            ),
        }
    }

    fn latex_or_escaped(&self) -> String {
        self.latex
            .clone()
            .unwrap_or_else(|| latex_escape(&self.text))
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(",")
}

fn integer_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => Value::String(v.to_string()),
    }
}

fn rational_json(q: &Rational) -> Value {
    if q.is_integer() {
        integer_json(q.numer())
    } else {
        Value::String(q.to_string())
    }
}

fn latex_polynomial(p: &GradedPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let sym = p.family().symbol();
    let mut out = String::new();
    for (i, (m, c)) in p.ordered_terms().into_iter().enumerate() {
        let negative = c < &Rational::from_integer(0.into());
        let mag = if negative { -c.clone() } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let powers = m.powers();
        let one = Rational::from_integer(1.into());
        if powers.is_empty() || mag != one {
            if mag.is_integer() {
                let _ = write!(out, "{mag}");
            } else {
                let _ = write!(out, "\\frac{{{}}}{{{}}}", mag.numer(), mag.denom());
            }
        }
        for (v, e) in powers {
            let _ = write!(out, "{sym}_{{{v}}}");
            if e > 1 {
                let _ = write!(out, "^{{{e}}}");
            }
        }
    }
    out
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '_' | '%' | '&' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '|' => out.push_str("\\textbar{}"),
            _ => out.push(ch),
        }
    }
    out
}

/// A rectangular table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// How the text format lays out a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Layout {
    /// Header line plus aligned rows.
    Grid,
    /// `column: value | column: value` per row.
    Record,
}

/// Result of one command, as cached and rendered.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub code_version: String,
    pub command: String,
    pub params: Map<String, Value>,
    pub layout: Layout,
    pub table: Table,
    /// Shown instead of `table` in text format.
    pub summary: Option<Table>,
    /// Empty iff the command succeeded; written to stderr.
    pub failures: Vec<String>,
}

impl Document {
    pub fn new(command: &str, params: Map<String, Value>, layout: Layout, table: Table) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            code_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            params,
            layout,
            table,
            summary: None,
            failures: Vec::new(),
        }
    }

    /// The canonical machine form `{schema_version, command, params, rows}`.
    pub fn to_json(&self, timestamp: Option<u64>) -> Value {
        let rows: Vec<Value> = self
            .table
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .table
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().map(|c| c.json.clone()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("schema_version".into(), json!(self.schema_version));
        top.insert("command".into(), json!(self.command));
        top.insert("params".into(), Value::Object(self.params.clone()));
        top.insert("rows".into(), Value::Array(rows));
        if let Some(t) = timestamp {
            top.insert("generated_at_unix".into(), json!(t));
        }
        Value::Object(top)
    }

    pub fn render(&self, format: Format, timestamp: Option<u64>) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(timestamp))
                    .expect("serializable document");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = stamp("#", timestamp);
                let table = self.summary.as_ref().unwrap_or(&self.table);
                let layout = if self.summary.is_some() {
                    Layout::Grid
                } else {
                    self.layout
                };
                s.push_str(&render_text(table, layout));
                s
            }
            Format::Csv => {
                let mut s = stamp("#", timestamp);
                s.push_str(&render_csv(&self.table));
                s
            }
            Format::Latex => {
                let mut s = stamp("%", timestamp);
                s.push_str(&render_latex(&self.table));
                s
            }
        }
    }
}

fn stamp(comment: &str, timestamp: Option<u64>) -> String {
    timestamp.map_or_else(String::new, |t| {
        format!("{comment} generated at unix time {t}\n")
    })
}

fn render_text(table: &Table, layout: Layout) -> String {
    let mut out = String::new();
    match layout {
        Layout::Record => {
            for row in &table.rows {
                let parts: Vec<String> = table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| format!("{c}: {}", v.text))
                    .collect();
                out.push_str(&parts.join(" | "));
                out.push('\n');
            }
        }
        Layout::Grid => {
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|i| {
                    table
                        .rows
                        .iter()
                        .map(|r| r[i].text.chars().count())
                        .chain(std::iter::once(table.columns[i].chars().count()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                let mut l = padded.join("  ").trim_end().to_string();
                l.push('\n');
                l
            };
            out.push_str(&line(table.columns.iter().map(String::as_str).collect()));
            for row in &table.rows {
                out.push_str(&line(row.iter().map(|c| c.text.as_str()).collect()));
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    let header: Vec<String> = table.columns.iter().map(|c| csv_field(c)).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in &table.rows {
        let fields: Vec<String> = row.iter().map(|c| csv_field(&c.text)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn render_latex(table: &Table) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\begin{{tabular}}{{{}}}",
        "l".repeat(table.columns.len())
    );
    out.push_str("\\hline\n");
    let header: Vec<String> = table.columns.iter().map(|c| latex_escape(c)).collect();
    let _ = writeln!(out, "{} \\\\", header.join(" & "));
    out.push_str("\\hline\n");
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::latex_or_escaped).collect();
        let _ = writeln!(out, "{} \\\\", cells.join(" & "));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, VarFamily};

    fn sample() -> Document {
        let mut t = Table::new(&["pi", "polynomial"]);
        let p = &(&GradedPolynomial::var(VarFamily::X, 2)
            * &GradedPolynomial::var(VarFamily::X, 2))
            + &GradedPolynomial::var(VarFamily::X, 2);
        t.push(vec![
            Cell::partition(&Partition::new(vec![1, 1])),
            Cell::polynomial(&p),
        ]);
        Document::new("kerov-boolean", Map::new(), Layout::Grid, t)
    }

    #[test]
    fn json_polynomials_are_term_lists() {
        let v = sample().to_json(None);
        assert_eq!(
            v["rows"][0]["polynomial"],
            json!([{"coeff": 1, "vars": [2, 2]}, {"coeff": 1, "vars": [2]}])
        );
        assert_eq!(v["schema_version"], json!(SCHEMA_VERSION));
    }

    #[test]
    fn csv_quotes_commas() {
        let s = sample().render(Format::Csv, None);
        assert_eq!(s, "pi,polynomial\n\"(1,1)\",x2^2 + x2\n");
    }

    #[test]
    fn latex_body() {
        let s = sample().render(Format::Latex, None);
        assert!(s.contains("(1,1) & $x_{2}^{2} + x_{2}$ \\\\"));
        assert!(s.starts_with("\\begin{tabular}{ll}"));
    }

    #[test]
    fn rationals() {
        assert_eq!(Cell::rational(&int(3)).json, json!(3));
        assert_eq!(
            Cell::rational(&crate::exactmath::rat(3, 8)).json,
            json!("3/8")
        );
    }

    #[test]
    fn timestamp_is_opt_in() {
        let d = sample();
        assert!(d.to_json(None).get("generated_at_unix").is_none());
        assert!(d
            .render(Format::Text, Some(5))
            .starts_with("# generated at unix time 5\n"));
    }
}
