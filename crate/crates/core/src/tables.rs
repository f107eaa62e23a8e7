//! Tables of c(n) values and of the order ranges sharing a value of c, and
//! their rendering as JSON, CSV, markdown or plain text.
//!
//! Big integers are written as exact decimal strings. In JSON they are
//! string-valued so 64-bit and floating-point consumers do not lose
//! precision.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::pow;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::counting::{c_of_n, order_range_for_count, parse_decimal, GraphOrder};
use crate::{sweep, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub n: BigUint,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub alpha: u64,
    pub min_n: BigUint,
    pub max_n: BigUint,
}

/// The reference orders: 10^1 through 10^6, then 10^9, 10^10, 10^15,
/// 10^20, 10^25 and 10^30.
pub fn default_table1_orders() -> Vec<GraphOrder> {
    [1usize, 2, 3, 4, 5, 6, 9, 10, 15, 20, 25, 30]
        .into_iter()
        .map(|e| GraphOrder::new(pow(BigUint::from(10u32), e)).expect("10^e >= 2"))
        .collect()
}

/// One row per order, in input order.
pub fn table1(orders: &[GraphOrder]) -> Vec<Table1Row> {
    sweep::map_ordered(orders, |n| Table1Row {
        n: n.value().clone(),
        c: c_of_n(n),
    })
}

/// Rows for `alpha = 1..=max_alpha`.
pub fn table2(max_alpha: u64) -> Result<Vec<Table2Row>> {
    if max_alpha < 1 {
        return Err(Error::AlphaTooSmall(max_alpha));
    }
    (1..=max_alpha)
        .map(|alpha| {
            let r = order_range_for_count(alpha)?;
            Ok(Table2Row {
                alpha,
                min_n: r.min_n,
                max_n: r.max_n,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    #[default]
    Plain,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            "plain" | "text" => Ok(Self::Plain),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderOptions {
    /// Group big-integer digits in threes with commas.
    pub separators: bool,
}

/// A row that can be rendered and parsed back.
pub trait TableRow: Sized {
    type Record: Serialize + DeserializeOwned;

    const HEADERS: &'static [&'static str];

    fn record(&self, opts: RenderOptions) -> Self::Record;

    fn from_record(record: Self::Record) -> Result<Self>;

    fn cells(&self, opts: RenderOptions) -> Vec<String>;
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Table1Record {
    pub n: String,
    pub c: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Table2Record {
    pub alpha: u64,
    pub min_n: String,
    pub max_n: String,
}

impl TableRow for Table1Row {
    type Record = Table1Record;

    const HEADERS: &'static [&'static str] = &["n", "c"];

    fn record(&self, opts: RenderOptions) -> Table1Record {
        Table1Record {
            n: big_to_string(&self.n, opts),
            c: self.c,
        }
    }

    fn from_record(record: Table1Record) -> Result<Self> {
        Ok(Self {
            n: parse_decimal(&record.n)?,
            c: record.c,
        })
    }

    fn cells(&self, opts: RenderOptions) -> Vec<String> {
        vec![big_to_string(&self.n, opts), self.c.to_string()]
    }
}

impl TableRow for Table2Row {
    type Record = Table2Record;

    const HEADERS: &'static [&'static str] = &["alpha", "min_n", "max_n"];

    fn record(&self, opts: RenderOptions) -> Table2Record {
        Table2Record {
            alpha: self.alpha,
            min_n: big_to_string(&self.min_n, opts),
            max_n: big_to_string(&self.max_n, opts),
        }
    }

    fn from_record(record: Table2Record) -> Result<Self> {
        Ok(Self {
            alpha: record.alpha,
            min_n: parse_decimal(&record.min_n)?,
            max_n: parse_decimal(&record.max_n)?,
        })
    }

    fn cells(&self, opts: RenderOptions) -> Vec<String> {
        vec![
            self.alpha.to_string(),
            big_to_string(&self.min_n, opts),
            big_to_string(&self.max_n, opts),
        ]
    }
}

fn big_to_string(n: &BigUint, opts: RenderOptions) -> String {
    let digits = n.to_string();
    if opts.separators {
        group_digits(&digits)
    } else {
        digits
    }
}

fn group_digits(digits: &str) -> String {
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

pub fn render<R: TableRow>(rows: &[R], format: Format) -> String {
    render_with(rows, format, RenderOptions::default())
}

pub fn render_with<R: TableRow>(rows: &[R], format: Format, opts: RenderOptions) -> String {
    match format {
        Format::Json => render_json(rows, opts),
        Format::Csv => render_csv(rows, opts),
        Format::Markdown => render_markdown(rows, opts),
        Format::Plain => render_plain(rows, opts),
    }
}

fn render_json<R: TableRow>(rows: &[R], opts: RenderOptions) -> String {
    let records: Vec<R::Record> = rows.iter().map(|r| r.record(opts)).collect();
    let mut out = serde_json::to_string_pretty(&records).expect("records serialize");
    out.push('\n');
    out
}

fn render_csv<R: TableRow>(rows: &[R], opts: RenderOptions) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    // Written by hand so an empty table still carries its header.
    writer.write_record(R::HEADERS).expect("in-memory write");
    for row in rows {
        writer.serialize(row.record(opts)).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn render_markdown<R: TableRow>(rows: &[R], opts: RenderOptions) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", R::HEADERS.join(" | "));
    let rule: Vec<&str> = R::HEADERS.iter().map(|_| "---:").collect();
    let _ = writeln!(out, "| {} |", rule.join(" | "));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.cells(opts).join(" | "));
    }
    out
}

fn render_plain<R: TableRow>(rows: &[R], opts: RenderOptions) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.cells(opts)).collect();
    let widths: Vec<usize> = R::HEADERS
        .iter()
        .enumerate()
        .map(|(i, h)| {
            cells
                .iter()
                .map(|row| row[i].len())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let header: Vec<String> = R::HEADERS.iter().map(|h| h.to_string()).collect();
    for line in std::iter::once(&header).chain(&cells) {
        let padded: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  "));
    }
    out
}

/// Parses a rendered CSV or JSON table back into rows.
pub fn parse_rows<R: TableRow>(text: &str, format: Format) -> Result<Vec<R>> {
    let records: Vec<R::Record> = match format {
        Format::Json => serde_json::from_str(text).map_err(|e| Error::TableParse(e.to_string()))?,
        Format::Csv => {
            let mut reader = csv::Reader::from_reader(text.as_bytes());
            let headers = reader
                .headers()
                .map_err(|e| Error::TableParse(e.to_string()))?;
            if !headers.iter().eq(R::HEADERS.iter().copied()) {
                return Err(Error::TableParse(format!("unexpected header {headers:?}")));
            }
            reader
                .deserialize()
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::TableParse(e.to_string()))?
        }
        Format::Markdown | Format::Plain => {
            return Err(Error::TableParse(format!(
                "{format:?} tables are output-only"
            )))
        }
    };
    records.into_iter().map(R::from_record).collect()
}
