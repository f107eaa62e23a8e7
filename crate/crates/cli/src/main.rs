//! `palfy`: check candidate character degree graphs and evaluate the
//! component-pair count c(n) from the command line.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use palfy_core::tables::{default_table1_orders, render_with, RenderOptions};
use palfy_core::{
    build_graph, c_of_n, classify, connected_components, independent_triple, order_range_for_count,
    parse_decimal, parse_degrees, parse_edge_list, raw_pair_count, table1, table2, valid_pairs,
    Classification, Error, Format, GraphOrder, PrimeGraph, Table1Row, MAX_ALPHA,
};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(
    name = "palfy",
    version,
    about = "Disconnected character degree graphs and Pálfy's inequality"
)]
struct Cli {
    /// Output format: plain, json, csv or markdown.
    #[arg(long, global = true, default_value = "plain")]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a graph against Pálfy's condition and inequality.
    Check(GraphSource),
    /// Print c(n), the number of component-size pairs satisfying the inequality.
    Count { n: String },
    /// List the component-size pairs of order n that satisfy the inequality.
    Pairs { n: String },
    /// Print floor(n/2), the number of unconstrained component-size pairs.
    Rawcount { n: String },
    /// Print the range of orders n with c(n) = alpha.
    Range { alpha: String },
    /// Reproduce the table of c(n) values.
    Table1 {
        /// Comma- or space-separated orders; defaults to the reference list.
        #[arg(long)]
        orders: Option<String>,
        /// Group digits with thousands separators.
        #[arg(long)]
        separators: bool,
    },
    /// Reproduce the table of order ranges per value of c.
    Table2 {
        #[arg(long, default_value_t = 10)]
        max_alpha: u64,
        #[arg(long)]
        separators: bool,
    },
    /// Emit the graph in Graphviz DOT syntax.
    ExportDot(GraphSource),
}

/// Exactly one of `--degrees` or `--edges`. A source is inline text, `@path`
/// for a file, or `-` for standard input. Inline edge lists may use `;` as a
/// line separator.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Debug)]
struct Failure {
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Self { error }
    }
}

impl Failure {
    fn io(context: &str, e: io::Error) -> Self {
        Error::InvalidToken(format!("{context}: {e}")).into()
    }

    fn exit_code(&self) -> u8 {
        match self.error {
            Error::Internal(_) => 2,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("palfy: {}", line.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(output.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("palfy: {}", failure.error);
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format: Format = cli.format.parse()?;
    match cli.command {
        Command::Check(source) => check(&load_graph(&source)?, format),
        Command::Count { n } => count(&n.parse()?, format),
        Command::Pairs { n } => pairs(&n.parse()?, format),
        Command::Rawcount { n } => rawcount(&n.parse()?, format),
        Command::Range { alpha } => range(&alpha, format),
        Command::Table1 { orders, separators } => {
            let orders = match orders {
                Some(list) => parse_order_list(&list)?,
                None => default_table1_orders(),
            };
            Ok(render_with(
                &table1(&orders),
                format,
                RenderOptions { separators },
            ))
        }
        Command::Table2 {
            max_alpha,
            separators,
        } => {
            if max_alpha > MAX_ALPHA {
                return Err(Error::AlphaTooLarge(max_alpha.to_string()).into());
            }
            Ok(render_with(
                &table2(max_alpha)?,
                format,
                RenderOptions { separators },
            ))
        }
        Command::ExportDot(source) => Ok(load_graph(&source)?.to_dot()),
    }
}

fn read_source(src: &str) -> Result<String, Failure> {
    if src == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::io("stdin", e))?;
        Ok(text)
    } else if let Some(path) = src.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| Failure::io(path, e))
    } else {
        Ok(src.to_string())
    }
}

fn load_graph(source: &GraphSource) -> Result<PrimeGraph, Failure> {
    match (&source.degrees, &source.edges) {
        (Some(src), None) => Ok(build_graph(&parse_degrees(&read_source(src)?)?)),
        (None, Some(src)) => {
            let text = read_source(src)?;
            let text = if src.starts_with('@') || src == "-" {
                text
            } else {
                text.replace(';', "\n")
            };
            Ok(parse_edge_list(&text)?)
        }
        _ => Err(Error::Internal(
            "graph source must be exactly one of --degrees or --edges".into(),
        )
        .into()),
    }
}

fn parse_order_list(list: &str) -> Result<Vec<GraphOrder>, Failure> {
    // Commas separate list items here, so digit grouping must use `_`.
    let orders: Vec<GraphOrder> = list
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    if orders.is_empty() {
        return Err(Error::EmptyInput.into());
    }
    Ok(orders)
}

fn join(vs: impl IntoIterator<Item = u64>) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(g: &PrimeGraph, format: Format) -> Result<String, Failure> {
    let triple = independent_triple(g);
    let classification = classify(g);
    if matches!(classification, Classification::TwoCompleteComponents { .. }) && triple.is_some() {
        return Err(
            Error::Internal("two complete components but an independent triple".into()).into(),
        );
    }
    let components = connected_components(g);
    let (pair, inequality, reason, witness) = match &classification {
        Classification::TwoCompleteComponents {
            pair,
            inequality_holds,
        } => (Some(pair), Some(*inequality_holds), None, None),
        Classification::PalfyViolation { reason, witness } => {
            (None, None, Some(*reason), Some(witness))
        }
        _ => (None, None, None, None),
    };
    let out = match format {
        Format::Json => {
            let value = json!({
                "vertices": g.vertices().iter().collect::<Vec<_>>(),
                "edges": g.edges().iter().map(|&(p, q)| [p, q]).collect::<Vec<_>>(),
                "components": components.components,
                "palfy_condition": triple.is_none(),
                "independent_triple": triple,
                "classification": classification.name(),
                "pair": pair.map(|p| json!({ "a": p.smaller().to_string(), "b": p.larger().to_string() })),
                "inequality_holds": inequality,
                "violation": reason,
                "witness": witness,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("json value serializes")
            )
        }
        Format::Plain => {
            let mut lines = vec![
                format!("vertices: {}", join(g.vertices().iter().copied())),
                format!(
                    "edges: {}",
                    g.edges()
                        .iter()
                        .map(|(p, q)| format!("{p}-{q}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
                format!(
                    "components: {}",
                    components
                        .components
                        .iter()
                        .map(|c| format!("{{{}}}", join(c.iter().copied())))
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
                match triple {
                    None => "palfy_condition: true".to_string(),
                    Some(t) => format!("palfy_condition: false (independent triple {})", join(t)),
                },
                format!("classification: {}", classification.name()),
            ];
            if let (Some(pair), Some(holds)) = (pair, inequality) {
                lines.push(format!("pair: {pair}"));
                lines.push(format!("inequality: {holds}"));
            }
            if let (Some(reason), Some(witness)) = (reason, witness) {
                lines.push(format!(
                    "violation: {reason} (witness {})",
                    join(witness.iter().copied())
                ));
            }
            lines
                .iter()
                .map(|l| l.trim_end())
                .collect::<Vec<_>>()
                .join("\n")
                + "\n"
        }
        Format::Csv | Format::Markdown => {
            let fields = [
                ("palfy_condition", triple.is_none().to_string()),
                ("classification", classification.name().to_string()),
                (
                    "a",
                    pair.map(|p| p.smaller().to_string()).unwrap_or_default(),
                ),
                (
                    "b",
                    pair.map(|p| p.larger().to_string()).unwrap_or_default(),
                ),
                (
                    "inequality_holds",
                    inequality.map(|b| b.to_string()).unwrap_or_default(),
                ),
                (
                    "violation",
                    reason.map(|r| r.to_string()).unwrap_or_default(),
                ),
                (
                    "witness",
                    witness.map(|w| join(w.iter().copied())).unwrap_or_default(),
                ),
            ];
            record(&fields, format)
        }
    };
    Ok(out)
}

/// Renders a single record of named fields in csv or markdown.
fn record(fields: &[(&str, String)], format: Format) -> String {
    let names: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
    let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
    match format {
        Format::Markdown => {
            let rule = vec!["---"; names.len()].join(" | ");
            format!(
                "| {} |\n| {} |\n| {} |\n",
                names.join(" | "),
                rule,
                values.join(" | ")
            )
        }
        _ => format!("{}\n{}\n", names.join(","), values.join(",")),
    }
}

fn count(n: &GraphOrder, format: Format) -> Result<String, Failure> {
    let c = c_of_n(n);
    Ok(match format {
        Format::Plain => format!("{c}\n"),
        _ => render_with(
            &[Table1Row {
                n: n.value().clone(),
                c,
            }],
            format,
            RenderOptions::default(),
        ),
    })
}

fn rawcount(n: &GraphOrder, format: Format) -> Result<String, Failure> {
    let raw = raw_pair_count(n);
    Ok(match format {
        Format::Plain => format!("{raw}\n"),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(
                &json!({ "n": n.to_string(), "raw_pairs": raw.to_string() })
            )
            .expect("json value serializes")
        ),
        _ => record(
            &[("n", n.to_string()), ("raw_pairs", raw.to_string())],
            format,
        ),
    })
}

fn pairs(n: &GraphOrder, format: Format) -> Result<String, Failure> {
    let ps = valid_pairs(n);
    Ok(match format {
        Format::Plain => ps.iter().map(|p| format!("{p}\n")).collect(),
        Format::Json => {
            let rows: Vec<_> = ps
                .iter()
                .map(|p| json!({ "a": p.smaller().to_string(), "b": p.larger().to_string() }))
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&rows).expect("json value serializes")
            )
        }
        Format::Csv => {
            let mut out = String::from("a,b\n");
            for p in &ps {
                out.push_str(&format!("{},{}\n", p.smaller(), p.larger()));
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| a | b |\n| ---: | ---: |\n");
            for p in &ps {
                out.push_str(&format!("| {} | {} |\n", p.smaller(), p.larger()));
            }
            out
        }
    })
}

fn range(alpha: &str, format: Format) -> Result<String, Failure> {
    let parsed: BigUint = parse_decimal(alpha)?;
    let alpha = u64::try_from(&parsed).map_err(|_| Error::AlphaTooLarge(parsed.to_string()))?;
    let r = order_range_for_count(alpha)?;
    let cardinality = r.cardinality();
    if cardinality != (BigUint::from(1u32) << alpha) + 1u32 {
        return Err(
            Error::Internal(format!("range for alpha {alpha} has {cardinality} members")).into(),
        );
    }
    Ok(match format {
        Format::Plain => format!(
            "alpha: {}\nmin_n: {}\nmax_n: {}\ncount: {}\n",
            r.alpha, r.min_n, r.max_n, cardinality
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "alpha": r.alpha,
                "min_n": r.min_n.to_string(),
                "max_n": r.max_n.to_string(),
                "count": cardinality.to_string(),
            }))
            .expect("json value serializes")
        ),
        _ => record(
            &[
                ("alpha", r.alpha.to_string()),
                ("min_n", r.min_n.to_string()),
                ("max_n", r.max_n.to_string()),
                ("count", cardinality.to_string()),
            ],
            format,
        ),
    })
}
