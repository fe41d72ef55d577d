use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crankmex_core::bijections::{apply_map, BijectionTrace, MapName};
use crankmex_core::tables::{build_table, Table, TableId};
use crankmex_core::verify::{run_suite, Budget, Suite, VerifyReport};
use crankmex_core::{ClassTag, Partition};

#[derive(Parser)]
#[command(name = "crankmex", version, about = "Crank, mex and fixed-point partition correspondences")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics and class memberships of one partition.
    Stats {
        /// Parts, e.g. `5 1 1`, `5,1,1` or `5 1^2`.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        parts: Vec<String>,
    },
    /// Correspondence table for one n, grouped by parts greater than one.
    Table {
        #[arg(value_parser = parse_table_id)]
        id: TableId,
        #[arg(long)]
        n: i64,
    },
    /// Apply one of the maps.
    Map {
        #[arg(value_parser = parse_map_name)]
        name: MapName,
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        parts: Vec<String>,
        /// Print every rule application.
        #[arg(long)]
        trace: bool,
    },
    /// Run a verification suite; exits with status 1 if it fails.
    Verify {
        #[arg(value_parser = parse_suites)]
        suite: SuiteArg,
        #[arg(long, env = "CRANKMEX_BUDGET", default_value_t = crankmex_core::verify::DEFAULT_NMAX)]
        nmax: usize,
        #[arg(long, default_value_t = crankmex_core::verify::DEFAULT_QMAX)]
        qmax: usize,
        #[arg(long, default_value_t = crankmex_core::verify::DEFAULT_ZMAX)]
        zmax: usize,
    },
}

#[derive(Clone)]
struct SuiteArg(Vec<Suite>);

fn parse_table_id(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: crankmex_core::Error| e.to_string())
}

fn parse_map_name(s: &str) -> Result<MapName, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = MapName::ALL.iter().map(|m| m.name()).collect();
        format!("unknown map {s:?}, expected one of {}", names.join(", "))
    })
}

fn parse_suites(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg(Suite::ALL.to_vec()));
    }
    Suite::ALL
        .into_iter()
        .find(|x| x.name() == s)
        .map(|x| SuiteArg(vec![x]))
        .ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}, expected one of {}, all", names.join(", "))
        })
}

fn parse_partition(args: &[String]) -> Result<Partition> {
    let joined = args.join(" ");
    joined
        .parse::<Partition>()
        .with_context(|| format!("invalid partition {joined:?}"))
}

#[derive(Serialize)]
struct StatsRecord {
    n: u32,
    parts: String,
    omega: usize,
    mu: usize,
    crank: i64,
    mex: u32,
    beta: usize,
    durfee: usize,
    fixed_point: Option<usize>,
    classes: Vec<&'static str>,
}

impl StatsRecord {
    fn new(lambda: &Partition) -> Self {
        StatsRecord {
            n: lambda.n(),
            parts: lambda.to_exponent_string(),
            omega: lambda.omega(),
            mu: lambda.mu(),
            crank: lambda.crank(),
            mex: lambda.mex(),
            beta: lambda.beta(),
            durfee: lambda.durfee(0),
            fixed_point: lambda.fixed_point(),
            classes: ClassTag::ALL
                .iter()
                .filter(|t| **t != ClassTag::P && t.contains(lambda))
                .map(|t| t.name())
                .collect(),
        }
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.n.to_string()),
            ("parts", self.parts.clone()),
            ("omega", self.omega.to_string()),
            ("mu", self.mu.to_string()),
            ("crank", self.crank.to_string()),
            ("mex", self.mex.to_string()),
            ("beta", self.beta.to_string()),
            ("durfee", self.durfee.to_string()),
            (
                "fixed_point",
                self.fixed_point.map_or_else(|| "none".to_string(), |i| i.to_string()),
            ),
            ("classes", self.classes.join(" ")),
        ]
    }
}

#[derive(Serialize)]
struct MapRecord {
    map: MapName,
    input: Partition,
    output: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<BijectionTrace>,
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn render_stats(lambda: &Partition, format: Format) -> Result<String> {
    let rec = StatsRecord::new(lambda);
    Ok(match format {
        Format::Text => rec
            .fields()
            .iter()
            .map(|(k, v)| format!("{k:<12}{v}\n"))
            .collect(),
        Format::Csv => {
            let (h, v): (Vec<String>, Vec<String>) =
                rec.fields().into_iter().map(|(k, v)| (k.to_string(), v)).unzip();
            csv_string(&h, &[v])?
        }
        Format::Json => json_string(&rec)?,
    })
}

fn render_table(table: &Table, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => table.render_text(),
        Format::Csv => {
            let mut header = vec!["k".to_string()];
            header.extend(table.headers.iter().cloned());
            let rows: Vec<Vec<String>> = table
                .blocks
                .iter()
                .flat_map(|b| {
                    b.rows.iter().map(move |r| {
                        let mut cells = vec![b.k.to_string()];
                        cells.extend(table.cells(r));
                        cells
                    })
                })
                .collect();
            csv_string(&header, &rows)?
        }
        Format::Json => json_string(table)?,
    })
}

fn render_map(rec: &MapRecord, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let mut s = format!("{}\n", rec.output);
            if let Some(t) = &rec.trace {
                s.push_str(&format!(" 0. {:<16} {}\n{t}\n", "input", rec.input));
            }
            s
        }
        Format::Csv => {
            let header = ["map", "input", "output", "rules"].map(String::from);
            let rules = rec.trace.as_ref().map_or_else(String::new, |t| {
                t.rules().iter().map(|r| r.label()).collect::<Vec<_>>().join(" ")
            });
            let row = vec![
                rec.map.to_string(),
                rec.input.to_string(),
                rec.output.to_string(),
                rules,
            ];
            csv_string(&header, &[row])?
        }
        Format::Json => json_string(rec)?,
    })
}

fn render_reports(reports: &[VerifyReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = if r.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!("{} [{}]: {status}\n", r.suite, params.join(" ")));
                for note in &r.notes {
                    s.push_str(&format!("  note: {note}\n"));
                }
                for cx in &r.counterexamples {
                    s.push_str(&format!("  counterexample: {cx}\n"));
                }
            }
            s
        }
        Format::Csv => {
            let header = ["suite", "passed", "counterexamples", "first_counterexample"].map(String::from);
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.suite.clone(),
                        r.passed.to_string(),
                        r.counterexamples.len().to_string(),
                        r.counterexamples.first().cloned().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_string(&header, &rows)?
        }
        Format::Json => json_string(&reports)?,
    })
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(f);
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let (text, ok) = match cli.command {
        Command::Stats { parts } => (render_stats(&parse_partition(&parts)?, cli.format)?, true),
        Command::Table { id, n } => (render_table(&build_table(id, n)?, cli.format)?, true),
        Command::Map { name, parts, trace } => {
            let input = parse_partition(&parts)?;
            let (output, steps) = apply_map(name, &input)?;
            let rec = MapRecord {
                map: name,
                input,
                output,
                trace: trace.then_some(steps),
            };
            (render_map(&rec, cli.format)?, true)
        }
        Command::Verify { suite, nmax, qmax, zmax } => {
            let budget = Budget { nmax, qmax, zmax };
            let mut reports = Vec::new();
            for s in suite.0 {
                let r = run_suite(s, budget)?;
                // timings vary between runs, so they stay off stdout
                eprintln!("{}: {:.2?}", r.suite, r.elapsed);
                reports.push(r);
            }
            let ok = reports.iter().all(|r| r.passed);
            (render_reports(&reports, cli.format)?, ok)
        }
    };
    emit(cli.out.as_ref(), &text)?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
