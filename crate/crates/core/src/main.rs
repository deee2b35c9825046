use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use psu3_ekr::gf::prime_power;
use psu3_ekr::spectra::{rows_to_csv, rows_to_json, rows_to_markdown, table_gamma, table_union, table_weighted, Graph};
use psu3_ekr::suite::{self, validate_q, Report, SuiteError, MAX_SYMBOLIC_Q};
use psu3_ekr::unitary::{build_psu3, MAX_GROUP_Q};

#[derive(Parser, Debug)]
#[command(name = "psu3", version, about = "Derangement-graph spectra and EKR checks for PSU(3,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Prime power q.
    #[arg(long, global = true)]
    q: Option<u64>,

    /// Inclusive range `a..b`; non-prime-powers inside it are skipped.
    #[arg(long = "q-range", global = true, value_parser = parse_range)]
    q_range: Option<(u64, u64)>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cross-check against the explicitly built group (q <= 5).
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalue table of one of the derangement graphs.
    Table {
        #[arg(long, value_enum, default_value_t = GraphArg::Union)]
        graph: GraphArg,
    },
    /// Enumerative checks of the triple-sum identities.
    Claims,
    /// Table identities, ratio bounds and EKR-module conditions.
    Verify,
    /// Conjugacy-class data of the explicitly built group.
    Group,
    /// Derangement-graph structure at q = 2.
    Coclique,
    /// Permutation-module checks at q = 2 and q = 3.
    ModuleCheck,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphArg {
    Gamma1,
    Gamma2,
    Gamma3,
    Union,
    Weighted,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got '{s}'"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start '{a}'"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end '{b}'"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Usage or domain errors; reported on one line with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn plain(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn render(report: &Report, format: Format) -> Output {
    let text = match format {
        Format::Json => json_text(&report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Md => report.to_markdown(),
    };
    Output { text, passed: report.passed }
}

fn single_q(cli: &Cli) -> Result<u64, Usage> {
    match (cli.q, cli.q_range) {
        (Some(q), None) => Ok(q),
        (None, None) => Err(Usage("--q is required".into())),
        _ => Err(Usage("this command takes --q, not --q-range".into())),
    }
}

fn q_list(cli: &Cli, default: (u64, u64)) -> Result<Vec<u64>, Usage> {
    match (cli.q, cli.q_range) {
        (Some(_), Some(_)) => Err(Usage("give either --q or --q-range".into())),
        (Some(q), None) => Ok(vec![validate_q(q)?]),
        (None, range) => {
            let (a, b) = range.unwrap_or(default);
            if b > MAX_SYMBOLIC_Q {
                return Err(SuiteError::AboveCap(b).into());
            }
            let qs: Vec<u64> = (a..=b).filter(|&q| prime_power(q).is_some()).collect();
            if qs.is_empty() {
                return Err(Usage(format!("no prime powers in {a}..{b}")));
            }
            Ok(qs)
        }
    }
}

fn cmd_table(cli: &Cli, graph: GraphArg) -> Result<Output, Usage> {
    let q = validate_q(single_q(cli)?)?;
    let rows = match graph {
        GraphArg::Gamma1 => table_gamma(q, Graph::Gamma1)?,
        GraphArg::Gamma2 => table_gamma(q, Graph::Gamma2)?,
        GraphArg::Gamma3 => table_gamma(q, Graph::Gamma3)?,
        GraphArg::Union => table_union(q)?,
        GraphArg::Weighted => table_weighted(q)?.rows,
    };
    let text = match cli.format {
        Format::Json => json_text(&rows_to_json(&rows)),
        Format::Csv => rows_to_csv(&rows),
        Format::Md => rows_to_markdown(&rows),
    };
    Ok(Output::plain(text))
}

fn cmd_verify(cli: &Cli) -> Result<Output, Usage> {
    let qs = match (cli.q, cli.q_range) {
        (None, None) => return Err(Usage("--q or --q-range is required".into())),
        _ => q_list(cli, (2, MAX_SYMBOLIC_Q))?,
    };
    if cli.oracle {
        if let Some(&q) = qs.iter().find(|&&q| q > MAX_GROUP_Q) {
            return Err(SuiteError::OracleCap(q).into());
        }
    }
    if let [q] = qs[..] {
        return Ok(render(&suite::run_verify(q, cli.oracle)?, cli.format));
    }
    let mut merged: Option<Report> = None;
    let mut details = serde_json::Map::new();
    for q in qs {
        let r = suite::run_verify(q, cli.oracle)?;
        details.insert(q.to_string(), r.details.clone());
        merged = Some(match merged {
            None => r,
            Some(mut m) => {
                m.passed &= r.passed;
                m.checks.extend(r.checks);
                m
            }
        });
    }
    let mut report = merged.expect("nonempty range");
    report.details = serde_json::Value::Object(details);
    Ok(render(&report, cli.format))
}

fn cmd_group(cli: &Cli) -> Result<Output, Usage> {
    let q = validate_q(single_q(cli)?)?;
    if q > MAX_GROUP_Q {
        return Err(SuiteError::OracleCap(q).into());
    }
    let export = build_psu3(q)?.export();
    let text = match cli.format {
        Format::Json => json_text(&serde_json::to_value(&export)?),
        Format::Csv => {
            let mut s = String::from("class,size,fix,derangement\n");
            for (i, c) in export.classes.iter().enumerate() {
                let _ = writeln!(s, "{i},{},{},{}", c.size, c.fix, c.derangement);
            }
            s
        }
        Format::Md => {
            let mut s = format!(
                "## PSU(3,{}) on {} points, order {}\n\n| class | size | fix | derangement |\n|---|---|---|---|\n",
                export.q, export.n, export.order
            );
            for (i, c) in export.classes.iter().enumerate() {
                let _ = writeln!(s, "| {i} | {} | {} | {} |", c.size, c.fix, c.derangement);
            }
            s
        }
    };
    Ok(Output::plain(text))
}

fn run(cli: &Cli) -> Result<Output, Usage> {
    match &cli.command {
        Command::Table { graph } => cmd_table(cli, *graph),
        Command::Claims => Ok(render(&suite::run_claims(&q_list(cli, (2, MAX_SYMBOLIC_Q))?)?, cli.format)),
        Command::Verify => cmd_verify(cli),
        Command::Group => cmd_group(cli),
        Command::Coclique => Ok(render(&suite::run_coclique(single_q(cli)?)?, cli.format)),
        Command::ModuleCheck => Ok(render(&suite::run_module_check(single_q(cli)?)?, cli.format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("usage error"));
            return ExitCode::from(2);
        }
    };
    let out = match run(&cli) {
        Ok(out) => out,
        Err(Usage(msg)) => {
            eprintln!("error: {}", msg.lines().next().unwrap_or(""));
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(out.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

