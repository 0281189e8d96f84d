use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use starzd::analysis::invariant_report;
use starzd::graph::{build_variant, Variant, ZdGraph};
use starzd::harness::{default_families, run_suite, CheckId, CheckSummary, SuiteBounds, SuiteReport, DEFAULT_MAX_ORDER};
use starzd::ring::StarRing;
use starzd_cli::emit::{emit_dot, emit_edges, emit_graph_json, emit_report};
use starzd_cli::figures::{find_figure, FIGURES};
use starzd_cli::spec::build_ring_spec;

#[derive(Parser)]
#[command(name = "starzd", version, about = "Zero-divisor graphs of finite rings with involution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Dot,
    Json,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Print a zero-divisor graph.
    Graph {
        spec: String,
        #[arg(long, default_value = "gamma-prime", value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, value_enum, default_value = "dot")]
        out: OutFormat,
    },
    /// Print a JSON invariant report for a zero-divisor graph.
    Invariants {
        spec: String,
        #[arg(long, default_value = "gamma-prime", value_parser = parse_variant)]
        variant: Variant,
    },
    /// Run theorem checks over the default ring families.
    Verify {
        /// `all`, or a comma-separated list of check ids such as `T04,T06`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Rings with more elements than this are skipped.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print one of the reference graphs as DOT.
    Figure {
        #[arg(value_parser = figure_names())]
        name: String,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn figure_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(FIGURES.iter().map(|f| f.name))
}

fn parse_suite(s: &str) -> Result<Vec<CheckId>, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    s.split(',').map(|id| id.trim().parse::<CheckId>()).collect()
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn ring_and_graph(spec: &str, variant: Variant) -> Result<(StarRing, ZdGraph), ExitCode> {
    let sr = build_ring_spec(spec).map_err(usage_error)?;
    let g = build_variant(&sr, variant).map_err(usage_error)?;
    Ok((sr, g))
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    check: CheckId,
    description: &'static str,
    #[serde(flatten)]
    counts: &'a CheckSummary,
    dead: bool,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    passed: bool,
    max_order: usize,
    summary: Vec<SummaryRow<'a>>,
    results: &'a [starzd::harness::TheoremCheckResult],
}

fn print_verify(report: &SuiteReport, max_order: usize, json: bool) {
    let rows: Vec<SummaryRow> = report
        .summary
        .iter()
        .map(|(id, s)| SummaryRow {
            check: *id,
            description: id.description(),
            counts: s,
            dead: s.is_dead(),
        })
        .collect();
    if json {
        let doc = VerifyDoc {
            passed: report.passed(),
            max_order,
            summary: rows,
            results: &report.results,
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("plain data serializes"));
        return;
    }
    for r in report.failures() {
        let witness = r.witness.as_ref().map(|w| serde_json::to_string(w).unwrap()).unwrap_or_default();
        println!("FAIL {} {}: {} {}", r.id, r.ring, r.detail, witness);
    }
    for row in &rows {
        let flag = if row.counts.fail > 0 {
            "FAIL"
        } else if row.dead {
            "DEAD"
        } else {
            "ok"
        };
        println!(
            "{} {:<4} pass {:>4}  fail {:>4}  vacuous {:>4}  skipped {:>4}  {}",
            row.check, flag, row.counts.pass, row.counts.fail, row.counts.vacuous, row.counts.skipped, row.description
        );
    }
    println!("{}", if report.passed() { "PASS" } else { "FAIL" });
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Graph { spec, variant, out } => {
            let (sr, g) = match ring_and_graph(&spec, variant) {
                Ok(pair) => pair,
                Err(code) => return code,
            };
            let text = match out {
                OutFormat::Dot => emit_dot(&sr, &g),
                OutFormat::Json => emit_graph_json(&sr, &g) + "\n",
                OutFormat::Edges => emit_edges(&sr, &g),
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Command::Invariants { spec, variant } => {
            let (sr, g) = match ring_and_graph(&spec, variant) {
                Ok(pair) => pair,
                Err(code) => return code,
            };
            println!("{}", emit_report(&sr, &g, &invariant_report(g.graph())));
            ExitCode::SUCCESS
        }
        Command::Verify { suite, max_order, json } => {
            let ids = match parse_suite(&suite) {
                Ok(ids) => ids,
                Err(e) => return usage_error(e),
            };
            let report = run_suite(&default_families(), &ids, &SuiteBounds { max_order });
            print_verify(&report, max_order, json);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Figure { name } => {
            print!("{}", find_figure(&name).expect("validated by clap").dot());
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
