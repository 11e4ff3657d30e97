use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use micolor::graph::{encode_graph6, graph_to_dot, make_named, parse_graph6, NAMED_FAMILIES};
use micolor::harness::{run_suite, validate_bundle, CertificateBundle, Limits, Source, Suite};
use micolor::reduce::extract_reducible;
use micolor::structure::random_gallai_tree;
use micolor::{DegreeTable, Graph};

#[derive(Parser)]
#[command(name = "micolor", version, about = "Run independent-cover suites, generate graphs, check certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite (or `all`) over a corpus.
    Suite(SuiteArgs),
    /// Print a named graph.
    Gen {
        /// One of the named families, or `gallai_tree` (blocks, max block size, seed).
        family: String,
        params: Vec<usize>,
        #[arg(long, conflicts_with = "dot")]
        g6: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Certificate tools.
    Cert {
        #[command(subcommand)]
        command: CertCommand,
    },
}

#[derive(Subcommand)]
enum CertCommand {
    /// Recheck a certificate bundle (`{"graph6", "f", "certificate"}`).
    Validate { file: PathBuf },
    /// Extract a reducible subgraph certificate for a graph6 string.
    Extract {
        graph6: String,
        /// Comma-separated list sizes; defaults to the degrees.
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<i64>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Summary,
}

#[derive(clap::Args)]
struct SuiteArgs {
    /// Suite name, or `all`.
    name: String,
    /// `enumerate:nN`, `random:N`, or a graph6 file. Defaults per suite.
    #[arg(long)]
    source: Option<String>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    jobs: Option<usize>,
    /// Write JSONL records here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Summary)]
    format: Format,
    /// Sampled instances for cut-lemma.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Allow sizes above the suite ceiling.
    #[arg(long)]
    allow_oversize: bool,
    /// Record per-graph wall-clock times.
    #[arg(long)]
    timings: bool,
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Suite(a) => suite(a),
        Command::Gen { family, params, g6: _, dot } => generate(&family, &params, dot),
        Command::Cert { command: CertCommand::Validate { file } } => validate(&file),
        Command::Cert { command: CertCommand::Extract { graph6, f } } => extract(&graph6, f),
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn suite(a: SuiteArgs) -> CliResult {
    let suites: Vec<Suite> = if a.name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.name.parse().map_err(|e| format!("{e}"))?]
    };
    let explicit: Option<Source> = a.source.as_deref().map(str::parse).transpose().map_err(|e| format!("{e}"))?;
    let limits = Limits {
        max_n: a.max_n,
        allow_oversize: a.allow_oversize,
        seed: a.seed,
        jobs: a.jobs,
        samples: a.samples,
        timings: a.timings,
    };
    let mut jsonl = String::new();
    let mut summaries = Vec::new();
    let mut all_pass = true;
    for s in suites {
        let source = explicit.clone().unwrap_or_else(|| s.default_source());
        let report = run_suite(s, &source, &limits).map_err(|e| format!("{s}: {e}"))?;
        all_pass &= report.passed();
        jsonl.push_str(&report.to_jsonl());
        summaries.push(report.summary);
    }
    if let Some(path) = &a.out {
        fs::write(path, &jsonl).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let mut stdout = io::stdout().lock();
    let printed = match a.format {
        Format::Jsonl if a.out.is_none() => stdout.write_all(jsonl.as_bytes()),
        Format::Jsonl => Ok(()),
        Format::Summary => summaries.iter().try_for_each(|s| {
            writeln!(
                stdout,
                "{:<18} {} total={} passed={} failed={} skipped={} source={}",
                s.suite,
                if s.pass { "PASS" } else { "FAIL" },
                s.total,
                s.passed,
                s.failed,
                s.skipped,
                s.source
            )
        }),
    };
    match printed {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.to_string()),
        _ => {}
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn generate(family: &str, params: &[usize], dot: bool) -> CliResult {
    let g: Graph = if family == "gallai_tree" {
        let [blocks, size, seed] = params else {
            return Err("gallai_tree takes blocks, max block size and seed".into());
        };
        random_gallai_tree(*blocks, *size, *seed as u64)
    } else if NAMED_FAMILIES.contains(&family) {
        make_named(family, params).map_err(|e| e.to_string())?
    } else {
        return Err(format!(
            "unknown family `{family}`; expected one of {}, gallai_tree",
            NAMED_FAMILIES.join(", ")
        ));
    };
    if dot {
        print!("{}", graph_to_dot(&g));
    } else {
        println!("{}", encode_graph6(&g).map_err(|e| e.to_string())?);
    }
    Ok(ExitCode::SUCCESS)
}

fn validate(file: &PathBuf) -> CliResult {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let v = validate_bundle(&text).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string(&v).expect("serializable"));
    Ok(if v.valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn extract(graph6: &str, f: Option<Vec<i64>>) -> CliResult {
    let g = parse_graph6(graph6).map_err(|e| e.to_string())?;
    let f = match f {
        Some(v) => DegreeTable::new(v),
        None => DegreeTable::degrees(&g),
    };
    match extract_reducible(&g, &f, None) {
        Ok(certificate) => {
            let b = CertificateBundle { graph6: graph6.trim().to_string(), f, certificate };
            println!("{}", serde_json::to_string(&b).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ micolor::Error::HypothesisNotMet { .. }) => {
            eprintln!("{e}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.to_string()),
    }
}
