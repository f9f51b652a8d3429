//! adrg: analyze graphs for almost-distance-regularity from the command line.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adrg_core::analysis::{analyze, AnalysisError, AnalyzeOptions};
use adrg_core::characterize::Status;
use adrg_core::corpus::{self, FamilySpec};
use adrg_core::edgelist::parse_edgelist;
use adrg_core::graph::Graph;
use adrg_core::graph6::{encode_graph6, parse_graph6};
use adrg_core::tol::Tolerances;
use clap::{Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser)]
#[command(name = "adrg", version, about = "Almost-distance-regularity analyzer")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze one graph and print a report
    Analyze {
        /// Input file (graph6 record or edge-list text)
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Base tolerance for scalar and matrix tests
        #[arg(long)]
        tol: Option<f64>,
        /// Absolute tolerance for merging raw eigenvalues
        #[arg(long)]
        grouping_tol: Option<f64>,
        /// Emit the JSON report instead of the text summary
        #[arg(long)]
        json: bool,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the exploratory conjecture probes
        #[arg(long)]
        conjecture_probe: bool,
    },
    /// Generate a named graph and write it as graph6
    Generate {
        /// One of: cycle, complete, complete_bipartite, hypercube, petersen, random_regular
        family: String,
        /// Family parameters (e.g. `cycle 7`, `random_regular 20 3`)
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every .g6 file in a directory and print a summary table
    Batch {
        dir: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        grouping_tol: Option<f64>,
        /// Write one JSON report per graph into this directory
        #[arg(long)]
        json_dir: Option<PathBuf>,
        #[arg(long)]
        conjecture_probe: bool,
    },
}

const EXIT_OTHER: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_REFUSED: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("adrg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Analyze { input, format, tol, grouping_tol, json, out, conjecture_probe } => {
            let opts = build_options(tol, grouping_tol, conjecture_probe);
            let graph = read_graph(&input, format)?;
            let analysis = run_analysis(&graph, &opts, &input.display().to_string())?;
            let rendered = if json {
                Report::from_analysis(&analysis).to_json()
            } else {
                report::render_text(&analysis)
            };
            write_output(out.as_deref(), &rendered)
        }
        Cmd::Generate { family, params, seed, out } => {
            let spec = family_spec(&family, &params, seed)?;
            let graph = corpus::generate(&spec)
                .map_err(|e| Failure::new(EXIT_OTHER, e.to_string()))?;
            let mut record = encode_graph6(&graph)
                .map_err(|e| Failure::new(EXIT_OTHER, e.to_string()))?;
            record.push(b'\n');
            let text = String::from_utf8(record).expect("graph6 is ASCII");
            write_output(out.as_deref(), &text)
        }
        Cmd::Batch { dir, tol, grouping_tol, json_dir, conjecture_probe } => {
            let opts = build_options(tol, grouping_tol, conjecture_probe);
            batch(&dir, &opts, json_dir.as_deref())
        }
    }
}

fn build_options(
    tol: Option<f64>,
    grouping_tol: Option<f64>,
    conjecture_probe: bool,
) -> AnalyzeOptions {
    let mut tols = tol.map(Tolerances::with_base).unwrap_or_default();
    tols.grouping = grouping_tol;
    AnalyzeOptions { tols, conjecture_probe }
}

fn read_graph(path: &Path, format: Format) -> Result<Graph, Failure> {
    let bytes = fs::read(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot read {}: {e}", path.display())))?;
    match format {
        Format::Graph6 => {
            let records: Vec<&[u8]> = split_graph6_records(&bytes);
            match records.len() {
                0 => Err(Failure::new(EXIT_PARSE, format!("{}: no graph6 record", path.display()))),
                1 => parse_graph6(records[0]).map_err(|e| {
                    Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))
                }),
                k => Err(Failure::new(
                    EXIT_PARSE,
                    format!("{}: contains {k} graph6 records; analyze expects one (use batch)", path.display()),
                )),
            }
        }
        Format::Edgelist => {
            let text = String::from_utf8(bytes).map_err(|_| {
                Failure::new(EXIT_PARSE, format!("{}: not valid UTF-8", path.display()))
            })?;
            parse_edgelist(&text)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
        }
    }
}

fn split_graph6_records(bytes: &[u8]) -> Vec<&[u8]> {
    bytes
        .split(|&b| b == b'\n')
        .map(|line| line.strip_suffix(b"\r").unwrap_or(line))
        .filter(|line| !line.is_empty())
        .collect()
}

fn run_analysis(
    graph: &Graph,
    opts: &AnalyzeOptions,
    name: &str,
) -> Result<adrg_core::Analysis, Failure> {
    analyze(graph, opts).map_err(|e| {
        let code = match e {
            AnalysisError::Disconnected { .. }
            | AnalysisError::NotRegular { .. }
            | AnalysisError::EmptyGraph => EXIT_REFUSED,
            _ => EXIT_OTHER,
        };
        Failure::new(code, format!("{name}: analysis refused: {e}"))
    })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_IO, format!("cannot write {}: {e}", path.display()))),
    }
}

fn family_spec(family: &str, params: &[usize], seed: u64) -> Result<FamilySpec, Failure> {
    let want = |k: usize, usage: &str| -> Result<(), Failure> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::new(
                EXIT_OTHER,
                format!("family {family} expects {k} parameter(s): {usage}"),
            ))
        }
    };
    match family {
        "cycle" => {
            want(1, "cycle <n>")?;
            Ok(FamilySpec::Cycle { n: params[0] })
        }
        "complete" => {
            want(1, "complete <n>")?;
            Ok(FamilySpec::Complete { n: params[0] })
        }
        "complete_bipartite" => {
            want(1, "complete_bipartite <m> (equal parts)")?;
            Ok(FamilySpec::CompleteBipartite { half: params[0] })
        }
        "hypercube" => {
            want(1, "hypercube <k>")?;
            Ok(FamilySpec::Hypercube { dim: params[0] })
        }
        "petersen" => {
            want(0, "petersen")?;
            Ok(FamilySpec::Petersen)
        }
        "random_regular" => {
            want(2, "random_regular <n> <degree> [--seed N]")?;
            Ok(FamilySpec::RandomRegular { n: params[0], degree: params[1], seed })
        }
        other => Err(Failure::new(
            EXIT_OTHER,
            format!(
                "unknown family '{other}' (expected cycle, complete, complete_bipartite, hypercube, petersen, random_regular)"
            ),
        )),
    }
}

fn batch(dir: &Path, opts: &AnalyzeOptions, json_dir: Option<&Path>) -> Result<(), Failure> {
    let entries = fs::read_dir(dir)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|x| x == "g6").unwrap_or(false))
        .collect();
    files.sort();

    if let Some(jd) = json_dir {
        fs::create_dir_all(jd)
            .map_err(|e| Failure::new(EXIT_IO, format!("cannot create {}: {e}", jd.display())))?;
    }

    let mut analyzed = 0usize;
    let mut dr_count = 0usize;
    let mut errors: Vec<String> = Vec::new();
    for file in &files {
        let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or("graph").to_string();
        let bytes = match fs::read(file) {
            Ok(b) => b,
            Err(e) => {
                let msg = format!("{}: cannot read: {e}", file.display());
                println!("{msg}");
                errors.push(msg);
                continue;
            }
        };
        let records = split_graph6_records(&bytes);
        let multi = records.len() > 1;
        for (k, record) in records.iter().enumerate() {
            let label = if multi { format!("{stem}:{}", k + 1) } else { stem.clone() };
            match parse_graph6(record) {
                Err(e) => {
                    let msg = format!("{label}: parse error: {e}");
                    println!("{msg}");
                    errors.push(msg);
                }
                Ok(graph) => match analyze(&graph, opts) {
                    Err(e) => {
                        let msg = format!("{label}: analysis refused: {e}");
                        println!("{msg}");
                        errors.push(msg);
                    }
                    Ok(analysis) => {
                        analyzed += 1;
                        let dr = &analysis.distance_regular;
                        let verdict = match dr.status {
                            Status::Holds => "yes",
                            Status::Fails => "no",
                            Status::Indeterminate => "indeterminate",
                            Status::Unsupported => "unsupported",
                        };
                        if dr.status == Status::Holds {
                            dr_count += 1;
                        }
                        let max_slack = dr
                            .verdicts
                            .iter()
                            .map(|v| v.slack.abs())
                            .fold(f64::NAN, f64::max);
                        let slack_text = if max_slack.is_nan() {
                            "-".to_string()
                        } else {
                            format!("{max_slack:.3e}")
                        };
                        println!(
                            "{label}: n={} degree={} D={} d={} dr={verdict} max_slack={slack_text}",
                            analysis.n, analysis.degree, analysis.diameter, analysis.d
                        );
                        if let Some(jd) = json_dir {
                            let report = Report::from_analysis(&analysis).to_json();
                            let path = jd.join(format!("{}.json", label.replace(':', "_")));
                            fs::write(&path, report).map_err(|e| {
                                Failure::new(
                                    EXIT_IO,
                                    format!("cannot write {}: {e}", path.display()),
                                )
                            })?;
                        }
                    }
                },
            }
        }
    }
    println!(
        "total: files={} analyzed={analyzed} distance_regular={dr_count} errors={}",
        files.len(),
        errors.len()
    );
    Ok(())
}
