use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fourpc_core::decomposer::{decompose_4pc, MergeKind, Outcome};
use fourpc_core::gallai::gallai_decomposition;
use fourpc_core::graph::{class_g_report, parity_coloring, Graph};
use fourpc_core::hanging_square::{
    check_hs_certificate, CertificateDefect, HangingSquareCertificate,
};
use fourpc_core::harness::{
    dichotomy_survey, enumerate_class_g, lemma_fuzz, mutation_fuzz, FuzzReport, MutationReport,
    SurveyOptions,
};
use fourpc_core::io::{
    emit_dot, emit_graph6, parse_edge_list, parse_graph6, Envelope, Overlay, SCHEMA_VERSION,
};
use fourpc_core::skeleton::{recognize_skeleton, SkeletonOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Parser)]
#[command(
    name = "fourpc",
    version,
    about = "Path-cycle decompositions and hanging-square certificates"
)]
struct Cli {
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
    /// Print the result as a versioned JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Print Graphviz DOT with the result drawn on the graph.
    #[arg(long, global = true, conflicts_with = "json")]
    dot: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Largest vertex count to enumerate.
    #[arg(long, global = true, default_value_t = 8)]
    nmax: usize,
    /// Include per-phase timings in survey reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report connectivity, triangle-freeness, odd distance and membership.
    Classify { input: Option<PathBuf> },
    /// Decompose into paths and cycles of length at least 4, or certify that none exists.
    Decompose { input: Option<PathBuf> },
    /// Recognize a skeleton and print a building sequence.
    Skeleton { input: Option<PathBuf> },
    /// Check a hanging-square certificate against a graph; exits 1 if it fails.
    VerifyCert {
        /// Certificate JSON, bare or as written by `decompose --json`.
        #[arg(long)]
        cert: PathBuf,
        input: Option<PathBuf>,
    },
    /// Path decomposition with at most ⌈n/2⌉ paths.
    Gallai { input: Option<PathBuf> },
    /// Write every class member with at most --nmax vertices as graph6.
    Enumerate,
    /// Survey graph6 lines read from a file or standard input.
    Survey {
        input: Option<PathBuf>,
        /// Write the per-vertex-count table as CSV.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Skip the path-decomposition pipeline.
        #[arg(long)]
        no_gallai: bool,
    },
    /// Run the merge constructions on random instances.
    Fuzz {
        /// Merge kind, or all kinds when omitted.
        #[arg(long)]
        kind: Option<MergeKind>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 200)]
        mutations: usize,
    },
}

#[derive(Serialize)]
struct CertificateCheck {
    valid: bool,
    defect: Option<CertificateDefect>,
}

#[derive(Serialize)]
struct FuzzSummary {
    lemma: FuzzReport,
    mutation: MutationReport,
}

#[derive(Serialize)]
struct ErrorDocument {
    schema_version: u32,
    error: ErrorBody,
}

#[derive(Serialize)]
struct ErrorBody {
    command: String,
    message: String,
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            Ok(s)
        }
    }
}

fn read_graph(path: &Option<PathBuf>, format: Format) -> Result<Graph> {
    let text = read_input(path)?;
    Ok(match format {
        Format::EdgeList => parse_edge_list(&text)?,
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| anyhow!("no graph6 line in input"))?;
            parse_graph6(line.trim())?
        }
    })
}

fn read_certificate(path: &PathBuf) -> Result<HangingSquareCertificate> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).context("certificate is not JSON")?;
    let inner = match value.get("result") {
        Some(result) => result.get("certificate").unwrap_or(result).clone(),
        None => value,
    };
    serde_json::from_value(inner).context("certificate JSON has the wrong shape")
}

fn emit_json<T: Serialize>(out: &mut impl Write, command: &str, result: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, &Envelope::new(command, result))?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<ExitCode> {
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Classify { input } => {
            let g = read_graph(input, cli.format)?;
            let report = class_g_report(&g);
            if cli.json {
                emit_json(out, name, &report)?;
            } else if cli.dot {
                write!(out, "{}", emit_dot(&g, Overlay::None))?;
            } else {
                writeln!(
                    out,
                    "member: {}\nconnected: {}\ntriangle-free: {}\nodd distance: {:?}",
                    report.member, report.connected, report.triangle_free, report.odd_distance
                )?;
            }
        }
        Command::Decompose { input } => {
            let g = read_graph(input, cli.format)?;
            let result = decompose_4pc(&g)?;
            if cli.json {
                emit_json(out, name, &result)?;
            } else if cli.dot {
                let overlay = match &result.outcome {
                    Outcome::Decomposition(d) => Overlay::Decomposition(d),
                    Outcome::Certificate(c) => Overlay::Certificate(c),
                };
                write!(out, "{}", emit_dot(&g, overlay))?;
            } else {
                match &result.outcome {
                    Outcome::Decomposition(d) => {
                        writeln!(out, "decomposable into {} elements", d.len())?;
                        for w in &d.elements {
                            writeln!(
                                out,
                                "{} {:?}",
                                if w.is_cycle() { "cycle" } else { "path" },
                                w.vertices
                            )?;
                        }
                    }
                    Outcome::Certificate(c) => writeln!(
                        out,
                        "hanging-square graph: skeleton with {} steps, {} bunches",
                        c.skeleton.steps.len(),
                        c.bunches.len()
                    )?,
                }
            }
        }
        Command::Skeleton { input } => {
            let g = read_graph(input, cli.format)?;
            let outcome = SkeletonOutcome::from(recognize_skeleton(&g));
            if cli.json {
                emit_json(out, name, &outcome)?;
            } else if cli.dot {
                match parity_coloring(&g) {
                    Ok(c) => write!(out, "{}", emit_dot(&g, Overlay::Coloring(&c)))?,
                    Err(_) => write!(out, "{}", emit_dot(&g, Overlay::None))?,
                }
            } else {
                match &outcome {
                    SkeletonOutcome::Skeleton { sequence } => {
                        writeln!(out, "start {:?}", sequence.start)?;
                        for step in &sequence.steps {
                            writeln!(out, "step {:?}", step.vertices)?;
                        }
                    }
                    SkeletonOutcome::NotSkeleton { reason } => writeln!(out, "{reason}")?,
                }
            }
        }
        Command::VerifyCert { cert, input } => {
            let g = read_graph(input, cli.format)?;
            let certificate = read_certificate(cert)?;
            let check = match check_hs_certificate(&g, &certificate) {
                Ok(()) => CertificateCheck {
                    valid: true,
                    defect: None,
                },
                Err(d) => CertificateCheck {
                    valid: false,
                    defect: Some(d),
                },
            };
            if cli.json {
                emit_json(out, name, &check)?;
            } else if cli.dot {
                write!(out, "{}", emit_dot(&g, Overlay::Certificate(&certificate)))?;
            } else {
                match &check.defect {
                    None => writeln!(out, "certificate verifies")?,
                    Some(d) => writeln!(out, "certificate rejected: {d}")?,
                }
            }
            if !check.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gallai { input } => {
            let g = read_graph(input, cli.format)?;
            let result = gallai_decomposition(&g)?;
            if cli.json {
                emit_json(out, name, &result)?;
            } else if cli.dot {
                write!(
                    out,
                    "{}",
                    emit_dot(&g, Overlay::Decomposition(&result.paths))
                )?;
            } else {
                writeln!(out, "{} paths (bound {})", result.paths.len(), result.bound)?;
                for w in &result.paths.elements {
                    writeln!(out, "path {:?}", w.vertices)?;
                }
            }
        }
        Command::Enumerate => {
            for g in enumerate_class_g(cli.nmax)? {
                writeln!(out, "{}", emit_graph6(&g))?;
            }
        }
        Command::Survey {
            input,
            csv,
            no_gallai,
        } => {
            let text = read_input(input)?;
            let graphs = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .enumerate()
                .map(|(i, l)| parse_graph6(l).with_context(|| format!("graph6 line {}", i + 1)))
                .collect::<Result<Vec<_>>>()?;
            let options = SurveyOptions {
                gallai: !no_gallai,
                timing: cli.timing,
            };
            let report = dichotomy_survey(&graphs, options);
            if cli.json {
                emit_json(out, name, &report)?;
            } else if *csv {
                write!(out, "{}", report.to_csv()?)?;
            } else {
                writeln!(
                    out,
                    "{} graphs, {} members, {} non-members, {} violations",
                    report.graphs,
                    report.members(),
                    report.non_members,
                    report.violations.len()
                )?;
                for c in &report.per_n {
                    writeln!(
                        out,
                        "n={}: {} members, {} hanging-square, {} decomposable",
                        c.n, c.members, c.hanging_square, c.decomposable
                    )?;
                }
            }
            if !report.violations.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Fuzz {
            kind,
            trials,
            mutations,
        } => {
            let kinds: Vec<MergeKind> = match kind {
                Some(k) => vec![*k],
                None => MergeKind::ALL.to_vec(),
            };
            let summaries: Vec<FuzzSummary> = kinds
                .into_iter()
                .map(|k| FuzzSummary {
                    lemma: lemma_fuzz(k, *trials, cli.seed),
                    mutation: mutation_fuzz(k, *mutations, cli.seed),
                })
                .collect();
            let ok = summaries
                .iter()
                .all(|s| s.lemma.all_passed() && s.mutation.all_rejected());
            if cli.json {
                emit_json(out, name, &summaries)?;
            } else {
                for s in &summaries {
                    writeln!(
                        out,
                        "{}: {}/{} valid, {}/{} mutations rejected",
                        s.lemma.kind,
                        s.lemma.passed,
                        s.lemma.trials,
                        s.mutation.rejected,
                        s.mutation.trials
                    )?;
                }
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Decompose { .. } => "decompose",
        Command::Skeleton { .. } => "skeleton",
        Command::VerifyCert { .. } => "verify-cert",
        Command::Gallai { .. } => "gallai",
        Command::Enumerate => "enumerate",
        Command::Survey { .. } => "survey",
        Command::Fuzz { .. } => "fuzz",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let doc = ErrorDocument {
                schema_version: SCHEMA_VERSION,
                error: ErrorBody {
                    command: command_name(&cli.command).to_string(),
                    message: format!("{e:#}"),
                },
            };
            eprintln!(
                "{}",
                serde_json::to_string(&doc).unwrap_or_else(|_| format!("{e:#}"))
            );
            ExitCode::from(2)
        }
    }
}
