use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hamprism::cycles::{find_edge_dominating_cycle_with_budget, EdcPreference, EdcResult};
use hamprism::graph::io::{parse_dimacs, parse_graph6, write_graph6};
use hamprism::harness::{
    enumerate_corpus, explore_edc_toughness, read_graph6_stream, run_sweep, GeneratorSpec,
    OnBadLine, SweepCheck, SweepOptions,
};
use hamprism::invariants::{
    check_condition, is_k_chordal_with_limit, toughness, vertex_connectivity, Chordality, Condition,
};
use hamprism::parity_triangle::{find_parity_triangle, ParityTriangleError};
use hamprism::prism_ham::{
    is_prism_hamiltonian_with_budget, prism, verify_theorem_with_options, HamiltonVerdict,
    PipelineOptions,
};
use hamprism::search::DEFAULT_NODE_BUDGET;
use hamprism::{Cycle, Graph};

const OK: u8 = 0;
const VIOLATION: u8 = 1;
const INPUT_ERROR: u8 = 2;
const INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hamprism",
    version,
    about = "Exact checks for Hamiltonian prisms of small graphs"
)]
struct Cli {
    /// Node budget for each exhaustive search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    Dimacs,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file, or `-` for stdin.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Theorem,
    Lemma2,
    Corollaries,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Toughness, connectivity, chordality levels and degree-sum conditions.
    Analyze(Input),
    /// Search for an edge-dominating cycle, longest first.
    Edc(Input),
    /// Find a parity triangle on an odd cycle.
    Triangle {
        #[command(flatten)]
        input: Input,
        /// Cycle as comma-separated vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
    },
    /// Build the prism, optionally searching it for a Hamiltonian cycle.
    Prism {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ham: bool,
    },
    /// Run the full hypothesis/conclusion pipeline on one graph.
    Verify(Input),
    /// Generate a graph in graph6.
    Gen {
        /// `named:<name>`, `chordal:n=..,edges=..`, `cycle:n=..,chords=a-b;c-d`
        /// or `filtered5:n=..,p=..`.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit this many graphs with consecutive seeds.
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Sweep a corpus of connected graphs.
    Sweep {
        #[arg(long)]
        max_n: usize,
        /// graph6 file, one graph per line, instead of the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Abort on the first unusable corpus line instead of skipping it.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Toughness extremes of 5-chordal graphs with no edge-dominating cycle.
    Explore {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn emit(v: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(input: &Input) -> Result<Graph> {
    let text = read_text(&input.file)?;
    let looks_dimacs = text
        .lines()
        .any(|l| l.starts_with("p ") || l.starts_with("c ") || l.starts_with("e "));
    let g = match (input.format, looks_dimacs) {
        (Format::Dimacs, _) | (Format::Auto, true) => parse_dimacs(&text)?,
        _ => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines.next().context("no graph in input")?;
            if lines.next().is_some() {
                bail!("expected a single graph6 line");
            }
            parse_graph6(first)?
        }
    };
    Ok(g)
}

fn options(cli: &Cli) -> PipelineOptions {
    PipelineOptions {
        node_budget: cli.budget,
        ..PipelineOptions::default()
    }
}

fn load_corpus(
    max_n: usize,
    corpus: &Option<PathBuf>,
    strict: bool,
) -> Result<(Vec<Graph>, String)> {
    match corpus {
        None => Ok((
            enumerate_corpus(max_n)?,
            format!("builtin connected graphs, n <= {max_n}"),
        )),
        Some(path) => {
            let file =
                fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
            let policy = if strict {
                OnBadLine::Fail
            } else {
                OnBadLine::Skip
            };
            let stream = read_graph6_stream(BufReader::new(file), max_n, policy)?;
            for problem in &stream.skipped {
                eprintln!("skipped: {problem}");
            }
            Ok((stream.graphs, format!("{}, n <= {max_n}", path.display())))
        }
    }
}

fn chordality_json(g: &Graph, k: usize, limit: usize) -> Value {
    match is_k_chordal_with_limit(g, k, limit) {
        Ok(Chordality::KChordal) => json!(true),
        Ok(Chordality::Hole(w)) => json!({ "hole": w.cycle.to_string() }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let opts = options(cli);
    match &cli.command {
        Command::Analyze(input) => {
            let g = load(input)?;
            let t = toughness(&g);
            let conditions: serde_json::Map<String, Value> = [
                Condition::Delta3,
                Condition::Veldman(3),
                Condition::Corollary2Literal,
                Condition::Yoshimoto,
            ]
            .into_iter()
            .map(|c| {
                let r = check_condition(&g, c);
                let extremal = r
                    .extremal
                    .as_ref()
                    .map(|x| json!({ "tuple": x.tuple.to_string(), "sum": x.sum }));
                (
                    c.to_string(),
                    json!({ "holds": r.holds, "extremal": extremal }),
                )
            })
            .collect();
            emit(&json!({
                "graph6": write_graph6(&g),
                "n": g.n(),
                "m": g.m(),
                "connected": g.is_connected(),
                "connectivity": vertex_connectivity(&g),
                "toughness": t.value.to_string(),
                "toughness_separator": t.separator.to_string(),
                "toughness_degenerate": t.degenerate,
                "chordal3": chordality_json(&g, 3, opts.hole_search_limit),
                "chordal4": chordality_json(&g, 4, opts.hole_search_limit),
                "chordal5": chordality_json(&g, 5, opts.hole_search_limit),
                "conditions": conditions,
            }))?;
            Ok(OK)
        }
        Command::Edc(input) => {
            let g = load(input)?;
            match find_edge_dominating_cycle_with_budget(
                &g,
                EdcPreference::LongestFirst,
                opts.node_budget,
            ) {
                Ok(EdcResult::Found(c)) => {
                    emit(&json!({
                        "graph6": write_graph6(&g),
                        "found": true,
                        "cycle": c.to_string(),
                        "length": c.len(),
                        "parity": if c.is_odd() { "odd" } else { "even" },
                    }))?;
                    Ok(OK)
                }
                Ok(EdcResult::Absent { last_rejected }) => {
                    emit(&json!({
                        "graph6": write_graph6(&g),
                        "found": false,
                        "last_rejected": last_rejected.map(|(c, e)| json!({ "cycle": c.to_string(), "uncovered": e.to_string() })),
                    }))?;
                    Ok(OK)
                }
                Err(e) => {
                    emit(
                        &json!({ "graph6": write_graph6(&g), "found": Value::Null, "error": e.to_string() }),
                    )?;
                    Ok(INCONCLUSIVE)
                }
            }
        }
        Command::Triangle { input, cycle } => {
            let g = load(input)?;
            let c = Cycle::new(&g, cycle)?;
            match find_parity_triangle(&g, &c) {
                Ok(pt) => {
                    let trace: Vec<String> =
                        pt.trace.to_string().lines().map(String::from).collect();
                    emit(&json!({
                        "graph6": write_graph6(&g),
                        "cycle": c.to_string(),
                        "triangle": pt.witness.describe(&c),
                        "m": pt.witness.apex,
                        "j": pt.witness.edge_pos,
                        "q": pt.witness.q,
                        "fallback": pt.fallback,
                        "trace": trace,
                    }))?;
                    Ok(OK)
                }
                Err(
                    e @ (ParityTriangleError::EvenCycle(_) | ParityTriangleError::InvalidCycle(_)),
                ) => Err(e.into()),
                Err(e) => {
                    let chordal5 = is_k_chordal_with_limit(&g, 5, opts.hole_search_limit)
                        .ok()
                        .map(|c| c.holds());
                    emit(&json!({
                        "graph6": write_graph6(&g),
                        "cycle": c.to_string(),
                        "triangle": Value::Null,
                        "reason": e.to_string(),
                        "chordal5": chordal5,
                    }))?;
                    Ok(match chordal5 {
                        Some(true) => VIOLATION,
                        Some(false) => OK,
                        None => INCONCLUSIVE,
                    })
                }
            }
        }
        Command::Prism { input, ham } => {
            let g = load(input)?;
            let p = prism(&g)?;
            let mut record = json!({
                "graph6": write_graph6(&g),
                "prism_graph6": write_graph6(p.graph()),
                "n": p.graph().n(),
                "m": p.graph().m(),
            });
            let mut code = OK;
            if *ham {
                let ph = is_prism_hamiltonian_with_budget(&g, opts.node_budget);
                record["prism_ham"] = json!(match &ph.verdict {
                    HamiltonVerdict::Certified(_) => "certified",
                    HamiltonVerdict::Refuted => "refuted",
                    HamiltonVerdict::Unknown(_) => "unknown",
                });
                record["prism_cycle"] = json!(ph.certificate_vertices().map(|vs| vs
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")));
                if ph.verdict.decided().is_none() {
                    code = INCONCLUSIVE;
                }
            }
            emit(&record)?;
            Ok(code)
        }
        Command::Verify(input) => {
            let g = load(input)?;
            let report = verify_theorem_with_options(&g, opts);
            emit(&report.record())?;
            Ok(if report.is_counterexample() {
                VIOLATION
            } else if report.inconclusive() {
                INCONCLUSIVE
            } else {
                OK
            })
        }
        Command::Gen {
            family,
            seed,
            count,
        } => {
            let spec: GeneratorSpec = family.parse()?;
            let mut out = io::stdout().lock();
            for s in *seed..seed.saturating_add(*count) {
                writeln!(out, "{}", write_graph6(&spec.generate(s)?))?;
            }
            Ok(OK)
        }
        Command::Sweep {
            max_n,
            corpus,
            strict,
            check,
            jobs,
        } => {
            let (graphs, description) = load_corpus(*max_n, corpus, *strict)?;
            let check = match check {
                Check::Theorem => SweepCheck::Theorem,
                Check::Lemma2 => SweepCheck::Lemma2,
                Check::Corollaries => SweepCheck::Corollaries,
                Check::All => SweepCheck::All,
            };
            let report = run_sweep(
                &graphs,
                &description,
                SweepOptions {
                    check,
                    jobs: *jobs,
                    pipeline: opts,
                },
            );
            emit(&report)?;
            Ok(if report.has_violation() {
                VIOLATION
            } else if report.has_inconclusive() {
                INCONCLUSIVE
            } else {
                OK
            })
        }
        Command::Explore {
            max_n,
            corpus,
            strict,
        } => {
            let (graphs, _) = load_corpus(*max_n, corpus, *strict)?;
            let rows = explore_edc_toughness(&graphs, opts);
            for row in &rows {
                emit(row)?;
            }
            Ok(if rows.iter().any(|r| r.inconclusive > 0) {
                INCONCLUSIVE
            } else {
                OK
            })
        }
    }
}
