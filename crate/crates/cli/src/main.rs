//! `reed`: batch verification of Reed's bound over graph6 inputs and
//! exhaustively enumerated classes.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a graph
//! violating the bound is found, 3 when an exact solve runs out of budget.
//! The node budget comes from `REED_NODE_BUDGET` (a positive integer, or
//! `unlimited`).

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use reed_core::{
    catalog, check_reed_with, counterexample_search_with, reed_bound, reed_color, sample_gnp,
    ClassSpec, Graph, Levels, Solver,
};
use serde_json::json;

const BUDGET_VAR: &str = "REED_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "reed", version, about = "Check Reed's bound on small graphs")]
struct Cli {
    /// Emit JSON lines (default for check, search and color).
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Emit human-oriented text (default for enumerate, sample and patterns).
    #[arg(long, global = true)]
    plain: bool,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Inputs {
    /// Graph6 strings given inline.
    graphs: Vec<String>,
    /// File with one graph6 string per line; `-` reads standard input.
    #[arg(long, value_name = "FILE")]
    input: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report Δ, ω, χ and the bound for each input graph.
    Check(Inputs),
    /// List one representative per isomorphism class of order N.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only graphs in this class.
        #[arg(long)]
        class: Option<String>,
    },
    /// Exhaustively check every class member up to order MAX_N.
    Search {
        #[arg(long)]
        class: String,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Draw G(n, p) graphs; graph i uses seed SEED + i.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Colour each input graph with Kempe-chain insertion.
    Color {
        #[command(flatten)]
        inputs: Inputs,
        /// Also compute χ exactly.
        #[arg(long)]
        exact: bool,
    },
    /// List the pattern catalog.
    Patterns,
}

enum Failure {
    Usage(String),
    Budget(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Successful runs either pass or report a violated bound.
enum Outcome {
    Clean,
    Counterexample,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(2),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn solver_from_env() -> Result<Solver, Failure> {
    match std::env::var(BUDGET_VAR) {
        Err(_) => Ok(Solver::default()),
        Ok(v) if v.eq_ignore_ascii_case("unlimited") => Ok(Solver::unbounded()),
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(limit) if limit > 0 => Ok(Solver::with_limit(limit)),
            _ => Err(Failure::Usage(format!("invalid {BUDGET_VAR} value '{v}'"))),
        },
    }
}

fn class_by_name(name: &str) -> Result<&'static ClassSpec, Failure> {
    ClassSpec::by_name(name).ok_or_else(|| Failure::Usage(format!("unknown class '{name}'")))
}

fn read_graphs(inputs: &Inputs) -> Result<Vec<Graph>, Failure> {
    let mut lines: Vec<(String, String)> = inputs
        .graphs
        .iter()
        .enumerate()
        .map(|(i, s)| (format!("argument {}", i + 1), s.clone()))
        .collect();
    if let Some(path) = &inputs.input {
        let reader: Box<dyn BufRead> = if path == "-" {
            Box::new(BufReader::new(io::stdin()))
        } else {
            let file = File::open(path)
                .map_err(|e| Failure::Usage(format!("cannot open '{path}': {e}")))?;
            Box::new(BufReader::new(file))
        };
        for (i, line) in reader.lines().enumerate() {
            lines.push((format!("line {}", i + 1), line?));
        }
    }
    lines
        .into_iter()
        .filter(|(_, s)| !s.trim().is_empty())
        .map(|(place, s)| {
            let token = s.trim();
            Graph::from_graph6(token)
                .map_err(|e| Failure::Usage(format!("malformed graph6 '{token}' ({place}): {e}")))
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let json = |default: bool| if cli.json { true } else if cli.plain { false } else { default };
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Usage(format!("cannot create '{}': {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let outcome = match &cli.command {
        Command::Check(inputs) => check(&mut out, inputs, json(true)),
        Command::Enumerate { n, class } => enumerate(&mut out, *n, class.as_deref(), json(false)),
        Command::Search { class, max_n } => search(&mut out, class, *max_n, json(true)),
        Command::Sample { n, p, seed, count } => sample(&mut out, *n, *p, *seed, *count, json(false)),
        Command::Color { inputs, exact } => color(&mut out, inputs, *exact, json(true)),
        Command::Patterns => patterns(&mut out, json(false)),
    };
    out.flush()?;
    outcome
}

fn check(out: &mut dyn Write, inputs: &Inputs, json: bool) -> Result<Outcome, Failure> {
    let solver = solver_from_env()?;
    let graphs = read_graphs(inputs)?;
    let mut outcome = Outcome::Clean;
    for g in &graphs {
        let report = check_reed_with(g, &solver)
            .map_err(|e| Failure::Budget(format!("{e} on graph '{g}'")))?;
        if json {
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        } else {
            writeln!(
                out,
                "{} n={} delta={} omega={} chi={} bound={} {}{} classes=[{}]",
                report.graph6,
                report.n,
                report.delta,
                report.omega,
                report.chi,
                report.bound,
                if report.holds { "holds" } else { "VIOLATED" },
                if report.tight { " tight" } else { "" },
                report.classes.join(",")
            )?;
        }
        if !report.holds {
            outcome = Outcome::Counterexample;
        }
    }
    Ok(outcome)
}

fn enumerate(out: &mut dyn Write, n: usize, class: Option<&str>, json: bool) -> Result<Outcome, Failure> {
    let class = class.map(class_by_name).transpose()?;
    let levels = Levels::build(n, class).map_err(|e| Failure::Usage(format!("--n {n}: {e}")))?;
    for g in levels.level(n) {
        if json {
            writeln!(out, "{}", json!({ "n": n, "graph6": g.to_graph6() }))?;
        } else {
            writeln!(out, "{g}")?;
        }
    }
    Ok(Outcome::Clean)
}

fn search(out: &mut dyn Write, class: &str, max_n: usize, json: bool) -> Result<Outcome, Failure> {
    let spec = class_by_name(class)?;
    let solver = solver_from_env()?;
    let result = counterexample_search_with(spec, max_n, &solver)
        .map_err(|e| Failure::Usage(format!("--max-n {max_n}: {e}")))?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&result)?)?;
    } else {
        writeln!(
            out,
            "{}: {} graphs of order <= {} checked, {} tight, per order {:?}",
            result.class_name, result.graphs_checked, result.n_max, result.tight, result.per_order
        )?;
        match &result.counterexample {
            Some(r) => writeln!(out, "counterexample {} chi={} bound={}", r.graph6, r.chi, r.bound)?,
            None => writeln!(out, "no counterexample")?,
        }
    }
    if let Some(g6) = &result.budget_exhausted {
        out.flush()?;
        return Err(Failure::Budget(format!("solver budget exhausted on graph '{g6}'")));
    }
    Ok(if result.counterexample.is_some() { Outcome::Counterexample } else { Outcome::Clean })
}

fn sample(
    out: &mut dyn Write,
    n: usize,
    p: f64,
    seed: u64,
    count: u64,
    json: bool,
) -> Result<Outcome, Failure> {
    for i in 0..count {
        let g = sample_gnp(n, p, seed.wrapping_add(i))
            .map_err(|e| Failure::Usage(e.to_string()))?;
        if json {
            writeln!(out, "{}", json!({ "n": n, "seed": seed.wrapping_add(i), "graph6": g.to_graph6() }))?;
        } else {
            writeln!(out, "{g}")?;
        }
    }
    Ok(Outcome::Clean)
}

fn color(out: &mut dyn Write, inputs: &Inputs, exact: bool, json: bool) -> Result<Outcome, Failure> {
    let solver = solver_from_env()?;
    for g in &read_graphs(inputs)? {
        let (coloring, palette) = reed_color(g);
        let bound = reed_bound(g.max_degree(), reed_core::clique_number(g));
        let chi = if exact {
            Some(
                solver
                    .chromatic_number(g)
                    .map_err(|e| Failure::Budget(format!("{e} on graph '{g}'")))?,
            )
        } else {
            None
        };
        if json {
            let mut obj = json!({
                "n": g.order(),
                "graph6": g.to_graph6(),
                "palette": palette,
                "bound": bound,
                "within_bound": palette <= bound,
                "coloring": coloring.colors(),
            });
            if let Some(chi) = chi {
                obj["chi"] = json!(chi);
            }
            writeln!(out, "{obj}")?;
        } else {
            let chi = chi.map(|c| format!(" chi={c}")).unwrap_or_default();
            writeln!(out, "{g} palette={palette} bound={bound}{chi}")?;
        }
    }
    Ok(Outcome::Clean)
}

fn patterns(out: &mut dyn Write, json: bool) -> Result<Outcome, Failure> {
    for p in catalog() {
        let edges: Vec<(usize, usize)> = p.graph.edges().collect();
        if json {
            writeln!(
                out,
                "{}",
                json!({ "name": p.name, "order": p.order(), "graph6": p.graph.to_graph6(), "edges": edges })
            )?;
        } else {
            let list: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "{} {} {} {}", p.name, p.order(), p.graph.to_graph6(), list.join(" "))?;
        }
    }
    Ok(Outcome::Clean)
}
