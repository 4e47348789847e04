//! Command-line front end.
//!
//! Every subcommand writes JSON lines (graph6 lines for `gen`) in input
//! order, so output is byte-identical across runs and `--jobs` settings.
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::analyze::{
    check_solver_pairs, kempe_classes, par_map, structure_report, verify_graph, PairSelection,
    Summary, Verdict, VerdictRecord,
};
use crate::coloring::{validate, Coloring, Colour, DEFAULT_CEILING};
use crate::generate::{gen_cubic, MAX_GENERATED_N};
use crate::graph::{edgelist, graph6, iso, Graph};
use crate::solver::{solve, SolveError};

#[derive(Parser, Debug)]
#[command(
    name = "kempe",
    version,
    about = "Kempe classes and constructive Kempe-change witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure of each graph: connectivity, separator, motifs, solver route.
    Analyze(CorpusArgs),
    /// Kempe classes of all proper colourings of each graph.
    Classes {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Constructive witness between two 3-colourings of one cubic graph.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Start and target colourings, as `{"k":3,"colors":[..]}` or `[..]`.
        #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"], required = true)]
        pair: Vec<String>,
        /// Also write the witness alone to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-graph verdicts for the single-class statement on cubic graphs.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Cross-check the solver on this many seeded random pairs per graph.
        #[arg(long, default_value_t = 0, conflicts_with = "all_pairs")]
        pairs: usize,
        /// Cross-check the solver on every ordered pair.
        #[arg(long)]
        all_pairs: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All connected cubic graphs on `n` vertices, one per line in graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// graph6 file (one graph per line) or edge list; `-` reads stdin.
    #[arg(long, required_unless_present = "gen", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generated corpus, e.g. `--gen 6,8,10`.
    #[arg(long, value_delimiter = ',')]
    gen: Vec<usize>,
    /// Drop graphs from the corpus: `k4`, `prism`.
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Give up on graphs with more candidate colourings than this.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: u64,
}

#[derive(Debug)]
enum Failure {
    /// Bad arguments or unreadable input.
    Usage(String),
    /// The run completed but something did not verify.
    Verification,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Results go to `out` unless redirected with `--out`; diagnostics go
/// to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            if let Failure::Usage(msg) = &f {
                let _ = writeln!(err, "error: {msg}");
            }
            f.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Analyze(c) => {
            let graphs = load_corpus(&c)?;
            let lines = par_map(c.jobs, &graphs, |g| to_line(&structure_report(g)));
            emit(&c.out, out, &lines)
        }
        Command::Classes { corpus: c, k } => {
            if k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            let graphs = load_corpus(&c)?;
            let results = par_map(c.jobs, &graphs, |g| {
                kempe_classes(g, k, c.ceiling).map(|(r, _)| to_line(&r))
            });
            let lines = results
                .into_iter()
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?;
            emit(&c.out, out, &lines)
        }
        Command::Solve {
            input,
            pair,
            out: wfile,
        } => cmd_solve(&input, &pair, wfile, out, err),
        Command::Verify {
            corpus: c,
            pairs,
            all_pairs,
            seed,
        } => {
            let graphs = load_corpus(&c)?;
            let selection = match (all_pairs, pairs) {
                (true, _) => Some(PairSelection::All),
                (false, 0) => None,
                (false, count) => Some(PairSelection::Sampled { count, seed }),
            };
            let indexed: Vec<(usize, &Graph)> = graphs.iter().enumerate().collect();
            let records = par_map(c.jobs, &indexed, |&(i, g)| {
                verify_one(g, i, c.ceiling, selection)
            });
            let summary = Summary::from_records(&records);
            let mut lines: Vec<String> = records.iter().map(to_line).collect();
            lines.push(to_line(&json!({
                "summary": summary.to_string(),
                "graphs": summary.graphs,
                "pass": summary.pass,
                "fail": summary.fail,
                "skipped": summary.skipped,
            })));
            emit(&c.out, out, &lines)?;
            if summary.all_pass() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Gen { n, out: file } => {
            let graphs = gen_cubic(n).map_err(|e| {
                usage(format!(
                    "{e} (larger corpora: ingest a graph6 file, n <= {MAX_GENERATED_N} here)"
                ))
            })?;
            let lines: Vec<String> = graphs.iter().map(graph6::encode).collect();
            emit(&file, out, &lines)
        }
    }
}

fn verify_one(
    g: &Graph,
    index: usize,
    ceiling: u64,
    selection: Option<PairSelection>,
) -> VerdictRecord {
    let mut rec = verify_graph(g, ceiling);
    let Some(sel) = selection else { return rec };
    if rec.verdict != Verdict::Pass || rec.colorings == 0 {
        return rec;
    }
    let sel = match sel {
        PairSelection::Sampled { count, seed } => PairSelection::Sampled {
            count,
            seed: seed.wrapping_add(index as u64),
        },
        all => all,
    };
    let checked = kempe_classes(g, 3, ceiling)
        .map_err(|e| e.to_string())
        .and_then(|(_, p)| check_solver_pairs(g, &p, sel));
    match checked {
        Ok(count) => rec.solver_pairs = Some(count),
        Err(reason) => {
            rec.verdict = Verdict::Fail;
            rec.reason = Some(format!("solver: {reason}"));
        }
    }
    rec
}

fn cmd_solve(
    input: &PathBuf,
    pair: &[String],
    wfile: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let graphs = read_graphs(input)?;
    let [g] = graphs.as_slice() else {
        return Err(usage(format!(
            "solve needs exactly one graph, {} has {}",
            input.display(),
            graphs.len()
        )));
    };
    let alpha = parse_colouring(&pair[0])?;
    let beta = parse_colouring(&pair[1])?;
    let g6 = graph6::encode(g);
    let solution = match solve(g, &alpha, &beta) {
        Ok(s) => s,
        Err(SolveError::PrismObstruction(..)) => {
            let line = to_line(
                &json!({ "graph6": g6, "equivalent": false, "reason": "the prism colourings lie in different Kempe classes" }),
            );
            emit(&None, out, &[line])?;
            return Err(Failure::Verification);
        }
        Err(SolveError::Internal(msg)) => {
            let _ = writeln!(err, "solver failure: {msg}");
            return Err(Failure::Verification);
        }
        Err(e) => return Err(usage(e)),
    };
    if let Some(path) = &wfile {
        fs::write(path, to_line(&solution.sequence) + "\n")
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    // the gate: nothing is reported as a witness unless it replays to beta
    match validate(g, &solution.sequence) {
        Ok(end) if end == beta => {}
        Ok(end) => {
            let _ = writeln!(err, "witness ends at {end}, not {beta}");
            return Err(Failure::Verification);
        }
        Err(e) => {
            let _ = writeln!(err, "witness does not replay: {e}");
            return Err(Failure::Verification);
        }
    }
    let line = to_line(&json!({
        "graph6": g6,
        "equivalent": true,
        "valid": true,
        "witness": solution.sequence,
        "trace": solution.trace,
    }));
    emit(&None, out, &[line])
}

fn parse_colouring(text: &str) -> Result<Coloring, Failure> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| usage(format!("colouring {text:?}: {e}")))?;
    if v.is_array() {
        let colors: Vec<Colour> =
            serde_json::from_value(v).map_err(|e| usage(format!("colouring {text:?}: {e}")))?;
        return Coloring::new(3, colors).map_err(usage);
    }
    let c: Coloring =
        serde_json::from_value(v).map_err(|e| usage(format!("colouring {text:?}: {e}")))?;
    Coloring::new(c.k, c.colors).map_err(usage)
}

fn load_corpus(c: &CorpusArgs) -> Result<Vec<Graph>, Failure> {
    let mut graphs = Vec::new();
    if let Some(path) = &c.input {
        graphs = read_graphs(path)?;
    }
    for &n in &c.gen {
        graphs.extend(gen_cubic(n).map_err(usage)?);
    }
    for name in &c.exclude {
        let drop: fn(&Graph) -> bool = match name.to_ascii_lowercase().as_str() {
            "k4" => iso::is_k4,
            "prism" => iso::is_prism,
            other => {
                return Err(usage(format!(
                    "unknown --exclude {other:?}; expected k4 or prism"
                )))
            }
        };
        graphs.retain(|g| !drop(g));
    }
    Ok(graphs)
}

/// Reads graph6 lines, or a single edge list when the first line is `n m`.
fn read_graphs(path: &PathBuf) -> Result<Vec<Graph>, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(usage)?;
    } else {
        text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let looks_like_edges = {
        let f: Vec<&str> = first.split_whitespace().collect();
        f.len() == 2 && f.iter().all(|x| x.parse::<usize>().is_ok())
    };
    let name = path.display();
    if looks_like_edges {
        Ok(vec![
            edgelist::parse(&text).map_err(|e| usage(format!("{name}: {e}")))?
        ])
    } else {
        graph6::parse_many(&text).map_err(|(line, e)| usage(format!("{name}:{line}: {e}")))
    }
}

fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialise")
}

fn emit(file: &Option<PathBuf>, out: &mut dyn Write, lines: &[String]) -> Result<(), Failure> {
    let mut text = lines.join("\n");
    if !lines.is_empty() {
        text.push('\n');
    }
    match file {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("kempe").chain(args.iter().copied()),
            &mut o,
            &mut e,
        );
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn gen_counts() {
        let (code, out, _) = call(&["gen", "--n", "8"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        assert_eq!(call(&["gen", "--n", "7"]).0, 2);
        assert_eq!(call(&["gen", "--n", "12"]).0, 2);
    }

    #[test]
    fn verify_generated_corpus() {
        let (code, out, _) = call(&["verify", "--gen", "6,8,10", "--jobs", "2"]);
        assert_eq!(code, 0);
        let last: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(last["summary"], "26 graphs, 26 PASS");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["classes"]).0, 2);
        assert_eq!(call(&["classes", "--input", "/nonexistent/file.g6"]).0, 2);
        assert_eq!(call(&["analyze", "--gen", "6", "--exclude", "cube"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn colourings_parse_in_both_forms() {
        assert_eq!(
            parse_colouring("[1,2,3]").unwrap(),
            Coloring::new(3, vec![1, 2, 3]).unwrap()
        );
        assert_eq!(
            parse_colouring(r#"{"k":4,"colors":[4,1]}"#).unwrap(),
            Coloring::new(4, vec![4, 1]).unwrap()
        );
        assert!(parse_colouring("[0]").is_err());
        assert!(parse_colouring("nope").is_err());
    }
}
