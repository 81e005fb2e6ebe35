//! Command-line front end for the greedy longest path heuristic.
//!
//! [`run`] parses arguments and dispatches to the subcommands, writing to
//! caller-supplied streams so it can be driven from tests. Exit codes: 0 on
//! success, 1 for usage, parse, and validation failures, 2 for requests that
//! cannot be served (empty graph, exact-solver caps and budgets).

pub mod bench;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path as FsPath, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use longpath::{
    create, exact_longest_path, generate, parse_graph, parse_path, solve, validate_path, Error,
    Family, Graph, GraphFormat, OracleLimits, OracleMethod, PathViolation, SolveConfig,
    TieBreakPolicy, Variant,
};

use crate::bench::{write_suite_csv, BenchError, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "longpath", version, about = "Greedy longest simple paths in undirected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    AllPairs,
    Farthest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TieBreakArg {
    First,
    Lowest,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Dfs,
    Dp,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the greedy heuristic and print the longest path found.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all-pairs")]
        variant: VariantArg,
        #[arg(long = "tie-break", value_enum, default_value = "first")]
        tie_break: TieBreakArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Splice unused vertices into the winning path.
        #[arg(long)]
        improve: bool,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        /// Write the winning root's weighted graph as `u v w` lines.
        #[arg(long = "dump-weights", value_name = "FILE")]
        dump_weights: Option<PathBuf>,
        /// Only use roots 0..K.
        #[arg(long = "max-roots", value_name = "K")]
        max_roots: Option<usize>,
        /// Process roots on all cores.
        #[arg(long)]
        parallel: bool,
    },
    /// Solve exactly by exhaustive search (small graphs only).
    Exact {
        input: PathBuf,
        #[arg(long = "max-n", default_value_t = 18)]
        max_n: usize,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, value_enum, default_value = "dfs")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Generate a graph: path N | cycle N | complete N | complete_bipartite A B |
    /// grid R C | dodecahedron | gnp N P | random_tree N.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Check that a path file holds a simple path of a graph.
    Verify {
        graph: PathBuf,
        path: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Run a benchmark suite (built-in: smoke, scaling, full; or a TOML file).
    Bench {
        suite: String,
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyGraph | Error::OracleRefused { .. } | Error::OracleTimeout { .. } => {
                EXIT_INFEASIBLE
            }
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Solve { source, instance } => {
                let mut f = Failure::from(source);
                f.message = format!("{instance}: {}", f.message);
                f
            }
            other => Failure::usage(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve {
            input,
            variant,
            tie_break,
            seed,
            improve,
            format,
            dump_weights,
            max_roots,
            parallel,
        } => {
            let policy = match tie_break {
                TieBreakArg::First => TieBreakPolicy::FirstSeen,
                TieBreakArg::Lowest => TieBreakPolicy::LowestId,
                TieBreakArg::Random => TieBreakPolicy::SeededRandom { seed },
            };
            let cfg = SolveConfig {
                variant: match variant {
                    VariantArg::AllPairs => Variant::AllPairs,
                    VariantArg::Farthest => Variant::Farthest,
                },
                policy,
                improve,
                max_roots,
                parallel,
            };
            cmd_solve(&input, format.into(), &cfg, dump_weights.as_deref(), out, err)
        }
        Command::Exact { input, max_n, budget, method, format } => {
            cmd_exact(&input, format.into(), max_n, budget, method, out, err)
        }
        Command::Gen { family, seed, output, format } => {
            cmd_gen(&family, seed, output.as_deref(), format.into(), out)
        }
        Command::Verify { graph, path, format } => cmd_verify(&graph, &path, format.into(), out),
        Command::Bench { suite, csv } => cmd_bench(&suite, csv.as_deref(), out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_file(path: &FsPath) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &FsPath, format: GraphFormat, err: &mut dyn Write) -> Result<Graph, Failure> {
    let bytes = read_file(path)?;
    let parsed = parse_graph(&bytes, format).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    for w in &parsed.warnings {
        writeln!(err, "warning: {}: {w}", path.display())?;
    }
    Ok(parsed.graph)
}

fn cmd_solve(
    input: &FsPath,
    format: GraphFormat,
    cfg: &SolveConfig,
    dump_weights: Option<&FsPath>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let g = load_graph(input, format, err)?;
    let result = solve(&g, cfg)?;
    if let Err(v) = validate_path(&g, &result.best) {
        return Err(Failure::usage(format!("internal error: result failed verification: {v}")));
    }
    if let Some(path) = dump_weights {
        let wg = create(&g, result.root)?;
        let mut buf = Vec::new();
        wg.write_weights(&mut buf)?;
        fs::write(path, buf).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    writeln!(out, "length: {}", result.length)?;
    writeln!(out, "{}", result.best)?;
    writeln!(
        err,
        "root: {} start: {} found: {} searches: {} time: {:.3} ms",
        result.root,
        result.start,
        result.found_length,
        result.stats.searches_run,
        result.stats.wall_time.as_secs_f64() * 1e3
    )?;
    Ok(())
}

fn cmd_exact(
    input: &FsPath,
    format: GraphFormat,
    max_n: usize,
    budget: Option<f64>,
    method: MethodArg,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let time_budget = match budget {
        None => None,
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::usage(format!("invalid budget {s}"))),
    };
    let g = load_graph(input, format, err)?;
    let limits = OracleLimits {
        max_vertices: max_n,
        time_budget,
        method: match method {
            MethodArg::Dfs => OracleMethod::Dfs,
            MethodArg::Dp => OracleMethod::SubsetDp,
        },
    };
    match exact_longest_path(&g, &limits) {
        Ok(path) => {
            writeln!(out, "length: {}", path.length())?;
            writeln!(out, "{path}")?;
            Ok(())
        }
        Err(Error::OracleTimeout { best }) => {
            writeln!(err, "budget exceeded; best so far is not proven optimal")?;
            writeln!(err, "length: {}", best.length())?;
            writeln!(err, "{best}")?;
            Err(Failure { code: EXIT_INFEASIBLE, message: "time budget exceeded".into() })
        }
        Err(e @ Error::OracleRefused { .. }) => {
            Err(Failure { code: EXIT_INFEASIBLE, message: format!("refused: {e}") })
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_gen(
    family: &[String],
    seed: u64,
    output: Option<&FsPath>,
    format: GraphFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let family = Family::from_args(family)?;
    let g = generate(&family, seed)?;
    let mut buf = Vec::new();
    match format {
        GraphFormat::EdgeList => longpath::io::write_edge_list(&g, &mut buf)?,
        GraphFormat::Dimacs => longpath::io::write_dimacs(&g, &mut buf)?,
    }
    match output {
        Some(path) => {
            fs::write(path, buf).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => out.write_all(&buf)?,
    }
    Ok(())
}

fn cmd_verify(graph: &FsPath, path: &FsPath, format: GraphFormat, out: &mut dyn Write) -> CmdResult {
    let g = load_graph(graph, format, &mut io::sink())?;
    let bytes = read_file(path)?;
    let p = parse_path(&bytes)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    match validate_path(&g, &p) {
        Ok(()) => {
            writeln!(out, "ok: length {}", p.length())?;
            Ok(())
        }
        Err(v) => {
            let kind = match v {
                PathViolation::Empty => "empty path",
                PathViolation::OutOfRange { .. } => "vertex out of range",
                PathViolation::RepeatedVertex { .. } => "repeated vertex",
                PathViolation::MissingEdge { .. } => "missing edge",
            };
            Err(Failure::usage(format!("{kind}: {v}")))
        }
    }
}

fn cmd_bench(suite: &str, csv: Option<&FsPath>, out: &mut dyn Write) -> CmdResult {
    let suite = match Suite::builtin(suite) {
        Some(s) => s,
        None => {
            let path = FsPath::new(suite);
            if !path.exists() {
                return Err(Failure::usage(format!(
                    "{suite}: not a built-in suite (smoke, scaling, full) or a readable file"
                )));
            }
            let text = String::from_utf8(read_file(path)?)
                .map_err(|_| Failure::usage(format!("{suite}: not UTF-8")))?;
            Suite::from_toml(&text).map_err(|e| Failure::usage(format!("{suite}: {e}")))?
        }
    };
    match csv {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            let records = write_suite_csv(&suite, io::BufWriter::new(file))?;
            writeln!(out, "wrote {} rows to {}", records.len(), path.display())?;
        }
        None => {
            write_suite_csv(&suite, &mut *out)?;
        }
    }
    Ok(())
}
