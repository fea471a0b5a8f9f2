//! Command-line front end.
//!
//! stdout carries data only (graph6 lines, CSV, JSON lines); everything else
//! goes to stderr. Exit codes: 0 success, 1 domain error (with a stable
//! `error:<Name>:` prefix on stderr), 2 usage error. Identical argv and seed
//! produce byte-identical stdout. The SPECGAP_TOL environment variable
//! overrides the comparison tolerance.

use crate::families::{
    self, BlockSpec, BrickKind, BrickSpec, FamiliesError, LongFlavor, PathLikeSpec, ShortKind,
};
use crate::graph::Graph;
use crate::numfmt::fmt_sig;
use crate::quotient::{self, AsymFamily};
use crate::search;
use crate::spectra;
use crate::switching;
use crate::tol::Tolerances;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::{BufRead, Write};

#[derive(Parser)]
#[command(
    name = "specgap",
    about = "Spectral-gap laboratory for regular graphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "cubic-gn")]
    CubicGn,
    #[value(name = "cubic-h")]
    CubicH,
    #[value(name = "quartic-min")]
    QuarticMin,
    #[value(name = "short-block")]
    ShortBlock,
    #[value(name = "long-block")]
    LongBlock,
    #[value(name = "small-quartic")]
    SmallQuartic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Edges,
}

#[derive(Args)]
struct OutOpt {
    /// Write the primary payload to this file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph and print it
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Family order parameter (for cubic-h this is the order of the
        /// underlying graph; the output has n + 2 vertices)
        #[arg(long)]
        n: Option<usize>,
        /// Short block name (m, m1, m2, m3, d1..d5) for --family short-block
        #[arg(long)]
        kind: Option<String>,
        /// Mirror the short block
        #[arg(long, default_value_t = false)]
        mirrored: bool,
        /// Comma-separated bricks for --family long-block, e.g. d4p,~m1p
        /// (prefix ~ mirrors a brick)
        #[arg(long)]
        bricks: Option<String>,
        /// Long block flavor: end, middle or complete
        #[arg(long)]
        flavor: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Spectral report of a graph6 graph read from stdin
    Spectrum {
        /// Read one graph6 line from stdin
        #[arg(long, default_value_t = true)]
        stdin_graph6: bool,
    },
    /// Proper-switching mu descent from a graph6 graph read from stdin
    Minimize {
        #[arg(long, default_value_t = true)]
        stdin_graph6: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Exhaustive enumeration and minimizer certification for (n, k)
    #[command(name = "enumerate-verify")]
    EnumerateVerify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Search-tree node budget
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutOpt,
    },
    /// mu and relaxation-time ratio table over a family
    Asymptotics {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated list of orders
        #[arg(long)]
        n_list: String,
        /// Emit CSV (the only supported table format)
        #[arg(long, default_value_t = true)]
        csv: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutOpt,
    },
    /// Re-encode a graph6 graph from stdin into another format
    Export {
        #[arg(long, default_value_t = true)]
        stdin_graph6: bool,
        #[arg(long, value_enum)]
        format: Format,
        #[command(flatten)]
        out: OutOpt,
    },
}

/// Domain error carrying the stable machine-readable name.
struct CliError {
    name: &'static str,
    message: String,
}

impl CliError {
    fn new(name: &'static str, message: impl Into<String>) -> CliError {
        CliError {
            name,
            message: message.into(),
        }
    }
}

macro_rules! impl_from_error {
    ($ty:ty) => {
        impl From<$ty> for CliError {
            fn from(e: $ty) -> CliError {
                CliError {
                    name: e.name(),
                    message: e.to_string(),
                }
            }
        }
    };
}

impl_from_error!(crate::graph::GraphError);
impl_from_error!(crate::spectra::SpectraError);
impl_from_error!(FamiliesError);
impl_from_error!(crate::quotient::QuotientError);
impl_from_error!(crate::switching::SwitchError);
impl_from_error!(search::SearchError);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::new("Io", e.to_string())
    }
}

/// Run the CLI against explicit streams. Returns the process exit code.
pub fn run(
    argv: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error:{}: {}", e.name, e.message);
            1
        }
    }
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        // ignore the error when a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
}

fn read_graph6(stdin: &mut dyn BufRead) -> Result<Graph, CliError> {
    let mut text = String::new();
    stdin.read_to_string(&mut text)?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| CliError::new("MalformedGraph6", "no graph6 line on stdin"))?;
    Ok(Graph::from_graph6(line.trim())?)
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => g.to_graph6(),
        Format::Dot => g.to_dot(),
        Format::Edges => g.to_edge_list(),
    }
}

fn emit(payload: &str, out: &OutOpt, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &out.out {
        Some(path) => std::fs::write(path, payload)?,
        None => stdout.write_all(payload.as_bytes())?,
    }
    Ok(())
}

fn need_n(n: Option<usize>) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::new("BadOrder", "--n is required for this family"))
}

fn parse_bricks(spec: &str) -> Result<Vec<BrickSpec>, CliError> {
    spec.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (mirrored, name) = match tok.strip_prefix('~') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            let kind: BrickKind = name.parse::<BrickKind>()?;
            Ok(BrickSpec { kind, mirrored })
        })
        .collect()
}

fn construct_graphs(
    family: Family,
    n: Option<usize>,
    kind: Option<String>,
    mirrored: bool,
    bricks: Option<String>,
    flavor: Option<String>,
) -> Result<Vec<Graph>, CliError> {
    match family {
        Family::CubicGn => Ok(vec![families::cubic_gn(need_n(n)?)?]),
        Family::CubicH => Ok(vec![families::cubic_h(need_n(n)?)?]),
        Family::QuarticMin => {
            let n = need_n(n)?;
            if n <= 10 {
                return Err(CliError::new(
                    "BadOrder",
                    format!("family defined for n >= 11; use small-quartic (got {n})"),
                ));
            }
            Ok(vec![families::conjectured_quartic_min(n)?])
        }
        Family::SmallQuartic => Ok(families::small_quartic_min(need_n(n)?)?),
        Family::ShortBlock => {
            let kind = kind
                .ok_or_else(|| CliError::new("UnknownFamily", "--kind is required"))?
                .parse::<ShortKind>()?;
            Ok(vec![families::short_block(kind, mirrored)])
        }
        Family::LongBlock => {
            let bricks =
                bricks.ok_or_else(|| CliError::new("GrammarViolation", "--bricks is required"))?;
            let flavor = flavor
                .ok_or_else(|| CliError::new("GrammarViolation", "--flavor is required"))?
                .parse::<LongFlavor>()?;
            Ok(vec![families::long_block(&parse_bricks(&bricks)?, flavor)?])
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let tol = Tolerances::from_env();
    match command {
        Command::Construct {
            family,
            n,
            kind,
            mirrored,
            bricks,
            flavor,
            format,
            out,
        } => {
            let graphs = construct_graphs(family, n, kind, mirrored, bricks, flavor)?;
            let payload: String = graphs.iter().map(|g| render(g, format)).collect();
            emit(&payload, &out, stdout)
        }
        Command::Spectrum { .. } => {
            let g = read_graph6(stdin)?;
            let report = spectra::spectral_report_with(&g, &tol)?;
            let mut s = String::new();
            s.push_str(&format!("n={}\n", g.n()));
            s.push_str(&format!("mu={}\n", fmt_sig(report.mu, 12)));
            s.push_str(&format!("adj_lambda2={}\n", fmt_sig(report.adj_lambda2, 12)));
            s.push_str(&format!("tau={}\n", fmt_sig(report.tau, 12)));
            s.push_str(&format!("degenerate_fiedler={}\n", report.degenerate_fiedler));
            stdout.write_all(s.as_bytes())?;
            Ok(())
        }
        Command::Minimize {
            seed,
            max_steps,
            out,
            ..
        } => {
            let g = read_graph6(stdin)?;
            let (end, trace) = switching::minimize_by_switching(&g, max_steps, seed)?;
            let csv = switching::trace_csv(&trace);
            match &out.out {
                Some(path) => std::fs::write(path, csv)?,
                None => stdout.write_all(csv.as_bytes())?,
            }
            stdout.write_all(end.to_graph6().as_bytes())?;
            Ok(())
        }
        Command::EnumerateVerify {
            n,
            k,
            budget,
            jobs,
            out,
        } => {
            configure_jobs(jobs);
            let cert = match k {
                3 => search::verify_cubic_theorem(n, budget, &tol)?,
                4 => search::verify_conjecture_314(n, budget, &tol)?,
                _ => search::find_minimizers(n, k, budget, &tol)?,
            };
            emit(&cert.to_json_line(), &out, stdout)
        }
        Command::Asymptotics {
            family,
            n_list,
            jobs,
            out,
            ..
        } => {
            configure_jobs(jobs);
            let family = match family {
                Family::CubicGn => AsymFamily::CubicGn,
                Family::CubicH => AsymFamily::CubicH,
                Family::QuarticMin => AsymFamily::QuarticMin,
                _ => {
                    return Err(CliError::new(
                        "UnknownFamily",
                        "asymptotics supports cubic-gn, cubic-h and quartic-min",
                    ))
                }
            };
            let orders: Vec<usize> = n_list
                .split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| {
                        CliError::new("BadOrder", format!("cannot parse order `{t}`"))
                    })
                })
                .collect::<Result<_, _>>()?;
            let rows = quotient::asymptotics_table(&orders, family, &tol)?;
            emit(&quotient::asymptotics_csv(&rows), &out, stdout)
        }
        Command::Export { format, out, .. } => {
            let g = read_graph6(stdin)?;
            emit(&render(&g, format), &out, stdout)
        }
    }
}

/// Build a path-like assembly from block tokens like `d4,m1,~d4`
/// (kept for programmatic use and tests).
pub fn parse_path_like(tokens: &str) -> Result<PathLikeSpec, FamiliesError> {
    let blocks = tokens
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (mirrored, name) = match tok.strip_prefix('~') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            let kind = name.parse::<ShortKind>()?;
            Ok(if mirrored {
                BlockSpec::short_mirrored(kind)
            } else {
                BlockSpec::short(kind)
            })
        })
        .collect::<Result<Vec<_>, FamiliesError>>()?;
    Ok(PathLikeSpec { blocks })
}
