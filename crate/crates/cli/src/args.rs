use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover_ent::statevector::{Reflection, DEFAULT_QUBIT_CAP, TOTAL_QUBIT_CAP};
use grover_ent::SearchParams;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum UsageError {
    #[error("{flag}: {message}")]
    Flag { flag: &'static str, message: String },
    /// Already-rendered clap output (help text or a parse error).
    #[error("{text}")]
    Clap { text: String, is_help: bool },
}

fn flag_err(flag: &'static str, message: impl Into<String>) -> UsageError {
    UsageError::Flag {
        flag,
        message: message.into(),
    }
}

#[derive(Parser, Debug)]
#[command(name = "grover-ent", version, about = "Entanglement dynamics of Grover search")]
struct Cli {
    #[command(subcommand)]
    command: RawCommand,
}

#[derive(Subcommand, Debug)]
enum RawCommand {
    /// Run k Grover iterations on n qubits and report the final state
    Simulate(SimulateArgs),
    /// Compare closed-form and partial-trace concurrence over cuts and steps
    Validate(ValidateArgs),
    /// Concurrence sweep (1) or oracle gain against reflection drop (2)
    Figure(FigureArgs),
    /// Query lower-bound experiment over every single-target instance
    Optimality(OptimalityArgs),
    /// Multi-register search from a GHZ-type start state
    Parallel(ParallelArgs),
    /// One-step search with a quarter of the database marked
    Quarter(QuarterArgs),
    /// Integrate the speedup condition and compare with the closed form
    Speedup(SpeedupArgs),
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long)]
    n: u32,
    /// Comma-separated indices or count:K for 0..K
    #[arg(long)]
    marked: String,
    /// Iteration count or "auto" for the optimal count
    #[arg(long, default_value = "auto")]
    iters: String,
    /// Also report concurrence across the first-l cut
    #[arg(long)]
    l: Option<u32>,
    /// Write amplitudes as CSV
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    marked: String,
    /// "all" or comma-separated l values
    #[arg(long, default_value = "all")]
    partitions: String,
    /// Defaults to twice the optimal iteration count
    #[arg(long)]
    kmax: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FigureArgs {
    #[arg(long, value_parser = ["1", "2"])]
    which: String,
    /// Database size; above 2^14 or not a power of two selects analytic mode
    #[arg(long = "N")]
    size: Option<u64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    marked: Option<String>,
    /// Cut after the first l qubits; omitted means eta = 1
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    kmax: Option<u64>,
    /// Add the simulated concurrence column (figure 1)
    #[arg(long)]
    numeric: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OptimalityArgs {
    #[arg(long, default_value_t = 3)]
    nmin: u32,
    #[arg(long, default_value_t = 8)]
    nmax: u32,
    /// Largest T; defaults to 2k* per n
    #[arg(long)]
    tmax: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ParallelArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: u32,
    #[arg(long)]
    marked: String,
    #[arg(long, value_enum, default_value_t = VariantArg::Global)]
    variant: VariantArg,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum VariantArg {
    Global,
    Local,
}

#[derive(Args, Debug)]
struct QuarterArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    marked: Option<String>,
}

#[derive(Args, Debug)]
struct SpeedupArgs {
    #[arg(long)]
    a0: f64,
    /// Defaults to the first maximum
    #[arg(long)]
    kmax: Option<u64>,
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Iterations {
    Optimal,
    Fixed(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum PartitionChoice {
    All,
    List(Vec<u32>),
}

/// Where the search problem for a figure comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    /// `N` and `r` only.
    Analytic { size: u64, r: u64 },
    /// Explicit qubits and marked set.
    Numeric { n: u32, marked: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Simulate {
        n: u32,
        marked: Vec<u64>,
        iters: Iterations,
        l: Option<u32>,
    },
    Validate {
        n: u32,
        marked: Vec<u64>,
        partitions: PartitionChoice,
        k_max: Option<u64>,
    },
    Figure {
        which: u8,
        problem: Problem,
        l: Option<u32>,
        k_max: Option<u64>,
        numeric: bool,
    },
    Optimality {
        ns: Vec<u32>,
        t_max: Option<u64>,
    },
    Parallel {
        n: u32,
        l: u32,
        marked: Vec<u64>,
        reflection: Reflection,
    },
    Quarter {
        n: u32,
        marked: Option<Vec<u64>>,
    },
    Speedup {
        a0: f64,
        k_max: Option<u64>,
        h: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub out: Option<PathBuf>,
}

/// `"3,12"` or `"count:K"`.
pub fn parse_marked(text: &str) -> Result<Vec<u64>, UsageError> {
    let text = text.trim();
    if let Some(count) = text.strip_prefix("count:") {
        let k: u64 = count
            .parse()
            .map_err(|_| flag_err("--marked", format!("bad count {count:?}")))?;
        return Ok((0..k).collect());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| flag_err("--marked", format!("bad index {t:?}")))
        })
        .collect()
}

fn parse_partitions(text: &str) -> Result<PartitionChoice, UsageError> {
    if text.trim() == "all" {
        return Ok(PartitionChoice::All);
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| flag_err("--partitions", format!("bad cut {t:?}")))
        })
        .collect::<Result<_, _>>()
        .map(PartitionChoice::List)
}

fn check_problem(flag: &'static str, n: u32, marked: &[u64]) -> Result<(), UsageError> {
    if n > DEFAULT_QUBIT_CAP {
        return Err(flag_err("--n", format!("{n} exceeds the simulation cap of {DEFAULT_QUBIT_CAP}")));
    }
    SearchParams::new(n, marked)
        .map(|_| ())
        .map_err(|e| flag_err(flag, e.to_string()))
}

fn check_cut(l: u32, n: u32) -> Result<(), UsageError> {
    if l == 0 || l >= n {
        return Err(flag_err("--l", format!("need 1 <= l <= {}", n.saturating_sub(1))));
    }
    Ok(())
}

/// Parses and validates a full argument vector (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError::Clap {
        is_help: matches!(
            e.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        ),
        text: e.render().to_string(),
    })?;
    match cli.command {
        RawCommand::Simulate(a) => {
            let marked = parse_marked(&a.marked)?;
            check_problem("--marked", a.n, &marked)?;
            if let Some(l) = a.l {
                check_cut(l, a.n)?;
            }
            let iters = if a.iters == "auto" {
                Iterations::Optimal
            } else {
                Iterations::Fixed(
                    a.iters
                        .parse()
                        .map_err(|_| flag_err("--iters", "expected a count or \"auto\""))?,
                )
            };
            Ok(RunConfig {
                command: Command::Simulate {
                    n: a.n,
                    marked,
                    iters,
                    l: a.l,
                },
                out: a.out,
            })
        }
        RawCommand::Validate(a) => {
            let marked = parse_marked(&a.marked)?;
            check_problem("--marked", a.n, &marked)?;
            let partitions = parse_partitions(&a.partitions)?;
            if let PartitionChoice::List(ls) = &partitions {
                for &l in ls {
                    check_cut(l, a.n).map_err(|_| flag_err("--partitions", format!("cut {l} invalid for n = {}", a.n)))?;
                }
            }
            Ok(RunConfig {
                command: Command::Validate {
                    n: a.n,
                    marked,
                    partitions,
                    k_max: a.kmax,
                },
                out: a.out,
            })
        }
        RawCommand::Figure(a) => parse_figure(a),
        RawCommand::Optimality(a) => {
            if a.nmin == 0 || a.nmin > a.nmax || a.nmax > 8 {
                return Err(flag_err("--nmax", "need 1 <= nmin <= nmax <= 8"));
            }
            Ok(RunConfig {
                command: Command::Optimality {
                    ns: (a.nmin..=a.nmax).collect(),
                    t_max: a.tmax,
                },
                out: a.out,
            })
        }
        RawCommand::Parallel(a) => {
            let marked = parse_marked(&a.marked)?;
            if a.l == 0 || a.n.saturating_mul(a.l) > TOTAL_QUBIT_CAP {
                return Err(flag_err("--l", format!("need 1 <= n*l <= {TOTAL_QUBIT_CAP}")));
            }
            check_problem("--marked", a.n, &marked)?;
            let reflection = match a.variant {
                VariantArg::Global => Reflection::Global,
                VariantArg::Local => Reflection::Local,
            };
            Ok(RunConfig {
                command: Command::Parallel {
                    n: a.n,
                    l: a.l,
                    marked,
                    reflection,
                },
                out: None,
            })
        }
        RawCommand::Quarter(a) => {
            if a.n < 2 || a.n > DEFAULT_QUBIT_CAP {
                return Err(flag_err("--n", format!("need 2 <= n <= {DEFAULT_QUBIT_CAP}")));
            }
            let marked = a.marked.as_deref().map(parse_marked).transpose()?;
            if let Some(m) = &marked {
                check_problem("--marked", a.n, m)?;
            }
            Ok(RunConfig {
                command: Command::Quarter { n: a.n, marked },
                out: None,
            })
        }
        RawCommand::Speedup(a) => {
            if !(a.a0 > 0.0 && a.a0 < 1.0) {
                return Err(flag_err("--a0", "must lie in (0, 1)"));
            }
            if !(a.h > 0.0 && a.h <= 0.1) {
                return Err(flag_err("--h", "must lie in (0, 0.1]"));
            }
            Ok(RunConfig {
                command: Command::Speedup {
                    a0: a.a0,
                    k_max: a.kmax,
                    h: a.h,
                },
                out: a.out,
            })
        }
    }
}

fn parse_figure(a: FigureArgs) -> Result<RunConfig, UsageError> {
    let which = if a.which == "1" { 1 } else { 2 };
    let problem = match (a.size, a.n) {
        (Some(_), Some(_)) => return Err(flag_err("--N", "give either --N or --n, not both")),
        (None, None) => return Err(flag_err("--N", "one of --N or --n is required")),
        (Some(size), None) => {
            let simulable = size.is_power_of_two() && size <= 1u64 << DEFAULT_QUBIT_CAP;
            if !simulable {
                if a.marked.is_some() {
                    return Err(flag_err("--marked", "not available in analytic mode (N above 2^14 or not a power of two)"));
                }
                if a.numeric {
                    return Err(flag_err("--numeric", "not available in analytic mode (N above 2^14 or not a power of two)"));
                }
                let r = a.r.ok_or_else(|| flag_err("--r", "required in analytic mode"))?;
                SearchParams::analytic(size, r).map_err(|e| flag_err("--r", e.to_string()))?;
                Problem::Analytic { size, r }
            } else {
                numeric_problem(size.trailing_zeros(), a.r, a.marked.as_deref())?
            }
        }
        (None, Some(n)) => numeric_problem(n, a.r, a.marked.as_deref())?,
    };
    let qubits = match &problem {
        Problem::Numeric { n, .. } => Some(*n),
        Problem::Analytic { size, .. } if size.is_power_of_two() => Some(size.trailing_zeros()),
        Problem::Analytic { .. } => None,
    };
    if let Some(l) = a.l {
        let n = qubits.ok_or_else(|| flag_err("--l", "needs a power-of-two N"))?;
        check_cut(l, n)?;
    }
    if a.numeric && (which != 1 || a.l.is_none()) {
        return Err(flag_err("--numeric", "only for --which 1 with --l"));
    }
    if let Problem::Numeric { marked, .. } = &problem {
        if a.l.is_some() && marked.len() != 1 {
            return Err(flag_err("--l", "qubit cuts need a single marked item; omit --l for eta = 1"));
        }
    }
    Ok(RunConfig {
        command: Command::Figure {
            which,
            problem,
            l: a.l,
            k_max: a.kmax,
            numeric: a.numeric,
        },
        out: a.out,
    })
}

fn numeric_problem(n: u32, r: Option<u64>, marked: Option<&str>) -> Result<Problem, UsageError> {
    let marked = match (r, marked) {
        (Some(_), Some(_)) => return Err(flag_err("--r", "give either --r or --marked, not both")),
        (None, None) => return Err(flag_err("--r", "one of --r or --marked is required")),
        (Some(r), None) => (0..r).collect(),
        (None, Some(text)) => parse_marked(text)?,
    };
    check_problem("--marked", n, &marked)?;
    Ok(Problem::Numeric { n, marked })
}
