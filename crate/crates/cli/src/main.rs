mod commands;
mod output;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dlchi_core::combinatorics::{Partition, PermutationW};
use dlchi_core::flags::{GroupElementSpec, DEFAULT_BUDGET};
use dlchi_core::pipeline::SamplingMode;

use commands::{parse_eigenvalues, CountRequest};
use output::{Format, Report};
use verify::VerifyRequest;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(dlchi_core::Error),
}

impl From<dlchi_core::Error> for CliError {
    fn from(e: dlchi_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

/// Euler characteristics X_ρ^λ of twisted Deligne–Lusztig varieties for
/// GL_n, by five combinatorial methods and by point counts over finite
/// fields.
#[derive(Parser, Debug)]
#[command(name = "dlchi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// X_ρ^λ by enumeration, recursion, scalar product, induced character
    /// and Green polynomial at 1.
    Chi {
        /// Cycle type, e.g. 3,2,2,2,1.
        #[arg(long, value_parser = parse_partition)]
        rho: Partition,
        /// Jordan type, e.g. 7,3.
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// The matrix X_ρ^λ over all partitions of n.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// A Green polynomial Q_ρ^λ(q), or all of them for --n.
    Green {
        #[arg(long, conflicts_with_all = ["rho", "lambda"])]
        n: Option<usize>,
        #[arg(long, requires = "lambda", value_parser = parse_partition)]
        rho: Option<Partition>,
        #[arg(long, requires = "rho", value_parser = parse_partition)]
        lambda: Option<Partition>,
    },
    /// Character table of S_n.
    CharTable {
        #[arg(long)]
        n: usize,
    },
    /// Point counts |𝒴_{w,g}(F_Q)| over one field.
    Count(CountArgs),
    /// Run the verification checks over a scope of cases.
    Verify(VerifyArgs),
    /// Hecke algebra relations and trace identities over one field.
    HeckeCheck {
        #[arg(long)]
        n: usize,
        /// Field order.
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
}

#[derive(Args, Debug)]
struct CountArgs {
    /// Field order, a prime power.
    #[arg(long)]
    q: u64,
    /// Group element as eigenvalue slots, e.g. "(2)|(1)".
    #[arg(long, conflicts_with = "lambda")]
    spec: Option<GroupElementSpec>,
    /// Unipotent group element of this Jordan type.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    /// Size check for --spec/--lambda.
    #[arg(long)]
    n: Option<usize>,
    /// Single permutation in cycle notation; all of S_n when omitted.
    #[arg(long)]
    w: Option<String>,
    /// `first` or comma-separated element codes, one per slot.
    #[arg(long, default_value = "first")]
    eigenvalues: String,
    /// Maximum number of flags to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// cross-size or power-tower.
    #[arg(long, default_value = "cross-size")]
    mode: String,
    /// Base field order for power-tower mode.
    #[arg(long)]
    q: Option<u32>,
    /// Maximum number of flags per field.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Restrict to cases, e.g. "w=(12),lambda=(2,1,1)"; keys w, rho, lambda, spec.
    #[arg(long)]
    only: Option<String>,
    /// Every element of S_n rather than one per conjugacy class.
    #[arg(long)]
    all_elements: bool,
    #[arg(long, default_value = "first")]
    eigenvalues: String,
}

/// Comma-separated parts in weakly decreasing order, optionally in parentheses.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let p: Partition = s.parse().map_err(|e: dlchi_core::Error| e.to_string())?;
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let given: Vec<&str> = body.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    let canonical: Vec<String> = p.parts().iter().map(usize::to_string).collect();
    if given != canonical {
        return Err(format!("{s:?} is not in decreasing order; write {p}"));
    }
    Ok(p)
}

fn sampling_mode(mode: &str, q: Option<u32>) -> Result<SamplingMode, CliError> {
    match (mode.parse::<SamplingMode>()?, q) {
        (SamplingMode::PowerTower { .. }, Some(q)) => Ok(SamplingMode::PowerTower { q }),
        (m, _) => Ok(m),
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Chi { rho, lambda } => commands::chi(&rho, &lambda),
        Command::Table { n } => commands::table(n),
        Command::Green { n, rho, lambda } => commands::green(n, rho.zip(lambda)),
        Command::CharTable { n } => commands::char_table(n),
        Command::Count(a) => {
            let spec = match (a.spec, a.lambda) {
                (Some(s), _) => s,
                (None, Some(l)) => GroupElementSpec::unipotent(&l),
                (None, None) => return Err(CliError::Usage("count needs --spec or --lambda".into())),
            };
            if let Some(n) = a.n {
                if n != spec.n() {
                    return Err(CliError::Usage(format!("spec {spec} has size {}, not {n}", spec.n())));
                }
            }
            let w = a.w.map(|s| PermutationW::parse_cycles(&s, spec.n())).transpose()?;
            commands::count(&CountRequest {
                q: a.q,
                spec,
                w,
                eigenvalues: parse_eigenvalues(&a.eigenvalues)?,
                budget: a.budget,
            })
        }
        Command::Verify(a) => verify::verify(&VerifyRequest {
            n: a.n,
            mode: sampling_mode(&a.mode, a.q)?,
            budget: a.budget,
            eigenvalues: parse_eigenvalues(&a.eigenvalues)?,
            only: a.only,
            all_elements: a.all_elements,
        }),
        Command::HeckeCheck { n, q } => commands::hecke_check(n, q),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("DLCHI_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("DLCHI_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(cli.command)).and_then(|mut report| {
        report.set("format", cli.format.as_str());
        report.set(
            "out",
            cli.out.as_ref().map(|p| p.display().to_string().into()).unwrap_or(serde_json::Value::Null),
        );
        let bytes = report.render(cli.format).map_err(CliError::Usage)?;
        match &cli.out {
            Some(path) => std::fs::write(path, &bytes)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| CliError::Usage(e.to_string()))?,
        }
        Ok(report.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
