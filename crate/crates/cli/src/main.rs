//! `ddglab` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed or a computation errored, 2 usage error.

mod commands;
mod families;
mod io;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ddglab", version, about = "Divisible design graphs: generate, verify, connectivity, switching")]
pub struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true, env = "DDGLAB_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph family and write it as graph6 (plus a JSON sidecar).
    Gen(GenArgs),
    /// Recognise each input graph as a DDG and report its structure.
    Verify(VerifyArgs),
    /// Vertex connectivity with a cut certificate for each input graph.
    Kappa(KappaArgs),
    /// Dual Seidel switching of `G[K₂]` for a strongly regular `G`.
    Switch(SwitchArgs),
    /// Recompute the headline numbers and print a PASS/FAIL table.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gamma,
    Gamma1,
    Gamma2,
    Construction1,
    Construction2,
    Construction3,
    Construction4,
    Construction5,
    Construction6,
    Paley,
    Lattice,
    LatticeComplement,
    Triangular,
    Petersen,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Level of the Γ / Hadamard towers.
    #[arg(long)]
    pub t: Option<usize>,
    /// Field size for Paley graphs.
    #[arg(long)]
    pub q: Option<usize>,
    /// Class size, lattice/triangular order, or ingredient order.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of ingredients for construction3.
    #[arg(long)]
    pub m: Option<usize>,
    /// Symmetric design file ("v k lambda" header, then incidence rows), or `fano`.
    #[arg(long)]
    pub design: Option<PathBuf>,
    /// Named strongly regular graph, e.g. `petersen` or `paley(13)`.
    #[arg(long)]
    pub srg: Option<String>,
    /// graph6 input for families built from other graphs (`-` for stdin).
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output file; the sidecar goes to `<out>.json`. Defaults to stdout without a sidecar.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// graph6 file, one graph per line (`-` or absent for stdin).
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Sidecar with predicted parameters; defaults to `<in>.json` when present.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KappaArgs {
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Cross-check against exhaustive search for graphs up to this order.
    #[arg(long, default_value_t = 12)]
    pub brute_force_max: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SwitchArgs {
    /// Named strongly regular graph.
    #[arg(long, conflicts_with = "input")]
    pub srg: Option<String>,
    /// graph6 file whose first graph is the strongly regular graph.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Where to write the switched graphs as graph6 lines.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Include level t = 3 of the Γ tower.
    #[arg(long)]
    pub deep: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

/// Bad flag combinations found after parsing; exits with code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// `Ok(false)` means a check failed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(UsageError("--threads must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    match cli.command {
        Command::Gen(args) => commands::gen(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Kappa(args) => commands::kappa(&args),
        Command::Switch(args) => commands::switch(&args),
        Command::Reproduce(args) => reproduce::run(&args),
    }
}
