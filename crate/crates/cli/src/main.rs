use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eulerspace::commands::{self, Outcome, EXIT_ERROR};
use eulerspace::report::{BudgetConfig, OutputFormat, RunConfig};
use eulerspace_core::obstruction::Budget;

/// Euler calculus on simplicial complexes and local obstructions to real
/// algebraic realizability.
///
/// Exit codes: 0 pass, 1 error, 2 obstruction found.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args)]
struct Options {
    /// Emit structured (JSON) output.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum expression depth of the closure search.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Maximum number of distinct functions per closure search.
    #[arg(long = "max-funcs", global = true)]
    max_funcs: Option<usize>,
    /// Maximum number of candidate evaluations per closure search.
    #[arg(long = "max-candidates", global = true)]
    max_candidates: Option<usize>,
    /// Leave the P operator out of the closure search.
    #[arg(long = "no-P", global = true)]
    no_p: bool,
    /// Run the closure search on every simplex regardless of dimension.
    #[arg(long, global = true)]
    search: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a complex file and print its simplex counts.
    Validate { file: PathBuf },
    /// Run the obstruction checks that apply to the complex's dimension.
    Check { file: PathBuf },
    /// Print the invariant vector (chi mod 2, b1..b4) of a complex of dimension at most 2.
    Invariants { file: PathBuf },
    /// Print the Euler integral of a function over a complex.
    Integrate { complex: PathBuf, function: PathBuf },
    /// Write the link of a point in the simplex given by vertex labels.
    Link {
        complex: PathBuf,
        #[arg(required = true)]
        simplex: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the sign-representation bounds N and N'.
    Bounds {
        d: i64,
        k: u64,
        #[arg(allow_negative_numbers = true)]
        delta: i64,
    },
    /// Write the standard corpus into a directory.
    Corpus {
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the randomized operator-identity suite.
    Props {
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

fn config(command: &str, inputs: Vec<PathBuf>, opts: &Options) -> RunConfig {
    let d = Budget::default();
    let budget = Budget {
        max_depth: opts.depth.unwrap_or(d.max_depth),
        max_functions: opts.max_funcs.unwrap_or(d.max_functions),
        use_p: !opts.no_p,
        max_candidates: opts.max_candidates.unwrap_or(d.max_candidates),
    };
    RunConfig {
        command: command.into(),
        inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
        format: format(opts),
        force_search: opts.search,
        seed: opts.seed,
        budget: BudgetConfig::from(&budget),
    }
}

fn format(opts: &Options) -> OutputFormat {
    if opts.json {
        OutputFormat::Structured
    } else {
        OutputFormat::Text
    }
}

fn run(cli: Cli) -> eulerspace::Result<Outcome> {
    let opts = &cli.opts;
    match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Check { file } => commands::check(&file, config("check", vec![file.clone()], opts)),
        Command::Invariants { file } => commands::invariants(&file, format(opts)),
        Command::Integrate { complex, function } => commands::integrate(&complex, &function),
        Command::Link { complex, simplex, out } => commands::link(&complex, &simplex, out.as_deref()),
        Command::Bounds { d, k, delta } => commands::bounds(d, k, delta),
        Command::Corpus { out } => commands::write_corpus(&out),
        Command::Props { cases } => commands::property_suite(opts.seed, cases),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
