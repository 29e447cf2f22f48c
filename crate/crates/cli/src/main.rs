use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cluster_core::cli::{self, Outcome, Report, Target};
use cluster_core::explore::{DEFAULT_MAX_DEPTH, DEFAULT_MAX_SEEDS};
use cluster_core::{MutationWord, Result, Seed};

/// Exact computations with cluster algebras given by JSON seed files.
#[derive(Parser)]
#[command(name = "clusteralg", version)]
struct Args {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a seed file describes a valid seed.
    Validate { seed: PathBuf },
    /// Apply a mutation word, e.g. `--at 1,2,1`.
    Mutate {
        seed: PathBuf,
        #[arg(long)]
        at: MutationWord,
    },
    /// Breadth-first exploration of the exchange graph.
    Explore {
        seed: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SEEDS)]
        max_seeds: usize,
    },
    /// List the cluster variables found by exploration.
    Vars {
        seed: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_SEEDS)]
        max_seeds: usize,
    },
    /// Check whether the exchange matrix has a directed cycle.
    IsAcyclic { seed: PathBuf },
    /// Freeze the named initial variables, e.g. `--at x1,x3`.
    Freeze {
        seed: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<String>,
    },
    /// Cover an acyclic seed by isolated freezings.
    Cover { seed: PathBuf },
    /// Test membership of an element in A or U.
    Member {
        seed: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(long = "in", value_enum)]
        target: TargetArg,
        /// Mutation distance for U.
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        depth: usize,
    },
    /// Compare A- and U-membership on random elements.
    CheckAu {
        seed: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        rng: u64,
    },
    /// Mutate along every word up to a length and check each step is exact.
    LaurentAudit {
        seed: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Audit this many random words instead of all words.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        rng: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    #[value(name = "A")]
    A,
    #[value(name = "U")]
    U,
}

fn load(path: &PathBuf) -> Result<Seed> {
    cli::parse_seed_file(path)
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Validate { seed } => Ok(cli::validate(&load(&seed)?)),
        Command::Mutate { seed, at } => cli::mutate(&load(&seed)?, &at),
        Command::Explore { seed, max_depth, max_seeds } => cli::explore(&load(&seed)?, max_depth, max_seeds),
        Command::Vars { seed, max_depth, max_seeds } => cli::vars(&load(&seed)?, max_depth, max_seeds),
        Command::IsAcyclic { seed } => Ok(cli::is_acyclic(&load(&seed)?)),
        Command::Freeze { seed, at } => cli::freeze_names(&load(&seed)?, &at),
        Command::Cover { seed } => cli::cover(&load(&seed)?),
        Command::Member { seed, element, target, depth } => {
            let target = match target {
                TargetArg::A => Target::A,
                TargetArg::U => Target::U,
            };
            cli::member(&load(&seed)?, &element, target, depth)
        }
        Command::CheckAu { seed, samples, rng } => cli::check_au(&load(&seed)?, samples, rng),
        Command::LaurentAudit { seed, depth, random, rng } => {
            cli::audit(&load(&seed)?, depth, random.map(|count| (count, rng)))
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(report) => {
            print!("{}", report.render(args.json));
            match report.outcome {
                Outcome::Yes => ExitCode::SUCCESS,
                Outcome::No => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
