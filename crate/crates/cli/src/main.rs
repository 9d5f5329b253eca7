//! `syzlab`: build canonical-curve and K3-type models, compute exact
//! graded Betti tables, and run the verification suites.
//!
//! Output contract: stdout carries only deterministic results (corpus
//! listings, tables, NDJSON check rows); progress and diagnostics go to
//! stderr.  Exit codes: 0 success / all checks passed, 1 at least one
//! check reported failure, 2 input or schema error, 3 construction
//! failed.  `SYZLAB_THREADS` caps internal parallelism.

mod app;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "syzlab",
    version,
    about = "Exact syzygies of canonical curves and K3-type rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in corpus entries and their metadata.
    Corpus,
    /// Build a corpus entry and write its model file.
    Build {
        /// Corpus entry name (see `corpus`).
        #[arg(long)]
        entry: String,
        /// Field to build over, e.g. `gf:1009`, `gf2e:4`, `q`
        /// (default: the entry's field).
        #[arg(long)]
        field: Option<String>,
        /// Construction seed (default: the entry's seed).
        #[arg(long)]
        seed: Option<u64>,
        /// Output path for the model JSON.
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute and print the graded Betti table of a model file.
    Betti {
        /// Model file (plane-model or ideal JSON).
        #[arg(long = "in")]
        input: PathBuf,
        /// Cutoff degree for the ring pieces (4..=8).
        #[arg(long, default_value_t = 4)]
        qmax: usize,
        /// Emit JSON instead of the text grid.
        #[arg(long)]
        json: bool,
    },
    /// Run check suites against a model file (one NDJSON row per check).
    Check {
        /// Model file (plane-model or ideal JSON).
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma list of noether, petri, duality, hilbert, green.
        #[arg(long)]
        suite: String,
        /// Clifford index for the green suite: `auto` reads the file's
        /// metadata; an integer overrides it.
        #[arg(long, default_value = "auto")]
        cliff: String,
    },
    /// Compare a surface ring with its hyperplane-section curve.
    Lefschetz {
        /// Surface corpus entry name (k3_g3, k3_g4, k3_g5).
        #[arg(long)]
        entry: String,
        /// Field to build over (default: the entry's field).
        #[arg(long)]
        field: Option<String>,
        /// Construction seed (default: the entry's seed).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the characteristic-2 genus-7 experiment.
    #[command(name = "char2-demo")]
    Char2Demo {
        /// Number of independent trials per field.
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Base seed; each trial derives its own stream.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Optional CSV output path for per-trial timings.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn init_thread_pool() {
    if let Ok(text) = std::env::var("SYZLAB_THREADS") {
        match text.parse::<usize>() {
            Ok(n) if n >= 1 => {
                // Ignore the error if a pool already exists; the cap is
                // best-effort.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("SYZLAB_THREADS={text:?} is not a positive integer; ignoring"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_thread_pool();
    let outcome = match &cli.command {
        Command::Corpus => app::cmd_corpus(),
        Command::Build {
            entry,
            field,
            seed,
            out,
        } => app::cmd_build(entry, field.as_deref(), *seed, out),
        Command::Betti { input, qmax, json } => app::cmd_betti(input, *qmax, *json),
        Command::Check {
            input,
            suite,
            cliff,
        } => app::cmd_check(input, suite, cliff),
        Command::Lefschetz { entry, field, seed } => {
            app::cmd_lefschetz(entry, field.as_deref(), *seed)
        }
        Command::Char2Demo { trials, seed, csv } => {
            app::cmd_char2_demo(*trials, *seed, csv.as_deref())
        }
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(app::exit_code(&err) as u8)
        }
    }
}
