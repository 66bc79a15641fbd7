mod cache;
mod commands;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::input::GraphArgs;

#[derive(Debug, Parser)]
#[command(name = "signix", version, about = "Exact spectra of signed complete graphs (K_n, H^-)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormulaArg {
    Star,
    Q1,
    Qst,
    U1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LemmaArg {
    Star,
    Q1,
    Qst,
    U1,
    Quotient,
    Switching,
    DiffQst,
    DiffU1,
    DiffStar,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Unicyclic,
    Cactus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CorollaryArg {
    Star,
    Qst,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Certified bracket around the largest eigenvalue.
    Index {
        #[command(flatten)]
        input: GraphArgs,
        /// Maximum bracket width (exact: `1e-12`, `1/1024`, ...).
        #[arg(long, default_value = "1e-12")]
        width: String,
    },
    /// Exact comparison of two indices; prints Less, Equal or Greater.
    Compare {
        /// `family:<dsl>,n:<n>`, `graph:<path>` or a path.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Closed-form characteristic polynomial of a family.
    Formula {
        #[arg(long, value_enum)]
        name: FormulaArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Checks a closed form or identity for every valid parameter up to --n-max.
    VerifyLemma {
        #[arg(long, value_enum)]
        name: LemmaArg,
        #[arg(long)]
        n_max: usize,
    },
    /// All index maximizers over a class of negative subgraphs.
    SearchMax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Number of cycles (cactus class only).
        #[arg(long, default_value_t = 0)]
        cycles: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Checks that U_1 maximizes the index among unicyclic graphs.
    VerifyTheorem {
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Checks one of the two strict comparison corollaries.
    VerifyCorollary {
        #[arg(long, value_enum)]
        which: CorollaryArg,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Tests whether G_t maximizes the index among cacti.
    CheckConjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cycles: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Samples relocations allowed by the top eigenvector and checks the index.
    CheckRotation {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Checks eigenvalue interlacing on random induced subgraphs.
    CheckInterlacing {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Quotient matrix and factorized polynomial of a sign partition document.
    Quotient {
        #[arg(long)]
        partition: PathBuf,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
