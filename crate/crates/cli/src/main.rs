use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod input;

/// Finite semigroups and their semiband embeddings.
#[derive(Debug, Parser)]
#[command(name = "sbf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, idempotents, depth chain, Green class counts and properties.
    Analyze { file: PathBuf },
    /// Build a construction and write it as `.sgp` plus a `.json` sidecar.
    Construct {
        kind: ConstructionKind,
        /// Source semigroup (`.sgp`, or `.tfm` generators); not used by `higgins`.
        file: Option<PathBuf>,
        /// Degree of the full transformation monoid, for `higgins`.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Green's classes, optionally as an egg-box DOT graph.
    Green {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Search for an isomorphism; exit code 1 when there is none.
    Iso { a: PathBuf, b: PathBuf },
    /// Write every semigroup of order N as `.sgp` files with a manifest.
    Enumerate {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = ModuloArg::Iso)]
        modulo: ModuloArg,
    },
    /// Check the claims over the enumerated corpus or a directory of `.sgp` files.
    Verify {
        /// Largest enumerated order; defaults to the order cap.
        #[arg(long)]
        max_order: Option<usize>,
        /// Verify the `.sgp` files of this directory instead of enumerating.
        #[arg(long, conflicts_with = "max_order")]
        input: Option<PathBuf>,
        #[arg(long)]
        regular_only: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Restrict to these claims (repeatable).
        #[arg(long = "claim")]
        claims: Vec<String>,
        /// Record per-entry milliseconds; output is then no longer byte-stable.
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Order bounds of R(S) and L(S) for the regular semigroups in a directory.
    Bounds {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructionKind {
    T,
    R,
    L,
    Tstar,
    Rstar,
    F,
    A,
    Phi,
    Higgins,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuloArg {
    None,
    Iso,
    Anti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// How a command finished when it did not hit an input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
