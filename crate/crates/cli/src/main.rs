//! `sriso`: ideals of complexes and graphs, map validation, and vertex
//! bijections extracted from ring isomorphisms.
//!
//! Exit codes: 0 success, 1 negative answer or failed check, 2 bad input or usage.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sriso_core::{Field, RingKind};

#[derive(Parser, Debug)]
#[command(
    name = "sriso",
    version,
    about = "Vertex bijections from isomorphisms of Stanley-Reisner, facet and edge rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Print reports as JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the ideal of a complex or graph file.
    Ideal {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: RingKind,
        /// Write the ideal file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Rebuild the complex (or graph) of an ideal file.
    Reconstruct {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: RingKind,
        /// Write the complex or graph file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Validate a map file: well-definedness, inverse property, constant terms and linear parts.
    CheckMap {
        file: PathBuf,
        /// Coefficient field, overriding the map file: `rational` or a prime p.
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        #[command(flatten)]
        common: Common,
    },
    /// Extract and verify a vertex bijection from a map file.
    Extract {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: RingKind,
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        /// Write the result file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a seeded instance bundle.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: RingKind,
        /// Number of scrambling operations.
        #[arg(long, default_value_t = 3)]
        ops: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_field, default_value = "rational")]
        field: Field,
        /// Vertex (complexes) or edge (graphs) probability.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Bundle file.
        #[arg(long)]
        out: PathBuf,
        /// Also write the bundle's map file here.
        #[arg(long)]
        map_out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Search exhaustively for an isomorphism between two complex or graph files.
    Oracle {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_kind(s: &str) -> Result<RingKind, String> {
    s.parse().map_err(|e: sriso_core::structure::UnknownKind| e.to_string())
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "rational" | "QQ" | "Q" => Ok(Field::Rational),
        _ => {
            let p: u64 = s.parse().map_err(|_| format!("expected `rational` or a prime, got {s:?}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
