use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use snakebox_core::Kind;

#[derive(Debug, Parser)]
#[command(name = "snakebox", version, about = "Snakes and coils in hypercubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Snake,
    Coil,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Snake => Kind::Snake,
            KindArg::Coil => Kind::Coil,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Representation {
    Transitions,
    Vertices,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a transition sequence as a snake or coil.
    ///
    /// Coil files may omit the closing transition.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Sequence file; standard input when absent or `-`.
        file: Option<PathBuf>,
    },
    /// Print the vertices visited by a transition sequence, one per line.
    Walk {
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 0)]
        start: u32,
        file: Option<PathBuf>,
    },
    /// Find the longest snake or coil by exhaustive search.
    Exact {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 1_000_000_000)]
        max_nodes: u64,
        #[arg(long, default_value_t = 600.0)]
        max_seconds: f64,
    },
    /// Search for a long snake or coil with seeded stochastic beam search.
    Search {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        beam: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        restarts: u32,
        #[arg(long, default_value_t = 1.0)]
        temp: f64,
        #[arg(long)]
        max_seconds: Option<f64>,
    },
    /// List the table of best known bounds.
    Records {
        /// Verify the bundled sequences and the table's consistency rules.
        #[arg(long)]
        check: bool,
    },
    /// Convert between transition and vertex representations.
    Convert {
        #[arg(long, value_enum)]
        from: Representation,
        #[arg(long, value_enum)]
        to: Representation,
        #[arg(long)]
        dim: u32,
        /// Start vertex when producing vertices.
        #[arg(long, default_value_t = 0)]
        start: u32,
        file: Option<PathBuf>,
    },
}
