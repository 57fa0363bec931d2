use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tripack", version, about = "Exact edge/triangle decompositions and certificate checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Branch-and-bound node budget.
    #[arg(long, default_value_t = tripack::decomp::DEFAULT_NODE_BUDGET, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Record wall-clock time in the JSON report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Inline graph6 string.
    #[arg(long, conflicts_with = "input")]
    pub graph6: Option<String>,
    /// File holding a graph6 line or an edge list (`n`, then `u v` per line).
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a named graph in graph6.
    Gen {
        /// complete, turan2, complete_minus_edge or complete_minus_matching.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Maximum number of edge-disjoint triangles.
    Nu {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Minimum decomposition cost with triangle cost alpha.
    Pi3 {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "3")]
        alpha: String,
    },
    /// Fractional relaxation solved exactly.
    Fraclp {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Explicit decomposition of K_n (or K_n minus an m-matching), or a
    /// check of user-supplied parts against an input graph.
    Decompose {
        #[arg(long, required_unless_present = "parts")]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Part file (`e u v` / `t a b c` per line) to validate against the input graph.
        #[arg(long)]
        parts: Option<PathBuf>,
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "3")]
        alpha: String,
    },
    /// Cover of K_n, n = 4 (mod 6), with edges and triangles.
    Cover {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive maximum of the decomposition cost over all graphs of order n.
    Brute {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "3")]
        alpha: String,
    },
    /// Re-verify the flag-algebra certificate over all 7-vertex graphs.
    VerifyCert,
    /// Exact (edge density, packing density) points.
    Scan {
        #[arg(long)]
        n: usize,
        /// Number of uniform labelled samples (orders 8 to 12).
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
