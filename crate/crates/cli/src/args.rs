use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand};
use dompoly::Algorithm;

#[derive(Debug, Parser)]
#[command(
    name = "dompoly",
    version,
    about = "Exact domination polynomials of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute D(G, x) with one or more algorithms and cross-check them.
    Compute(ComputeArgs),
    /// Check the identity and parity suite on the input graphs.
    Verify(VerifyArgs),
    /// Domination number by the vanishing binomial sum and by direct search.
    Gamma(CommonArgs),
    /// List the conformal induced subgraphs and the 2^k(H) total.
    Conformal(CommonArgs),
    /// Time every selected algorithm and report its term count.
    Bench(ComputeArgs),
    /// Emit the input graphs in graph6.
    Gen(GenArgs),
}

/// Where the graphs come from. With no source, graph6 lines are read
/// from stdin.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Source {
    /// A graph6 string.
    #[arg(long, value_name = "STR")]
    pub g6: Option<String>,
    /// An edge-list file: "n <count>" then one "u v" pair per line.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// A generated family, e.g. `path 4`, `complete_bipartite 2 3`,
    /// `random 8 1 2` (n, probability numerator, denominator).
    #[arg(long, num_args = 1.., value_names = ["NAME", "PARAMS"])]
    pub family: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub source: Source,
    /// Seed for the random family.
    #[arg(long, value_name = "U64")]
    pub seed: Option<u64>,
    /// Largest n for vertex-subset enumeration.
    #[arg(long, value_name = "K", default_value_t = 24)]
    pub vertex_cap: usize,
    /// Largest m for edge-subset enumeration.
    #[arg(long, value_name = "K", default_value_t = 20)]
    pub edge_cap: usize,
    /// Emit JSON.
    #[arg(long, conflicts_with = "table")]
    pub json: bool,
    /// Emit a human-readable table.
    #[arg(long)]
    pub table: bool,
    /// Leave wall-clock times out of the output.
    #[arg(long)]
    pub no_timing: bool,
    /// Use worker threads inside the subset sums.
    #[arg(long, value_name = "BOOL", default_value_t = true, action = ArgAction::Set)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Comma-separated algorithms: brute, inclexcl, typesum, recursive,
    /// bipartite-spanning, essential, or `all`.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub algo: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Largest m for the edge alternating-sum check.
    #[arg(long, value_name = "K", default_value_t = 14)]
    pub edge_sum_cap: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Number of random graphs, drawn with seeds seed, seed + 1, ...
    #[arg(long, value_name = "K", default_value_t = 1)]
    pub count: u64,
}

/// Output style, resolved against a per-command default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

impl CommonArgs {
    pub fn format(&self, default: Format) -> Format {
        match (self.json, self.table) {
            (true, _) => Format::Json,
            (_, true) => Format::Table,
            _ => default,
        }
    }
}

/// Parses `--algo`, falling back to `default` when none were given.
pub fn parse_algorithms(list: &[String], default: &[Algorithm]) -> Result<Vec<Algorithm>, String> {
    if list.is_empty() {
        return Ok(default.to_vec());
    }
    let mut out = Vec::new();
    for name in list.iter().map(|s| s.trim()) {
        if name == "all" {
            out.extend(Algorithm::ALL);
            continue;
        }
        out.push(name.parse::<Algorithm>().map_err(|e| e.to_string())?);
    }
    let mut seen = Vec::new();
    out.retain(|a| {
        let fresh = !seen.contains(a);
        seen.push(*a);
        fresh
    });
    Ok(out)
}
