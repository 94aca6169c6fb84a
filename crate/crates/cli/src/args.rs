use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "extremal", version, about = "Exact computations for Turán-type extremal problems")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Worker threads for `search`.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
    /// Reserved; no command is randomized.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form bound exactly.
    Bound(BoundArgs),
    /// Test graphs for a forbidden pattern.
    Detect(DetectArgs),
    /// Compute ex(n, H) exactly.
    Search(SearchArgs),
    /// Emit a standard graph as graph6.
    Construct(ConstructArgs),
    /// Peel graphs down to their dense core.
    Core(CoreArgs),
    /// Find r+1 pairwise complete t-sets.
    Blowup(BlowupArgs),
    /// Distance layers from a root with their densities.
    Layers(LayersArgs),
    /// Check a theorem's bound against exact values for n = 1..=max-n.
    Verify(VerifyArgs),
}

/// Where graphs come from: `--g6`, `--file`, or stdin, one graph6 per line.
#[derive(Debug, Clone, Default, Args)]
pub struct GraphSource {
    #[arg(long, conflicts_with = "file")]
    pub g6: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// mantel | turan | kst | c4 | bondy-simonovits | ess | lemma
    pub name: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Rational `p/q`.
    #[arg(long)]
    pub eps: Option<String>,
    /// Rational `p/q`.
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub chi: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    /// `K3`, `K2,2`, `C4` or `g6:<graph6>`.
    pub pattern: String,
    /// Also print an embedding of the pattern.
    #[arg(long)]
    pub witness: bool,
    #[command(flatten)]
    pub source: GraphSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Pruned,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub pattern: String,
    #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
    pub strategy: StrategyArg,
    /// mantel | turan | kst | c4
    #[arg(long)]
    pub check_bound: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    /// `--n`
    Complete,
    /// `K_{r,t}` from `--r --t`.
    Bipartite,
    /// `--n`
    Cycle,
    /// `--n` leaves.
    Star,
    /// `--n`
    Path,
    /// `--n`
    Empty,
    /// `--n --r`
    Turan,
    /// `--parts a,b,..`
    Multipartite,
    /// `--t` clones of each vertex of the input graph.
    Blowup,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
    #[command(flatten)]
    pub source: GraphSource,
}

#[derive(Debug, Args)]
pub struct CoreArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub eps: String,
    /// Smallest n for which the core-size guarantee is checked.
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[command(flatten)]
    pub source: GraphSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Proof,
    Fallback,
}

#[derive(Debug, Args)]
pub struct BlowupArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub t: usize,
    /// Required when r >= 1.
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub source: GraphSource,
}

#[derive(Debug, Args)]
pub struct LayersArgs {
    #[arg(long)]
    pub root: usize,
    #[arg(long)]
    pub depth: usize,
    #[command(flatten)]
    pub source: GraphSource,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// mantel | turan | kst | c4
    #[arg(long)]
    pub suite: String,
    #[arg(long)]
    pub max_n: usize,
    /// Turán: forbid K_{r+1} (default 3). KST: forbid K_{r,t} (default 2).
    #[arg(long)]
    pub r: Option<usize>,
    /// KST only (default 2).
    #[arg(long)]
    pub t: Option<usize>,
    /// Defaults to exhaustive up to n = 7 and pruned above.
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyArg>,
}
