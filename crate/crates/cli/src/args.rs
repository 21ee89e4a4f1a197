//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "alphaspec",
    version,
    about = "A_alpha spectra, bounds and experiments for simple graphs"
)]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

/// Either a named family with its parameters, or an edge-list file.
#[derive(Debug, Args)]
pub struct GraphArgs {
    /// path, cycle, complete, complete_bipartite, star, wheel, pineapple,
    /// binomial_tree, helm, windmill, petersen.
    #[arg(long, conflicts_with = "edges")]
    pub family: Option<String>,
    /// Order for path/cycle/complete/star/wheel/helm; number of cliques for windmill.
    #[arg(long)]
    pub n: Option<usize>,
    /// First part size of a complete bipartite graph.
    #[arg(long)]
    pub n1: Option<usize>,
    /// Second part size of a complete bipartite graph.
    #[arg(long)]
    pub n2: Option<usize>,
    /// Clique size of a pineapple.
    #[arg(long)]
    pub p: Option<usize>,
    /// Pendant count of a pineapple.
    #[arg(long)]
    pub q: Option<usize>,
    /// Binomial tree order, or clique size of a windmill.
    #[arg(long)]
    pub k: Option<usize>,
    /// Edge-list file: header `n m`, then one `u v` pair per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of A_alpha(G) with multiplicities.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Single value or grid `start:stop:step` (stop excluded).
        #[arg(long, default_value = "0.5")]
        alpha: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Edge list of the line graph l(G).
    Linegraph {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Every applicable bound for A_alpha(G) and A_alpha(l(G)).
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "0.5")]
        alpha: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Lower-bound comparison tables: 1 paths, 2 binomial trees, 3 pineapples.
    Table {
        #[arg(long)]
        which: u8,
    },
    /// Bound values and slack against an eigenvalue over an alpha grid.
    Sweep {
        #[command(flatten)]
        graph: GraphArgs,
        /// Preset comparison 3, 4 or 5 instead of a graph.
        #[arg(long, conflicts_with_all = ["family", "edges"])]
        figure: Option<u8>,
        /// Comma-separated bound tags (eq9, eq10, eq12, eq13, rowsum_lo, ...).
        #[arg(long, value_delimiter = ',', default_values_t = ["eq9".to_string(), "eq10".to_string(), "eq12".to_string(), "rowsum_lo".to_string()])]
        bounds: Vec<String>,
        /// lambda1, lambda_min, line_lambda1 or line_lambda_min.
        #[arg(long, default_value = "lambda1")]
        reference: String,
        /// Defaults to 0, 0.05, ..., 1.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Look for graphs violating or separating a bound relation.
    Search {
        /// bound10_ge_bound9, bound12_vs_bound10, upper_ordering or line_path_threshold.
        #[arg(long)]
        predicate: String,
        /// All connected graphs on up to this many vertices.
        #[arg(long, conflicts_with_all = ["random", "family", "edges"])]
        exhaustive: Option<usize>,
        /// This many G(n, p) samples.
        #[arg(long, conflicts_with_all = ["family", "edges"])]
        random: Option<usize>,
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop after this many graphs.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value = "0:1:0.1")]
        alpha: String,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Wall-clock cost of the two upper bounds on lambda1.
    Timing {
        #[arg(long, default_value_t = 20)]
        reps: usize,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        /// Comma-separated subset of star, complete, helm.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<String>>,
        /// Comma-separated orders; defaults to 100, 200, ..., 1000.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Run the invariant checks on one graph and report each.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Defaults to 0, 0.25, 0.5, 0.75, 1.
        #[arg(long)]
        alpha: Option<String>,
    },
}
