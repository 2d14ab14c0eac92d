use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cassonkit",
    version,
    about = "Casson-type invariants of 4-dimensional mapping tori from surgery data",
    after_help = "Exit codes: 0 success, 2 input validation failure, 3 mathematical \
                  obstruction (Alexander root), 4 internal consistency failure, 5 \
                  verification suite failure."
)]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Scale-relative zero threshold for numeric signature computations.
    #[arg(long, global = true, default_value_t = cassonkit::DEFAULT_TOLERANCE)]
    pub tolerance: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Knot-level invariants from a Seifert matrix.
    Knot {
        #[command(subcommand)]
        command: KnotCommand,
    },
    /// Casson-Walker and summed rho-invariants of the lens space L(n, q).
    Lens {
        /// Order n of the surgery, n >= 2.
        #[arg(long)]
        n: u64,
        /// Surgery parameter q with 0 < q < n and gcd(n, q) = 1.
        #[arg(long)]
        q: u64,
    },
    /// Mapping-torus invariants.
    Torus {
        #[command(subcommand)]
        command: TorusCommand,
    },
    /// λ_SW of the product S¹ × Σ from the Casson invariant of Σ.
    Product {
        /// Casson invariant λ(Σ).
        #[arg(long, allow_hyphen_values = true)]
        casson: i64,
    },
    /// Seifert fibered homology sphere invariants.
    Seifert {
        #[command(subcommand)]
        command: SeifertCommand,
    },
    /// Run the seeded verification suites.
    Verify {
        /// Suite name: reciprocity, cancellation, lens-bridge, knots, mubar
        /// or all.
        #[arg(default_value = "all")]
        suite: String,
        /// Number of pseudo-random samples per seeded suite.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Seed for the deterministic random input streams.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct KnotInput {
    /// Path to a knot JSON file: {"name": "..."} with name in {unknot,
    /// trefoil, figure8, torus(p,q)} or {"seifert_matrix": [[...], ...]}.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum KnotCommand {
    /// Normalized Alexander polynomial and Δ''(1).
    Alexander {
        #[command(flatten)]
        knot: KnotInput,
    },
    /// Tristram-Levine equivariant signature at ω = exp(2πi m/n).
    Signature {
        #[command(flatten)]
        knot: KnotInput,
        /// Evaluation point as m/n.
        #[arg(long)]
        at: String,
    },
    /// Σ_{m=0}^{n-1} sign^{m/n}, the full equivariant signature sum.
    SignatureSum {
        #[command(flatten)]
        knot: KnotInput,
        /// Order n of the sum.
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum TorusCommand {
    /// Free mapping torus: quotient presented by (n/q)-surgery on a knot.
    Free {
        /// Path to a free_mapping_torus JSON description.
        #[arg(long)]
        input: PathBuf,
    },
    /// Branched mapping torus: n-fold cyclic branched cover data.
    Branched {
        /// Path to a branched_mapping_torus JSON description.
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeifertCommand {
    /// Neumann-Siebenmann μ̄ and the conjugation mapping-torus invariants.
    Mubar {
        /// Comma-separated pairwise-coprime multiplicities, e.g. 2,3,5.
        #[arg(long, value_delimiter = ',')]
        a: Vec<u64>,
    },
}
