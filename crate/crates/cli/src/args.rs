use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "ehrhart", version, about = "Exact Ehrhart quasi-polynomials and discrete moments via Barnes polynomials")]
pub struct Cli {
    /// Worker threads for the per-vertex sums.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Also print k-digit decimal approximations on stderr.
    #[arg(long, global = true, value_name = "K")]
    pub decimal: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Polytope JSON file.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct Direction {
    /// Explicit direction, comma separated rationals; overrides the seed.
    #[arg(long, value_name = "C1,...,CD", allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Seed for the generic direction.
    #[arg(long, env = "EHRHART_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice-point count of tP.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: String,
        #[command(flatten)]
        direction: Direction,
    },
    /// Ehrhart quasi-polynomial (per residue) or polynomial.
    Ehrhart {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "poly")]
        quasi: bool,
        /// Single polynomial; integer polytopes only.
        #[arg(long)]
        poly: bool,
        #[command(flatten)]
        direction: Direction,
    },
    /// m-th moment of tP and its coefficients d_r(t).
    Moments {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: String,
        #[command(flatten)]
        direction: Direction,
    },
    /// Run the identity suite; exit 1 if any identity fails.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Dilations, comma separated.
        #[arg(long)]
        t: Option<String>,
        /// Direction seeds, comma separated.
        #[arg(long, default_value = "1,2,3")]
        seeds: String,
    },
    /// Barnes polynomial B_k(t, a), constant coefficient first.
    Barnes {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// CSV of the lattice flow at one vertex.
    Flow {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value = "0")]
        t_start: String,
        #[arg(long, default_value = "1")]
        t_end: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed geodesics of the integer-time flow at one vertex.
    Orbits {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
    },
    /// Brute-force count or moment.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: String,
        /// Count interior points.
        #[arg(long)]
        open: bool,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        direction: Direction,
    },
}
