use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fragpd",
    version,
    about = "Exact analysis of power domination when PMUs fail independently with probability q"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Graph file, edge list ("n m" header) or graph6; detected from content.
    #[arg(long, global = true, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// PMU placement such as "0,3,4*2" (vertex 4 carries two PMUs).
    #[arg(long, global = true, value_name = "LIST")]
    pub placement: Option<String>,
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// CSV output for tabular commands.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Seed for simulation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Raise the vertex and support enumeration caps to N.
    #[arg(long, global = true, value_name = "N")]
    pub cap: Option<usize>,
    /// Width to which crossings are refined, e.g. 1e-9 or 1/1000.
    #[arg(long, global = true, default_value = "1e-9", value_name = "RATIONAL")]
    pub tol: String,
    /// Decimal places in text and CSV output.
    #[arg(long, global = true, default_value_t = 6)]
    pub precision: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edges,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generated graph. FAMILY is one of path, cycle, complete, star,
    /// wheel, multipartite, cycle-complement (size parameters follow),
    /// crossing A B, linear R1 R2 ..., barbell G1 G2 M (graphs written as
    /// family:params, e.g. wheel:5), or fig1.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Observed set of the placement's support, without failures.
    Obs,
    /// Power domination number.
    Gammap,
    /// Failed power domination number.
    Gammapbar,
    /// Number of power dominating sets of each size 1..n.
    Pdpoly,
    /// Expected number of observed vertices as a polynomial in q.
    Expoly {
        /// Evaluate at these comma-separated values of q.
        #[arg(long, value_name = "Q,...")]
        at: Option<String>,
    },
    /// Probability that the whole graph is observed, as a polynomial in q.
    Probfull {
        #[arg(long, value_name = "Q,...")]
        at: Option<String>,
    },
    /// Robustness level read off the expected value polynomial.
    Robust,
    /// Closed-form probability bounds.
    Bounds {
        #[command(subcommand)]
        bound: BoundCmd,
    },
    /// Closed-form polynomials for stars, complete multipartite graphs and
    /// generalized barbells.
    ClosedForm {
        /// Also build the graph and compare with full enumeration.
        #[arg(long, global = true)]
        verify: bool,
        #[command(subcommand)]
        family: ClosedFormCmd,
    },
    /// Monte Carlo estimate of the expected observation count.
    Sim {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Group all placements of size k by expected value polynomial.
    Spectrum {
        #[arg(long)]
        k: usize,
        /// Enumerate multisets instead of sets.
        #[arg(long)]
        multisets: bool,
    },
    /// Compare two placements over q in (0, 1).
    Compare {
        #[arg(long, value_name = "LIST")]
        a: String,
        #[arg(long, value_name = "LIST")]
        b: String,
    },
    /// CSV table of exact values over a grid of q.
    Sweep {
        /// Comma-separated grid; defaults to STEPS + 1 even points on [0, 1].
        #[arg(long, value_name = "Q,...")]
        grid: Option<String>,
        #[arg(long, default_value_t = 20)]
        steps: u32,
        /// Add simulated columns with this many trials per point.
        #[arg(long, value_name = "T")]
        sim_trials: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    /// Smallest |S| reaching confidence 1 - eps when the failed power
    /// domination number is f.
    MinSize {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        q: String,
        #[arg(long)]
        eps: String,
    },
    /// Lower bound on full observation for a k-robust placement of size s.
    Rpds {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: String,
    },
    /// Lower bound for a connected graph on n vertices with every vertex
    /// carrying a PMU.
    Connected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClosedFormCmd {
    /// Star S_n with s PMUs, optionally including the centre.
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        center: bool,
    },
    /// Complete multipartite graph with counts[i] PMUs in part i.
    Multipartite {
        #[arg(long, value_name = "R1,R2,...")]
        parts: String,
        #[arg(long, value_name = "L1,L2,...")]
        counts: String,
    },
    /// B(G1, x1, G2, x2, m) with r, s, t PMUs in G1, on the path and in G2.
    Barbell {
        /// G1 as family:params, e.g. complete:4.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
}
