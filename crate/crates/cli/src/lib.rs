//! Command-line front end for `eqminors`: JSON in, JSON out.

pub mod cache;
pub mod claims;
mod commands;
pub mod error;
pub mod input;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use eqminors::exactnum::Precision;
use serde_json::{json, Value};

use cache::Cache;
pub use commands::execute;
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "eqminors", version, about = "Equal and extreme minors in the totally positive Grassmannian")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random trials, where a command has any.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Fixed working precision for interval certification (no escalation).
    #[arg(long, global = true)]
    pub precision_bits: Option<u32>,
    /// Reuse results of `enumerate` and `count` from the cache directory ($EQMINORS_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache: bool,
}

impl Global {
    pub fn precision(&self) -> Precision {
        match self.precision_bits {
            Some(b) => Precision { start: b, cap: b },
            None => Precision::default(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pairwise predicates on subsets.
    #[command(subcommand)]
    Check(Check),
    /// List combinatorial objects.
    #[command(subcommand)]
    Enumerate(Enumerate),
    /// Closed forms and counts.
    #[command(subcommand)]
    Count(Count),
    /// Build matrices realizing arrangements.
    #[command(subcommand)]
    Construct(Construct),
    /// Minor table and arrangement of a matrix read from JSON.
    Verify {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        /// Expected extreme class; exit 2 when it differs.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Plabic graphs: strands, faces, moves, honeycombs.
    #[command(subcommand)]
    Plabic(Plabic),
    /// Mutations of weakly separated collections.
    #[command(subcommand)]
    Cluster(ClusterCmd),
    /// Rerun a recorded claim and compare with the expected value (`list` for all ids).
    Reproduce {
        claim: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Smallest,
    Largest,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Check {
    /// Weak separation of two subsets.
    Ws {
        i: String,
        j: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Sortedness of two subsets.
    Sorted {
        i: String,
        j: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Whether Δ_I Δ_J ≥ Δ_K Δ_L on the whole positive part.
    Skandera {
        i: String,
        j: String,
        k: String,
        l: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Lattice-path class of a pair.
    Classify {
        i: String,
        j: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Enumerate {
    /// Maximal sorted collections of k-subsets of [n].
    Sorted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Triangulations of the n-gon.
    Triangulations {
        #[arg(long)]
        n: usize,
    },
    /// Maximal thrackles on n points.
    Thrackles {
        #[arg(long)]
        n: usize,
    },
    /// Alcoves of a sort-closed collection: all k-subsets, the entry labels, or a given list.
    Alcoves {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Use the labels of the entries of a k × (n−k) matrix.
        #[arg(long, conflicts_with = "collection")]
        entries: bool,
        #[arg(long)]
        collection: Option<String>,
    },
    /// Monotone paths in the k × m grid.
    Gridpaths {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        transposed: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Count {
    /// Eulerian number A(n, k).
    Eulerian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Catalan number C_n.
    Catalan {
        #[arg(long)]
        n: usize,
    },
    /// Number of maximal thrackles on n points.
    Thrackles {
        #[arg(long)]
        n: usize,
    },
    /// Most equal minors on the nonnegative Gr(2, n), closed form against search.
    NonnegGr2 {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Matrix JSON; a seeded random positive point is used when absent.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Maximal sorted collection, e.g. "{1,2} {2,3} …".
    #[arg(long)]
    pub collection: String,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// 2 × n matrix whose smallest minors are the edges of a triangulation.
    Triangulation {
        #[arg(long)]
        n: usize,
        /// Diagonals such as "1-3,1-4"; sides are added.
        #[arg(long, default_value = "")]
        diagonals: String,
        /// Peel the highest-numbered ear first.
        #[arg(long)]
        highest_ear: bool,
    },
    /// 2 × n matrix whose largest minors are the edges of a thrackle.
    Thrackle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: String,
    },
    /// Rescale columns so a maximal sorted collection becomes the largest class.
    Torus(PointArgs),
    /// Shrink the largest class to a sub-collection.
    Perturb {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        sub: String,
        #[arg(long, default_value = "1/64")]
        eps: String,
    },
    /// Point of Gr⁺(4, 8) from the 2 × 2 honeycomb seed at T = t.
    Honeycomb {
        #[arg(long, default_value = "6")]
        t: String,
    },
    /// A matrix from the built-in registry.
    PaperMatrix {
        #[arg(long)]
        name: String,
    },
}

#[derive(Args, Debug)]
pub struct HoneycombArgs {
    #[arg(long, default_value_t = 2)]
    pub b1: usize,
    #[arg(long, default_value_t = 2)]
    pub b2: usize,
    /// Block lengths "α1,β1,α2,β2" instead of b1, b2.
    #[arg(long)]
    pub blocks: Option<String>,
    /// The 2 × 2 honeycomb wrapped in one layer.
    #[arg(long, conflicts_with = "blocks")]
    pub layered: bool,
}

#[derive(Subcommand, Debug)]
pub enum Plabic {
    /// Strands and the decorated permutation.
    Trace { graph: PathBuf },
    /// Face labels.
    Faces { graph: PathBuf },
    /// Reducedness, with the first violation found.
    Reduced { graph: PathBuf },
    /// Apply a move script, or random moves.
    Move {
        graph: PathBuf,
        #[arg(long, conflicts_with = "random")]
        script: Option<PathBuf>,
        #[arg(long)]
        random: Option<usize>,
    },
    /// Honeycomb graph and its collection.
    Honeycomb(HoneycombArgs),
    /// Square-move chain reaction on a honeycomb.
    Chain(HoneycombArgs),
    /// Block projection of a subset for the split a,b,c.
    Project {
        #[arg(long)]
        split: String,
        w: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Graphviz rendering.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ClusterCmd {
    /// Plücker coordinate in terms of a seed.
    Evaluate {
        seed_file: PathBuf,
        #[arg(long)]
        target: String,
        /// Random exchanges before the search (uses --seed).
        #[arg(long)]
        walk: Option<usize>,
        #[arg(long, default_value_t = eqminors::cluster::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Fewest exchanges from a collection containing I to one containing J.
    Distance {
        i: String,
        j: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: usize,
        /// Also list every shortest chain.
        #[arg(long)]
        chains: bool,
    },
    /// Exponent bounds in T for every coordinate of the honeycomb seed.
    #[command(name = "conjecture-1017", alias = "conjecture")]
    Conjecture {
        #[arg(long, default_value_t = 2)]
        b1: usize,
        #[arg(long, default_value_t = 2)]
        b2: usize,
        #[arg(long, default_value_t = eqminors::cluster::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Point of Gr⁺(k, n) whose coordinates on a maximal weakly separated collection are 1.
    WsPoint {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        collection: String,
    },
}

/// A command's JSON and whether its check passed (exit 2 otherwise).
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(json: Value) -> Self {
        Outcome { json, passed: true }
    }
}

fn cacheable(c: &Command) -> bool {
    matches!(c, Command::Enumerate(_) | Command::Count(_))
}

fn cache_params(cli: &Cli) -> String {
    let g = &cli.global;
    format!("{:?}\nseed={} trials={:?} precision={:?}", cli.command, g.seed, g.trials, g.precision_bits)
}

/// Runs `execute`, going through the cache when asked.
pub fn run_cli(cli: &Cli) -> Result<Outcome, CliError> {
    if !(cli.global.cache && cacheable(&cli.command)) {
        return execute(cli);
    }
    let cache = Cache::new(&cache::cache_dir());
    let params = cache_params(cli);
    let key = Cache::key(&params);
    if let Some((json, passed)) = cache.get(&key) {
        cache.record_hit(&key, &params);
        eprintln!("eqminors: cache hit {key}");
        return Ok(Outcome { json, passed });
    }
    let out = execute(cli)?;
    cache.put(&key, &params, &out.json, out.passed)?;
    Ok(out)
}

/// A closed stdout (`| head`) is not an error.
fn emit(v: &Value) {
    let _ = writeln!(std::io::stdout().lock(), "{v}");
}

/// Parses `args` (program name first), runs, prints JSON and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
        }
    };
    match run_cli(&cli) {
        Ok(out) => {
            emit(&out.json);
            if out.passed {
                0
            } else {
                2
            }
        }
        Err(e) => {
            emit(&json!({"error": e.to_string(), "exit": e.exit_code()}));
            eprintln!("eqminors: {e}");
            e.exit_code()
        }
    }
}
