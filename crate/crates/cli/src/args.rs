use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slicelab::discmax::{Method, Target};
use slicelab::game::{Role, Scoring, StrategyId};

fn lib<T: FromStr<Err = slicelab::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: slicelab::Error| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "slicelab", version)]
#[command(about = "Query complexity of Boolean functions on slices of the cube")]
pub struct Cli {
    /// Worker threads for parallel work
    #[arg(long, global = true, env = "SLICELAB_THREADS")]
    pub threads: Option<usize>,

    /// Output format; json is canonical
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact D and E of one function
    Solve(SolveArgs),
    /// Maximum D over every function on a slice
    Maxdepth {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Compose two table functions
    Compose {
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        /// Solve all three and check D(f) >= D(f1) + D(f2)
        #[arg(long)]
        check: bool,
    },
    /// Count decision trees of bounded height
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        height: u32,
        /// Let any node be a leaf
        #[arg(long)]
        any_shape: bool,
    },
    /// Certified counting bounds
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// The Disc-max-d family
    #[command(subcommand)]
    Discmax(DiscmaxCmd),
    /// The Positioner/Signgiver games
    #[command(subcommand)]
    Game(GameCmd),
    /// Batch tables
    #[command(subcommand)]
    Sweep(SweepCmd),
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Slice-function file (text or JSON form)
    #[arg(
        long,
        conflicts_with = "random_n",
        required_unless_present = "random_n"
    )]
    pub table_file: Option<PathBuf>,
    /// Solve a uniformly random function on (random-n, k) instead
    #[arg(long, requires = "k")]
    pub random_n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include an optimal decision tree
    #[arg(long)]
    pub tree: bool,
    /// Memo entries before giving up
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum BoundsCmd {
    /// g(n,k,t) as exact exponents and an enclosure of its log2
    G {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 128)]
        precision: u32,
    },
    /// Certify the central-binomial ratio is below 1 on a range of n
    Kozep {
        #[arg(long)]
        t: u32,
        #[arg(long = "from")]
        from: u32,
        #[arg(long = "to")]
        to: u32,
        /// Also evaluate the three-stage chain at 256 bits
        #[arg(long)]
        chain: bool,
    },
    /// The alpha-slice level-sum inequality
    Alfa {
        /// alpha as num/den
        #[arg(long)]
        alpha: String,
        #[arg(long = "c")]
        c: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 128)]
        precision: u32,
    },
    /// Smallest t with log2 g(n,k,t) < binom(n,k)
    Certify {
        #[arg(long)]
        n: u32,
        /// Defaults to floor(n/2)
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DiscmaxCmd {
    /// Disc-max-d on a complete board
    Eval {
        #[arg(long)]
        board: String,
        #[arg(long)]
        d: i64,
    },
    /// Whether a balanced completion reaches the target value
    Feasible {
        #[arg(long)]
        board: String,
        #[arg(long)]
        d: i64,
        #[arg(long, value_parser = lib::<Target>)]
        target: Target,
    },
    /// Check the claim hypotheses against exact feasibility
    Claims {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: i64,
        /// Check this board instead of sweeping
        #[arg(long, conflicts_with = "sample")]
        board: Option<String>,
        /// Sample this many slice-consistent boards instead of all
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Constructive completion from a claim proof
    Complete {
        #[arg(long)]
        board: String,
        #[arg(long)]
        d: i64,
        #[arg(long, value_parser = lib::<Method>)]
        method: Method,
        /// Comma-separated fill order; left to right by default
        #[arg(long, conflicts_with = "seed")]
        order: Option<String>,
        /// Shuffle the fill order with this seed
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Exact E_{n/2}(Disc-max-d)
    #[command(name = "e", alias = "E")]
    E {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: i64,
    },
    /// The tightness board for d
    Remark {
        #[arg(long)]
        d: i64,
        /// Board length; defaults to 2d + 2
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GameCmd {
    /// Exact game value
    Value {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = lib::<Scoring>, default_value = "prefix")]
        scoring: Scoring,
    },
    /// Value when one side plays a fixed strategy against a perfect opponent
    Exploit {
        #[arg(long, value_parser = lib::<StrategyId>)]
        strategy: StrategyId,
        #[arg(long, value_parser = lib::<Role>)]
        role: Role,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = lib::<Scoring>, default_value = "prefix")]
        scoring: Scoring,
    },
    /// Play two strategies against each other
    Play {
        #[arg(long, value_parser = lib::<StrategyId>)]
        positioner: StrategyId,
        #[arg(long, value_parser = lib::<StrategyId>)]
        signgiver: StrategyId,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = lib::<Scoring>, default_value = "prefix")]
        scoring: Scoring,
        /// Print the trace as JSON lines
        #[arg(long)]
        trace_lines: bool,
    },
    /// Play one side from the terminal
    Interactive {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = lib::<Scoring>, default_value = "prefix")]
        scoring: Scoring,
        /// The side you play
        #[arg(long, value_parser = lib::<Role>)]
        role: Role,
        #[arg(long, value_parser = lib::<StrategyId>)]
        opponent: StrategyId,
        /// Write the final trace here (JSON lines) instead of stdout
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Both corollary inequalities at one even n
    Corollary {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum SweepCmd {
    /// E_{n/2}(Disc-max-d) over a grid
    Etable {
        #[arg(long, value_delimiter = ',', default_value = "4,6,8,10,12")]
        n: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        d: Vec<i64>,
        /// Recorded in the output; the sweep itself is deterministic
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// certify over n with k = floor(n/2)
    Certify {
        #[arg(long = "from")]
        from: u32,
        #[arg(long = "to")]
        to: u32,
        #[arg(long, default_value_t = 2)]
        step: u32,
    },
    /// d(n), d'(n) and both strategy exploits for n = 1..=to
    Games {
        #[arg(long = "to")]
        to: u32,
    },
    /// Claims soundness over a grid of n and d
    Claims {
        #[arg(long, value_delimiter = ',', default_value = "4,6,8,10")]
        n: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        d: Vec<i64>,
    },
}
