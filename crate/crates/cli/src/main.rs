//! `minscaffold`: homological scaffolds of weighted networks.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minscaffold::Error;

#[derive(Parser, Debug)]
#[command(
    name = "minscaffold",
    version,
    about = "Loose and minimal homological scaffolds of weighted networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build scaffolds of a weighted graph.
    Scaffold(ScaffoldArgs),
    /// Compare two graphs or scaffolds, or minimal against loose scaffolds on a random sample.
    Compare(CompareArgs),
    /// Time the loose and minimal pipelines on weighted Watts-Strogatz graphs.
    Bench(BenchArgs),
    /// Generate a random weighted graph.
    Generate(GenerateArgs),
    /// Persistence barcode of a weighted graph.
    Persistence(PersistenceArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edgelist,
    Adjacency,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationArg {
    /// Weights are distances: small weights enter first.
    Asc,
    /// Weights are affinities: large weights enter first.
    Desc,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaffoldKind {
    Loose,
    Minimal,
    Draws,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuWeightsArg {
    Filtration,
    Original,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EssentialArg {
    Include,
    Exclude,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthModeArg {
    /// Path length is the reciprocal of the weight.
    Inverse,
    Direct,
    Hop,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Ws,
    Rgg,
    Er,
    Spectral,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "asc")]
    pub orientation: OrientationArg,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Worker threads for per-step minimal bases.
    #[arg(long, env = "MINSCAFFOLD_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub parallelism: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, short, default_value = "out")]
    pub output: PathBuf,
}

#[derive(Args, Debug)]
pub struct ScaffoldArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub scaffold: ScaffoldKind,
    /// Cycle lengths from the filtration weights or from the input weights.
    #[arg(long, value_enum, default_value = "filtration")]
    pub mu_weights: MuWeightsArg,
    /// Whether never-dying classes count towards the loose scaffold.
    #[arg(long, value_enum, default_value = "include")]
    pub essential: EssentialArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Two graph files, or two scaffold CSV files.
    #[arg(num_args = 0..=2)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    /// Vertex count for scaffold CSV inputs; defaults to the largest id plus one.
    #[arg(long)]
    pub n_vertices: Option<usize>,
    #[arg(long, value_enum, default_value = "inverse")]
    pub length_mode: LengthModeArg,
    #[arg(long, value_enum, requires = "sample")]
    pub model: Option<Model>,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub k: usize,
    #[arg(long, default_value_t = 0.025)]
    pub p: f64,
    #[arg(long, default_value_t = 0.3)]
    pub t: f64,
    /// Number of random instances.
    #[arg(long, requires = "model")]
    pub sample: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Graph sizes; `k = n/2`.
    #[arg(long, value_delimiter = ',', default_values_t = [10, 20, 30, 40])]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 0.025)]
    pub p: f64,
    /// Seeds per size, counting up from `--seed`.
    #[arg(long, default_value_t = 5)]
    pub seeds: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum, required_unless_present = "config")]
    pub model: Option<Model>,
    /// A JSON generator configuration, e.g. `{"model":"rgg","n":25,"t":0.3,"seed":1}`.
    #[arg(long, conflicts_with = "model")]
    pub config: Option<PathBuf>,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub k: usize,
    #[arg(long, default_value_t = 0.025)]
    pub p: f64,
    #[arg(long, default_value_t = 0.3)]
    pub t: f64,
    /// Edge count for `er`.
    #[arg(long, default_value_t = 40)]
    pub m: usize,
    /// Observations behind the correlation matrix for `spectral`.
    #[arg(long, default_value_t = 60)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct PersistenceArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, default_value = "out")]
    pub output: PathBuf,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        Error::Parse { .. }
        | Error::SelfLoop { .. }
        | Error::NegativeWeight { .. }
        | Error::ConflictingDuplicate { .. }
        | Error::NotSquare { .. }
        | Error::Asymmetric { .. }
        | Error::NotPositiveSemidefinite { .. }
        | Error::InvalidGraph(_)
        | Error::VertexSetMismatch(..)
        | Error::Csv(_)
        | Error::Json(_) => 4,
        Error::InvalidParameter(_) => 5,
        Error::Unrepresentable(_) | Error::Overflow => 6,
        Error::EmptyScaffold | Error::EmptySample => 7,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Scaffold(a) => commands::scaffold(&a),
        Command::Compare(a) => commands::compare(&a),
        Command::Bench(a) => commands::bench(&a),
        Command::Generate(a) => commands::generate(&a),
        Command::Persistence(a) => commands::persistence(&a),
    };
    match result {
        Ok(written) => {
            for path in written {
                println!("{}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
