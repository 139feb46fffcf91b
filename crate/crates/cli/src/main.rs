mod commands;
mod failure;
mod input;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use failure::Failure;

#[derive(Parser)]
#[command(name = "adrg", version, about = "Spectral perturbation toolkit for walk-regular and distance-regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct Tolerances {
    /// Eigenvalue clustering tolerance (default scales with the spectral radius)
    #[arg(long)]
    tol: Option<f64>,
    /// Absolute tolerance when comparing crossed local multiplicities
    #[arg(long, default_value_t = adrg::classify::MULTIPLICITY_TOLERANCE)]
    compare_tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: spectrum, punctual profile and distance-regularity
    Analyze {
        /// A .g6 or .json file, or a catalog name
        input: String,
        #[arg(long)]
        json: bool,
        /// Classify distances up to this value only
        #[arg(long)]
        max_h: Option<u32>,
        /// Include wall-clock time per stage (output is then not reproducible)
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        tolerances: Tolerances,
    },
    /// The four punctual classifications at every distance
    Profile {
        input: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_h: Option<u32>,
        #[command(flatten)]
        tolerances: Tolerances,
    },
    /// Apply one perturbation, e.g. "P1:4" or "P5:2,7", and verify its identity
    Perturb {
        input: String,
        /// Descriptor P1:u, P2:u, P3:u, P4:u,v, P5:u,v or P6:u,v
        op: String,
        /// Output file; the perturbed graph goes to stdout when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Exit 0 when the two graphs share a characteristic polynomial, 1 otherwise
    Cospectral {
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Cospectral mates from one pair perturbation at a fixed distance
    Mates {
        input: String,
        /// Distance between the perturbed vertices
        #[arg(long = "distance", visible_alias = "h")]
        distance: u32,
        /// p1/delete, p4/flip, p5/amalgamate or p6/bridge
        #[arg(long)]
        op: String,
        /// Directory receiving one file per isomorphism class plus manifest.json
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List the catalog, or print one graph from it
    Catalog {
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
    /// Removal-cospectral, isometric and perturb-cospectral vertex sets
    Sets {
        #[command(subcommand)]
        command: SetsCommand,
    },
}

#[derive(Args, Clone, Debug)]
struct SetPair {
    /// The graph containing U
    input: String,
    /// The graph containing U′ (defaults to the first graph)
    #[arg(long)]
    other: Option<String>,
    /// Vertices of U, comma separated
    #[arg(long)]
    u: String,
    /// Vertices of U′, paired positionally with U
    #[arg(long = "u-prime")]
    u_prime: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum SetsCommand {
    /// Decide removal-cospectrality of the paired sets
    Removal {
        #[command(flatten)]
        pair: SetPair,
        #[arg(long, value_enum, default_value_t = RemovalArg::Both)]
        method: RemovalArg,
    },
    /// Check that the pairing preserves distances
    Isometric {
        #[command(flatten)]
        pair: SetPair,
    },
    /// Compare walk counts between paired vertices
    Walks {
        #[command(flatten)]
        pair: SetPair,
        /// Longest walk length (default: number of distinct eigenvalues minus one)
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Search for a bijection U → U′ that is isometric and removal-cospectral
    Find {
        #[command(flatten)]
        pair: SetPair,
    },
    /// Apply perturbations to corresponding sets and recheck cospectrality
    Perturb {
        #[command(flatten)]
        pair: SetPair,
        /// Descriptors separated by ';' or whitespace, in G-side indices
        #[arg(long)]
        ops: String,
    },
    /// Delete or complete every k-coclique and group the results
    Cocliques {
        input: String,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = CocliqueOp::Delete)]
        op: CocliqueOp,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    G6,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RemovalArg {
    Multiplicity,
    Exhaustive,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CocliqueOp {
    Delete,
    Complete,
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("ADRG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::parse(format!("ADRG_THREADS must be a positive integer, got '{value}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::invariant(e.to_string()))
}

fn run(cli: Cli) -> Result<i32, Failure> {
    configure_threads()?;
    match cli.command {
        Command::Analyze {
            input,
            json,
            max_h,
            timings,
            tolerances,
        } => commands::analyze(&input, json, max_h, timings, tolerances.tol, tolerances.compare_tol),
        Command::Profile {
            input,
            json,
            max_h,
            tolerances,
        } => commands::profile(&input, json, max_h, tolerances.tol, tolerances.compare_tol),
        Command::Perturb { input, op, out, json } => commands::perturb(&input, &op, out.as_deref(), json),
        Command::Cospectral { first, second, json } => commands::cospectral(&first, &second, json),
        Command::Mates {
            input,
            distance,
            op,
            out_dir,
            json,
        } => commands::mates(&input, distance, &op, out_dir.as_deref(), json),
        Command::Catalog { name, format } => commands::catalog(name.as_deref(), format),
        Command::Sets { command } => commands::sets(command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
