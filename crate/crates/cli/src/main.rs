use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use sumrank::sumrank::DEFAULT_CUTOFF;
use sumrank::{Field, Profile};

mod commands;
mod demos;
mod fmt;

#[derive(Parser)]
#[command(name = "sumrank", version, about = "Exact computations in sum-rank metric spaces")]
struct Cli {
    /// Print JSON instead of text. Counts are decimal strings.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of elements any command may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    cutoff: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singleton and sphere-packing bounds for minimum distance D.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        d: usize,
    },
    /// Number of elements of sum-rank at most R.
    Ball {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        r: usize,
    },
    /// Largest dimension of a linear R-anticode and the weight splits reaching it.
    AnticodeDim {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        r: usize,
        /// Also print the size over GF(Q).
        #[arg(long)]
        q: Option<u64>,
    },
    /// Describe all optimal linear R-anticodes.
    Classify {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: Option<u64>,
        /// Count the family over GF(Q).
        #[arg(long, requires = "q")]
        count: bool,
        /// Find every optimal anticode by exhaustive search and compare.
        #[arg(long, requires = "q")]
        brute: bool,
    },
    /// Rank ball-times-full anticodes of diameter at most R against the optimal linear one.
    Compare {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        r: usize,
    },
    /// Check whether the span of the elements in FILE is an R-anticode.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        basis: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Initial entries, line-cover number and largest sum-rank of a span.
    Meshulam {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        basis: PathBuf,
    },
    /// Shortest-path distance in the sum-rank-one graph.
    Geodesic {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        profile: String,
        /// File with exactly two elements. Without it, all distances from 0 are checked.
        #[arg(long)]
        pair: Option<PathBuf>,
    },
    /// Recompute a worked example and compare with the published numbers.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DemoName {
    DistanceRegularity,
    HammingBinary,
    #[value(name = "remark-10-11")]
    Remark1011,
    #[value(name = "hybrid-f2-f5")]
    HybridF2F5,
}

/// What a command prints, in both forms.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// `false` makes the process exit with status 1.
    pub ok: bool,
}

pub struct Ctx {
    pub cutoff: u64,
}

pub fn field(q: u64) -> sumrank::Result<Field> {
    Field::new(q)
}

pub fn profile(s: &str) -> sumrank::Result<Profile> {
    let p = Profile::parse(s)?;
    if p.was_normalized() {
        eprintln!("note: profile {s} taken in canonical order as {p}");
    }
    Ok(p)
}

fn run(cli: &Cli) -> sumrank::Result<Report> {
    let ctx = Ctx { cutoff: cli.cutoff };
    match &cli.command {
        Command::Bounds { q, profile: p, d } => commands::bounds(*q, &profile(p)?, *d),
        Command::Ball { q, profile: p, r } => commands::ball(*q, &profile(p)?, *r),
        Command::AnticodeDim { profile: p, r, q } => commands::anticode_dim(&profile(p)?, *r, *q),
        Command::Classify {
            profile: p,
            r,
            q,
            count,
            brute,
        } => commands::classify(&ctx, &profile(p)?, *r, *q, *count, *brute),
        Command::Compare { q, profile: p, r } => commands::compare(*q, &profile(p)?, *r),
        Command::Verify {
            q,
            profile: p,
            basis,
            r,
        } => commands::verify(&ctx, *q, &profile(p)?, basis, *r),
        Command::Meshulam { q, profile: p, basis } => commands::meshulam(&ctx, *q, &profile(p)?, basis),
        Command::Geodesic { q, profile: p, pair } => commands::geodesic(&ctx, *q, &profile(p)?, pair.as_deref()),
        Command::Demo { name } => Ok(demos::run(*name)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
