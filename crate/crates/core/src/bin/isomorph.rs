use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use isomorph::cli::{self, MorphConfig, Schedule, EXIT_CODES};
use isomorph::Engine;

/// Isometry-preserving morphs between two poses of the same mesh or skeleton.
#[derive(Debug, Parser)]
#[command(name = "isomorph", version, after_help = EXIT_CODES)]
struct Args {
    /// Start pose (.off, .obj, or .skel with --engine skeleton)
    #[arg(long)]
    start: PathBuf,
    /// End pose, same connectivity as the start pose
    #[arg(long)]
    end: PathBuf,
    /// polygon, skeleton, exact (alias exponential) or averaging
    #[arg(long, default_value = "averaging")]
    engine: Engine,
    /// Produce a single pose at this t in [0, 1]
    #[arg(long, conflicts_with = "steps")]
    t: Option<f64>,
    /// Produce this many poses evenly spaced over [0, 1]
    #[arg(long)]
    steps: Option<usize>,
    /// Skip rigid alignment of the end pose onto the start pose
    #[arg(long)]
    no_align: bool,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, default_value = "out")]
    prefix: String,
    /// Write a CSV quality report here
    #[arg(long)]
    report: Option<PathBuf>,
    /// Candidate budget for the exact and averaging engines
    /// [default: 1000000 for exact, 20000000 for averaging]
    #[arg(long)]
    budget: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let schedule = match (args.t, args.steps) {
        (_, Some(n)) => Schedule::Steps(n),
        (Some(t), None) => Schedule::At(t),
        (None, None) => Schedule::At(0.5),
    };
    let config = MorphConfig {
        start: args.start,
        end: args.end,
        engine: args.engine,
        schedule,
        align: !args.no_align,
        out_dir: args.out_dir,
        prefix: args.prefix,
        report: args.report,
        budget: args.budget,
    };
    match cli::run(&config) {
        Ok(summary) => {
            for path in &summary.written {
                println!("{}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("isomorph: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
