//! Command-line front end. The `chore-orient` binary only forwards to [`run`].
//!
//! Exit codes: `0` fair orientation found or check passed, `1` none exists or
//! check failed, `2` bad input, `3` a produced orientation failed its own
//! re-check.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::ef1::solve_ef1;
use crate::efx;
use crate::error::Error;
use crate::hardness::{
    gen_random, gen_three_vertex, gen_two_vertex, PartitionInstance, RandomParams,
};
use crate::instance::{ChoreInstance, Orientation};
use crate::oracle::{check_orientation, enumerate_orientations, Criterion};

pub const EXIT_FAIR: i32 = 0;
pub const EXIT_UNFAIR: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SELF_CHECK: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "chore-orient",
    version,
    about = "Fair orientations of chore graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a fair orientation of a simple instance in polynomial time.
    Solve(SolveArgs),
    /// Check an orientation against a criterion.
    Check(CheckArgs),
    /// Decide a small instance (multigraphs allowed) by exhaustive search.
    Oracle(SolveArgs),
    /// Write a generated instance as JSON.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Time the polynomial solver on random instances with twice as many
    /// edges as vertices; prints CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub instance: PathBuf,
    #[arg(long, default_value_t = Criterion::Efx0)]
    pub criterion: Criterion,
    /// Write the verdict here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub instance: PathBuf,
    pub orientation: PathBuf,
    #[arg(long, default_value_t = Criterion::Efx0)]
    pub criterion: Criterion,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Two agents, one shared edge per value plus a self-loop each.
    Partition2 {
        /// Build the EFX0 variant (zero-utility loops) instead of EF1.
        #[arg(long)]
        efx: bool,
        #[arg(required = true)]
        values: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three agents, for EF1.
    Partition3 {
        #[arg(required = true)]
        values: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random instance.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_disutility: i64,
        #[arg(long, default_value_t = 0.5)]
        objective_fraction: f64,
        #[arg(long, default_value_t = 0.0)]
        self_loop_fraction: f64,
        #[arg(long)]
        multigraph: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Vertex counts to time.
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = Criterion::Efx0)]
    pub criterion: Criterion,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub criterion: Criterion,
    pub orientable: bool,
    pub orientation: Option<Orientation>,
    pub stats: Stats,
}

#[derive(Debug, Serialize)]
pub struct Stats {
    pub vertices: usize,
    pub edges: usize,
    pub negative_components: usize,
    pub solve_micros: u128,
}

/// Polynomial solver for `criterion`; the instance must be simple.
pub fn solve_with(
    instance: &ChoreInstance,
    criterion: Criterion,
) -> crate::Result<Option<Orientation>> {
    match criterion {
        Criterion::Ef1 => solve_ef1(instance),
        Criterion::Efx0 => efx::solve(instance),
    }
}

enum Failure {
    Input(String),
    SelfCheck(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Solve(args) => solve(&args, out),
        Command::Check(args) => check(&args, out),
        Command::Oracle(args) => oracle(&args, out),
        Command::Gen(gen) => generate(gen, out),
        Command::Bench(args) => bench(&args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::SelfCheck(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_SELF_CHECK
        }
    }
}

fn read_to_string(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_instance(path: &Path) -> std::result::Result<ChoreInstance, Failure> {
    ChoreInstance::from_json(&read_to_string(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => writeln!(out, "{text}").map_err(|e| Failure::Input(e.to_string())),
    }
}

fn verdict_json(
    instance: &ChoreInstance,
    criterion: Criterion,
    orientation: Option<Orientation>,
    micros: u128,
) -> String {
    let verdict = Verdict {
        criterion,
        orientable: orientation.is_some(),
        orientation,
        stats: Stats {
            vertices: instance.vertex_count(),
            edges: instance.edge_count(),
            negative_components: instance.negative_components().len(),
            solve_micros: micros,
        },
    };
    serde_json::to_string_pretty(&verdict).expect("verdict serialization cannot fail")
}

fn self_check(
    instance: &ChoreInstance,
    orientation: &Option<Orientation>,
    criterion: Criterion,
) -> Outcome {
    match orientation {
        None => Ok(EXIT_UNFAIR),
        Some(o) => match check_orientation(instance, o, criterion) {
            Ok(true) => Ok(EXIT_FAIR),
            Ok(false) => Err(Failure::SelfCheck(format!(
                "produced orientation is not {criterion}"
            ))),
            Err(e) => Err(Failure::SelfCheck(format!(
                "produced orientation is malformed: {e}"
            ))),
        },
    }
}

fn solve(args: &SolveArgs, out: &mut dyn Write) -> Outcome {
    let instance = read_instance(&args.instance)?;
    if let Some((first, second)) = instance.parallel_pair() {
        return Err(Failure::Input(format!(
            "edges {first} and {second} are parallel; the polynomial solvers need a simple graph, \
             use `chore-orient oracle` for small multigraphs"
        )));
    }
    let start = Instant::now();
    let orientation = solve_with(&instance, args.criterion)?;
    let micros = start.elapsed().as_micros();
    let code = self_check(&instance, &orientation, args.criterion)?;
    emit(
        &verdict_json(&instance, args.criterion, orientation, micros),
        args.out.as_deref(),
        out,
    )?;
    Ok(code)
}

fn oracle(args: &SolveArgs, out: &mut dyn Write) -> Outcome {
    let instance = read_instance(&args.instance)?;
    let start = Instant::now();
    let orientation = enumerate_orientations(&instance, args.criterion)?;
    let micros = start.elapsed().as_micros();
    let code = self_check(&instance, &orientation, args.criterion)?;
    emit(
        &verdict_json(&instance, args.criterion, orientation, micros),
        args.out.as_deref(),
        out,
    )?;
    Ok(code)
}

fn check(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let instance = read_instance(&args.instance)?;
    let orientation = Orientation::from_json(&read_to_string(&args.orientation)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.orientation.display())))?;
    let fair = check_orientation(&instance, &orientation, args.criterion)?;
    let verdict = if fair { "pass" } else { "fail" };
    emit(&format!("{}: {verdict}", args.criterion), None, out)?;
    Ok(if fair { EXIT_FAIR } else { EXIT_UNFAIR })
}

fn generate(gen: GenCommand, out: &mut dyn Write) -> Outcome {
    let (instance, path) = match gen {
        GenCommand::Partition2 { efx, values, out } => {
            let variant = if efx { Criterion::Efx0 } else { Criterion::Ef1 };
            (
                gen_two_vertex(&PartitionInstance::new(values)?, variant),
                out,
            )
        }
        GenCommand::Partition3 { values, out } => {
            (gen_three_vertex(&PartitionInstance::new(values)?), out)
        }
        GenCommand::Random {
            vertices,
            edges,
            seed,
            max_disutility,
            objective_fraction,
            self_loop_fraction,
            multigraph,
            out,
        } => {
            let params = RandomParams {
                vertices,
                edges,
                max_disutility,
                objective_fraction,
                self_loop_fraction,
                multigraph,
            };
            (gen_random(&params, seed)?, out)
        }
    };
    emit(&instance.to_json(), path.as_deref(), out)?;
    Ok(EXIT_FAIR)
}

fn bench(args: &BenchArgs, out: &mut dyn Write) -> Outcome {
    let mut table = String::from("size,micros");
    for &size in &args.sizes {
        let n = size.max(1);
        let params = RandomParams {
            vertices: n,
            edges: (2 * n).min(n * (n - 1) / 2 + n),
            self_loop_fraction: 0.0,
            ..RandomParams::default()
        };
        let instance = gen_random(&params, args.seed)?;
        let start = Instant::now();
        let orientation = solve_with(&instance, args.criterion)?;
        let micros = start.elapsed().as_micros();
        if let Some(o) = &orientation {
            if !check_orientation(&instance, o, args.criterion)? {
                return Err(Failure::SelfCheck(format!(
                    "size {size}: orientation is not {}",
                    args.criterion
                )));
            }
        }
        table.push_str(&format!("\n{size},{micros}"));
    }
    emit(&table, None, out)?;
    Ok(EXIT_FAIR)
}
