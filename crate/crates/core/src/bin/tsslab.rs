use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tsslab::gadgets::reduce_thresholds_to_two;
use tsslab::graph::{generate_random, parse_instance, write_instance, GeneratorConfig, SeedSet, ThresholdMode};
use tsslab::propagation::{activate, Mode};
use tsslab::reductions::{
    choose_gap_padding, clique_to_max_influence, is_to_influence_decision, is_to_min_closed_influence, mcs_to_tss,
    GapParameters, GapVariant, ReducedInstance, RhoPreset,
};
use tsslab::solvers::{
    greedy_target_set, k_influence, min_open_influence_unanimity, optimal_target_set, unanimity_target_set_2approx,
    with_threads, Goal, SizeRule, SolveResult,
};
use tsslab::verify::{run_suite, Suite, SuiteConfig};
use tsslab::{parse_circuit, Error};

/// Target Set Selection: propagate, solve, reduce, verify, generate.
#[derive(Parser)]
#[command(name = "tsslab", version)]
struct Cli {
    /// Worker threads for exhaustive searches (0: one per core).
    #[arg(long, global = true, env = "TSSLAB_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace activation from a seed set.
    Propagate {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated 1-based vertex ids (may be empty).
        #[arg(short, long, default_value = "", allow_hyphen_values = true)]
        seeds: String,
    },
    /// Solve a target set or k-influence problem.
    Solve(SolveArgs),
    /// Compile an instance with one of the reductions.
    Reduce(ReduceArgs),
    /// Run a property suite against the brute-force oracles.
    Verify(VerifyArgs),
    /// Generate a random instance.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    /// Exact minimum target set.
    Tss,
    /// Greedy target set.
    Greedy,
    /// Maximal-matching target set for unanimity thresholds.
    Matching,
    /// Exhaustive k-influence (see --goal, --mode).
    Influence,
    /// Polynomial Min Open k-Influence under unanimity.
    UnanimityMin,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Open,
    Closed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Open => Mode::Open,
            ModeArg::Closed => Mode::Closed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    Max,
    Min,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ProblemArg::Tss)]
    problem: ProblemArg,
    #[arg(short)]
    k: Option<usize>,
    /// Decision threshold: report whether the optimum is <= l (min) or >= l (max).
    #[arg(short)]
    l: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = GoalArg::Max)]
    goal: GoalArg,
    /// Search |S| = k for max, or |S| <= k for min, instead of the default.
    #[arg(long)]
    flip_cardinality: bool,
    /// Largest target set size tried by the exact solver.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    /// Monotone circuit to target set selection.
    Mcs,
    /// Thresholds at most 2 on a bipartite graph.
    Thresholds,
    /// Clique to max closed k-influence.
    Clique,
    /// Independent set to k-influence at most l.
    IsDecision,
    /// Independent set to min closed k-influence.
    MinClosed,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    reduction: ReductionArg,
    #[arg(short, long)]
    input: PathBuf,
    /// Output directory for instance.tss, provenance.txt and params.txt.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(short)]
    k: Option<usize>,
    /// Padding depth (clique) or fan size (min-closed); bypasses --rho.
    #[arg(long = "h")]
    h: Option<u64>,
    /// Ratio function: const:c, linear:c or poly:c,d.
    #[arg(long, default_value = "const:1")]
    rho: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
    mode: ModeArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: propagation, mcs-equivalence, thresholds-two, clique-gap,
    /// is-decision, min-closed-gap, unanimity-min, vertex-cover,
    /// gadget-direction, padding.
    suite: String,
    #[arg(long)]
    trials: Option<usize>,
    /// Largest instance size.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_inputs: Option<usize>,
    #[arg(long = "h")]
    h: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Edge probability.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// const:c, majority, unanimity or random.
    #[arg(long, default_value = "majority")]
    thresholds: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Property,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    match with_threads(threads, move || run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Propagate { input, seeds } => {
            let inst = parse_instance(&read(&input)?)?;
            let seed = SeedSet::parse_list(inst.vertex_count(), &seeds)?;
            print!("{}", activate(&inst, &seed).to_record());
            Ok(())
        }
        Command::Solve(args) => solve(args),
        Command::Reduce(args) => reduce(args),
        Command::Verify(args) => {
            let suite: Suite = args.suite.parse()?;
            let cfg = SuiteConfig {
                trials: args.trials,
                n: args.n,
                max_inputs: args.max_inputs,
                h: args.h,
                seed: args.seed,
            };
            let report = run_suite(suite, &cfg);
            print!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Property)
            }
        }
        Command::Gen(args) => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(Failure::Usage(format!("edge probability {} not in [0, 1]", args.p)));
            }
            let cfg = GeneratorConfig {
                n: args.n,
                edge_probability: args.p,
                threshold_mode: args.thresholds.parse::<ThresholdMode>()?,
                rng_seed: args.seed,
            };
            let text = write_instance(&generate_random(&cfg)?);
            match args.output {
                Some(path) => write(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
    }
}

fn require_k(k: Option<usize>) -> Result<usize, Failure> {
    k.ok_or_else(|| Failure::Usage("this problem needs -k".into()))
}

fn solve(args: SolveArgs) -> Result<(), Failure> {
    let inst = parse_instance(&read(&args.input)?)?;
    let mode = Mode::from(args.mode);
    let goal = match args.goal {
        GoalArg::Max => Goal::Max,
        GoalArg::Min => Goal::Min,
    };
    let result: SolveResult = match args.problem {
        ProblemArg::Tss => optimal_target_set(&inst, args.cap.unwrap_or(inst.vertex_count())),
        ProblemArg::Greedy => greedy_target_set(&inst),
        ProblemArg::Matching => unanimity_target_set_2approx(&inst)?,
        ProblemArg::Influence => {
            let rule = match (goal.default_size_rule(), args.flip_cardinality) {
                (r, false) => r,
                (SizeRule::AtMost, true) => SizeRule::Exactly,
                (SizeRule::Exactly, true) => SizeRule::AtMost,
            };
            k_influence(&inst, require_k(args.k)?, mode, goal, rule)?
        }
        ProblemArg::UnanimityMin => min_open_influence_unanimity(&inst, require_k(args.k)?)?,
    };
    let mut rec = result.to_record();
    if let Some(l) = args.l {
        let yes = match (args.problem, goal) {
            (ProblemArg::Influence, Goal::Max) => result.value >= l,
            _ => result.seed.is_some() && result.value <= l,
        };
        rec.push("l", l).push("decision", if yes { "yes" } else { "no" });
    }
    print!("{rec}");
    Ok(())
}

fn reduce(args: ReduceArgs) -> Result<(), Failure> {
    let text = read(&args.input)?;
    let rho = || args.rho.parse::<RhoPreset>();
    let reduced: ReducedInstance = match args.reduction {
        ReductionArg::Mcs => mcs_to_tss(&parse_circuit(&text)?),
        ReductionArg::Thresholds => reduce_thresholds_to_two(&parse_instance(&text)?),
        ReductionArg::Clique => {
            let k = require_k(args.k)?;
            let g = parse_instance(&text)?.graph().clone();
            let params = match args.h {
                Some(h) => GapParameters::clique_with_h(k, h)?,
                None => choose_gap_padding(k, &rho()?, GapVariant::Clique)?,
            };
            clique_to_max_influence(&g, k, &params)?
        }
        ReductionArg::IsDecision => {
            let g = parse_instance(&text)?.graph().clone();
            is_to_influence_decision(&g, require_k(args.k)?, args.mode.into())?
        }
        ReductionArg::MinClosed => {
            let k = require_k(args.k)?;
            let g = parse_instance(&text)?.graph().clone();
            let params = match args.h {
                Some(h) => GapParameters::min_closed_with_h(k, h)?,
                None => choose_gap_padding(k, &rho()?, GapVariant::MinClosed)?,
            };
            is_to_min_closed_influence(&g, k, &params)?
        }
    };
    let params = reduced.params_record().to_string();
    if let Some(dir) = &args.output {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        write(&dir.join("instance.tss"), &write_instance(&reduced.instance))?;
        write(&dir.join("provenance.txt"), &reduced.provenance.to_sidecar())?;
        write(&dir.join("params.txt"), &params)?;
    }
    print!("{params}");
    Ok(())
}
