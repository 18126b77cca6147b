//! `uvote`: command-line front end for the unanimous-vote ordering solvers.
//!
//! Exit codes: 0 success, 2 input error, 3 domain error (instance too small
//! or too large for the requested computation), 4 verification violations.

mod report;
mod verify;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use uvote::model::{self, Instance, Ordering};
use uvote::oracle::{self, TrialRng};
use uvote::solvers::{self, Algorithm};
use uvote::{adaptive, Error};

use report::{
    AdaptiveReportFile, CostReportFile, GapReportFile, InstanceFile, SimulateReportFile,
    SolveReportFile,
};
use verify::Suite;

#[derive(Parser)]
#[command(
    name = "uvote",
    version,
    about = "Minimum-expected-flip coin orderings: exact solvers, greedy baselines, \
             adaptive strategies, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance for a minimum-cost flip ordering
    Solve {
        /// Instance file (JSON: {"probs": [...]})
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Exact)]
        algorithm: AlgorithmArg,
    },
    /// Evaluate the expected-flip cost of a given ordering
    Cost {
        input: PathBuf,
        /// Comma-separated 0-based coin indices, e.g. 2,0,1
        #[arg(long, value_delimiter = ',', required = true)]
        ordering: Vec<usize>,
    },
    /// Compute the optimal adaptive strategy
    Adaptive { input: PathBuf },
    /// Compare the optimal non-adaptive ordering with the adaptive strategy
    Gap { input: PathBuf },
    /// Generate an instance file on standard output
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Number of coins (lower-bound and uniform families)
        #[arg(long)]
        n: Option<usize>,
        /// Gap parameter in (0, 1] (greedy-gap family)
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Estimate expected flips by seeded Monte Carlo simulation
    Simulate {
        input: PathBuf,
        /// Simulate this non-adaptive ordering (comma-separated indices)
        #[arg(long, value_delimiter = ',')]
        ordering: Option<Vec<usize>>,
        /// Simulate the adaptive strategy starting from this coin instead
        #[arg(long)]
        adaptive_first: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a randomized verification suite and print a CSV summary
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Inclusive instance-size range, e.g. 2..9
        #[arg(long, default_value = "2..9", value_parser = parse_range)]
        n_range: (usize, usize),
        /// Instances per size
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Exact,
    Fast,
    Modified,
    Greedy,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[clap(rename_all = "kebab-case")]
enum Family {
    LowerBound,
    GreedyGap,
    Uniform,
}

fn parse_range(raw: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = raw
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {raw:?}"))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain(String),
    Violations(usize),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Violations(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Domain(msg) => f.write_str(msg),
            CliError::Violations(count) => write!(f, "{count} verification violation(s)"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::InstanceTooSmall { .. } | Error::InstanceTooLarge { .. } => {
                CliError::Domain(err.to_string())
            }
            _ => CliError::Input(err.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve { input, algorithm } => cmd_solve(&input, algorithm),
        Command::Cost { input, ordering } => cmd_cost(&input, ordering),
        Command::Adaptive { input } => cmd_adaptive(&input),
        Command::Gap { input } => cmd_gap(&input),
        Command::Gen {
            family,
            n,
            delta,
            seed,
        } => cmd_gen(family, n, delta, seed),
        Command::Simulate {
            input,
            ordering,
            adaptive_first,
            trials,
            seed,
        } => cmd_simulate(&input, ordering, adaptive_first, trials, seed),
        Command::Verify {
            suite,
            n_range,
            samples,
            seed,
        } => cmd_verify(suite, n_range, samples, seed),
    }
}

fn load_instance(path: &Path) -> Result<Instance, CliError> {
    let raw = fs::read_to_string(path)
        .map_err(|err| CliError::Input(format!("cannot read {}: {err}", path.display())))?;
    let file: InstanceFile = serde_json::from_str(&raw)
        .map_err(|err| CliError::Input(format!("invalid instance file: {err}")))?;
    Ok(Instance::new(file.probs)?)
}

fn emit<T: serde::Serialize>(report: &T) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|err| CliError::Input(format!("cannot serialize report: {err}")))?;
    println!("{json}");
    Ok(())
}

fn ordered_probs(instance: &Instance, seq: &[usize]) -> Vec<f64> {
    seq.iter().map(|&id| instance.p(id)).collect()
}

fn elapsed_ms(started: Instant) -> f64 {
    started.elapsed().as_secs_f64() * 1e3
}

fn cmd_solve(input: &Path, algorithm: AlgorithmArg) -> Result<(), CliError> {
    let instance = load_instance(input)?;
    let started = Instant::now();
    let (ordering, cost, tag, candidates, nongreedy) = match algorithm {
        AlgorithmArg::Exact => {
            let r = solvers::solve_exact(&instance)?;
            (
                r.ordering,
                Some(r.cost),
                r.algorithm,
                r.candidates_evaluated,
                r.nongreedy_position,
            )
        }
        AlgorithmArg::Fast => {
            let r = solvers::faster_modified_greedy(&instance)?;
            (
                r.ordering,
                Some(r.cost),
                r.algorithm,
                r.candidates_evaluated,
                r.nongreedy_position,
            )
        }
        AlgorithmArg::Modified => {
            let r = solvers::modified_greedy(&instance)?;
            (
                r.ordering,
                Some(r.cost),
                r.algorithm,
                r.candidates_evaluated,
                r.nongreedy_position,
            )
        }
        AlgorithmArg::Greedy => {
            let ordering = solvers::greedy(&instance);
            let cost = if instance.len() >= 2 {
                Some(model::cost(&instance, &ordering)?)
            } else {
                None
            };
            (ordering, cost, Algorithm::Greedy, 1, None)
        }
    };
    let time_ms = elapsed_ms(started);
    emit(&SolveReportFile {
        algorithm: tag,
        probs: ordered_probs(&instance, ordering.seq()),
        ordering: ordering.seq().to_vec(),
        cost,
        candidates,
        nongreedy_position: nongreedy,
        time_ms,
    })
}

fn cmd_cost(input: &Path, ordering: Vec<usize>) -> Result<(), CliError> {
    let instance = load_instance(input)?;
    let ordering = Ordering::new(ordering);
    let started = Instant::now();
    let cost = model::cost(&instance, &ordering)?;
    let blocks = model::blocks(&instance, &ordering)?;
    let crossover_point = model::crossover_point(&instance, &ordering)?;
    let time_ms = elapsed_ms(started);
    emit(&CostReportFile {
        algorithm: "cost",
        probs: ordered_probs(&instance, ordering.seq()),
        ordering: ordering.seq().to_vec(),
        cost,
        blocks: blocks.blocks().to_vec(),
        crossover_point,
        time_ms,
    })
}

fn cmd_adaptive(input: &Path) -> Result<(), CliError> {
    let instance = load_instance(input)?;
    let started = Instant::now();
    let strategy = adaptive::optimal_adaptive(&instance)?;
    let time_ms = elapsed_ms(started);
    // heads-branch flip order: the chosen coin, then the rest ascending
    let mut ordering = vec![strategy.first];
    ordering.extend(
        instance
            .sorted_view()
            .iter()
            .copied()
            .filter(|&id| id != strategy.first),
    );
    emit(&AdaptiveReportFile {
        algorithm: "adaptive",
        first: strategy.first,
        cost: strategy.cost,
        probs: ordered_probs(&instance, &ordering),
        ordering,
        time_ms,
    })
}

fn cmd_gap(input: &Path) -> Result<(), CliError> {
    let instance = load_instance(input)?;
    let started = Instant::now();
    let report = adaptive::adaptivity_ratio(&instance)?;
    let time_ms = elapsed_ms(started);
    emit(&GapReportFile {
        algorithm: "gap",
        nonadaptive_cost: report.nonadaptive_cost,
        adaptive_cost: report.adaptive_cost,
        ratio: report.ratio,
        probs: ordered_probs(&instance, report.nonadaptive_ordering.seq()),
        ordering: report.nonadaptive_ordering.seq().to_vec(),
        adaptive_first: report.adaptive_first,
        time_ms,
    })
}

fn cmd_gen(
    family: Family,
    n: Option<usize>,
    delta: Option<f64>,
    seed: u64,
) -> Result<(), CliError> {
    // family parameters are user input, so anything wrong with them exits 2
    let bad_params = |err: Error| CliError::Input(err.to_string());
    let file = match family {
        Family::LowerBound => {
            let n = n.ok_or_else(|| CliError::Input("lower-bound requires --n".into()))?;
            let instance = adaptive::lower_bound_instance(n).map_err(bad_params)?;
            InstanceFile {
                probs: instance.probs().to_vec(),
                name: Some(format!("lower-bound-n{n}")),
            }
        }
        Family::GreedyGap => {
            let delta =
                delta.ok_or_else(|| CliError::Input("greedy-gap requires --delta".into()))?;
            let instance = adaptive::greedy_gap_instance(delta).map_err(bad_params)?;
            InstanceFile {
                probs: instance.probs().to_vec(),
                name: Some(format!("greedy-gap-delta{delta}")),
            }
        }
        Family::Uniform => {
            let n = n.ok_or_else(|| CliError::Input("uniform requires --n".into()))?;
            if n == 0 {
                return Err(CliError::Input("uniform requires --n of at least 1".into()));
            }
            let mut rng = TrialRng::new(seed, 0);
            InstanceFile {
                probs: (0..n).map(|_| rng.next_f64()).collect(),
                name: Some(format!("uniform-n{n}-seed{seed}")),
            }
        }
    };
    emit(&file)
}

fn cmd_simulate(
    input: &Path,
    ordering: Option<Vec<usize>>,
    adaptive_first: Option<usize>,
    trials: u64,
    seed: u64,
) -> Result<(), CliError> {
    let instance = load_instance(input)?;
    let started = Instant::now();
    match (ordering, adaptive_first) {
        (Some(seq), None) => {
            let ordering = Ordering::new(seq);
            let result = oracle::simulate_nonadaptive(&instance, &ordering, trials, seed)?;
            let time_ms = elapsed_ms(started);
            emit(&SimulateReportFile {
                algorithm: "simulate-nonadaptive",
                ordering: Some(ordering.seq().to_vec()),
                first: None,
                mean_flips: result.mean_flips,
                std_error: result.std_error,
                trials: result.trials,
                seed: result.seed,
                time_ms,
            })
        }
        (None, Some(first)) => {
            let result = oracle::simulate_adaptive(&instance, first, trials, seed)?;
            let time_ms = elapsed_ms(started);
            emit(&SimulateReportFile {
                algorithm: "simulate-adaptive",
                ordering: None,
                first: Some(first),
                mean_flips: result.mean_flips,
                std_error: result.std_error,
                trials: result.trials,
                seed: result.seed,
                time_ms,
            })
        }
        _ => Err(CliError::Input(
            "pass exactly one of --ordering or --adaptive-first".into(),
        )),
    }
}

fn cmd_verify(
    suite: Suite,
    n_range: (usize, usize),
    samples: usize,
    seed: u64,
) -> Result<(), CliError> {
    if samples == 0 {
        return Err(CliError::Input("samples must be at least 1".into()));
    }
    let rows = verify::run_suite(suite, n_range, samples, seed)?;
    println!("{}", verify::CSV_HEADER);
    let mut total = 0usize;
    for row in &rows {
        println!("{}", row.csv());
        total += row.violations;
    }
    if total > 0 {
        return Err(CliError::Violations(total));
    }
    Ok(())
}
