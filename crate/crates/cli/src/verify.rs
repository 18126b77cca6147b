//! Randomized verification suites behind `uvote verify`.
//!
//! Each suite draws per-instance seeds from `(seed, instance counter)`, so
//! the emitted CSV depends only on the flags, never on scheduling.

use uvote::model::{self, Bias, Instance, Ordering};
use uvote::oracle::{self, TrialRng};
use uvote::solvers;
use uvote::{adaptive, Error};

use crate::CliError;

pub const CSV_HEADER: &str = "suite,n,samples,violations,max_gap_or_ratio,seed";

const COST_TOLERANCE: f64 = 1e-9;
const EXPECTATION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
#[clap(rename_all = "kebab-case")]
pub enum Suite {
    /// Exact solvers against brute force and the process-semantics expectation.
    Oracle,
    /// Block structure of optimal output plus closed-form swap deltas.
    Structure,
    /// Adaptivity ratio bounds.
    Gap,
    /// Greedy-versus-optimal gap bounds.
    GreedyBound,
    /// Partial-sum candidate costs against direct evaluation.
    Recurrence,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Structure => "structure",
            Suite::Gap => "gap",
            Suite::GreedyBound => "greedy-bound",
            Suite::Recurrence => "recurrence",
        }
    }
}

pub struct Row {
    pub suite: &'static str,
    pub n: usize,
    pub samples: usize,
    pub violations: usize,
    pub max_metric: f64,
    pub seed: u64,
}

impl Row {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.suite, self.n, self.samples, self.violations, self.max_metric, self.seed
        )
    }
}

fn random_instance(n: usize, seed: u64, counter: u64) -> Instance {
    let mut rng = TrialRng::new(seed, counter);
    Instance::new((0..n).map(|_| rng.next_f64()).collect())
        .expect("uniform draws are valid probabilities")
}

fn shuffled_ordering(n: usize, rng: &mut TrialRng) -> Ordering {
    let mut seq: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        seq.swap(i, j);
    }
    Ordering::new(seq)
}

/// Within 0-biased blocks probabilities must not increase, within 1-biased
/// blocks not decrease; non-final biased blocks must keep strictly to their
/// side of 1/2 (up to tolerance).
fn optimal_structure_ok(instance: &Instance, ordering: &Ordering) -> Result<bool, Error> {
    let blocks = model::blocks(instance, ordering)?;
    let total = blocks.len();
    for (index, block) in blocks.blocks().iter().enumerate() {
        let final_block = index + 1 == total;
        for position in block.start..=block.end {
            let p = instance.p(ordering.coin_at(position));
            if position < block.end {
                let next = instance.p(ordering.coin_at(position + 1));
                match block.bias {
                    Bias::ZeroBiased if next > p + 1e-9 => return Ok(false),
                    Bias::OneBiased if next < p - 1e-9 => return Ok(false),
                    _ => {}
                }
            }
            if !final_block {
                match block.bias {
                    Bias::ZeroBiased if p <= 0.5 - 1e-9 => return Ok(false),
                    Bias::OneBiased if p >= 0.5 + 1e-9 => return Ok(false),
                    _ => {}
                }
            }
        }
    }
    Ok(true)
}

pub fn run_suite(
    suite: Suite,
    range: (usize, usize),
    samples: usize,
    seed: u64,
) -> Result<Vec<Row>, CliError> {
    let (lo, hi) = range;
    if lo < 2 || lo > hi {
        return Err(CliError::Input(format!(
            "n-range must satisfy 2 <= lo <= hi, got {lo}..{hi}"
        )));
    }
    if suite == Suite::Oracle && hi > oracle::BRUTE_FORCE_MAX {
        return Err(CliError::Input(format!(
            "oracle suite needs n <= {} for brute force, got {hi}",
            oracle::BRUTE_FORCE_MAX
        )));
    }
    let mut rows = Vec::with_capacity(hi - lo + 1);
    let mut counter = 0u64;
    for n in lo..=hi {
        let mut violations = 0usize;
        let mut max_metric = 0.0f64;
        for _ in 0..samples {
            let instance = random_instance(n, seed, counter);
            let mut rng = TrialRng::new(seed, counter ^ 0x5eed_5eed_5eed_5eed);
            counter += 1;
            let ok = match suite {
                Suite::Oracle => check_oracle(&instance, &mut max_metric)?,
                Suite::Structure => check_structure(&instance, &mut rng, &mut max_metric)?,
                Suite::Gap => check_gap(&instance, &mut max_metric)?,
                Suite::GreedyBound => check_greedy_bound(&instance, &mut max_metric)?,
                Suite::Recurrence => check_recurrence(&instance, &mut max_metric)?,
            };
            if !ok {
                violations += 1;
            }
        }
        rows.push(Row {
            suite: suite.as_str(),
            n,
            samples,
            violations,
            max_metric,
            seed,
        });
    }
    Ok(rows)
}

fn check_oracle(instance: &Instance, max_metric: &mut f64) -> Result<bool, CliError> {
    let brute = oracle::brute_force_optimal(instance)?;
    let exact = solvers::solve_exact(instance)?;
    let fast = solvers::faster_modified_greedy(instance)?;
    let modified = solvers::modified_greedy(instance)?;
    let costs = [brute.cost, exact.cost, fast.cost, modified.cost];
    let spread = costs.iter().cloned().fold(f64::MIN, f64::max)
        - costs.iter().cloned().fold(f64::MAX, f64::min);
    *max_metric = max_metric.max(spread);
    let expectation = oracle::exact_expectation(instance, &exact.ordering)?;
    let closed_form = model::cost(instance, &exact.ordering)?;
    Ok(spread <= COST_TOLERANCE && (expectation - closed_form).abs() <= EXPECTATION_TOLERANCE)
}

fn check_structure(
    instance: &Instance,
    rng: &mut TrialRng,
    max_metric: &mut f64,
) -> Result<bool, CliError> {
    let n = instance.len();
    let exact = solvers::solve_exact(instance)?;
    let structured = optimal_structure_ok(instance, &exact.ordering)?;

    // closed-form swap deltas against recomputation on a random ordering
    let ordering = shuffled_ordering(n, rng);
    let base_cost = model::cost(instance, &ordering)?;
    let mut max_err = 0.0f64;
    if n >= 2 {
        let x = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
        let delta = model::swap_adjacent_delta(instance, &ordering, x)?;
        let mut swapped = ordering.seq().to_vec();
        swapped.swap(x - 1, x);
        let direct = model::cost(instance, &Ordering::new(swapped))? - base_cost;
        max_err = max_err.max((delta - direct).abs());

        let s = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
        let t = s + 1 + (rng.next_u64() % (n as u64 - s as u64)) as usize;
        let delta = model::swap_any_delta(instance, &ordering, s, t)?;
        let mut swapped = ordering.seq().to_vec();
        swapped.swap(s - 1, t - 1);
        let direct = model::cost(instance, &Ordering::new(swapped))? - base_cost;
        max_err = max_err.max((delta - direct).abs());
    }
    *max_metric = max_metric.max(max_err);
    Ok(structured && max_err <= COST_TOLERANCE)
}

fn check_gap(instance: &Instance, max_metric: &mut f64) -> Result<bool, CliError> {
    let report = adaptive::adaptivity_ratio(instance)?;
    *max_metric = max_metric.max(report.ratio);
    Ok(report.ratio >= 1.0 - COST_TOLERANCE && report.ratio <= 1.5 + COST_TOLERANCE)
}

fn check_greedy_bound(instance: &Instance, max_metric: &mut f64) -> Result<bool, CliError> {
    let gap = solvers::greedy_gap(instance)?;
    *max_metric = max_metric.max(gap.gap);
    Ok(gap.gap >= -COST_TOLERANCE && gap.gap <= 1.0 + COST_TOLERANCE)
}

fn check_recurrence(instance: &Instance, max_metric: &mut f64) -> Result<bool, CliError> {
    let scan = solvers::exact_scan(instance)?;
    let Some(x) = scan.nongreedy_position else {
        return Ok(true);
    };
    let mut max_err = 0.0f64;
    for &(x_prime, scanned) in &scan.candidates {
        let candidate = solvers::nongreedy_candidate(&scan.greedy, x, x_prime);
        let direct = model::cost(instance, &candidate)?;
        max_err = max_err.max((scanned - direct).abs());
    }
    *max_metric = max_metric.max(max_err);
    Ok(max_err <= COST_TOLERANCE)
}
