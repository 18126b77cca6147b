//! Independent ground truth: exhaustive permutation search, a
//! process-semantics expectation, and seeded Monte Carlo simulation.

use serde::Serialize;

use crate::model::{self, CoinId, Instance, Ordering};
use crate::solvers::{Algorithm, SolveReport};
use crate::{Error, Result};

/// Largest instance the factorial search will accept (10! is about 3.6M).
pub const BRUTE_FORCE_MAX: usize = 10;

/// Largest instance [`exact_expectation`] will accept.
pub const EXPECTATION_MAX: usize = 20;

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Splittable splitmix64 generator used by the simulators.
///
/// Each `(seed, stream)` pair yields its own deterministic sequence, so
/// per-trial draws are independent of how trials are batched or scheduled;
/// results depend only on the seed, never on the host or thread count.
#[derive(Debug, Clone)]
pub struct TrialRng {
    state: u64,
}

impl TrialRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        TrialRng {
            state: mix64(seed ^ GAMMA).wrapping_add(stream.wrapping_mul(GAMMA)),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform draw from `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Monte Carlo estimate of the expected number of flips.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SimResult {
    pub mean_flips: f64,
    /// Standard error of the mean; 0 for a single trial.
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
}

fn summarize(sum: f64, sum_sq: f64, trials: u64, seed: u64) -> SimResult {
    let count = trials as f64;
    let mean_flips = sum / count;
    let std_error = if trials > 1 {
        let variance = ((sum_sq - sum * mean_flips) / (count - 1.0)).max(0.0);
        (variance / count).sqrt()
    } else {
        0.0
    };
    SimResult {
        mean_flips,
        std_error,
        trials,
        seed,
    }
}

/// Minimum-cost ordering by enumerating all `n!` permutations. Ties resolve
/// to the lexicographically smallest id sequence. Guarded to `n <= 10`.
pub fn brute_force_optimal(instance: &Instance) -> Result<SolveReport> {
    let n = instance.len();
    if n < 2 {
        return Err(Error::InstanceTooSmall { min: 2, got: n });
    }
    if n > BRUTE_FORCE_MAX {
        return Err(Error::InstanceTooLarge {
            op: "brute force",
            max: BRUTE_FORCE_MAX,
            got: n,
        });
    }
    let mut perm: Vec<CoinId> = (0..n).collect();
    let mut best: Vec<CoinId> = perm.clone();
    let mut best_cost = f64::INFINITY;
    let mut evaluated = 0usize;
    loop {
        let c = model::cost_of_seq(instance, &perm);
        evaluated += 1;
        if c < best_cost {
            best_cost = c;
            best.copy_from_slice(&perm);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(SolveReport {
        ordering: Ordering::new(best),
        cost: best_cost,
        algorithm: Algorithm::BruteForce,
        candidates_evaluated: evaluated,
        nongreedy_position: None,
    })
}

/// Advances to the lexicographic successor in place; false at the last one.
fn next_permutation(perm: &mut [CoinId]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Expected flips derived from the stopping process itself: the flip count is
/// `sum_j P(coin j is flipped)`, and coin `j` is flipped exactly when the
/// first `j - 1` outcomes were unanimous. Tracks the two unanimous prefix
/// states forward; deliberately shares no code with the closed-form cost so
/// the two paths can check each other.
pub fn exact_expectation(instance: &Instance, ordering: &Ordering) -> Result<f64> {
    model::validate_ordering(instance, ordering)?;
    let n = instance.len();
    if n > EXPECTATION_MAX {
        return Err(Error::InstanceTooLarge {
            op: "exact expectation",
            max: EXPECTATION_MAX,
            got: n,
        });
    }
    let mut expected = 0.0;
    let (mut all_heads, mut all_tails) = (1.0f64, 1.0f64);
    let mut reach = 1.0;
    for &id in ordering.seq() {
        expected += reach;
        all_heads *= instance.p(id);
        all_tails *= instance.p_bar(id);
        reach = all_heads + all_tails;
    }
    Ok(expected)
}

/// Seeded simulation of the non-adaptive flip process: flip in the given
/// order until both outcomes are seen or the coins run out.
pub fn simulate_nonadaptive(
    instance: &Instance,
    ordering: &Ordering,
    trials: u64,
    seed: u64,
) -> Result<SimResult> {
    model::validate_ordering(instance, ordering)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    for trial in 0..trials {
        let mut rng = TrialRng::new(seed, trial);
        let mut flips = 0u32;
        let (mut heads_seen, mut tails_seen) = (false, false);
        for &id in ordering.seq() {
            flips += 1;
            if rng.next_f64() < instance.p(id) {
                heads_seen = true;
            } else {
                tails_seen = true;
            }
            if heads_seen && tails_seen {
                break;
            }
        }
        let f = f64::from(flips);
        sum += f;
        sum_sq += f * f;
    }
    Ok(summarize(sum, sum_sq, trials, seed))
}

/// Seeded simulation of the adaptive strategy: flip `first`; on heads work
/// through the rest in ascending probability until a tail, on tails in
/// descending probability until a head.
pub fn simulate_adaptive(
    instance: &Instance,
    first: CoinId,
    trials: u64,
    seed: u64,
) -> Result<SimResult> {
    let n = instance.len();
    if first >= n {
        return Err(Error::UnknownCoinId { id: first, n });
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let ascending: Vec<CoinId> = instance
        .sorted_view()
        .iter()
        .copied()
        .filter(|&id| id != first)
        .collect();
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    for trial in 0..trials {
        let mut rng = TrialRng::new(seed, trial);
        let mut flips = 1u32;
        if rng.next_f64() < instance.p(first) {
            for &id in &ascending {
                flips += 1;
                if rng.next_f64() >= instance.p(id) {
                    break;
                }
            }
        } else {
            for &id in ascending.iter().rev() {
                flips += 1;
                if rng.next_f64() < instance.p(id) {
                    break;
                }
            }
        }
        let f = f64::from(flips);
        sum += f;
        sum_sq += f * f;
    }
    Ok(summarize(sum, sum_sq, trials, seed))
}
