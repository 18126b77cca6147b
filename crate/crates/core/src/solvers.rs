//! The greedy ordering and the exact solvers built on top of it.
//!
//! Every solver first sorts the coins (once, inside [`Instance`]) and then
//! works with two pick orders: ascending probability and descending
//! probability, with runs of equal probability always consumed in ascending id
//! order. The greedy rule is: at a 1-biased position take the smallest
//! remaining coin, otherwise take the largest.
//!
//! An optimal ordering follows the greedy rule everywhere except possibly at
//! one position `x`, the last position of the greedy ordering's second-to-last
//! block. [`modified_greedy`] ignores that structure and tries every
//! single-position deviation in `O(n^3)`; [`faster_modified_greedy`] tries
//! only the `O(n)` candidates at `x` in `O(n^2)`; [`solve_exact`] evaluates
//! those same candidates with one `O(n)` partial-sum scan.

use serde::Serialize;

use crate::model::{self, Bias, CoinId, Instance, Ordering};
use crate::{Error, Result};

/// Which algorithm produced a [`SolveReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Greedy,
    /// `O(n^3)`: every ordering that is greedy except at one position.
    Modified,
    /// `O(n^2)`: greedy plus direct evaluation of the candidates at `x`.
    Fast,
    /// `O(n log n)`: the same candidates, costed by one partial-sum scan.
    Exact,
    BruteForce,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Modified => "modified",
            Algorithm::Fast => "fast",
            Algorithm::Exact => "exact",
            Algorithm::BruteForce => "brute-force",
        }
    }
}

/// Solver output: the chosen ordering, its expected cost, and search metadata.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub ordering: Ordering,
    pub cost: f64,
    pub algorithm: Algorithm,
    /// How many candidate orderings had their cost evaluated.
    pub candidates_evaluated: usize,
    /// The position just prior to the final block of the greedy ordering,
    /// when one exists: the only position where the returned ordering may
    /// deviate from the greedy rule.
    pub nongreedy_position: Option<usize>,
}

/// Walks a fixed pick order, lazily skipping coins that are already used.
pub(crate) struct PickCursor<'a> {
    order: &'a [CoinId],
    next: usize,
}

impl<'a> PickCursor<'a> {
    pub(crate) fn new(order: &'a [CoinId]) -> Self {
        PickCursor { order, next: 0 }
    }

    pub(crate) fn starting_at(order: &'a [CoinId], next: usize) -> Self {
        PickCursor { order, next }
    }

    /// Takes the first unused coin in the order, marking it used.
    pub(crate) fn take(&mut self, used: &mut [bool]) -> Option<CoinId> {
        while self.next < self.order.len() && used[self.order[self.next]] {
            self.next += 1;
        }
        let id = self.order.get(self.next).copied()?;
        used[id] = true;
        Some(id)
    }
}

/// Descending-probability pick order with equal-probability runs kept in
/// ascending id order, so ties still resolve to the lowest id.
pub(crate) fn descending_pick_order(instance: &Instance) -> Vec<CoinId> {
    let sorted = instance.sorted_view();
    let mut order = Vec::with_capacity(sorted.len());
    let mut run_end = sorted.len();
    while run_end > 0 {
        let p = instance.p(sorted[run_end - 1]);
        let mut run_start = run_end;
        while run_start > 0 && instance.p(sorted[run_start - 1]) == p {
            run_start -= 1;
        }
        order.extend_from_slice(&sorted[run_start..run_end]);
        run_end = run_start;
    }
    order
}

/// The greedy ordering: position by position, pick the remaining coin that
/// maximizes the probability of terminating there. At a 1-biased position
/// that is the smallest remaining probability; otherwise the largest.
pub fn greedy(instance: &Instance) -> Ordering {
    let n = instance.len();
    let descending = descending_pick_order(instance);
    let mut smallest = PickCursor::new(instance.sorted_view());
    let mut largest = PickCursor::new(&descending);
    let mut used = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    let (mut heads, mut tails) = (1.0f64, 1.0f64);
    for _ in 0..n {
        let id = match Bias::classify(heads, tails) {
            Bias::OneBiased => smallest.take(&mut used),
            _ => largest.take(&mut used),
        }
        .expect("the pick orders cover every coin");
        seq.push(id);
        heads *= instance.p(id);
        tails *= instance.p_bar(id);
    }
    Ordering::new(seq)
}

/// Exhaustive version of the one-deviation search: for every position `j` and
/// every remaining coin, force that coin at `j`, fill everything else
/// greedily, and keep a minimum-cost ordering. `O(n^3)`; retained as an
/// independent cross-check of the faster solvers.
pub fn modified_greedy(instance: &Instance) -> Result<SolveReport> {
    let n = instance.len();
    if n < 2 {
        return Err(Error::InstanceTooSmall { min: 2, got: n });
    }
    let b = greedy(instance);
    let descending = descending_pick_order(instance);
    let ascending = instance.sorted_view();

    let mut best_cost = f64::INFINITY;
    let mut best_seq: Vec<CoinId> = Vec::new();
    let mut evaluated = 0usize;

    // state of the shared greedy prefix b(1..j-1)
    let mut prefix_used = vec![false; n];
    let (mut prefix_heads, mut prefix_tails) = (1.0f64, 1.0f64);
    let mut candidate: Vec<CoinId> = Vec::with_capacity(n);

    for j in 1..=n {
        for forced in 0..n {
            if prefix_used[forced] {
                continue;
            }
            candidate.clear();
            candidate.extend_from_slice(&b.seq()[..j - 1]);
            candidate.push(forced);
            let mut used = prefix_used.clone();
            used[forced] = true;
            let mut heads = prefix_heads * instance.p(forced);
            let mut tails = prefix_tails * instance.p_bar(forced);
            let mut smallest = PickCursor::new(ascending);
            let mut largest = PickCursor::new(&descending);
            while candidate.len() < n {
                let id = match Bias::classify(heads, tails) {
                    Bias::OneBiased => smallest.take(&mut used),
                    _ => largest.take(&mut used),
                }
                .expect("unused coins remain");
                candidate.push(id);
                heads *= instance.p(id);
                tails *= instance.p_bar(id);
            }
            let c = model::cost_of_seq(instance, &candidate);
            evaluated += 1;
            if c < best_cost {
                best_cost = c;
                best_seq.clear();
                best_seq.extend_from_slice(&candidate);
            }
        }
        let id = b.seq()[j - 1];
        prefix_used[id] = true;
        prefix_heads *= instance.p(id);
        prefix_tails *= instance.p_bar(id);
    }

    Ok(SolveReport {
        ordering: Ordering::new(best_seq),
        cost: best_cost,
        algorithm: Algorithm::Modified,
        candidates_evaluated: evaluated,
        nongreedy_position: None,
    })
}

/// The candidate ordering `c_{x'}` explored by the exact solvers: starting
/// from the greedy ordering, the coin at position `x'` takes position `x`,
/// positions between shift by one, and the coin at `x` moves to the end.
/// Requires `1 <= x < x' <= n`.
pub fn nongreedy_candidate(greedy: &Ordering, x: usize, x_prime: usize) -> Ordering {
    let seq = greedy.seq();
    let mut out = Vec::with_capacity(seq.len());
    out.extend_from_slice(&seq[..x - 1]);
    out.push(seq[x_prime - 1]);
    out.extend_from_slice(&seq[x..x_prime - 1]);
    out.extend_from_slice(&seq[x_prime..]);
    out.push(seq[x - 1]);
    Ordering::new(out)
}

/// Greedy plus direct `O(n)` cost evaluation of each candidate at the
/// non-greedy position; `O(n^2)` overall.
pub fn faster_modified_greedy(instance: &Instance) -> Result<SolveReport> {
    let n = instance.len();
    if n < 2 {
        return Err(Error::InstanceTooSmall { min: 2, got: n });
    }
    let b = greedy(instance);
    let block_seq = model::blocks(instance, &b)?;
    let greedy_cost = model::cost_of_seq(instance, b.seq());
    let q = block_seq.len();
    if q == 1 {
        // a single block has no position prior to the final block: greedy is optimal
        return Ok(SolveReport {
            ordering: b,
            cost: greedy_cost,
            algorithm: Algorithm::Fast,
            candidates_evaluated: 1,
            nongreedy_position: None,
        });
    }
    let x = block_seq.blocks()[q - 2].end;
    let mut best_cost = greedy_cost;
    let mut best: Option<Ordering> = None;
    let mut evaluated = 1usize;
    for x_prime in ((x + 1)..=n).rev() {
        let candidate = nongreedy_candidate(&b, x, x_prime);
        let c = model::cost_of_seq(instance, candidate.seq());
        evaluated += 1;
        if c < best_cost {
            best_cost = c;
            best = Some(candidate);
        }
    }
    Ok(SolveReport {
        ordering: best.unwrap_or(b),
        cost: best_cost,
        algorithm: Algorithm::Fast,
        candidates_evaluated: evaluated,
        nongreedy_position: Some(x),
    })
}

/// Costs of all exact-solver candidates from one partial-sum scan.
#[derive(Debug, Clone)]
pub struct ExactScan {
    pub greedy: Ordering,
    pub greedy_cost: f64,
    /// `x`, the last position of the greedy ordering's second-to-last block;
    /// `None` when the greedy ordering is a single block.
    pub nongreedy_position: Option<usize>,
    /// `(x', cost(c_{x'}))` in generation order, i.e. decreasing `x'`.
    pub candidates: Vec<(usize, f64)>,
}

/// Evaluates every candidate `c_{x'}` in `O(n)` total after the sort.
///
/// With `b` the greedy ordering and `zhat_j` the prefix products of `b` that
/// skip position `x`, the scan uses
///
/// ```text
/// delta(x') = sum_{j=x+1..x'} (zhat_j^1 - zhat_j^0)
/// cost(c_{x'}) = cost(c_{x'+1}) + (p_{b(x')} - p_{b(x'+1)}) * delta(x')
/// ```
///
/// seeded with `cost(c_{n+1}) = cost(b)` and `b(n+1) := b(x)`. The skip
/// products are built by a second forward pass, so `p_{b(x)}` of 0 or 1 needs
/// no special casing.
pub fn exact_scan(instance: &Instance) -> Result<ExactScan> {
    let n = instance.len();
    if n < 2 {
        return Err(Error::InstanceTooSmall { min: 2, got: n });
    }
    let b = greedy(instance);
    let products = model::prefix_products(instance, &b)?;
    let greedy_cost = model::cost_of_seq(instance, b.seq());
    let block_seq = model::BlockSequence::from_products(&products);
    let q = block_seq.len();
    if q == 1 {
        return Ok(ExactScan {
            greedy: b,
            greedy_cost,
            nongreedy_position: None,
            candidates: Vec::new(),
        });
    }
    let x = block_seq.blocks()[q - 2].end;

    let mut delta = vec![0.0f64; n + 1];
    let (mut heads, mut tails) = (products.z1(x), products.z0(x));
    let mut acc = 0.0;
    for (j, slot) in delta.iter_mut().enumerate().skip(x + 1) {
        // entering this iteration the products equal zhat_j
        acc += heads - tails;
        *slot = acc;
        let id = b.coin_at(j);
        heads *= instance.p(id);
        tails *= instance.p_bar(id);
    }

    let mut candidates = Vec::with_capacity(n - x);
    let mut next_cost = greedy_cost;
    let mut next_p = instance.p(b.coin_at(x));
    for x_prime in ((x + 1)..=n).rev() {
        let p = instance.p(b.coin_at(x_prime));
        let c = next_cost + (p - next_p) * delta[x_prime];
        candidates.push((x_prime, c));
        next_cost = c;
        next_p = p;
    }

    Ok(ExactScan {
        greedy: b,
        greedy_cost,
        nongreedy_position: Some(x),
        candidates,
    })
}

/// The `O(n log n)` exact solver: greedy, then the partial-sum scan, then the
/// minimum-cost candidate. Ties keep the earlier-generated candidate (the
/// greedy ordering first, then decreasing `x'`).
pub fn solve_exact(instance: &Instance) -> Result<SolveReport> {
    let scan = exact_scan(instance)?;
    let mut best_cost = scan.greedy_cost;
    let mut best_from: Option<usize> = None;
    for &(x_prime, c) in &scan.candidates {
        if c < best_cost {
            best_cost = c;
            best_from = Some(x_prime);
        }
    }
    let candidates_evaluated = 1 + scan.candidates.len();
    let ordering = match (best_from, scan.nongreedy_position) {
        (Some(x_prime), Some(x)) => nongreedy_candidate(&scan.greedy, x, x_prime),
        _ => scan.greedy,
    };
    Ok(SolveReport {
        ordering,
        cost: best_cost,
        algorithm: Algorithm::Exact,
        candidates_evaluated,
        nongreedy_position: scan.nongreedy_position,
    })
}

/// Greedy-versus-optimal comparison; the gap is always in `[0, 1]`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GreedyGap {
    pub greedy_cost: f64,
    pub optimal_cost: f64,
    pub gap: f64,
}

pub fn greedy_gap(instance: &Instance) -> Result<GreedyGap> {
    let optimal = solve_exact(instance)?;
    let greedy_cost = model::cost_of_seq(instance, greedy(instance).seq());
    Ok(GreedyGap {
        greedy_cost,
        optimal_cost: optimal.cost,
        gap: greedy_cost - optimal.cost,
    })
}
