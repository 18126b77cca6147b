//! Core domain types and the analytic cost engine.
//!
//! An ordering is a permutation of coin ids; positions are 1-based. For an
//! ordering `a`, `z1(j)` is the probability that the first `j - 1` coins all
//! come up heads and `z0(j)` that they all come up tails. The flip process
//! reaches position `j >= 3` exactly when the first `j - 1` outcomes are
//! unanimous, so the expected number of flips is
//!
//! ```text
//! cost(a) = 2 + sum_{j=3..n} (z1(j) + z0(j))
//! ```
//!
//! A position is 0-biased when an all-tails prefix is likelier than an
//! all-heads one, 1-biased in the opposite case, and unbiased on ties. Maximal
//! runs of equal bias partition the positions into blocks; the block structure
//! drives every solver in this crate.

use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A coin's identifier: its index in the original input.
pub type CoinId = usize;

/// Relative tolerance under which the two unanimous-prefix probabilities are
/// considered equal. Products of exactly representable probabilities (such as
/// 0.5) classify exactly; the floor keeps the comparison meaningful after
/// gradual underflow.
pub const BIAS_TOLERANCE: f64 = 1e-12;

/// A problem instance: head probabilities indexed by coin id, plus a sorted
/// view shared by all solvers.
#[derive(Debug, Clone)]
pub struct Instance {
    probs: Vec<f64>,
    sorted_view: Vec<CoinId>,
}

impl Instance {
    /// Builds an instance, rejecting empty inputs and probabilities that are
    /// non-finite or outside `[0, 1]`.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyInstance);
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProbability { index, value });
            }
        }
        let mut sorted_view: Vec<CoinId> = (0..probs.len()).collect();
        // ties in probability resolve to the lower id, so every downstream
        // choice in the crate is deterministic
        sorted_view.sort_by(|&a, &b| probs[a].partial_cmp(&probs[b]).unwrap().then(a.cmp(&b)));
        Ok(Instance { probs, sorted_view })
    }

    /// Number of coins.
    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Head probability of a coin.
    pub fn p(&self, id: CoinId) -> f64 {
        self.probs[id]
    }

    /// Tail probability of a coin.
    pub fn p_bar(&self, id: CoinId) -> f64 {
        1.0 - self.probs[id]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Coin ids ranked by non-decreasing probability, ties by ascending id.
    pub fn sorted_view(&self) -> &[CoinId] {
        &self.sorted_view
    }

    /// The ordering that flips coins in input order.
    pub fn identity_ordering(&self) -> Ordering {
        Ordering::new((0..self.len()).collect())
    }
}

/// A flip ordering: coin ids by 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Ordering {
    seq: Vec<CoinId>,
}

impl Ordering {
    pub fn new(seq: Vec<CoinId>) -> Self {
        Ordering { seq }
    }

    pub fn seq(&self) -> &[CoinId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Coin at a 1-based position.
    pub fn coin_at(&self, position: usize) -> CoinId {
        self.seq[position - 1]
    }
}

/// Checks that `ordering` is a permutation of the instance's coin ids.
pub(crate) fn validate_ordering(instance: &Instance, ordering: &Ordering) -> Result<()> {
    let n = instance.len();
    if ordering.len() != n {
        return Err(Error::OrderingMismatch);
    }
    let mut seen = vec![false; n];
    for &id in ordering.seq() {
        if id >= n || seen[id] {
            return Err(Error::OrderingMismatch);
        }
        seen[id] = true;
    }
    Ok(())
}

/// Bias of an ordering at a position: which unanimous prefix is more likely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bias {
    /// An all-tails prefix is strictly more likely.
    #[serde(rename = "0-biased")]
    ZeroBiased,
    /// An all-heads prefix is strictly more likely.
    #[serde(rename = "1-biased")]
    OneBiased,
    /// Both unanimous prefixes are equally likely (within tolerance).
    #[serde(rename = "unbiased")]
    Unbiased,
}

impl Bias {
    /// Classifies a position from its two prefix probabilities.
    pub fn classify(z1: f64, z0: f64) -> Bias {
        let tol = BIAS_TOLERANCE * z1.max(z0).max(1e-300);
        if (z1 - z0).abs() <= tol {
            Bias::Unbiased
        } else if z0 > z1 {
            Bias::ZeroBiased
        } else {
            Bias::OneBiased
        }
    }
}

impl fmt::Display for Bias {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bias::ZeroBiased => "0-biased",
            Bias::OneBiased => "1-biased",
            Bias::Unbiased => "unbiased",
        })
    }
}

/// The unanimous-prefix probabilities of an ordering, for `j` in `1..=n + 1`:
/// `z1(j)` is the chance the first `j - 1` coins are all heads, `z0(j)` that
/// they are all tails. `z1(1) = z0(1) = 1`, and both arrays are non-increasing.
#[derive(Debug, Clone)]
pub struct PrefixProducts {
    z1: Vec<f64>,
    z0: Vec<f64>,
}

impl PrefixProducts {
    /// All-heads prefix probability at a 1-based index `j` in `1..=n + 1`.
    pub fn z1(&self, j: usize) -> f64 {
        self.z1[j - 1]
    }

    /// All-tails prefix probability at a 1-based index `j` in `1..=n + 1`.
    pub fn z0(&self, j: usize) -> f64 {
        self.z0[j - 1]
    }

    /// Number of coins `n`; the arrays hold `n + 1` entries.
    pub fn coins(&self) -> usize {
        self.z1.len() - 1
    }
}

/// Computes the prefix-product arrays of an ordering.
pub fn prefix_products(instance: &Instance, ordering: &Ordering) -> Result<PrefixProducts> {
    validate_ordering(instance, ordering)?;
    let n = instance.len();
    let mut z1 = Vec::with_capacity(n + 1);
    let mut z0 = Vec::with_capacity(n + 1);
    z1.push(1.0);
    z0.push(1.0);
    let (mut heads, mut tails) = (1.0f64, 1.0f64);
    for &id in ordering.seq() {
        heads *= instance.p(id);
        tails *= instance.p_bar(id);
        z1.push(heads);
        z0.push(tails);
    }
    Ok(PrefixProducts { z1, z0 })
}

/// Expected number of flips of an ordering, `2 + sum_{j=3..n} (z1(j) + z0(j))`.
/// Always in `[2, n]`; requires `n >= 2`.
pub fn cost(instance: &Instance, ordering: &Ordering) -> Result<f64> {
    validate_ordering(instance, ordering)?;
    if instance.len() < 2 {
        return Err(Error::InstanceTooSmall {
            min: 2,
            got: instance.len(),
        });
    }
    Ok(cost_of_seq(instance, ordering.seq()))
}

/// Cost of a raw id sequence, assumed to be a valid permutation with `n >= 2`.
pub(crate) fn cost_of_seq(instance: &Instance, seq: &[CoinId]) -> f64 {
    let n = seq.len();
    let (mut heads, mut tails) = (1.0f64, 1.0f64);
    let mut total = 2.0;
    for (i, &id) in seq.iter().enumerate() {
        heads *= instance.p(id);
        tails *= instance.p_bar(id);
        // after i + 1 coins these products are z(i + 2); only j in [3, n] contribute
        if i >= 1 && i + 2 <= n {
            total += heads + tails;
        }
    }
    total
}

/// Bias at a 1-based position in `1..=n`.
pub fn bias_at(products: &PrefixProducts, position: usize) -> Result<Bias> {
    let n = products.coins();
    if position < 1 || position > n {
        return Err(Error::PositionOutOfRange {
            position,
            min: 1,
            max: n,
        });
    }
    Ok(Bias::classify(products.z1(position), products.z0(position)))
}

/// A maximal run of consecutive positions sharing one bias.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Block {
    pub bias: Bias,
    /// First position of the run (1-based, inclusive).
    pub start: usize,
    /// Last position of the run (1-based, inclusive).
    pub end: usize,
}

/// The biased-block partition `[B_1, ..., B_q]` of an ordering: blocks tile
/// positions `1..=n` and adjacent blocks carry different biases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BlockSequence {
    blocks: Vec<Block>,
}

impl BlockSequence {
    /// Groups positions `1..=n` into maximal equal-bias runs.
    pub fn from_products(products: &PrefixProducts) -> BlockSequence {
        let n = products.coins();
        let mut blocks: Vec<Block> = Vec::new();
        for j in 1..=n {
            let bias = Bias::classify(products.z1(j), products.z0(j));
            match blocks.last_mut() {
                Some(last) if last.bias == bias => last.end = j,
                _ => blocks.push(Block {
                    bias,
                    start: j,
                    end: j,
                }),
            }
        }
        BlockSequence { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Block decomposition of an ordering.
pub fn blocks(instance: &Instance, ordering: &Ordering) -> Result<BlockSequence> {
    let products = prefix_products(instance, ordering)?;
    Ok(BlockSequence::from_products(&products))
}

/// Cost change from swapping positions `x` and `x + 1`, in closed form:
/// `(z1(x) - z0(x)) * (p_{a(x+1)} - p_{a(x)})`.
pub fn swap_adjacent_delta(instance: &Instance, ordering: &Ordering, x: usize) -> Result<f64> {
    validate_ordering(instance, ordering)?;
    let n = instance.len();
    if x < 1 || x + 1 > n {
        return Err(Error::PositionOutOfRange {
            position: x,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    let products = prefix_products(instance, ordering)?;
    let p_here = instance.p(ordering.coin_at(x));
    let p_next = instance.p(ordering.coin_at(x + 1));
    Ok((products.z1(x) - products.z0(x)) * (p_next - p_here))
}

/// Cost change from swapping positions `s < t`, in closed form:
///
/// ```text
/// (p_{a(t)} - p_{a(s)}) * ( z1(s) * sum_{j=s+1..t} prod_{u=s+1..j-1} p_{a(u)}
///                         - z0(s) * sum_{j=s+1..t} prod_{u=s+1..j-1} pbar_{a(u)} )
/// ```
pub fn swap_any_delta(instance: &Instance, ordering: &Ordering, s: usize, t: usize) -> Result<f64> {
    validate_ordering(instance, ordering)?;
    let n = instance.len();
    if s < 1 || t > n || s >= t {
        return Err(Error::InvalidParameter(format!(
            "swap positions must satisfy 1 <= s < t <= {n}, got s = {s}, t = {t}"
        )));
    }
    let products = prefix_products(instance, ordering)?;
    let p_s = instance.p(ordering.coin_at(s));
    let p_t = instance.p(ordering.coin_at(t));
    let (mut sum_heads, mut sum_tails) = (0.0f64, 0.0f64);
    let (mut prod_heads, mut prod_tails) = (1.0f64, 1.0f64);
    for j in (s + 1)..=t {
        // entering this iteration the running products cover positions s+1..j-1
        sum_heads += prod_heads;
        sum_tails += prod_tails;
        if j < t {
            let id = ordering.coin_at(j);
            prod_heads *= instance.p(id);
            prod_tails *= instance.p_bar(id);
        }
    }
    Ok((p_t - p_s) * (products.z1(s) * sum_heads - products.z0(s) * sum_tails))
}

/// Probability that the flip at position `x > 1` terminates the process,
/// conditioned on reaching it:
/// `(pbar_{a(x)} z1(x) + p_{a(x)} z0(x)) / (z1(x) + z0(x))`.
///
/// Errors when the position is unreachable (`z1(x) + z0(x) = 0`).
pub fn termination_prob(instance: &Instance, ordering: &Ordering, x: usize) -> Result<f64> {
    validate_ordering(instance, ordering)?;
    let n = instance.len();
    if x < 2 || x > n {
        return Err(Error::PositionOutOfRange {
            position: x,
            min: 2,
            max: n,
        });
    }
    let products = prefix_products(instance, ordering)?;
    let (z1, z0) = (products.z1(x), products.z0(x));
    let reach = z1 + z0;
    if reach == 0.0 {
        return Err(Error::UnreachablePosition { position: x });
    }
    let id = ordering.coin_at(x);
    Ok((instance.p_bar(id) * z1 + instance.p(id) * z0) / reach)
}

/// The largest position `t` such that every position `2..=t` terminates with
/// conditional probability at least 1/2; returns 1 when position 2 already
/// falls short. Unreachable positions count as terminating (the process has
/// certainly stopped earlier).
pub fn crossover_point(instance: &Instance, ordering: &Ordering) -> Result<usize> {
    validate_ordering(instance, ordering)?;
    let n = instance.len();
    let products = prefix_products(instance, ordering)?;
    let mut t = 1;
    for x in 2..=n {
        let (z1, z0) = (products.z1(x), products.z0(x));
        let reach = z1 + z0;
        let holds = if reach == 0.0 {
            true
        } else {
            let id = ordering.coin_at(x);
            (instance.p_bar(id) * z1 + instance.p(id) * z0) / reach >= 0.5
        };
        if !holds {
            break;
        }
        t = x;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(probs: &[f64]) -> Instance {
        Instance::new(probs.to_vec()).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn instance_sorts_with_ties_by_id() {
        let instance = inst(&[0.9, 0.4, 0.8, 0.4, 0.6]);
        assert_eq!(instance.sorted_view(), &[1, 3, 4, 2, 0]);
    }

    #[test]
    fn instance_rejects_bad_probabilities() {
        assert_eq!(
            Instance::new(vec![1.2]).unwrap_err(),
            Error::InvalidProbability {
                index: 0,
                value: 1.2
            }
        );
        assert!(Instance::new(vec![0.5, f64::NAN]).is_err());
        assert!(Instance::new(vec![-0.1]).is_err());
        assert_eq!(Instance::new(vec![]).unwrap_err(), Error::EmptyInstance);
    }

    #[test]
    fn prefix_products_match_direct_products() {
        let instance = inst(&[0.9, 0.4, 0.8, 0.5, 0.6]);
        let products = prefix_products(&instance, &instance.identity_ordering()).unwrap();
        assert_eq!(products.z1(1), 1.0);
        assert_eq!(products.z0(1), 1.0);
        assert!(close(products.z1(3), 0.36, 1e-15));
        assert!(close(products.z0(3), 0.06, 1e-15));
    }

    #[test]
    fn prefix_products_zero_coin_annihilates() {
        let instance = inst(&[0.0, 0.7, 0.3]);
        let products = prefix_products(&instance, &instance.identity_ordering()).unwrap();
        for j in 2..=4 {
            assert_eq!(products.z1(j), 0.0);
        }
    }

    #[test]
    fn prefix_products_reject_mismatched_ordering() {
        let instance = inst(&[0.5, 0.5]);
        let bad = Ordering::new(vec![0, 0]);
        assert_eq!(
            prefix_products(&instance, &bad).unwrap_err(),
            Error::OrderingMismatch
        );
        let short = Ordering::new(vec![0]);
        assert_eq!(
            prefix_products(&instance, &short).unwrap_err(),
            Error::OrderingMismatch
        );
    }

    #[test]
    fn cost_matches_worked_examples() {
        let instance = inst(&[0.9, 0.4, 0.8, 0.5, 0.6]);
        let c = cost(&instance, &instance.identity_ordering()).unwrap();
        assert!(close(c, 2.87, 1e-12), "got {c}");

        // same coins, flipped order of the last three
        let c = cost(&instance, &Ordering::new(vec![0, 1, 3, 4, 2])).unwrap();
        assert!(close(c, 2.75, 1e-12), "got {c}");

        let instance = inst(&[1.0, 0.49, 0.99, 0.99]);
        let c = cost(&instance, &instance.identity_ordering()).unwrap();
        assert!(close(c, 2.9751, 1e-12), "got {c}");
    }

    #[test]
    fn cost_of_all_tails_instance_is_n() {
        let instance = inst(&[0.0; 5]);
        let c = cost(&instance, &instance.identity_ordering()).unwrap();
        assert_eq!(c, 5.0);
    }

    #[test]
    fn cost_of_two_coins_is_two() {
        let instance = inst(&[0.3, 0.8]);
        assert_eq!(cost(&instance, &instance.identity_ordering()).unwrap(), 2.0);
    }

    #[test]
    fn cost_rejects_single_coin() {
        let instance = inst(&[0.5]);
        assert_eq!(
            cost(&instance, &instance.identity_ordering()).unwrap_err(),
            Error::InstanceTooSmall { min: 2, got: 1 }
        );
    }

    #[test]
    fn bias_classification_at_positions() {
        let instance = inst(&[0.10, 0.85, 0.80, 0.30, 0.35, 0.60, 0.45, 0.40]);
        let products = prefix_products(&instance, &instance.identity_ordering()).unwrap();
        assert_eq!(bias_at(&products, 1).unwrap(), Bias::Unbiased);
        assert_eq!(bias_at(&products, 2).unwrap(), Bias::ZeroBiased);
        // z1(4) = 0.068 > z0(4) = 0.027
        assert_eq!(bias_at(&products, 4).unwrap(), Bias::OneBiased);
        assert!(matches!(
            bias_at(&products, 9),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            bias_at(&products, 0),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn blocks_match_the_block_coloring_example() {
        let instance = inst(&[0.10, 0.85, 0.80, 0.30, 0.35, 0.60, 0.45, 0.40]);
        let bs = blocks(&instance, &instance.identity_ordering()).unwrap();
        let expected = [
            (Bias::Unbiased, 1, 1),
            (Bias::ZeroBiased, 2, 3),
            (Bias::OneBiased, 4, 5),
            (Bias::ZeroBiased, 6, 8),
        ];
        assert_eq!(bs.len(), expected.len());
        for (block, &(bias, start, end)) in bs.blocks().iter().zip(&expected) {
            assert_eq!((block.bias, block.start, block.end), (bias, start, end));
        }
    }

    #[test]
    fn blocks_of_fair_coins_are_one_unbiased_run() {
        let instance = inst(&[0.5; 6]);
        let bs = blocks(&instance, &instance.identity_ordering()).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(
            bs.blocks()[0],
            Block {
                bias: Bias::Unbiased,
                start: 1,
                end: 6
            }
        );
    }

    #[test]
    fn blocks_after_certain_head_start() {
        let instance = inst(&[1.0, 0.49, 0.99, 0.99]);
        let bs = blocks(&instance, &instance.identity_ordering()).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(
            bs.blocks()[0],
            Block {
                bias: Bias::Unbiased,
                start: 1,
                end: 1
            }
        );
        assert_eq!(
            bs.blocks()[1],
            Block {
                bias: Bias::OneBiased,
                start: 2,
                end: 4
            }
        );
    }

    #[test]
    fn swap_adjacent_delta_examples() {
        let instance = inst(&[0.9, 0.4, 0.8, 0.5, 0.6]);
        let ordering = instance.identity_ordering();
        // position 1 is unbiased, so a swap there is free
        assert_eq!(swap_adjacent_delta(&instance, &ordering, 1).unwrap(), 0.0);

        let delta = swap_adjacent_delta(&instance, &ordering, 2).unwrap();
        assert!(close(delta, 0.32, 1e-12), "got {delta}");
        let swapped = Ordering::new(vec![0, 2, 1, 3, 4]);
        let recomputed = cost(&instance, &swapped).unwrap() - cost(&instance, &ordering).unwrap();
        assert!(close(delta, recomputed, 1e-12));
        assert!(close(cost(&instance, &swapped).unwrap(), 3.19, 1e-12));
    }

    #[test]
    fn swap_adjacent_delta_of_equal_coins_is_zero() {
        let instance = inst(&[0.9, 0.7, 0.7, 0.2]);
        let delta = swap_adjacent_delta(&instance, &instance.identity_ordering(), 2).unwrap();
        assert_eq!(delta, 0.0);
    }

    #[test]
    fn swap_adjacent_delta_range_errors() {
        let instance = inst(&[0.5, 0.5]);
        let ordering = instance.identity_ordering();
        assert!(matches!(
            swap_adjacent_delta(&instance, &ordering, 0),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            swap_adjacent_delta(&instance, &ordering, 2),
            Err(Error::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn swap_any_delta_matches_recomputation() {
        let instance = inst(&[0.9, 0.4, 0.8, 0.5, 0.6]);
        let ordering = instance.identity_ordering();
        let delta = swap_any_delta(&instance, &ordering, 2, 4).unwrap();
        let swapped = Ordering::new(vec![0, 3, 2, 1, 4]);
        let recomputed = cost(&instance, &swapped).unwrap() - cost(&instance, &ordering).unwrap();
        assert!(close(delta, recomputed, 1e-12), "{delta} vs {recomputed}");
    }

    #[test]
    fn swap_any_delta_adjacent_agrees_with_adjacent_form() {
        let instance = inst(&[0.9, 0.4, 0.8, 0.5, 0.6]);
        let ordering = instance.identity_ordering();
        for x in 1..=4 {
            let any = swap_any_delta(&instance, &ordering, x, x + 1).unwrap();
            let adj = swap_adjacent_delta(&instance, &ordering, x).unwrap();
            assert!(close(any, adj, 1e-15));
        }
    }

    #[test]
    fn swap_any_delta_of_equal_coins_is_zero() {
        let instance = inst(&[0.3, 0.6, 0.5, 0.6]);
        let delta = swap_any_delta(&instance, &instance.identity_ordering(), 2, 4).unwrap();
        assert_eq!(delta, 0.0);
    }

    #[test]
    fn swap_any_delta_rejects_bad_positions() {
        let instance = inst(&[0.5, 0.5, 0.5]);
        let ordering = instance.identity_ordering();
        assert!(swap_any_delta(&instance, &ordering, 2, 2).is_err());
        assert!(swap_any_delta(&instance, &ordering, 3, 1).is_err());
        assert!(swap_any_delta(&instance, &ordering, 0, 2).is_err());
        assert!(swap_any_delta(&instance, &ordering, 1, 4).is_err());
    }

    #[test]
    fn termination_prob_examples() {
        // unbiased position: the value is 1/2 no matter which coin is flipped
        let instance = inst(&[0.5, 0.5, 0.3]);
        let p = termination_prob(&instance, &instance.identity_ordering(), 3).unwrap();
        assert!(close(p, 0.5, 1e-12));

        let instance = inst(&[0.9, 0.9]);
        let p = termination_prob(&instance, &instance.identity_ordering(), 2).unwrap();
        assert!(close(p, 0.18, 1e-12));

        // a sure-tails coin after an all-tails prefix never terminates
        let instance = inst(&[0.0, 0.0]);
        let p = termination_prob(&instance, &instance.identity_ordering(), 2).unwrap();
        assert_eq!(p, 0.0);
    }

    #[test]
    fn termination_prob_errors() {
        let instance = inst(&[0.0, 1.0, 0.5]);
        let ordering = instance.identity_ordering();
        assert!(matches!(
            termination_prob(&instance, &ordering, 1),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            termination_prob(&instance, &ordering, 4),
            Err(Error::PositionOutOfRange { .. })
        ));
        // after (tails, heads) the process has always stopped
        assert_eq!(
            termination_prob(&instance, &ordering, 3).unwrap_err(),
            Error::UnreachablePosition { position: 3 }
        );
    }

    #[test]
    fn crossover_point_examples() {
        let instance = inst(&[0.5, 0.5, 0.5, 0.0]);
        assert_eq!(
            crossover_point(&instance, &instance.identity_ordering()).unwrap(),
            4
        );

        let instance = inst(&[0.9, 0.9]);
        assert_eq!(
            crossover_point(&instance, &instance.identity_ordering()).unwrap(),
            1
        );

        // termination is certain at position 2; everything later is unreachable
        let instance = inst(&[0.0, 1.0, 0.3, 0.7]);
        assert_eq!(
            crossover_point(&instance, &instance.identity_ordering()).unwrap(),
            4
        );
    }
}
