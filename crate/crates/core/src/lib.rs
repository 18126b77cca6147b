//! Solvers for the unanimous-vote coin ordering problem.
//!
//! Given `n` independent coins with known head probabilities, flip them one at
//! a time in a fixed order until both a head and a tail have been observed, or
//! every coin has been flipped. The expected number of flips depends on the
//! order; this crate computes the order that minimizes it.
//!
//! - [`model`]: instances, orderings, prefix products, the expected-flip cost,
//!   bias classification and block decomposition, swap deltas.
//! - [`solvers`]: the greedy ordering and three exact solvers (`O(n^3)`,
//!   `O(n^2)`, and `O(n log n)`), plus the greedy-versus-optimal gap.
//! - [`adaptive`]: the optimal adaptive strategy, adaptivity ratios, and the
//!   instance families and level orderings used in gap experiments.
//! - [`oracle`]: brute-force search, a process-semantics expectation, and
//!   seeded Monte Carlo simulation for cross-checking everything else.

pub mod adaptive;
mod error;
pub mod model;
pub mod oracle;
pub mod solvers;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
