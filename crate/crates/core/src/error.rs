use thiserror::Error;

/// Errors reported by the solver library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("instance must contain at least one coin")]
    EmptyInstance,

    #[error("probability at index {index} is {value}; expected a finite value in [0, 1]")]
    InvalidProbability { index: usize, value: f64 },

    /// The ordering is not a permutation of the instance's coin ids.
    #[error("ordering/instance mismatch")]
    OrderingMismatch,

    #[error("instance too small: need at least {min} coins, got {got}")]
    InstanceTooSmall { min: usize, got: usize },

    #[error("instance too large for {op}: n = {got} exceeds the limit of {max}")]
    InstanceTooLarge {
        op: &'static str,
        max: usize,
        got: usize,
    },

    #[error("position {position} out of range [{min}, {max}]")]
    PositionOutOfRange {
        position: usize,
        min: usize,
        max: usize,
    },

    /// Both unanimous-prefix probabilities are zero: the flip process always
    /// terminates before this position.
    #[error("unreachable position {position}: z1 + z0 = 0")]
    UnreachablePosition { position: usize },

    #[error("unknown coin id {id} for an instance of {n} coins")]
    UnknownCoinId { id: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
