use thiserror::Error;

/// Errors raised by model construction, evaluation and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The ground set is too large for the requested operation.
    #[error("ground set of size {n} exceeds the limit of {limit} for this operation")]
    GroundSetTooLarge { n: usize, limit: usize },

    /// A set was passed to an operation that requires feasibility.
    #[error("set is not feasible for the instance region")]
    InfeasibleSet,

    /// Attempt to extend an accumulator by an item it already contains.
    #[error("item {0} is already in the set")]
    ItemAlreadyPresent(usize),

    /// An item index outside `1..=n`.
    #[error("item {item} is outside the ground set 1..={n}")]
    ItemOutOfRange { item: usize, n: usize },

    /// Choice probabilities are only defined for offered products.
    #[error("item {0} is not part of the offered set")]
    ItemNotOffered(usize),

    /// The pairwise submodularity certificate requires a positive
    /// denominator constant.
    #[error("ratio is homogeneous (b0 = 0); the pairwise certificate requires b0 > 0")]
    HomogeneousRatio,

    /// Structure checks that presuppose a submodularity certificate.
    #[error("ratio has not been certified submodular")]
    NotCertifiedSubmodular,

    /// A solver was asked to handle a region it does not support.
    #[error("unsupported region for this operation: {0}")]
    UnsupportedRegion(String),

    /// The homogeneous objective is undefined on the empty set.
    #[error("objective is undefined on the empty set")]
    EmptySet,

    /// A model invariant was violated at construction time.
    #[error("invalid model: {0}")]
    InvalidModel(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
