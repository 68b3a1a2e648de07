use thiserror::Error;

/// Errors surfaced by the exact-arithmetic core and the verification pipelines.
#[derive(Debug, Error)]
pub enum Error {
    /// A point is not a member of the universe of the given space.
    #[error("point out of space: {0}")]
    PointOutOfSpace(String),

    /// A space description violates one of its structural invariants.
    #[error("malformed space: {0}")]
    MalformedSpec(String),

    /// A closed-set representation is not valid for the given space.
    #[error("representation does not match space: {0}")]
    RepSpecMismatch(String),

    /// An enumeration would exceed the configured cap.
    #[error("enumeration of {needed} sets exceeds cap {cap}")]
    BoundTooLarge { needed: u128, cap: u128 },

    /// An operation requires a non-empty set.
    #[error("set must be non-empty")]
    EmptySet,

    /// An index is outside the declared range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// The supplied set does not satisfy the certificate it was paired with.
    #[error("set does not satisfy the certificate: {0}")]
    NotSatisfied(String),

    /// The operation needs a positive separation radius at every point.
    #[error("space is not discrete: {0}")]
    NotDiscrete(String),

    /// The operation needs a metric with a finite value set.
    #[error("metric is not finite-valued: {0}")]
    NotFiniteValued(String),

    /// A free-sum tuple is missing a summand component.
    #[error("summand {0} has no component (empty part)")]
    MissingSummand(u64),

    /// The set meets the summand it was claimed to miss.
    #[error("set meets summand {0}")]
    SummandNotMissing(u64),

    /// The all-zero cube point, which is outside every embedding domain.
    #[error("the all-zero cube point is outside the embedding domain")]
    ZeroPoint,

    /// A set shape the closedness certifier cannot analyse.
    #[error("set not representable for this operation: {0}")]
    NotRepresentable(String),

    /// A claim id that does not name any verification pipeline.
    #[error("unknown claim: {0}")]
    UnknownClaim(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// A checked internal obligation failed; indicates a bug, never user error.
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
