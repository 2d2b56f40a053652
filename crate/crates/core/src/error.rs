use thiserror::Error;

use crate::model::Color;

/// Violations of the domain-type invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("expected {expected} edges, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("edge ({0},{1}) has no color")]
    MissingEdge(usize, usize),
    #[error("edge ({0},{1}) is not an edge of the vertex range")]
    BadEdge(usize, usize),
    #[error("edge ({0},{1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("color {0} is out of range")]
    ColorOutOfRange(Color),
    #[error("color {0} has no edges")]
    PhantomColor(Color),
    #[error("color map has {got} entries, coloring has {expected} colors")]
    BadColorMap { expected: usize, got: usize },
    #[error("class sizes sum to {got}, expected {expected}")]
    SumMismatch { expected: usize, got: usize },
    #[error("class sizes must be positive")]
    NonPositiveEntry,
    #[error("invalid star partition: {0}")]
    StarPartition(String),
    #[error("invalid Gallai partition: {0}")]
    GallaiPartition(String),
    #[error("invalid parameters: {0}")]
    Params(String),
}

/// Errors raised while reading a coloring file.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invariant violation: {0}")]
    Invariant(#[from] ModelError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Errors from the certificate checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("coloring is not Gallai: rainbow triangle {0:?}")]
    NotGallai([usize; 3]),
    #[error("no Gallai partition found")]
    NotFound,
    #[error("l = {ell} is outside 1..={k}")]
    BadEll { ell: usize, k: usize },
}

/// Why a best-effort construction gave up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotConstructedReason {
    /// The distribution fails the prefix-sum necessary condition at this `l`.
    NecessaryCondition(usize),
    /// Exhaustive search proved the distribution unrealizable.
    Infeasible,
    /// Every fallback ran to completion without producing a coloring.
    FallbackExhausted,
    /// A search budget ran out before a decision.
    Unknown,
}

impl std::fmt::Display for NotConstructedReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NecessaryCondition(l) => write!(f, "necessary condition fails at l={l}"),
            Self::Infeasible => write!(f, "infeasible"),
            Self::FallbackExhausted => write!(f, "fallback exhausted"),
            Self::Unknown => write!(f, "unknown (budget exceeded)"),
        }
    }
}

/// Errors from the constructive procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{k} colors exceed the balanced maximum {max}")]
    TooManyColors { k: usize, max: usize },
    #[error("no star partition realizes the distribution")]
    NotFound,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("cannot peel at n={n}: largest class {largest} < {needed}")]
    PeelImpossible {
        n: usize,
        largest: usize,
        needed: usize,
    },
    #[error("not constructed: {0}")]
    NotConstructed(NotConstructedReason),
    #[error("schedule error: {0}")]
    InternalSchedule(String),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
    #[error("strategy {strategy} does not apply: {reason}")]
    NotApplicable {
        strategy: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("post-check failed: {0}")]
    PostCheck(String),
}
