//! Error type shared across the crate.

use crate::bounds::TheoremId;

/// Errors produced by graph construction, index evaluation, bound checks,
/// and ensemble specifications.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop edge ({u}, {u}) is not allowed")]
    SelfLoop { u: usize },

    #[error("vertex index {index} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { index: usize, vertex_count: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("exponent must be a finite real number, got {0}")]
    NonFiniteExponent(f64),

    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(f64),

    #[error(
        "M1^alpha with alpha = {alpha} is undefined: graph has {isolated} isolated \
         vertices and 0^alpha diverges for negative alpha"
    )]
    NegativeAlphaWithIsolated { alpha: f64, isolated: usize },

    #[error("monotonicity check requires 0 < alpha < beta, got alpha = {alpha}, beta = {beta}")]
    InvalidMonotonePair { alpha: f64, beta: f64 },

    #[error(
        "{theorem} requires max degree = min degree + 1, but delta = {delta}, Delta = {max_degree}"
    )]
    RequiresDeltaPlusOne {
        theorem: TheoremId,
        delta: usize,
        max_degree: usize,
    },

    #[error(
        "{theorem} requires max degree > min degree + 1, but delta = {delta}, Delta = {max_degree}"
    )]
    RequiresDeltaGap {
        theorem: TheoremId,
        delta: usize,
        max_degree: usize,
    },

    /// The unequal-degree edge count must be even whenever Delta = delta + 1.
    /// Seeing this error means the closed-form evaluator disagrees with a
    /// proven structural fact, i.e. a bug in this crate.
    #[error("parity violation: {a} unequal-degree edges (odd) with Delta = delta + 1")]
    ParityViolation { a: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid ensemble spec: {0}")]
    InvalidSpec(String),

    #[error("prediction {kind} does not apply to the given model: {reason}")]
    PredictionMismatch { kind: String, reason: String },

    #[error("sweep CSV schema mismatch: {0}")]
    CsvSchema(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
