//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced by catalog construction, geometry queries, and
/// moduli-space computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested (series, rank) pair is not a valid simple type.
    #[error("invalid simple type {series}{rank}: {reason}")]
    InvalidType {
        series: char,
        rank: usize,
        reason: String,
    },

    /// A string could not be parsed as a simple type, rational, or vector.
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    /// A vector has the wrong number of coordinates for the ambient space.
    #[error("vector has dimension {got}, ambient space has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A point does not lie in the span of the roots (for E6/E7 the root
    /// space is a proper subspace of R^8; input is rejected, never projected).
    #[error("point {point} does not lie in the root-space subspace of {type_name}")]
    OutsideSubspace { type_name: String, point: String },

    /// A point violates one of the alcove facet inequalities.
    #[error("point {point} lies outside the alcove: facet {facet} violated ({constraint})")]
    OutsideAlcove {
        point: String,
        facet: usize,
        constraint: String,
    },

    /// A reflection or word index is out of range.
    #[error("root index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    /// Subgroup-order request that does not divide the group order, or
    /// similar divisibility violations.
    #[error("{what}: {divisor} does not divide {of}")]
    NotADivisor {
        what: &'static str,
        divisor: u64,
        of: u64,
    },

    /// The requested subgroup is not determined by its order alone.
    #[error("center of {type_name} has more than one subgroup of order {order}; select a generator explicitly")]
    AmbiguousSubgroup { type_name: String, order: u64 },

    /// Moduli queries are supported only for structure group PU(p) with p an
    /// odd prime; everything else is rejected rather than guessed.
    #[error("unsupported moduli query: {reason}")]
    OutOfScope { reason: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
