//! Crate-wide error type. Every fallible operation returns a variant that
//! names the violated precondition; nothing panics on bad user input.

use thiserror::Error;

/// Errors reported by diagram, word, polynomial, and semigroup operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The vertex/edge data does not describe an admitted diagram.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    /// Textual input that failed to parse; `pos` is a byte offset.
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    /// A word letter does not name a vertex of the diagram.
    #[error("letter {letter} does not name a vertex of a rank-{rank} diagram")]
    LetterOutOfRange { letter: i64, rank: usize },

    /// Two arguments were built over different diagrams.
    #[error("diagram mismatch: {0}")]
    DiagramMismatch(String),

    /// Invalid generating set or gap sequence for a numerical semigroup.
    #[error("invalid semigroup data: {0}")]
    InvalidSemigroup(String),

    /// The gap-sequence complement is not closed under addition.
    #[error("complement is not a semigroup: {a} + {b} = {sum} is a gap")]
    NotASemigroup { a: u64, b: u64, sum: u64 },

    /// Operation defined only for genus-4 gap sequences.
    #[error("expected a genus-4 gap sequence, got genus {0}")]
    GenusMismatch(usize),

    /// A germ-level operation received an inadmissible polynomial.
    #[error("invalid germ: {0}")]
    InvalidGerm(String),

    /// Truncation bound exhausted without stabilization.
    #[error("no isolated singularity detected up to truncation order {bound}: {message}")]
    NotIsolated { bound: u32, message: String },

    /// Versal family evaluated at a vector of the wrong length.
    #[error("parameter vector has length {got}, family has {expected} parameters")]
    ParameterLength { expected: usize, got: usize },

    /// An orientation assignment does not match the edge set.
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    /// Generic argument validation (empty lists, non-coprime pairs, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Exact integer arithmetic left the representable range.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// A search exceeded its configured safety bound.
    #[error("requested depth {requested} exceeds the safety bound {bound}")]
    DepthBound { requested: usize, bound: usize },

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
