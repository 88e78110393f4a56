use core::fmt;

/// Errors raised by the library's fallible operations.
///
/// Validation failures are never reported through this type; they are
/// collected as violations in a [`ValidationReport`](crate::ValidationReport).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimension outside `1..=31`.
    InvalidDimension(u32),
    /// Vertex label does not fit the dimension.
    VertexOutOfRange { vertex: u32, dimension: u8 },
    /// Token at this index (0-based, counting non-empty tokens) is not a
    /// base-10 non-negative integer.
    NonIntegerToken(usize),
    /// Transition at this position names a dimension `>= n`.
    DimensionOutOfRange(usize),
    /// The mapping is not a bijection on `0..n`.
    InvalidPermutation,
    /// Brute-force enumeration requested for a dimension above 4.
    InstanceTooLarge(u8),
    /// No row of the bounds table for this dimension.
    OutOfTable(u8),
    /// An operation was called outside its stated domain.
    PreconditionViolated(&'static str),
    /// The input sequence is not a valid coil.
    NotACoil,
    /// Consecutive vertices of a vertex list are not adjacent.
    NotAdjacent(usize),
    /// The beam has no legal extension left.
    Extinction,
    /// Malformed record manifest line (1-based).
    Manifest(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimension(n) => write!(f, "dimension {n} is outside 1..=31"),
            Error::VertexOutOfRange { vertex, dimension } => {
                write!(f, "vertex {vertex} does not fit in dimension {dimension}")
            }
            Error::NonIntegerToken(i) => write!(f, "token {i} is not a non-negative integer"),
            Error::DimensionOutOfRange(p) => {
                write!(f, "transition at position {p} exceeds the dimension")
            }
            Error::InvalidPermutation => {
                f.write_str("mapping is not a permutation of the dimensions")
            }
            Error::InstanceTooLarge(n) => {
                write!(f, "brute force is limited to n <= 4, got n = {n}")
            }
            Error::OutOfTable(n) => write!(f, "no table row for dimension {n}"),
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::NotACoil => f.write_str("sequence is not a valid coil"),
            Error::NotAdjacent(i) => write!(f, "vertices {i} and {} are not adjacent", i + 1),
            Error::Extinction => f.write_str("no candidate has a legal extension"),
            Error::Manifest(line) => write!(f, "malformed manifest line {line}"),
        }
    }
}

impl core::error::Error for Error {}
