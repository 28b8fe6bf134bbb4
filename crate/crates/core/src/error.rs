use thiserror::Error;

/// Errors raised by the group, graph and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("element is not a member of the group")]
    ElementNotInGroup,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("element set is not a subgroup")]
    NotSubgroup,

    #[error("invalid multiplier: {0}")]
    InvalidMultiplier(String),

    #[error("coprimality violation: {0}")]
    CoprimalityViolation(String),

    #[error("malformed group expression: {0}")]
    MalformedExpr(String),

    #[error("faithfulness failure: permutation image has order {got}, expected {expected}")]
    FaithfulnessFailure { expected: u64, got: u64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("vertex {0} is not in the graph")]
    VertexNotInGraph(u64),

    #[error("bad partition: {0}")]
    BadPartition(String),

    #[error("graph has {vertices} vertices, above the search bound {bound}")]
    TooManyVertices { vertices: usize, bound: usize },

    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),

    #[error("invalid prime request: {0}")]
    InvalidRequest(String),

    #[error("no {count} primes congruent to {residue} mod {modulus} found below {bound}")]
    BoundExhausted { count: usize, modulus: u64, residue: u64, bound: u64 },

    #[error("prediction mismatch: {0}")]
    PredictionMismatch(String),

    #[error("unsupported structured query: {0}")]
    Unsupported(String),

    #[error("spec file error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse error classes, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Bad input: unparsable spec, invalid parameters or generators.
    Input,
    /// An enumeration or search limit was hit.
    Limit,
    /// Internal invariant failure.
    Invariant,
    /// A prime progression search ran past its bound.
    BoundExhausted,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::CapExceeded { .. } | Error::TooManyVertices { .. } | Error::Overflow(_) => ErrorCategory::Limit,
            Error::BoundExhausted { .. } => ErrorCategory::BoundExhausted,
            Error::FaithfulnessFailure { .. }
            | Error::DecompositionFailure(_)
            | Error::PredictionMismatch(_)
            | Error::Unsupported(_)
            | Error::NotNormal
            | Error::NotSubgroup => ErrorCategory::Invariant,
            Error::ElementNotInGroup
            | Error::InvalidPermutation(_)
            | Error::InvalidMultiplier(_)
            | Error::CoprimalityViolation(_)
            | Error::MalformedExpr(_)
            | Error::VertexNotInGraph(_)
            | Error::BadPartition(_)
            | Error::InvalidRequest(_)
            | Error::Parse(_) => ErrorCategory::Input,
        }
    }
}
