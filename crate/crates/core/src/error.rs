use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no facets supplied")]
    EmptyInput,

    #[error("complex is not pure: facet {facet:?} has {found} vertices, expected {expected}")]
    NotPure {
        facet: Vec<String>,
        expected: usize,
        found: usize,
    },

    #[error("face {0:?} is not in the complex")]
    FaceNotFound(Vec<u32>),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("enumeration of 2^{bits} exceeds budget {cap}")]
    BudgetExceeded { bits: u32, cap: u64 },

    #[error("no filling chain for s={s}, tau={tau:?}: reduced homology of B does not vanish")]
    FillFailed { s: usize, tau: Vec<u32> },

    #[error("filling family has no chain for s={s}, dim {dim}")]
    MissingChain { s: usize, dim: isize },

    #[error("k+2 = {divisor} does not divide m = {m}")]
    DivisibilityViolated { divisor: usize, m: usize },

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("automorphism group is not transitive on bases ({orbit} of {bases} reached)")]
    NotBasisTransitive { orbit: usize, bases: usize },

    #[error("{0} is not a prime")]
    NonPrimeField(u32),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
