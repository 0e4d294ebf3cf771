//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: left operand lives in {left}, right operand in {right}")]
    RingMismatch { left: String, right: String },

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("at most 64 odd variables are supported, got {0}")]
    TooManyOddVariables(usize),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator `{generator}` is {expected} but its image is not homogeneous {expected}")]
    ParityViolation { generator: String, expected: String },

    #[error("expected a homogeneous odd element, got `{0}`")]
    NotHomogeneousOdd(String),

    #[error("degree {degree} exceeds the truncation bound {bound}; rerun with bound >= {degree}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid target descriptor `{input}`: {message}")]
    InvalidTarget { input: String, message: String },

    #[error("dual graph is not connected")]
    Disconnected,

    #[error("graph file error at line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("no stable model: n + 2g = {0} < 3")]
    NoStableModel(u32),

    #[error("graph does not match the moduli problem: {0}")]
    ProblemMismatch(String),

    #[error("input graph is not a stable map graph: {0}")]
    UnstableInput(String),

    #[error("marked point {0} is not a leg of the graph")]
    MissingLeg(u32),

    #[error("target moduli problem (g={g}, n={n}, d={d}) is undefined: degree-0 stability needs n + 2g >= 3")]
    UndefinedTarget { g: u32, n: u32, d: u64 },

    #[error("enumeration bound exceeded: n + d = {0}, supported up to {1}")]
    EnumerationBound(u64, u64),

    #[error("exterior power {k} out of range for a rank-{rank} bundle")]
    ExteriorOutOfRange { k: usize, rank: usize },

    #[error("cohomology class has zero constant term and is not invertible")]
    NonInvertible,

    #[error("base dimensions differ: {0} vs {1}")]
    BaseMismatch(u32, u32),

    #[error("expected a bundle over {expected}, got one over {got}")]
    WrongBase { expected: String, got: String },

    #[error("hypersurface degree must be >= 1, got {0}")]
    InvalidHypersurfaceDegree(i64),

    #[error("parametrization chart degenerates for p = {p}, d = {d}; both must be >= 1")]
    DegenerateChart { p: u32, d: u64 },

    #[error("{0}")]
    Io(String),
}
