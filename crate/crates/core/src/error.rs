use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix rows have inconsistent lengths (row {row} has {len}, expected {expected})")]
    Ragged { row: usize, len: usize, expected: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("blow-down needs a diagonal entry of absolute value 1, found {value} at index {index}")]
    NotUnitFraming { index: usize, value: String },

    #[error("circulant spectrum requires odd size, got {0}")]
    EvenSize(usize),

    #[error("first row is not symmetric: c[{index}] != c[{mirror}]")]
    AsymmetricRow { index: usize, mirror: usize },

    #[error("matrix is not SICUP: {0}")]
    NotSicup(String),

    #[error("({a}, {b}) is not a solution of a^2 - 5b^2 = 4")]
    NotPellSolution { a: String, b: String },

    #[error("a = {0} is not congruent to 2 mod 5")]
    NotAdmissible(String),

    #[error("a = {0} <= 0: lambda2 + lambda3 = a < 0, so the matrix is not positive definite")]
    NegativeBranch(String),

    #[error("divisibility failed: {0}")]
    Divisibility(String),

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("closure has {0} components, expected exactly 1")]
    NotAKnot(usize),

    #[error("signed crossing sum {sum} between components {a} and {b} is odd")]
    OddLinkingSum { a: usize, b: usize, sum: i64 },

    #[error("ill-formed tangle: {0}")]
    IllFormedTangle(String),

    #[error("c[{index}] = {value} is even; every twist parameter must be odd")]
    EvenParameter { index: usize, value: i64 },

    #[error("polynomial division left a non-zero remainder")]
    InexactDivision,

    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),

    #[error("matrix is not negative definite")]
    NotNegativeDefinite,

    #[error("nu = 0 with unknown shape is inconclusive")]
    InconclusiveShape,

    #[error("nu is unknown")]
    UnknownNu,

    #[error("expected {expected} component records, got {got}")]
    ComponentCount { expected: usize, got: usize },

    #[error("cover degree must be positive, got {0}")]
    NonPositiveDegree(i64),

    #[error("gcd(w, d') = {gcd} != 1 for d = {d}, w = {w}")]
    FactorizationNotCoprime { d: i64, w: i64, gcd: i64 },

    #[error("invalid two-bridge fraction: {0}")]
    InvalidFraction(String),

    #[error("even continued fraction must have even length with even non-zero terms: {0}")]
    InvalidEvenCf(String),

    #[error("Hermitian form is degenerate at exp(2 pi i {j}/{d})")]
    DegenerateForm { d: u32, j: u32 },

    #[error("signature guard tripped at exp(2 pi i {j}/{d}): sign of a coefficient could not be resolved")]
    SignatureGuard { d: u32, j: u32 },

    #[error("certificate failed: {0}")]
    Certificate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("catalog error: {0}")]
    Catalog(String),
}
