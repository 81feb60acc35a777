use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // construction-string parsing
    #[error("empty input")]
    EmptyInput,
    #[error("construction string must start with 0 (the initial isolated vertex)")]
    FirstTokenNonzero,
    #[error("negative token in input")]
    NegativeToken,
    #[error("malformed run-length token `{0}`")]
    MalformedRunLength(String),
    #[error("unparsable token `{0}`")]
    MalformedToken(String),
    #[error("isolated vertices after the last domination cannot be encoded")]
    TrailingIsolated,
    #[error("invalid construction code: {0}")]
    InvalidCode(String),

    // hypergraph validation
    #[error("invalid hyperedge: {0}")]
    InvalidEdge(String),
    #[error("duplicate hyperedge")]
    DuplicateEdge,

    // uniformity
    #[error("domination sizes are not all equal")]
    NonUniformK,
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("uniformity {m} exceeds vertex count {n}")]
    UniformityExceedsOrder { m: usize, n: usize },
    #[error("uniformity {0} is below 2")]
    UniformityTooSmall(usize),

    // spectra
    #[error("operator/vector dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("spectrum is empty")]
    EmptySpectrum,
    #[error("spectrum has no zero eigenvalue")]
    MissingZeroEigenvalue,
    #[error("domination size must be positive")]
    NonPositiveK,
    #[error("largest eigenvalue exceeds the complement pivot value")]
    SpectrumExceedsPhi,

    // co-expressions
    #[error("leaves of a co-expression must share one domination size")]
    MixedK,
    #[error("domination size of an edgeless co-expression cannot be inferred")]
    IndeterminateK,
    #[error("co-expression syntax error: {0}")]
    ExprSyntax(String),

    // Ferrers analysis
    #[error("negative degree in sequence")]
    NegativeDegree,
    #[error("diagram has no blocks (all degrees zero)")]
    NoBlocks,
    #[error("degree sequence does not round-trip through a threshold construction: {0}")]
    RoundTripMismatch(String),

    // integrality
    #[error("all values are zero")]
    AllZero,
    #[error("integrality ratio must be positive")]
    NonPositiveR,
    #[error("negative value where a non-negative one is required")]
    NegativeValue,

    // numeric oracle
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("eigenvalue count mismatch: expected {expected}, got {got}")]
    CountMismatch { expected: usize, got: usize },
}
