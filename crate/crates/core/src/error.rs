use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("power series precondition violated: {0}")]
    ConstantTerm(&'static str),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("infeasible generator parameters: {0}")]
    InfeasibleParameters(String),

    #[error("no sample met the girth bound after {0} attempts")]
    RetryCapExceeded(usize),

    #[error("preconditions unmet: {0}")]
    PreconditionUnmet(String),

    #[error("power iteration did not converge after {0} iterations")]
    NonConvergence(usize),

    #[error("matrix is not symmetric")]
    Asymmetric,

    #[error("Jacobi iteration exceeded {0} sweeps")]
    SweepCapExceeded(usize),

    #[error("entry ({row}, {col}) is {value}; a 0/1 support matrix is required")]
    NotSupportMatrix { row: usize, col: usize, value: String },

    #[error("prime classes are only complete up to length {available}, order {requested} requested")]
    IncompleteClasses { available: usize, requested: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected \"n m\"")]
    MalformedHeader,
    #[error("malformed edge line, expected \"u v\"")]
    MalformedEdge,
    #[error("invalid integer token {0:?}")]
    InvalidToken(String),
    #[error("endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { endpoint: usize, vertex_count: usize },
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing header")]
    MissingHeader,
}
