use thiserror::Error;

/// Every failure mode surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex set is empty")]
    EmptySet,

    #[error("vertex {0} does not belong to the graph")]
    ForeignVertex(usize),

    #[error("restriction set intersects the measured set")]
    OverlappingSets,

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {n} vertices, above the exact enumeration threshold {threshold}")]
    TooLargeForExact { n: usize, threshold: usize },

    #[error("size parameter must be at least 1")]
    ZeroSize,

    #[error("inconclusive heuristic result: {0}")]
    Inconclusive(String),

    #[error("expander obstruction: induced subgraph on {} vertices ({})", witness.len(), if *certified { "certified" } else { "heuristic" })]
    ExpanderObstruction { witness: Vec<usize>, certified: bool },

    #[error("code has no nonzero codewords; distance is undefined")]
    NoCodewords,

    #[error("X and Z checks do not commute: {0}")]
    NotACode(String),

    #[error("invalid code partition: {0}")]
    InvalidPartition(String),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("input is not LDPC: {0}")]
    TooDense(String),

    #[error("unsupported embedding dimension {0}")]
    InvalidDimension(usize),

    #[error("no immersion found after {attempts} attempts")]
    ImmersionFailure { attempts: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
