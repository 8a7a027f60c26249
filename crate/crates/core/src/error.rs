use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("line has a = b = 0")]
    DegenerateLine,
    #[error("identical points {0}")]
    IdenticalPoints(String),
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    MatrixShape { rows: usize, cols: usize, len: usize },
    #[error("inconsistent system")]
    InconsistentSystem,
    #[error("duplicate node {0}")]
    DuplicateNode(String),
    #[error("node set is not {0}-correct")]
    NotCorrect(usize),
    #[error("node {0} not in set")]
    NodeNotInSet(String),
    #[error("node index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("nodes not distinct")]
    NodesNotDistinct,
    #[error("expected {expected} values, got {got}")]
    ValueCount { expected: usize, got: usize },
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("curve degree {degree} out of range for n = {n}")]
    DegreeOutOfRange { n: usize, degree: usize },
    #[error("lines not in general position")]
    NotGeneralPosition,
    #[error("need at least {needed} lines, got {got}")]
    TooFewLines { needed: usize, got: usize },
    #[error("expected {expected} free points, got {got}")]
    FreePointCount { expected: usize, got: usize },
    #[error("free point {0} off its line")]
    FreePointOffLine(usize),
    #[error("free point {0} collides with an intersection or another node")]
    FreePointCollides(usize),
    #[error("free points are collinear with the intersection node")]
    FreePointsCollinear,
    #[error("line {0} is not a 2-node line")]
    NotTwoNodeLine(String),
    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("seed exhausted: no admissible point after {0} candidates")]
    SeedExhausted(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("document error: {0}")]
    Document(String),
}
