use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: negative weight {weight}")]
    NegativeWeight { line: usize, weight: String },
    #[error("line {line}: edge ({u},{v}) repeated with conflicting weight")]
    ConflictingDuplicate { line: usize, u: usize, v: usize },
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("matrix is not symmetric at ({i},{j})")]
    Asymmetric { i: usize, j: usize },
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("value {0} is not representable as an exact weight")]
    Unrepresentable(String),
    #[error("arithmetic overflow in exact weights")]
    Overflow,
    #[error("scaffold has no edges")]
    EmptyScaffold,
    #[error("vertex sets differ: {0} vs {1}")]
    VertexSetMismatch(usize, usize),
    #[error("empty sample")]
    EmptySample,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
