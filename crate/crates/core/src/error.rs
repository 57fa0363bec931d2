use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {msg} at byte {offset}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list: {msg} (line {line})")]
    EdgeList { line: usize, msg: String },

    #[error("order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search budget of {budget} nodes exhausted before optimality was proved")]
    BudgetExhausted { budget: u64 },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("part {part} is not a subgraph of the host: pair {u}-{v} is not an edge")]
    NonEdgePart { part: String, u: usize, v: usize },

    #[error("pair {u}-{v} is covered more than once")]
    Overlap { u: usize, v: usize },

    #[error("edge {u}-{v} is not covered")]
    Uncovered { u: usize, v: usize },

    #[error("n = {n} is not admissible: {reason}")]
    Residue { n: usize, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("construction failed: {0}")]
    Construction(String),
}
