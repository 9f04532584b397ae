use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("images are not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("transposition endpoints must be distinct")]
    DegenerateTransposition,

    #[error("invalid cycle type: {0}")]
    BadCycleType(String),

    #[error("edge variable endpoints must be distinct, got ({0},{0})")]
    LoopVariable(usize),

    #[error("vertex {0} out of range 1..={1}")]
    VertexRange(usize, usize),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph has a loop at vertex {0}")]
    LoopPresent(usize),

    #[error("loops are not allowed by this operation")]
    LoopsNotAllowed,

    #[error("polynomial is not symmetric: re-expansion leaves a nonzero residual")]
    NotInvariant,

    #[error("enumeration budget exceeded: need {needed} leaf visits, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid factorization task: {0}")]
    InvalidTask(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("first Betti number {0} is odd; an even cycle rank is required")]
    OddBetti(usize),

    #[error("first Betti number {0} is below 2")]
    BettiTooSmall(usize),

    #[error("invalid edge numbering")]
    BadNumbering,

    #[error("faces/cycles correspondence failed: {0}")]
    FacesCyclesMismatch(String),

    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
