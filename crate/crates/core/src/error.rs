use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Input problems (parse failures, malformed graphs, bad parameters) and
/// domain negatives that callers must be able to branch on (an exhausted
/// color list, an exceeded oracle budget) share one enum; the CLI maps them
/// to distinct exit codes through [`Error::is_domain_failure`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("bad vertex {vertex} (vertex count {vertex_count})")]
    BadVertex { vertex: usize, vertex_count: usize },
    #[error("bad embedding: {0}")]
    BadEmbedding(String),
    #[error("disconnected")]
    Disconnected,
    #[error("nonplanar embedding: V - E + F = {euler} (expected {expected})")]
    NonplanarEmbedding { euler: i64, expected: i64 },
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("bad order: {0}")]
    BadOrder(String),
    #[error("not distinct: vertex {0} repeated")]
    NotDistinct(usize),
    #[error("empty sequence")]
    EmptySequence,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unverified ordering: {0}")]
    Unverified(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
    #[error("list exhausted at vertex {vertex} (list {list:?})")]
    ListExhausted { vertex: usize, list: Vec<u32> },
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("charge not conserved after {phase}: total {total}")]
    ChargeNotConserved { phase: String, total: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// True for mathematical negatives (as opposed to malformed input).
    pub fn is_domain_failure(&self) -> bool {
        matches!(self, Error::ListExhausted { .. } | Error::Budget(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
