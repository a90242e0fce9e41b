use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: timestamp {value} does not fit the timestamp type")]
    Range { line: usize, value: String },

    #[error("duplicate temporal edge ({src}, {dst}, {t})")]
    Duplicate { src: String, dst: String, t: String },

    #[error("cannot place {m} distinct temporal edges among {n} vertices with timestamps in [0, {t_max}]")]
    Infeasible { n: usize, m: usize, t_max: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("oracle refused input: {what} = {actual} exceeds limit {limit}")]
    OracleGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("BFS queue holds a record of vertex {vertex} at level {found} while expanding level {level}")]
    QueueInvariant { vertex: u32, level: u32, found: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
