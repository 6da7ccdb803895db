use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptySequence: a Hessenberg function needs at least one value")]
    EmptySequence,
    #[error("NotWeaklyIncreasing: h({pos})={left} > h({next})={right}", next = .pos + 1)]
    NotWeaklyIncreasing { pos: usize, left: usize, right: usize },
    #[error("ValueBelowIndex: h({index})={value} < {index}")]
    ValueBelowIndex { index: usize, value: usize },
    #[error("LastValueNotN: h({n})={value}, expected {n}")]
    LastValueNotN { n: usize, value: usize },
    #[error("InvalidRoot: ({i},{j}) is not a positive root for n={n}")]
    InvalidRoot { i: usize, j: usize, n: usize },
    #[error("NotUpwardClosed: ({i},{j}) is in the set but ({missing_i},{missing_j}) is not")]
    NotUpwardClosed {
        i: usize,
        j: usize,
        missing_i: usize,
        missing_j: usize,
    },
    #[error("InvalidPartition: {0}")]
    InvalidPartition(String),
    #[error("SizeMismatch: expected total size {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("IndexOutOfRange: reflection index {index} not in 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("InvalidProfile: S^{i} needs h < i, got h={h}")]
    InvalidProfile { i: usize, h: usize },
    #[error("BadWeight: {0}")]
    BadWeight(String),
    #[error("DimensionMismatch: weight has {actual} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("Parse: {0}")]
    Parse(String),
    #[error("Io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
