use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A curve index or grid coordinate is outside its valid range.
    #[error("range error: {0}")]
    Range(String),
    /// An argument violates an operation precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A request exceeds what the implementation can represent.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// A caller contract was violated, e.g. an unordered sample was passed
    /// where a spatially ordered one is required.
    #[error("contract error: {0}")]
    Contract(String),
    /// File or CSV I/O failure.
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
