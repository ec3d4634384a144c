use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("memory budget exceeded: {0}")]
    Resource(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
