use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("capacity exceeded: {what} = {value} is above the limit {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("empty double coset: {0}")]
    EmptyCoset(String),
    #[error("context mismatch: {0}")]
    Context(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_capacity(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Capacity { what, value, limit })
    } else {
        Ok(())
    }
}
