use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration oracle would have to visit more objects than the budget allows.
    #[error(
        "oracle infeasible at this scale: {what} requires {required} objects, budget is {budget}"
    )]
    Infeasible {
        what: &'static str,
        required: String,
        budget: u64,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed trace: {0}")]
    MalformedTrace(String),
    #[error("scaling fit failed: {0}")]
    Fit(String),
}
