use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("zero exponent at byte {offset}")]
    ZeroExponent { offset: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("sign cascade stuck on `{state}` (internal defect)")]
    ReductionStuck { state: String },

    #[error("{what}: step cap {cap} exceeded (internal defect)")]
    StepCap { what: &'static str, cap: u64 },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
