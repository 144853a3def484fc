use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot adjoin the square root of zero")]
    DegenerateExtension,
    #[error("quadratic tower depth limit {0} reached")]
    ExtensionLimit(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("point is not in chart U{index}: {reason}")]
    NotInChart { index: usize, reason: String },
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),
    #[error("character lies on a wall: {0}")]
    Wall(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("no destabilizing cocharacter found in the standard families")]
    NoCertificate,
}

pub type Result<T> = std::result::Result<T, Error>;
