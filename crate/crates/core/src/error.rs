use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument of a Gamma factor sits on one of its poles.
    #[error("Gamma pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid K-type {mu:?}: {reason}")]
    InvalidKType { mu: Vec<i64>, reason: String },

    /// Outside the region where an integral representation converges, or an
    /// operation requested for a configuration it does not support.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
