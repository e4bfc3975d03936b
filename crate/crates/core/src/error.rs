use thiserror::Error;

/// Errors produced while building or evaluating interpolants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An evaluation coordinate lies outside the interval the interpolant lives on.
    #[error("{value} lies outside [{lo}, {hi}]")]
    Domain { value: f64, lo: f64, hi: f64 },

    /// The kernel argument sits on a node; the caller should fall back to the datum.
    #[error("evaluation point collides with an interpolation node")]
    NodeCollision,

    #[error("non-finite sample {value} at grid node ({i}, {j})")]
    Sampling { i: usize, j: usize, value: f64 },

    #[error("boundary radius {rho} at angle {theta} is not positive: domain is not starlike")]
    NotStarlike { theta: f64, rho: f64 },

    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),

    #[error("point ({x}, {y}) lies outside the domain")]
    OutsideDomain { x: f64, y: f64 },

    #[error("no lattice point falls inside the domain")]
    EmptyGrid,

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
