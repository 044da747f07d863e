use thiserror::Error;

use crate::slope::Slope;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid slope: 0/0 is not a point of the Farey circle")]
    InvalidSlope,

    #[error("cannot parse slope from {0:?}")]
    Parse(String),

    #[error("operands must be distinct slopes, got {0} twice")]
    EqualSlopes(Slope),

    #[error("mediant of {0} and {1} is degenerate")]
    DegenerateMediant(Slope, Slope),

    #[error("{0} lies inside ({1}, {2}); its neighbor set there is infinite")]
    InfiniteNeighborSet(Slope, Slope, Slope),

    #[error("continued fraction not in normal form: {0}")]
    NormalForm(String),

    #[error("invalid cable ({p}, {q}): need p >= 2 and gcd(p, q) = 1")]
    InvalidCable { p: i64, q: i64 },

    #[error("matrix has determinant {0}, expected 1")]
    Determinant(i64),

    #[error("not a Farey path: {0}")]
    InvalidPath(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
