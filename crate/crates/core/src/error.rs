use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid fraction ({alpha}, {beta}): {reason}")]
    InvalidFraction {
        alpha: i64,
        beta: i64,
        reason: &'static str,
    },

    #[error("oriented two-bridge operations need an odd beta, got {beta}")]
    OddFormRequired { beta: i64 },

    #[error("continued fraction divides by zero after digit {position}")]
    DegenerateContinuedFraction { position: usize },

    #[error("continued fraction needs at least one nonzero digit")]
    EmptyContinuedFraction,

    #[error("invalid slope {p}/{q}: {reason}")]
    InvalidSlope {
        p: i64,
        q: i64,
        reason: &'static str,
    },

    #[error("braid word parse error at token {index} (byte {offset}): {reason}")]
    Parse {
        index: usize,
        offset: usize,
        reason: String,
    },

    #[error("integer overflow while computing {what}")]
    Overflow { what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
