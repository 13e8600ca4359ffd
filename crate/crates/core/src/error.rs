use thiserror::Error;

/// Errors raised while building or validating preference data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square table with at least 2 rows, got {rows} row(s) and a row of length {cols}")]
    Dimension { rows: usize, cols: usize },

    #[error("cells [{i},{j}] and [{j},{i}] are inconsistent")]
    InconsistentPair { i: usize, j: usize },

    #[error("invalid matrix entry {value} at [{i},{j}]; expected 1, -1 or 0")]
    InvalidEntry { i: usize, j: usize, value: i64 },

    #[error("at least 2 alternatives are required, got {0}")]
    TooFewAlternatives(usize),

    #[error("duplicate alternative `{0}`")]
    DuplicateAlternative(String),

    #[error("invalid alternative label `{0}`")]
    InvalidLabel(String),

    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),

    #[error("alternative index {0} is out of range")]
    IndexOutOfRange(usize),

    #[error("subset is empty")]
    EmptySubset,

    #[error("subset has a single alternative; relations need at least 2")]
    SingletonSubset,

    #[error("block is empty")]
    EmptyBlock,

    #[error("blocks overlap")]
    OverlappingBlocks,

    #[error("ballot does not rank every alternative exactly once: {0}")]
    Coverage(String),

    #[error("profile has no voters")]
    EmptyProfile,

    #[error("ballot multiplicity must be positive")]
    ZeroMultiplicity,

    #[error("covering is only defined for tournaments, but the relation has ties")]
    TiesPresent,

    #[error("instance size m = {m} exceeds the enumeration limit of {max}")]
    TooLarge { m: usize, max: usize },

    #[error("invalid tie value `{0}`; expected a rational P/Q in [0, 1]")]
    InvalidAlpha(String),

    #[error("{0}")]
    Parse(String),

    #[error("ballot file mixes ranked and approval ballots")]
    MixedBallotStyles,

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            Error::AtLine { .. } => self,
            other => Error::AtLine {
                line,
                source: Box::new(other),
            },
        }
    }

    /// The underlying error with any line annotation stripped.
    pub fn kind(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.kind(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
