use std::fmt;

use thiserror::Error;

/// Location of a malformed token in composition, permutation or deck text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, when the text came from a multi-line source.
    pub line: Option<usize>,
    /// 1-based column of the offending token.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn on_line(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {}, column {}: {}", line, self.column, self.message),
            None => write!(f, "column {}: {}", self.column, self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("deck is empty")]
    EmptyDeck,

    #[error("deck mixes sums: expected {expected}, found {found}{}", line_suffix(*.line))]
    MixedSums {
        expected: usize,
        found: usize,
        line: Option<usize>,
    },

    #[error("cannot delete {k} from a composition of {sum}")]
    TooManyDeletions { k: usize, sum: usize },

    #[error("the empty composition has no 1-deletions")]
    NothingToDelete,

    #[error("k must be positive here")]
    ZeroDeletions,

    #[error("n = {n} is below 3k+1 = {} for k = {k}", 3 * .k + 1)]
    BelowThreshold { n: usize, k: usize },

    #[error("not a deck: {0}")]
    NotADeck(String),

    #[error("n = {n} exceeds the enumeration guard of {max}")]
    EnumerationGuard { n: usize, max: usize },

    #[error("invalid sweep range {n_min}..={n_max} for k = {k}")]
    SweepRange {
        k: usize,
        n_min: usize,
        n_max: usize,
    },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("permutation {0} is not layered")]
    NotLayered(String),

    #[error("pattern search limited to length {max}, got {len}")]
    PatternTooLarge { len: usize, max: usize },
}

fn line_suffix(line: Option<usize>) -> String {
    line.map(|l| format!(" on line {l}")).unwrap_or_default()
}

pub type Result<T> = std::result::Result<T, Error>;
