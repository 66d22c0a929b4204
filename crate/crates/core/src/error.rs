use thiserror::Error;

/// Errors produced by construction, parsing and enumeration entry points.
///
/// Algebraic operations on mismatched ranks are programmer errors and panic
/// instead; see the individual method docs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("word is not a signed permutation: {0}")]
    InvalidWord(String),

    #[error("not an involution: {0}")]
    NotInvolution(String),

    #[error("cycles overlap or mix signs: {0}")]
    InvalidCycles(String),

    #[error("relabeling alphabet is invalid: {0}")]
    InvalidAlphabet(String),

    #[error("letter {0} collides with the existing alphabet")]
    AlphabetCollision(i32),

    #[error("rank {rank} out of range for {what} (allowed {min}..={max})")]
    RankOutOfRange {
        what: &'static str,
        rank: usize,
        min: usize,
        max: usize,
    },

    #[error("enumeration cap exceeded: n = {n} > {cap} for type {group}")]
    CapExceeded { group: char, n: usize, cap: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("search exhausted: no {0} exists")]
    SearchExhausted(String),

    #[error("search timed out after {0} ms")]
    SearchTimedOut(u128),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
