use thiserror::Error;

use crate::perm::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid token `{0}`: expected a positive integer")]
    InvalidToken(String),
    #[error("letter `{0}` appears more than once")]
    DuplicateLetter(String),
    #[error("letter `{token}` is out of range for a permutation of length {n}")]
    OutOfRange { token: String, n: usize },
    #[error("letter {letter} is missing from the cycle notation (largest letter is {n})")]
    MissingLetter { letter: Letter, n: usize },
    #[error("unbalanced parentheses at byte {0}")]
    UnbalancedParens(usize),
    #[error("empty cycle at byte {0}")]
    EmptyCycle(usize),
    #[error("unexpected character `{ch}` at byte {at} outside a cycle")]
    StrayText { ch: char, at: usize },
    #[error("letter {letter} is out of range 1..={n}")]
    LetterOutOfRange { letter: Letter, n: usize },
    #[error("the empty permutation has no rix-factor β₁")]
    EmptyPermutation,
    #[error("orbit is empty")]
    EmptyOrbit,
    #[error("polynomial is not expressible in the basis t^k(1+t)^(n-1-2k) for n = {n}")]
    NotInGammaBasis { n: usize },
    #[error("could not reconstruct a preimage under Φ for {0}")]
    PhiReconstruction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
