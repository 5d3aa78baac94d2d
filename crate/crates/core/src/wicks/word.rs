use std::fmt;

use thiserror::Error;

use crate::cyclic::{canonical_rotation, least_rotation, rotated};
use crate::label::{Label, LabelError};

/// `+1` or `-1`. Positive sorts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A letter `a` or its formal inverse `a'`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub base: Label,
    pub sign: Sign,
}

impl SignedLetter {
    pub fn plus(base: Label) -> Self {
        SignedLetter {
            base,
            sign: Sign::Plus,
        }
    }

    pub fn minus(base: Label) -> Self {
        SignedLetter {
            base,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(&self) -> SignedLetter {
        SignedLetter {
            base: self.base.clone(),
            sign: self.sign.flipped(),
        }
    }

    pub fn is_inverse_of(&self, other: &SignedLetter) -> bool {
        self.base == other.base && self.sign != other.sign
    }

    pub fn parse(token: &str) -> Result<SignedLetter, WordError> {
        let (body, sign) = match token.strip_suffix('\'') {
            Some(body) if body.ends_with('\'') => {
                return Err(WordError::DoubleApostrophe(token.to_string()))
            }
            Some(body) => (body, Sign::Minus),
            None => (token, Sign::Plus),
        };
        if body.is_empty() {
            return Err(WordError::EmptyToken);
        }
        let base = Label::parse(body).map_err(|e| WordError::Label(token.to_string(), e))?;
        Ok(SignedLetter { base, sign })
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.base),
            Sign::Minus => write!(f, "{}'", self.base),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    EmptyWord,
    #[error("empty token")]
    EmptyToken,
    #[error("token {0:?} has more than one apostrophe")]
    DoubleApostrophe(String),
    #[error("token {0:?}: {1}")]
    Label(String, LabelError),
}

/// Parses whitespace-separated signed letters, e.g. `a b a' b'`.
pub fn parse_word(text: &str) -> Result<Vec<SignedLetter>, WordError> {
    text.split_whitespace().map(SignedLetter::parse).collect()
}

pub fn format_word(w: &[SignedLetter]) -> String {
    w.iter()
        .map(SignedLetter::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Formal inverse: reversed order, every sign flipped.
pub fn inverse_word(w: &[SignedLetter]) -> Vec<SignedLetter> {
    w.iter().rev().map(SignedLetter::inverse).collect()
}

/// A nonempty cyclic word, stored as its least rotation so equality is
/// equality up to rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<SignedLetter>,
}

impl CyclicWord {
    pub fn new(letters: Vec<SignedLetter>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok(CyclicWord {
            letters: canonical_rotation(&letters),
        })
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        CyclicWord::new(parse_word(text)?)
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord {
            letters: canonical_rotation(&inverse_word(&self.letters)),
        }
    }

    /// True if `w` read cyclically is this word.
    pub fn is_rotation_of(&self, w: &[SignedLetter]) -> bool {
        w.len() == self.letters.len() && rotated(w, least_rotation(w)) == self.letters
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}
