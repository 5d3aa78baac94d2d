//! Oriented Wicks forms: cyclic words in which every letter occurs once with
//! each sign, with no cancelling pair `a a'` and no repeated pair
//! `x y ... y' x'`.

mod enumerate;
mod substitution;
mod word;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::complex::{ComplexError, Polyhedron};

pub use enumerate::{canonical_form, enumerate_wicks, forms_isomorphic, MAX_ENUMERATION_LENGTH};
pub use substitution::{Cancellation, Substitution, SubstitutionError};
pub use word::{format_word, inverse_word, parse_word, CyclicWord, Sign, SignedLetter, WordError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WicksCondition {
    /// (i) every letter occurs exactly once with each sign.
    Letters,
    /// (ii) no cyclic factor `a a'` or `a' a`.
    Cancellation,
    /// (iii) if `x y` is a cyclic factor, `y' x'` is not.
    Repetition,
}

impl fmt::Display for WicksCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WicksCondition::Letters => "(i)",
            WicksCondition::Cancellation => "(ii)",
            WicksCondition::Repetition => "(iii)",
        })
    }
}

/// The first violated condition and the position (in the word as given)
/// where it is detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WicksViolation {
    pub condition: WicksCondition,
    pub position: usize,
    pub detail: String,
}

impl fmt::Display for WicksViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} violated at position {}: {}",
            self.condition, self.position, self.detail
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WicksError {
    #[error("not a Wicks form: {0}")]
    NotWicks(WicksViolation),
    #[error("enumeration length {0} is above {MAX_ENUMERATION_LENGTH}")]
    LengthTooLarge(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Checks the three conditions on `w` read cyclically, in order (i), (ii),
/// (iii). Positions refer to `w` as given.
pub fn check_wicks(w: &[SignedLetter]) -> Result<(), WicksViolation> {
    let n = w.len();
    if n == 0 {
        return Err(WicksViolation {
            condition: WicksCondition::Letters,
            position: 0,
            detail: "empty word".into(),
        });
    }
    let mut seen: BTreeMap<&SignedLetter, usize> = BTreeMap::new();
    for (i, l) in w.iter().enumerate() {
        if let Some(first) = seen.insert(l, i) {
            return Err(WicksViolation {
                condition: WicksCondition::Letters,
                position: first,
                detail: format!("{l} occurs more than once"),
            });
        }
    }
    for (i, l) in w.iter().enumerate() {
        if !seen.contains_key(&l.inverse()) {
            return Err(WicksViolation {
                condition: WicksCondition::Letters,
                position: i,
                detail: format!("{l} occurs without {}", l.inverse()),
            });
        }
    }
    for i in 0..n {
        let (x, y) = (&w[i], &w[(i + 1) % n]);
        if x.is_inverse_of(y) {
            return Err(WicksViolation {
                condition: WicksCondition::Cancellation,
                position: i,
                detail: format!("{x} {y} cancels"),
            });
        }
    }
    let mut factors: BTreeMap<(&SignedLetter, &SignedLetter), usize> = BTreeMap::new();
    for i in 0..n {
        factors.insert((&w[i], &w[(i + 1) % n]), i);
    }
    for i in 0..n {
        let (x, y) = (&w[i], &w[(i + 1) % n]);
        if let Some(&j) = factors.get(&(&y.inverse(), &x.inverse())) {
            return Err(WicksViolation {
                condition: WicksCondition::Repetition,
                position: i.min(j),
                detail: format!("{x} {y} and {} {} both occur", y.inverse(), x.inverse()),
            });
        }
    }
    Ok(())
}

/// [`check_wicks`] on the stored (least) rotation.
pub fn is_wicks_form(w: &CyclicWord) -> Result<(), WicksViolation> {
    check_wicks(w.letters())
}

/// `(v, e)` of the surface obtained by gluing the sides of `w` in pairs.
pub fn surface_counts(w: &[SignedLetter]) -> Result<(usize, usize), ComplexError> {
    let k = Polyhedron::build_from_word(w)?;
    Ok((k.vertex_count(), k.edge_count()))
}

/// Genus of the closed surface glued from a Wicks form: `v - e + 1 = 2 - 2g`.
pub fn genus(w: &[SignedLetter]) -> Result<usize, WicksError> {
    check_wicks(w).map_err(WicksError::NotWicks)?;
    let (v, e) = surface_counts(w)?;
    let twice = 1 + e as i64 - v as i64;
    assert!(
        twice >= 0 && twice % 2 == 0,
        "orientable gluing has even Euler defect"
    );
    Ok((twice / 2) as usize)
}

/// A validated Wicks form with its genus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WicksForm {
    word: CyclicWord,
    genus: usize,
}

impl WicksForm {
    pub fn new(word: CyclicWord) -> Result<Self, WicksError> {
        let genus = genus(word.letters())?;
        Ok(WicksForm { word, genus })
    }

    pub fn word(&self) -> &CyclicWord {
        &self.word
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `4g <= length <= 6(2g - 1)` (for `g >= 1`).
    pub fn within_length_bounds(&self) -> bool {
        let g = self.genus;
        g >= 1 && 4 * g <= self.len() && self.len() <= 6 * (2 * g - 1)
    }
}

impl fmt::Display for WicksForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}
