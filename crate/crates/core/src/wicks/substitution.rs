use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::word::{inverse_word, CyclicWord, Sign, SignedLetter};
use crate::label::Label;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SubstitutionError {
    #[error("substitution has no image for {0}")]
    IncompleteSubstitution(Label),
    #[error("image of {0} is empty")]
    EmptyImage(Label),
    #[error("substitution cancels: {0}")]
    CancellingSubstitution(Cancellation),
}

/// Where a substitution produces a cancelling pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cancellation {
    /// The image of a letter is not reduced.
    Internal { letter: Label },
    /// The image of `u[position]` ends with the inverse of the first letter
    /// of the image of the next letter.
    Junction { position: usize },
}

impl fmt::Display for Cancellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cancellation::Internal { letter } => write!(f, "image of {letter} is not reduced"),
            Cancellation::Junction { position } => {
                write!(f, "junction after position {position}")
            }
        }
    }
}

/// Letter-to-word map, extended to inverses by formal inversion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Label, Vec<SignedLetter>>,
}

impl Substitution {
    pub fn new(
        pairs: impl IntoIterator<Item = (Label, Vec<SignedLetter>)>,
    ) -> Result<Self, SubstitutionError> {
        let mut map = BTreeMap::new();
        for (l, w) in pairs {
            if w.is_empty() {
                return Err(SubstitutionError::EmptyImage(l));
            }
            map.insert(l, w);
        }
        Ok(Substitution { map })
    }

    /// Every letter of `letters` maps to itself.
    pub fn identity<'a>(letters: impl IntoIterator<Item = &'a SignedLetter>) -> Self {
        Substitution {
            map: letters
                .into_iter()
                .map(|l| (l.base.clone(), vec![SignedLetter::plus(l.base.clone())]))
                .collect(),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Label, &[SignedLetter])> + '_ {
        self.map.iter().map(|(l, w)| (l, w.as_slice()))
    }

    pub fn image(&self, l: &SignedLetter) -> Result<Vec<SignedLetter>, SubstitutionError> {
        let w = self
            .map
            .get(&l.base)
            .ok_or_else(|| SubstitutionError::IncompleteSubstitution(l.base.clone()))?;
        Ok(match l.sign {
            Sign::Plus => w.clone(),
            Sign::Minus => inverse_word(w),
        })
    }

    /// Checks that each image used is reduced and that no two cyclically
    /// consecutive images cancel at their junction.
    pub fn check_non_cancelling(&self, u: &[SignedLetter]) -> Result<(), SubstitutionError> {
        let images = u
            .iter()
            .map(|l| self.image(l))
            .collect::<Result<Vec<_>, _>>()?;
        for (l, img) in u.iter().zip(&images) {
            if img.windows(2).any(|p| p[0].is_inverse_of(&p[1])) {
                return Err(SubstitutionError::CancellingSubstitution(
                    Cancellation::Internal {
                        letter: l.base.clone(),
                    },
                ));
            }
        }
        let n = images.len();
        for i in 0..n {
            let last = images[i].last().expect("nonempty image");
            let first = &images[(i + 1) % n][0];
            if last.is_inverse_of(first) {
                return Err(SubstitutionError::CancellingSubstitution(
                    Cancellation::Junction { position: i },
                ));
            }
        }
        Ok(())
    }

    pub fn is_non_cancelling(&self, u: &[SignedLetter]) -> Result<bool, SubstitutionError> {
        match self.check_non_cancelling(u) {
            Ok(()) => Ok(true),
            Err(SubstitutionError::CancellingSubstitution(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Concatenated images in the order of `u`.
    pub fn apply_linear(&self, u: &[SignedLetter]) -> Result<Vec<SignedLetter>, SubstitutionError> {
        self.check_non_cancelling(u)?;
        let mut out = Vec::new();
        for l in u {
            out.extend(self.image(l)?);
        }
        Ok(out)
    }

    pub fn apply(&self, u: &CyclicWord) -> Result<CyclicWord, SubstitutionError> {
        let out = self.apply_linear(u.letters())?;
        Ok(CyclicWord::new(out).expect("images are nonempty"))
    }
}

#[cfg(test)]
mod tests {
    use super::super::word::parse_word;
    use super::*;

    fn w(s: &str) -> Vec<SignedLetter> {
        parse_word(s).unwrap()
    }

    fn l(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    #[test]
    fn identity_is_non_cancelling() {
        let u = CyclicWord::parse("a b a' b'").unwrap();
        let id = Substitution::identity(u.letters());
        assert_eq!(id.is_non_cancelling(u.letters()), Ok(true));
        assert_eq!(id.apply(&u).unwrap(), u);
    }

    #[test]
    fn junction_cancellation() {
        let phi = Substitution::new([(l("a"), w("c")), (l("b"), w("c' d"))]).unwrap();
        let u = w("a b");
        assert_eq!(
            phi.check_non_cancelling(&u),
            Err(SubstitutionError::CancellingSubstitution(
                Cancellation::Junction { position: 0 }
            ))
        );
        assert_eq!(phi.is_non_cancelling(&u), Ok(false));
    }

    #[test]
    fn incomplete_and_internal() {
        let phi = Substitution::new([(l("a"), w("c c'"))]).unwrap();
        assert_eq!(
            phi.check_non_cancelling(&w("a b")),
            Err(SubstitutionError::IncompleteSubstitution(l("b")))
        );
        assert!(matches!(
            phi.check_non_cancelling(&w("a")),
            Err(SubstitutionError::CancellingSubstitution(Cancellation::Internal { .. }))
        ));
    }

    #[test]
    fn doubling_with_fresh_letter() {
        let u = CyclicWord::parse("a b a' b'").unwrap();
        let phi = Substitution::new([(l("a"), w("a c")), (l("b"), w("b"))]).unwrap();
        let out = phi.apply(&u).unwrap();
        assert_eq!(out.len(), 6);
        assert_eq!(out, CyclicWord::parse("a c b c' a' b'").unwrap());
    }
}
