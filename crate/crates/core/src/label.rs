use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vertex or letter name: a token over `[A-Za-z0-9_]` with an optional
/// family index, written `x3^2` in text formats.
///
/// Labels order by family index first (absent sorts before any index), then
/// by base. Canonical rotations of cyclic words rely on this order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    family: Option<u32>,
    base: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("empty label")]
    Empty,
    #[error("invalid character {ch:?} in label {token:?}")]
    InvalidChar { token: String, ch: char },
    #[error("invalid family index in label {0:?}")]
    BadFamily(String),
}

impl Label {
    /// Creates a label without a family index.
    ///
    /// Panics if `base` is not a valid token; use [`Label::parse`] for
    /// untrusted input.
    pub fn new(base: impl Into<String>) -> Self {
        let base = base.into();
        check_base(&base).expect("invalid label base");
        Label { family: None, base }
    }

    pub fn with_family(base: impl Into<String>, family: u32) -> Self {
        let base = base.into();
        check_base(&base).expect("invalid label base");
        Label {
            family: Some(family),
            base,
        }
    }

    pub fn try_new(base: impl Into<String>, family: Option<u32>) -> Result<Self, LabelError> {
        let base = base.into();
        check_base(&base)?;
        Ok(Label { family, base })
    }

    pub fn parse(token: &str) -> Result<Self, LabelError> {
        match token.split_once('^') {
            None => Label::try_new(token, None),
            Some((base, fam)) => {
                if fam.is_empty() || !fam.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(LabelError::BadFamily(token.to_string()));
                }
                let family = fam
                    .parse::<u32>()
                    .map_err(|_| LabelError::BadFamily(token.to_string()))?;
                Label::try_new(base, Some(family))
            }
        }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn family(&self) -> Option<u32> {
        self.family
    }

    /// Same base and family with a suffix appended to the base.
    pub(crate) fn suffixed(&self, suffix: &str) -> Label {
        Label {
            family: self.family,
            base: format!("{}{}", self.base, suffix),
        }
    }
}

fn check_base(base: &str) -> Result<(), LabelError> {
    if base.is_empty() {
        return Err(LabelError::Empty);
    }
    match base
        .chars()
        .find(|c| !(c.is_ascii_alphanumeric() || *c == '_'))
    {
        Some(ch) => Err(LabelError::InvalidChar {
            token: base.to_string(),
            ch,
        }),
        None => Ok(()),
    }
}

impl FromStr for Label {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Label::parse(s)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Some(i) => write!(f, "{}^{}", self.base, i),
            None => f.write_str(&self.base),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let l = Label::parse("x3^2").unwrap();
        assert_eq!(l.base(), "x3");
        assert_eq!(l.family(), Some(2));
        assert_eq!(l.to_string(), "x3^2");
        assert_eq!(Label::parse("y_1").unwrap().family(), None);
    }

    #[test]
    fn rejects_bad_tokens() {
        assert_eq!(Label::parse(""), Err(LabelError::Empty));
        assert!(matches!(
            Label::parse("a'"),
            Err(LabelError::InvalidChar { ch: '\'', .. })
        ));
        assert!(matches!(Label::parse("a^"), Err(LabelError::BadFamily(_))));
        assert!(matches!(Label::parse("a^x"), Err(LabelError::BadFamily(_))));
        assert!(matches!(Label::parse("^2"), Err(LabelError::Empty)));
    }

    #[test]
    fn order_is_family_then_base() {
        let plain = Label::new("z");
        let a2 = Label::with_family("a", 2);
        let b1 = Label::with_family("b", 1);
        let mut v = vec![a2.clone(), plain.clone(), b1.clone()];
        v.sort();
        assert_eq!(v, vec![plain, b1, a2]);
    }
}
