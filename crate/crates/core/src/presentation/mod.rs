//! Polygonal presentations: cyclic tuples over black letters together with a
//! bijection from black letters to white letters of a family of graphs.

mod format;
mod theorem1;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::bigraph::{BipartiteGraph, Colour, GraphError, Incompatibility};
use crate::cyclic::{canonical_rotation, period, rotated};
use crate::label::Label;

pub use format::{parse_presentation, parse_presentation_with, write_presentation, FormatError};
pub use theorem1::construct_theorem1;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("lambda maps {0} twice")]
    LambdaDuplicate(Label),
    #[error("lambda is not injective: {0} has two preimages")]
    LambdaNotInjective(Label),
    #[error("lambda domain differs from the black letters: {0} {1}")]
    LambdaDomain(&'static str, Label),
    #[error("lambda image differs from the white letters: {0} {1}")]
    LambdaImage(&'static str, Label),
    #[error("tuples have different lengths {0} and {1}")]
    MixedLength(usize, usize),
    #[error("empty tuple")]
    EmptyTuple,
    #[error("tuple letter {0} is not a black vertex of any graph")]
    UnknownLabel(Label),
    #[error("incompatible graph sets: {0}")]
    IncompatibleSets(Incompatibility),
    #[error("graph {0} has a multiple edge")]
    MultiEdge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The basic bijection `λ` from black letters to white letters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasicBijection {
    map: BTreeMap<Label, Label>,
}

impl BasicBijection {
    pub fn new(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self, PresentationError> {
        let mut map = BTreeMap::new();
        let mut image = BTreeSet::new();
        for (a, b) in pairs {
            if !image.insert(b.clone()) {
                return Err(PresentationError::LambdaNotInjective(b));
            }
            if map.insert(a.clone(), b).is_some() {
                return Err(PresentationError::LambdaDuplicate(a));
            }
        }
        Ok(BasicBijection { map })
    }

    pub fn apply(&self, x: &Label) -> Option<&Label> {
        self.map.get(x)
    }

    /// Pairs sorted by black letter.
    pub fn pairs(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// A set of cyclic tuples over the black letters `P` of `graphs`, with a
/// basic bijection `λ: P -> Q` onto the white letters.
///
/// Each cyclic tuple is stored once, as its least rotation. Letters outside
/// `P` are accepted here and reported by [`PolygonalPresentation::verify_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonalPresentation {
    graphs: Vec<BipartiteGraph>,
    lambda: BasicBijection,
    tuples: BTreeSet<Vec<Label>>,
    k: usize,
}

impl PolygonalPresentation {
    pub fn new(
        graphs: Vec<BipartiteGraph>,
        lambda: BasicBijection,
        tuples: impl IntoIterator<Item = Vec<Label>>,
    ) -> Result<Self, PresentationError> {
        let blacks = letters_of(&graphs, Colour::Black);
        let whites = letters_of(&graphs, Colour::White);
        if let Some(x) = lambda.map.keys().find(|x| !blacks.contains(*x)) {
            return Err(PresentationError::LambdaDomain("extra", x.clone()));
        }
        if let Some(x) = blacks.iter().find(|x| !lambda.map.contains_key(*x)) {
            return Err(PresentationError::LambdaDomain("missing", x.clone()));
        }
        let image: BTreeSet<&Label> = lambda.map.values().collect();
        if let Some(x) = image.iter().find(|x| !whites.contains(**x)) {
            return Err(PresentationError::LambdaImage("extra", (*x).clone()));
        }
        if let Some(x) = whites.iter().find(|x| !image.contains(x)) {
            return Err(PresentationError::LambdaImage("missing", x.clone()));
        }
        let mut k = None;
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.is_empty() {
                return Err(PresentationError::EmptyTuple);
            }
            match k {
                None => k = Some(t.len()),
                Some(k0) if k0 != t.len() => {
                    return Err(PresentationError::MixedLength(k0, t.len()))
                }
                _ => {}
            }
            set.insert(canonical_rotation(&t));
        }
        Ok(PolygonalPresentation {
            graphs,
            lambda,
            tuples: set,
            k: k.unwrap_or(0),
        })
    }

    pub fn graphs(&self) -> &[BipartiteGraph] {
        &self.graphs
    }

    pub fn lambda(&self) -> &BasicBijection {
        &self.lambda
    }

    /// Canonical representatives in sorted order.
    pub fn tuples(&self) -> impl Iterator<Item = &[Label]> + '_ {
        self.tuples.iter().map(Vec::as_slice)
    }

    /// Tuple length; 0 for an empty presentation.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Tuples of length at most 2 give digon or monogon faces.
    pub fn is_degenerate(&self) -> bool {
        self.k > 0 && self.k <= 2
    }

    /// True if some rotation of `t` is one of the tuples.
    pub fn contains(&self, t: &[Label]) -> bool {
        t.len() == self.k && self.tuples.contains(&canonical_rotation(t))
    }

    /// The black letters `P`, sorted.
    pub fn blacks(&self) -> BTreeSet<Label> {
        letters_of(&self.graphs, Colour::Black)
    }

    /// `(cyclic classes, linear tuples)`; a class with rotational symmetry
    /// contributes fewer than `k` linear tuples.
    pub fn tuple_count(&self) -> (usize, usize) {
        (
            self.tuples.len(),
            self.tuples.iter().map(|t| period(t)).sum(),
        )
    }

    /// Whether the white `w` and the black `b` are joined in some graph.
    pub fn incident(&self, w: &Label, b: &Label) -> bool {
        self.graphs.iter().any(|g| g.edges().any(|(x, y)| x == w && y == b))
    }

    /// Checks the three presentation axioms:
    /// 1. the tuple set is closed under cyclic permutation;
    /// 2. some tuple starts `(x1, x2)` iff `x2` is incident to `λ(x1)`;
    /// 3. each prefix `(x1, x2)` extends to at most one `x3`.
    ///
    /// Indices are cyclic, so tuples of length 1 and 2 are handled too.
    pub fn verify_axioms(&self) -> Result<AxiomReport, PresentationError> {
        let blacks = self.blacks();
        for t in &self.tuples {
            if let Some(x) = t.iter().find(|x| !blacks.contains(*x)) {
                return Err(PresentationError::UnknownLabel(x.clone()));
            }
        }
        let mut report = AxiomReport::default();

        for t in &self.tuples {
            for r in 0..t.len() {
                if !self.contains(&rotated(t, r)) {
                    report.closure.push(t.clone());
                    break;
                }
            }
        }

        let mut thirds: BTreeMap<(Label, Label), BTreeSet<Label>> = BTreeMap::new();
        for t in &self.tuples {
            let n = t.len();
            for i in 0..n {
                thirds
                    .entry((t[i].clone(), t[(i + 1) % n].clone()))
                    .or_default()
                    .insert(t[(i + 2) % n].clone());
            }
        }

        let mut incident_pairs = BTreeSet::new();
        for g in &self.graphs {
            for (w, b) in g.edges() {
                incident_pairs.insert((w.clone(), b.clone()));
            }
        }
        let mut expected = BTreeSet::new();
        for (x1, w) in self.lambda.pairs() {
            for (w2, x2) in &incident_pairs {
                if w2 == w {
                    expected.insert((x1.clone(), x2.clone()));
                }
            }
        }
        for pair in expected.iter() {
            if !thirds.contains_key(pair) {
                report.incidence.push(IncidenceViolation {
                    x1: pair.0.clone(),
                    x2: pair.1.clone(),
                    kind: IncidenceKind::MissingTuple,
                });
            }
        }
        for pair in thirds.keys() {
            if !expected.contains(pair) {
                report.incidence.push(IncidenceViolation {
                    x1: pair.0.clone(),
                    x2: pair.1.clone(),
                    kind: IncidenceKind::NotIncident,
                });
            }
        }
        report.incidence.sort();

        for ((x1, x2), set) in thirds {
            if set.len() > 1 {
                report.uniqueness.push(UniquenessViolation {
                    x1,
                    x2,
                    thirds: set.into_iter().collect(),
                });
            }
        }
        Ok(report)
    }
}

fn letters_of(graphs: &[BipartiteGraph], colour: Colour) -> BTreeSet<Label> {
    graphs
        .iter()
        .flat_map(|g| match colour {
            Colour::White => g.whites().iter(),
            Colour::Black => g.blacks().iter(),
        })
        .cloned()
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IncidenceKind {
    /// `x2` is incident to `λ(x1)` but no tuple starts `(x1, x2)`.
    MissingTuple,
    /// A tuple starts `(x1, x2)` but `x2` is not incident to `λ(x1)`.
    NotIncident,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IncidenceViolation {
    pub x1: Label,
    pub x2: Label,
    pub kind: IncidenceKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessViolation {
    pub x1: Label,
    pub x2: Label,
    pub thirds: Vec<Label>,
}

/// Violations found by [`PolygonalPresentation::verify_axioms`], per axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Tuples with a rotation missing from the set.
    pub closure: Vec<Vec<Label>>,
    pub incidence: Vec<IncidenceViolation>,
    pub uniqueness: Vec<UniquenessViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.closure.is_empty() && self.incidence.is_empty() && self.uniqueness.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |t: &[Label]| {
            t.iter()
                .map(Label::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(
            f,
            "axiom (1): {}",
            if self.closure.is_empty() { "ok" } else { "violated" }
        )?;
        for t in &self.closure {
            writeln!(f, "  not closed under rotation: {}", word(t))?;
        }
        writeln!(
            f,
            "axiom (2): {}",
            if self.incidence.is_empty() { "ok" } else { "violated" }
        )?;
        for v in &self.incidence {
            let what = match v.kind {
                IncidenceKind::MissingTuple => "incident but no tuple starts with",
                IncidenceKind::NotIncident => "tuple starts with non-incident pair",
            };
            writeln!(f, "  {what} ({}, {})", v.x1, v.x2)?;
        }
        writeln!(
            f,
            "axiom (3): {}",
            if self.uniqueness.is_empty() { "ok" } else { "violated" }
        )?;
        for v in &self.uniqueness {
            writeln!(
                f,
                "  prefix ({}, {}) extends to {}",
                v.x1,
                v.x2,
                word(&v.thirds)
            )?;
        }
        Ok(())
    }
}
