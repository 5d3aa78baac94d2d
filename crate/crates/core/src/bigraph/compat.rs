use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{GraphError, GraphSet};
use crate::label::Label;

/// A white vertex of a graph inside a [`GraphSet`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WhiteRef {
    pub graph: usize,
    pub label: Label,
}

/// Degree-preserving bijections between the whites of compatible sets.
///
/// Every set lists its whites in one order; position `m` in set `j` is
/// matched with position `m` in every other set, and all whites at
/// position `m` have the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteMatching {
    orders: Vec<Vec<WhiteRef>>,
    degrees: Vec<usize>,
}

impl WhiteMatching {
    pub fn set_count(&self) -> usize {
        self.orders.len()
    }

    pub fn white_count(&self) -> usize {
        self.degrees.len()
    }

    /// Whites of set `j` in matching order.
    pub fn order(&self, j: usize) -> &[WhiteRef] {
        &self.orders[j]
    }

    /// Common degree of the whites at position `m`.
    pub fn degree(&self, m: usize) -> usize {
        self.degrees[m]
    }

    /// The bijection from the whites of the first set to those of set `j`.
    pub fn alpha(&self, j: usize) -> Vec<(WhiteRef, WhiteRef)> {
        self.orders[0]
            .iter()
            .cloned()
            .zip(self.orders[j].iter().cloned())
            .collect()
    }

    pub fn position(&self, j: usize, white: &WhiteRef) -> Option<usize> {
        self.orders[j].iter().position(|w| w == white)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Incompatibility {
    NoSets,
    WhiteCount { set: usize, expected: usize, found: usize },
    Degrees { set: usize },
}

impl fmt::Display for Incompatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Incompatibility::NoSets => f.write_str("no graph sets given"),
            Incompatibility::WhiteCount {
                set,
                expected,
                found,
            } => write!(
                f,
                "set {} has {found} white vertices, set 1 has {expected}",
                set + 1
            ),
            Incompatibility::Degrees { set } => write!(
                f,
                "white degree sequence of set {} differs from set 1",
                set + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible(WhiteMatching),
    Incompatible(Incompatibility),
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible(_))
    }
}

/// Decides whether the sets admit degree-preserving bijections between
/// their whites. Whites are matched in order of (degree, label, graph).
///
/// Every graph must be connected.
pub fn are_compatible(sets: &[GraphSet]) -> Result<Compatibility, GraphError> {
    are_compatible_seeded(sets, None)
}

/// As [`are_compatible`]; with a seed, whites of equal degree are matched
/// in a seeded random order instead.
pub fn are_compatible_seeded(
    sets: &[GraphSet],
    seed: Option<u64>,
) -> Result<Compatibility, GraphError> {
    for set in sets {
        for g in set.graphs() {
            if !g.is_connected() {
                return Err(GraphError::DisconnectedGraph(g.name().to_string()));
            }
        }
    }
    if sets.is_empty() {
        return Ok(Compatibility::Incompatible(Incompatibility::NoSets));
    }
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut orders = Vec::with_capacity(sets.len());
    let mut degree_seqs = Vec::with_capacity(sets.len());
    for set in sets {
        let mut whites: Vec<(usize, WhiteRef)> = set
            .graphs()
            .iter()
            .enumerate()
            .flat_map(|(gi, g)| {
                g.white_degrees()
                    .into_iter()
                    .zip(g.whites())
                    .map(move |(d, l)| {
                        (
                            d,
                            WhiteRef {
                                graph: gi,
                                label: l.clone(),
                            },
                        )
                    })
            })
            .collect();
        whites.sort_by(|a, b| (a.0, &a.1.label, a.1.graph).cmp(&(b.0, &b.1.label, b.1.graph)));
        if let Some(rng) = rng.as_mut() {
            for group in whites.chunk_by_mut(|a, b| a.0 == b.0) {
                group.shuffle(rng);
            }
        }
        degree_seqs.push(whites.iter().map(|w| w.0).collect::<Vec<_>>());
        orders.push(whites.into_iter().map(|w| w.1).collect::<Vec<_>>());
    }
    for j in 1..sets.len() {
        if orders[j].len() != orders[0].len() {
            return Ok(Compatibility::Incompatible(Incompatibility::WhiteCount {
                set: j,
                expected: orders[0].len(),
                found: orders[j].len(),
            }));
        }
        if degree_seqs[j] != degree_seqs[0] {
            return Ok(Compatibility::Incompatible(Incompatibility::Degrees {
                set: j,
            }));
        }
    }
    Ok(Compatibility::Compatible(WhiteMatching {
        orders,
        degrees: degree_seqs.swap_remove(0),
    }))
}
