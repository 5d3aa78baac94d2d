//! Bipartite (multi)graphs with white and black parts.
//!
//! These are the carriers for links, generalized polygons and their duals.
//! Vertices are named by [`Label`]s; edges always join a white vertex to a
//! black one and may repeat.

mod compat;
mod iso;
pub mod standard;
mod tableau;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::MultiGraph;
pub use crate::graph::Girth;
use crate::label::Label;

pub use compat::{
    are_compatible, are_compatible_seeded, Compatibility, Incompatibility, WhiteMatching, WhiteRef,
};
pub use iso::{are_isomorphic, Isomorphism};
pub use tableau::{parse_tableaux, write_tableau, write_tableaux, TableauError, TableauErrorKind};
pub(crate) use tableau::parse_lines as parse_tableau_lines;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    pub fn flipped(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }
}

/// A vertex named by its colour and label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub colour: Colour,
    pub label: Label,
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.colour {
            Colour::White => "white",
            Colour::Black => "black",
        };
        write!(f, "{c} {}", self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph name {0:?}")]
    InvalidName(String),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(Label),
    #[error("label {0} is both white and black")]
    ColourClash(Label),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownEndpoint(Label),
    #[error("graph {0} is not connected")]
    DisconnectedGraph(String),
    #[error("graph name {0} used twice in one set")]
    DuplicateGraphName(String),
}

/// A labelled bipartite multigraph.
///
/// Equality is field-by-field: name, vertex order in each part and edge
/// order all matter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    name: String,
    whites: Vec<Label>,
    blacks: Vec<Label>,
    /// `(white index, black index)`
    edges: Vec<(usize, usize)>,
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl BipartiteGraph {
    pub fn new(
        name: impl Into<String>,
        whites: Vec<Label>,
        blacks: Vec<Label>,
        edges: Vec<(Label, Label)>,
    ) -> Result<Self, GraphError> {
        let name = name.into();
        if !is_token(&name) {
            return Err(GraphError::InvalidName(name));
        }
        let white_index = index_part(&whites)?;
        let black_index = index_part(&blacks)?;
        if let Some(l) = whites.iter().find(|l| black_index.contains_key(*l)) {
            return Err(GraphError::ColourClash(l.clone()));
        }
        let edges = edges
            .into_iter()
            .map(|(w, b)| {
                let wi = *white_index
                    .get(&w)
                    .ok_or_else(|| GraphError::UnknownEndpoint(w.clone()))?;
                let bi = *black_index
                    .get(&b)
                    .ok_or_else(|| GraphError::UnknownEndpoint(b.clone()))?;
                Ok((wi, bi))
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        Ok(BipartiteGraph {
            name,
            whites,
            blacks,
            edges,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn whites(&self) -> &[Label] {
        &self.whites
    }

    pub fn blacks(&self) -> &[Label] {
        &self.blacks
    }

    pub fn vertex_count(&self) -> usize {
        self.whites.len() + self.blacks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(white, black)` label pairs in stored order.
    pub fn edges(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.edges
            .iter()
            .map(|&(w, b)| (&self.whites[w], &self.blacks[b]))
    }

    pub(crate) fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn white_degree(&self, white: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == white).count()
    }

    pub fn black_degree(&self, black: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == black).count()
    }

    pub fn white_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.whites.len()];
        for &(w, _) in &self.edges {
            d[w] += 1;
        }
        d
    }

    /// Black labels adjacent to the given white, with multiplicity, in edge order.
    pub fn neighbours_of_white(&self, white: usize) -> impl Iterator<Item = &Label> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.0 == white)
            .map(|&(_, b)| &self.blacks[b])
    }

    pub fn white_index(&self, label: &Label) -> Option<usize> {
        self.whites.iter().position(|l| l == label)
    }

    pub fn black_index(&self, label: &Label) -> Option<usize> {
        self.blacks.iter().position(|l| l == label)
    }

    pub fn contains(&self, v: &VertexRef) -> bool {
        match v.colour {
            Colour::White => self.white_index(&v.label).is_some(),
            Colour::Black => self.black_index(&v.label).is_some(),
        }
    }

    /// True if some white/black pair is joined by more than one edge.
    pub fn has_multi_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.edges.iter().all(|e| seen.insert(*e))
    }

    /// Whites occupy indices `0..W`, blacks `W..W+B`.
    pub(crate) fn multigraph(&self) -> MultiGraph {
        let offset = self.whites.len();
        MultiGraph::new(
            self.vertex_count(),
            self.edges.iter().map(|&(w, b)| (w, offset + b)),
        )
    }

    pub(crate) fn vertex_at(&self, i: usize) -> VertexRef {
        if i < self.whites.len() {
            VertexRef {
                colour: Colour::White,
                label: self.whites[i].clone(),
            }
        } else {
            VertexRef {
                colour: Colour::Black,
                label: self.blacks[i - self.whites.len()].clone(),
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.multigraph().is_connected()
    }

    pub fn girth(&self) -> Girth {
        self.multigraph().girth()
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        self.multigraph()
            .diameter()
            .ok_or_else(|| GraphError::DisconnectedGraph(self.name.clone()))
    }

    /// Smallest vertex degree and a vertex attaining it.
    pub fn min_degree(&self) -> Option<(VertexRef, usize)> {
        let g = self.multigraph();
        (0..g.vertex_count())
            .map(|i| (i, g.degree(i)))
            .min_by_key(|&(i, d)| (d, i))
            .map(|(i, d)| (self.vertex_at(i), d))
    }

    /// Checks the generalized m-gon conditions in order: connected, every
    /// vertex on at least two edges, girth `2m`, diameter `m`.
    pub fn check_generalized_m_gon(&self, m: usize) -> Result<(), MGonFailure> {
        if m < 2 {
            return Err(MGonFailure::GonalityTooSmall(m));
        }
        let g = self.multigraph();
        if g.vertex_count() == 0 {
            return Err(MGonFailure::Empty);
        }
        if !g.is_connected() {
            return Err(MGonFailure::Disconnected);
        }
        if let Some((vertex, degree)) = self.min_degree().filter(|&(_, d)| d < 2) {
            return Err(MGonFailure::MinDegree { vertex, degree });
        }
        let girth = g.girth();
        if girth != Girth::Finite(2 * m) {
            return Err(MGonFailure::Girth {
                expected: 2 * m,
                found: girth,
            });
        }
        let diameter = g.diameter().expect("connected");
        if diameter != m {
            return Err(MGonFailure::Diameter {
                expected: m,
                found: diameter,
            });
        }
        Ok(())
    }

    pub fn is_generalized_m_gon(&self, m: usize) -> bool {
        self.check_generalized_m_gon(m).is_ok()
    }

    /// Swaps the roles of white and black; labels and edge order are kept.
    pub fn dual(&self) -> BipartiteGraph {
        BipartiteGraph {
            name: self.name.clone(),
            whites: self.blacks.clone(),
            blacks: self.whites.clone(),
            edges: self.edges.iter().map(|&(w, b)| (b, w)).collect(),
        }
    }

    /// Tableau order: edges grouped by white in white order, blacks in order
    /// of first appearance. Writing and re-reading a tableau preserves a
    /// normalized graph exactly.
    pub fn normalized(&self) -> BipartiteGraph {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| e.0);
        let mut order: Vec<usize> = Vec::with_capacity(self.blacks.len());
        for &(_, b) in &edges {
            if !order.contains(&b) {
                order.push(b);
            }
        }
        order.extend((0..self.blacks.len()).filter(|b| !edges.iter().any(|e| e.1 == *b)));
        let mut new_index = vec![0; self.blacks.len()];
        for (i, &b) in order.iter().enumerate() {
            new_index[b] = i;
        }
        BipartiteGraph {
            name: self.name.clone(),
            whites: self.whites.clone(),
            blacks: order.iter().map(|&b| self.blacks[b].clone()).collect(),
            edges: edges.into_iter().map(|(w, b)| (w, new_index[b])).collect(),
        }
    }

    /// Whites sorted by label, each row sorted by black label, then
    /// [`normalized`](Self::normalized).
    pub fn sorted(&self) -> BipartiteGraph {
        let mut wi: Vec<usize> = (0..self.whites.len()).collect();
        wi.sort_by(|&a, &b| self.whites[a].cmp(&self.whites[b]));
        let mut new_white = vec![0; wi.len()];
        for (i, &w) in wi.iter().enumerate() {
            new_white[w] = i;
        }
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(w, b)| (new_white[w], b)).collect();
        edges.sort_by(|x, y| (x.0, &self.blacks[x.1]).cmp(&(y.0, &self.blacks[y.1])));
        BipartiteGraph {
            name: self.name.clone(),
            whites: wi.iter().map(|&w| self.whites[w].clone()).collect(),
            blacks: self.blacks.clone(),
            edges,
        }
        .normalized()
    }

    pub fn renamed(&self, name: impl Into<String>) -> Result<BipartiteGraph, GraphError> {
        let name = name.into();
        if !is_token(&name) {
            return Err(GraphError::InvalidName(name));
        }
        Ok(BipartiteGraph {
            name,
            ..self.clone()
        })
    }

    /// Applies label maps to each part. The maps must stay injective and
    /// keep the parts disjoint.
    pub fn relabelled(
        &self,
        mut white: impl FnMut(&Label) -> Label,
        mut black: impl FnMut(&Label) -> Label,
    ) -> Result<BipartiteGraph, GraphError> {
        let whites: Vec<Label> = self.whites.iter().map(&mut white).collect();
        let blacks: Vec<Label> = self.blacks.iter().map(&mut black).collect();
        index_part(&whites)?;
        let black_index = index_part(&blacks)?;
        if let Some(l) = whites.iter().find(|l| black_index.contains_key(*l)) {
            return Err(GraphError::ColourClash(l.clone()));
        }
        Ok(BipartiteGraph {
            name: self.name.clone(),
            whites,
            blacks,
            edges: self.edges.clone(),
        })
    }
}

fn index_part(labels: &[Label]) -> Result<BTreeMap<Label, usize>, GraphError> {
    let mut index = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(GraphError::DuplicateVertex(l.clone()));
        }
    }
    Ok(index)
}

/// The first generalized m-gon condition a graph fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MGonFailure {
    GonalityTooSmall(usize),
    Empty,
    Disconnected,
    MinDegree { vertex: VertexRef, degree: usize },
    Girth { expected: usize, found: Girth },
    Diameter { expected: usize, found: usize },
}

impl fmt::Display for MGonFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MGonFailure::GonalityTooSmall(m) => write!(f, "m = {m} is below 2"),
            MGonFailure::Empty => f.write_str("graph is empty"),
            MGonFailure::Disconnected => f.write_str("graph is not connected"),
            MGonFailure::MinDegree { vertex, degree } => {
                write!(f, "min degree < 2 ({vertex} has degree {degree})")
            }
            MGonFailure::Girth { expected, found } => {
                write!(f, "girth {found}, expected {expected}")
            }
            MGonFailure::Diameter { expected, found } => {
                write!(f, "diameter {found}, expected {expected}")
            }
        }
    }
}

/// A named family of graphs (one of the sets in a compatibility check).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSet {
    graphs: Vec<BipartiteGraph>,
}

impl GraphSet {
    pub fn new(graphs: Vec<BipartiteGraph>) -> Result<Self, GraphError> {
        let mut names = BTreeSet::new();
        for g in &graphs {
            if !names.insert(g.name()) {
                return Err(GraphError::DuplicateGraphName(g.name().to_string()));
            }
        }
        Ok(GraphSet { graphs })
    }

    pub fn graphs(&self) -> &[BipartiteGraph] {
        &self.graphs
    }

    pub fn white_count(&self) -> usize {
        self.graphs.iter().map(|g| g.whites().len()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    fn l(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    fn pendant_hexagon() -> BipartiteGraph {
        let mut edges: Vec<(Label, Label)> = standard::even_cycle(3)
            .edges()
            .map(|(w, b)| (w.clone(), b.clone()))
            .collect();
        edges.push((l("y4"), l("x1")));
        let c = standard::even_cycle(3);
        let mut whites = c.whites().to_vec();
        whites.push(l("y4"));
        BipartiteGraph::new("pendant", whites, c.blacks().to_vec(), edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            BipartiteGraph::new("g h", vec![], vec![], vec![]),
            Err(GraphError::InvalidName("g h".into()))
        );
        assert_eq!(
            BipartiteGraph::new("g", vec![l("a"), l("a")], vec![], vec![]),
            Err(GraphError::DuplicateVertex(l("a")))
        );
        assert_eq!(
            BipartiteGraph::new("g", vec![l("a")], vec![l("a")], vec![]),
            Err(GraphError::ColourClash(l("a")))
        );
        assert_eq!(
            BipartiteGraph::new("g", vec![l("a")], vec![l("b")], vec![(l("a"), l("c"))]),
            Err(GraphError::UnknownEndpoint(l("c")))
        );
    }

    #[test]
    fn girth_examples() {
        assert_eq!(complete_bipartite(2, 2).girth(), Girth::Finite(4));
        assert_eq!(heawood().girth(), Girth::Finite(6));
        assert_eq!(path_y1_x1_y2().girth(), Girth::Infinite);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(complete_bipartite(2, 2).diameter(), Ok(2));
        assert_eq!(heawood().diameter(), Ok(3));
        assert_eq!(single_edge().diameter(), Ok(1));
        let two = BipartiteGraph::new(
            "two",
            vec![l("y1"), l("y2")],
            vec![l("x1"), l("x2")],
            vec![(l("y1"), l("x1")), (l("y2"), l("x2"))],
        )
        .unwrap();
        assert_eq!(
            two.diameter(),
            Err(GraphError::DisconnectedGraph("two".into()))
        );
    }

    #[test]
    fn generalized_polygon_examples() {
        assert!(complete_bipartite(2, 2).is_generalized_m_gon(2));
        assert!(heawood().is_generalized_m_gon(3));
        assert!(!heawood().is_generalized_m_gon(2));
        let failure = pendant_hexagon().check_generalized_m_gon(3).unwrap_err();
        assert!(matches!(failure, MGonFailure::MinDegree { degree: 1, .. }));
        assert!(failure.to_string().starts_with("min degree < 2"));
    }

    #[test]
    fn double_edge_fails_girth() {
        let g = even_cycle(1);
        assert!(g.has_multi_edges());
        assert_eq!(g.girth(), Girth::Finite(2));
        assert_eq!(
            g.check_generalized_m_gon(2),
            Err(MGonFailure::Girth {
                expected: 4,
                found: Girth::Finite(2)
            })
        );
    }

    #[test]
    fn even_cycles_are_generalized_polygons() {
        for m in 2..=8 {
            assert_eq!(even_cycle(m).check_generalized_m_gon(m), Ok(()), "m = {m}");
        }
    }

    #[test]
    fn dual_of_example_tableau() {
        let g = complete_bipartite(2, 2);
        let d = g.dual();
        assert_eq!(d.whites(), &[l("x1"), l("x2")]);
        assert_eq!(d.blacks(), &[l("y1"), l("y2")]);
        let rows: Vec<Vec<String>> = (0..2)
            .map(|w| d.neighbours_of_white(w).map(|b| b.to_string()).collect())
            .collect();
        assert_eq!(rows, vec![vec!["y1", "y2"], vec!["y1", "y2"]]);
        assert_eq!(d.dual(), g);

        let e = single_edge().dual();
        assert_eq!(e.whites(), &[l("x1")]);
        assert_eq!(e.blacks(), &[l("y1")]);
    }

    #[test]
    fn graph_set_names_unique() {
        let g = complete_bipartite(2, 2);
        assert_eq!(
            GraphSet::new(vec![g.clone(), g]),
            Err(GraphError::DuplicateGraphName("K2_2".into()))
        );
    }
}
