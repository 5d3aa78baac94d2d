//! 2-complexes glued from oriented polygons.
//!
//! Every side carries an edge label and a direction. All sides with the same
//! label are identified respecting orientation, so each label is one edge
//! with a tail end and a head end. A corner of a face joins the end where
//! one side arrives to the end where the next side departs; vertices are
//! the classes of ends under these joins, and the link at a vertex has the
//! ends as vertices and the corners as edges.

mod link;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bigraph::{BipartiteGraph, Girth};
use crate::label::Label;
use crate::presentation::{AxiomReport, PolygonalPresentation, PresentationError};
use crate::union_find::UnionFind;
use crate::wicks::{Sign, SignedLetter};

pub use link::{LinkGraph, LinkVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face with no sides")]
    EmptyFace,
    #[error("letter {letter} occurs {count} times; a quadratic word uses each letter twice")]
    NotQuadratic { letter: Label, count: usize },
    #[error("no vertex {0}")]
    UnknownVertex(usize),
    #[error("presentation fails its axioms:\n{0}")]
    AxiomViolation(AxiomReport),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("link at vertex {0} is not connected")]
    DisconnectedLink(usize),
    #[error("complex has no faces")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl From<Sign> for Direction {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => Direction::Forward,
            Sign::Minus => Direction::Backward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub label: Label,
    pub direction: Direction,
}

impl Side {
    pub fn forward(label: Label) -> Side {
        Side {
            label,
            direction: Direction::Forward,
        }
    }

    /// The end this side reaches when the boundary is traversed.
    fn arriving(&self) -> End {
        End {
            label: self.label.clone(),
            kind: match self.direction {
                Direction::Forward => EndKind::Head,
                Direction::Backward => EndKind::Tail,
            },
        }
    }

    fn departing(&self) -> End {
        End {
            label: self.label.clone(),
            kind: match self.direction {
                Direction::Forward => EndKind::Tail,
                Direction::Backward => EndKind::Head,
            },
        }
    }
}

impl From<&SignedLetter> for Side {
    fn from(l: &SignedLetter) -> Self {
        Side {
            label: l.base.clone(),
            direction: l.sign.into(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Forward => write!(f, "{}", self.label),
            Direction::Backward => write!(f, "{}'", self.label),
        }
    }
}

/// An oriented polygon; side `i` is followed by side `i + 1` cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacePolygon {
    sides: Vec<Side>,
}

impl FacePolygon {
    pub fn new(sides: Vec<Side>) -> Result<Self, ComplexError> {
        if sides.is_empty() {
            return Err(ComplexError::EmptyFace);
        }
        Ok(FacePolygon { sides })
    }

    pub fn from_word(w: &[SignedLetter]) -> Result<Self, ComplexError> {
        FacePolygon::new(w.iter().map(Side::from).collect())
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }
}

impl fmt::Display for FacePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sides.iter().map(Side::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndKind {
    /// Where the edge leaves its vertex.
    Tail,
    /// Where the edge enters its vertex.
    Head,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct End {
    pub label: Label,
    pub kind: EndKind,
}

impl End {
    /// `a_out` for a tail, `a_in` for a head.
    pub fn generic_name(&self) -> Label {
        match self.kind {
            EndKind::Tail => self.label.suffixed("_out"),
            EndKind::Head => self.label.suffixed("_in"),
        }
    }
}

/// The corner of face `face` between sides `index` and `index + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub face: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Naming {
    Generic,
    /// Tail of `x` is black `x`, head of `x` is white `λ(x)`.
    Lambda(BTreeMap<Label, Label>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    faces: Vec<FacePolygon>,
    edges: Vec<Label>,
    vertex_of_end: BTreeMap<End, usize>,
    vertex_count: usize,
    naming: Naming,
}

impl Polyhedron {
    /// Glues the faces along equal labels.
    pub fn from_faces(faces: Vec<FacePolygon>) -> Polyhedron {
        Polyhedron::glue(faces, Naming::Generic)
    }

    fn glue(faces: Vec<FacePolygon>, naming: Naming) -> Polyhedron {
        let mut edges: Vec<Label> = faces
            .iter()
            .flat_map(|f| f.sides.iter().map(|s| s.label.clone()))
            .collect();
        edges.sort();
        edges.dedup();
        let index: BTreeMap<&Label, usize> =
            edges.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let slot = |e: &End| {
            2 * index[&e.label]
                + match e.kind {
                    EndKind::Tail => 0,
                    EndKind::Head => 1,
                }
        };
        let mut uf = UnionFind::new(2 * edges.len());
        for f in &faces {
            let n = f.sides.len();
            for i in 0..n {
                let a = f.sides[i].arriving();
                let d = f.sides[(i + 1) % n].departing();
                uf.union(slot(&a), slot(&d));
            }
        }
        let (class, vertex_count) = uf.classes();
        let mut vertex_of_end = BTreeMap::new();
        for (i, l) in edges.iter().enumerate() {
            for (k, kind) in [EndKind::Tail, EndKind::Head].into_iter().enumerate() {
                vertex_of_end.insert(
                    End {
                        label: l.clone(),
                        kind,
                    },
                    class[2 * i + k],
                );
            }
        }
        Polyhedron {
            faces,
            edges,
            vertex_of_end,
            vertex_count,
            naming,
        }
    }

    /// One face per tuple, all sides forward. Link vertices are named after
    /// the presentation: the tail of `x` is black `x`, the head white `λ(x)`,
    /// so each link can be compared directly with the presentation's graphs.
    pub fn build_from_presentation(p: &PolygonalPresentation) -> Result<Polyhedron, ComplexError> {
        let report = p.verify_axioms()?;
        if !report.passed() {
            return Err(ComplexError::AxiomViolation(report));
        }
        let faces = p
            .tuples()
            .map(|t| FacePolygon {
                sides: t.iter().cloned().map(Side::forward).collect(),
            })
            .collect();
        let lambda = p
            .lambda()
            .pairs()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        Ok(Polyhedron::glue(faces, Naming::Lambda(lambda)))
    }

    /// A single polygon with every letter used twice, sides identified in
    /// pairs.
    pub fn build_from_word(w: &[SignedLetter]) -> Result<Polyhedron, ComplexError> {
        let mut count: BTreeMap<&Label, usize> = BTreeMap::new();
        for l in w {
            *count.entry(&l.base).or_default() += 1;
        }
        if let Some((letter, &count)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(ComplexError::NotQuadratic {
                letter: (*letter).clone(),
                count,
            });
        }
        Ok(Polyhedron::from_faces(vec![FacePolygon::from_word(w)?]))
    }

    pub fn faces(&self) -> &[FacePolygon] {
        &self.faces
    }

    /// Edge labels, sorted.
    pub fn edges(&self) -> &[Label] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `(vertices, edges, faces)`.
    pub fn cell_counts(&self) -> (usize, usize, usize) {
        (self.vertex_count, self.edges.len(), self.faces.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn vertex_of(&self, end: &End) -> Option<usize> {
        self.vertex_of_end.get(end).copied()
    }

    /// Ends belonging to vertex `v`, sorted.
    pub fn ends_at(&self, v: usize) -> Vec<End> {
        self.vertex_of_end
            .iter()
            .filter(|(_, &u)| u == v)
            .map(|(e, _)| e.clone())
            .collect()
    }

    /// The arriving and departing ends joined by a corner.
    pub fn corner_ends(&self, c: Corner) -> (End, End) {
        let f = &self.faces[c.face];
        let n = f.sides.len();
        (f.sides[c.index].arriving(), f.sides[(c.index + 1) % n].departing())
    }

    pub fn corners(&self) -> impl Iterator<Item = Corner> + '_ {
        self.faces
            .iter()
            .enumerate()
            .flat_map(|(face, f)| (0..f.len()).map(move |index| Corner { face, index }))
    }

    pub fn vertex_of_corner(&self, c: Corner) -> usize {
        self.vertex_of_end[&self.corner_ends(c).0]
    }

    pub fn corners_at(&self, v: usize) -> Vec<Corner> {
        self.corners()
            .filter(|&c| self.vertex_of_corner(c) == v)
            .collect()
    }

    pub fn link_at(&self, v: usize) -> Result<LinkGraph, ComplexError> {
        if v >= self.vertex_count {
            return Err(ComplexError::UnknownVertex(v));
        }
        Ok(LinkGraph::build(self, v))
    }

    pub fn links(&self) -> Vec<LinkGraph> {
        (0..self.vertex_count)
            .map(|v| LinkGraph::build(self, v))
            .collect()
    }

    fn link_names(&self) -> Option<&BTreeMap<Label, Label>> {
        match &self.naming {
            Naming::Generic => None,
            Naming::Lambda(m) => Some(m),
        }
    }

    /// Matches vertices with the expected graphs so that each link is
    /// colour-preservingly isomorphic to its partner.
    pub fn verify_links(&self, expected: &[BipartiteGraph]) -> LinkVerdict {
        link::verify_links(self, expected)
    }

    /// Smallest link girth `m`, smallest face size `n`, and whether
    /// `mn >= 2(m + n)`. An infinite girth satisfies the inequality when
    /// `n > 2`.
    pub fn check_mn(&self) -> Result<MnReport, ComplexError> {
        if self.faces.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut m = Girth::Infinite;
        for link in self.links() {
            if !link.is_connected() {
                return Err(ComplexError::DisconnectedLink(link.vertex()));
            }
            m = m.min(link.girth());
        }
        let n = self.faces.iter().map(FacePolygon::len).min().expect("nonempty");
        let satisfies = match m {
            Girth::Finite(m) => m * n >= 2 * (m + n),
            Girth::Infinite => n > 2,
        };
        Ok(MnReport { m, n, satisfies })
    }

    /// Faces, vertex classes and links as text.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, f) in self.faces.iter().enumerate() {
            out.push_str(&format!("face {i}: {f}\n"));
        }
        out.push_str("vertices\n");
        for v in 0..self.vertex_count {
            let ends: Vec<String> = self
                .ends_at(v)
                .iter()
                .map(|e| e.generic_name().to_string())
                .collect();
            out.push_str(&format!("v{v}: {}\n", ends.join(" ")));
        }
        out.push_str("links\n");
        for link in self.links() {
            out.push_str(&link.to_tableau());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MnReport {
    pub m: Girth,
    pub n: usize,
    pub satisfies: bool,
}

/// Cell counts as stated for presentations: `n` vertices (one per graph),
/// `k · Σ s_i` edges and `Σ t_i` faces, where graph `i` has `s_i` vertices
/// and `t_i` edges and `k` is the tuple length.
pub fn remark_counts(p: &PolygonalPresentation) -> (usize, usize, usize) {
    let s: usize = p.graphs().iter().map(BipartiteGraph::vertex_count).sum();
    let t: usize = p.graphs().iter().map(BipartiteGraph::edge_count).sum();
    (p.graphs().len(), p.k() * s, t)
}

#[cfg(test)]
mod tests;
