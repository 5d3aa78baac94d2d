use std::collections::BTreeSet;

use super::{Corner, End, EndKind, Polyhedron};
use crate::bigraph::{are_isomorphic, write_tableau, BipartiteGraph, Colour, Girth};
use crate::graph::MultiGraph;
use crate::label::Label;

/// The link at one vertex: ends as vertices, one edge per corner.
///
/// When the corners can be 2-coloured the link is also available as a
/// [`BipartiteGraph`] named `v{vertex}`. Heads are white and tails black
/// whenever every corner joins a head to a tail (always the case for
/// presentations); otherwise each component is 2-coloured starting from its
/// first end in its own head/tail colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    vertex: usize,
    ends: Vec<End>,
    edges: Vec<(usize, usize)>,
    corners: Vec<Corner>,
    bipartite: Option<BipartiteGraph>,
}

fn natural(kind: EndKind) -> Colour {
    match kind {
        EndKind::Head => Colour::White,
        EndKind::Tail => Colour::Black,
    }
}

impl LinkGraph {
    pub(super) fn build(k: &Polyhedron, v: usize) -> LinkGraph {
        let ends = k.ends_at(v);
        let pos = |e: &End| ends.binary_search(e).expect("end at this vertex");
        let corners = k.corners_at(v);
        let edges: Vec<(usize, usize)> = corners
            .iter()
            .map(|&c| {
                let (a, d) = k.corner_ends(c);
                (pos(&a), pos(&d))
            })
            .collect();

        let colours: Option<Vec<Colour>> = if edges
            .iter()
            .all(|&(a, d)| ends[a].kind != ends[d].kind)
        {
            Some(ends.iter().map(|e| natural(e.kind)).collect())
        } else {
            let g = MultiGraph::new(ends.len(), edges.iter().copied());
            g.two_colouring().map(|c| {
                let (comp, _) = g.components();
                let mut first_kind = Vec::new();
                for (i, &ci) in comp.iter().enumerate() {
                    if ci == first_kind.len() {
                        first_kind.push((natural(ends[i].kind), c[i]));
                    }
                }
                c.iter()
                    .zip(&comp)
                    .map(|(&ci, &k)| {
                        let (base, base_bit) = first_kind[k];
                        if ci == base_bit {
                            base
                        } else {
                            base.flipped()
                        }
                    })
                    .collect()
            })
        };

        let bipartite = colours.map(|colours| {
            let lambda_names = k.link_names().and_then(|m| {
                let names: Option<Vec<Label>> = ends
                    .iter()
                    .map(|e| match e.kind {
                        EndKind::Tail => Some(e.label.clone()),
                        EndKind::Head => m.get(&e.label).cloned(),
                    })
                    .collect();
                names.filter(|n| all_distinct(n))
            });
            let names =
                lambda_names.unwrap_or_else(|| ends.iter().map(End::generic_name).collect());
            let mut whites = Vec::new();
            let mut blacks = Vec::new();
            for (n, c) in names.iter().zip(&colours) {
                match c {
                    Colour::White => whites.push(n.clone()),
                    Colour::Black => blacks.push(n.clone()),
                }
            }
            let link_edges = edges
                .iter()
                .map(|&(a, d)| {
                    if colours[a] == Colour::White {
                        (names[a].clone(), names[d].clone())
                    } else {
                        (names[d].clone(), names[a].clone())
                    }
                })
                .collect();
            BipartiteGraph::new(format!("v{v}"), whites, blacks, link_edges)
                .expect("link names are distinct")
        });

        LinkGraph {
            vertex: v,
            ends,
            edges,
            corners,
            bipartite,
        }
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn ends(&self) -> &[End] {
        &self.ends
    }

    /// Link edges as pairs of indices into [`ends`](Self::ends): the
    /// arriving end, then the departing end of each corner.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn vertex_count(&self) -> usize {
        self.ends.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn multigraph(&self) -> MultiGraph {
        MultiGraph::new(self.ends.len(), self.edges.iter().copied())
    }

    pub fn girth(&self) -> Girth {
        self.multigraph().girth()
    }

    pub fn is_connected(&self) -> bool {
        self.multigraph().is_connected()
    }

    /// True if the link is a single cycle through all its vertices.
    pub fn is_cycle(&self) -> bool {
        let g = self.multigraph();
        self.ends.len() == self.edges.len()
            && g.is_connected()
            && (0..g.vertex_count()).all(|u| g.degree(u) == 2)
    }

    pub fn bipartite(&self) -> Option<&BipartiteGraph> {
        self.bipartite.as_ref()
    }

    /// Tableau block, or comment lines listing corners when the link has an
    /// odd cycle.
    pub fn to_tableau(&self) -> String {
        match &self.bipartite {
            Some(g) => write_tableau(g),
            None => {
                let mut out = format!("# v{} has an odd cycle; corners:\n", self.vertex);
                for &(a, d) in &self.edges {
                    out.push_str(&format!(
                        "#   {} - {}\n",
                        self.ends[a].generic_name(),
                        self.ends[d].generic_name()
                    ));
                }
                out
            }
        }
    }
}

fn all_distinct(names: &[Label]) -> bool {
    let mut seen = BTreeSet::new();
    names.iter().all(|n| seen.insert(n))
}

/// Outcome of matching vertices to expected links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkVerdict {
    /// `(vertex, index into expected)` for every vertex.
    Matched(Vec<(usize, usize)>),
    CountMismatch { vertices: usize, expected: usize },
    /// The first vertex left without a partner in a maximum matching.
    Unmatched { vertex: usize },
}

impl LinkVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, LinkVerdict::Matched(_))
    }
}

pub(super) fn verify_links(k: &Polyhedron, expected: &[BipartiteGraph]) -> LinkVerdict {
    let n = k.vertex_count();
    if n != expected.len() {
        return LinkVerdict::CountMismatch {
            vertices: n,
            expected: expected.len(),
        };
    }
    let links = k.links();
    let fits: Vec<Vec<usize>> = links
        .iter()
        .map(|l| match l.bipartite() {
            None => Vec::new(),
            Some(g) => (0..expected.len())
                .filter(|&j| are_isomorphic(g, &expected[j], true).is_some())
                .collect(),
        })
        .collect();
    // Kuhn's augmenting paths.
    let mut partner: Vec<Option<usize>> = vec![None; expected.len()];
    for v in 0..n {
        let mut visited = vec![false; expected.len()];
        augment(v, &fits, &mut partner, &mut visited);
    }
    let mut matched = vec![None; n];
    for (j, p) in partner.iter().enumerate() {
        if let Some(v) = p {
            matched[*v] = Some(j);
        }
    }
    match matched.iter().position(Option::is_none) {
        Some(vertex) => LinkVerdict::Unmatched { vertex },
        None => LinkVerdict::Matched(
            matched
                .into_iter()
                .enumerate()
                .map(|(v, j)| (v, j.expect("all matched")))
                .collect(),
        ),
    }
}

fn augment(
    v: usize,
    fits: &[Vec<usize>],
    partner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &j in &fits[v] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        if partner[j].is_none() || augment(partner[j].unwrap(), fits, partner, visited) {
            partner[j] = Some(v);
            return true;
        }
    }
    false
}
