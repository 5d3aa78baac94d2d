//! Small named graphs. Whites are `y1, y2, ...`, blacks `x1, x2, ...`.

use super::BipartiteGraph;
use crate::label::Label;

fn ys(n: usize) -> Vec<Label> {
    (1..=n).map(|i| Label::new(format!("y{i}"))).collect()
}

fn xs(n: usize) -> Vec<Label> {
    (1..=n).map(|i| Label::new(format!("x{i}"))).collect()
}

fn build(name: String, w: usize, b: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> BipartiteGraph {
    let (whites, blacks) = (ys(w), xs(b));
    let edges = edges
        .into_iter()
        .map(|(i, j)| (whites[i].clone(), blacks[j].clone()))
        .collect();
    BipartiteGraph::new(name, whites, blacks, edges).expect("well-formed standard graph")
}

/// `K_{w,b}` named `K{w}_{b}`.
pub fn complete_bipartite(w: usize, b: usize) -> BipartiteGraph {
    build(
        format!("K{w}_{b}"),
        w,
        b,
        (0..w).flat_map(|i| (0..b).map(move |j| (i, j))),
    )
}

/// The cycle of length `2m`: `y_i` is joined to `x_i` and `x_{i+1}`.
/// For `m = 1` this is a double edge.
pub fn even_cycle(m: usize) -> BipartiteGraph {
    assert!(m >= 1);
    build(
        format!("C{}", 2 * m),
        m,
        m,
        (0..m).flat_map(|i| [(i, i), (i, (i + 1) % m)]),
    )
}

/// Point-line incidence graph of the Fano plane. Whites are lines
/// `{i, i+1, i+3} mod 7`, blacks are points.
pub fn heawood() -> BipartiteGraph {
    build(
        "heawood".into(),
        7,
        7,
        (0..7).flat_map(|i| [0, 1, 3].map(|d| (i, (i + d) % 7))),
    )
}

pub fn single_edge() -> BipartiteGraph {
    build("edge".into(), 1, 1, [(0, 0)])
}

/// `y1 - x1 - y2`.
pub fn path_y1_x1_y2() -> BipartiteGraph {
    build("path".into(), 2, 1, [(0, 0), (1, 0)])
}
