use std::collections::{BTreeMap, VecDeque};

use super::{BipartiteGraph, Colour, VertexRef};

/// A vertex bijection between two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    map: BTreeMap<VertexRef, VertexRef>,
}

impl Isomorphism {
    pub fn get(&self, v: &VertexRef) -> Option<&VertexRef> {
        self.map.get(v)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&VertexRef, &VertexRef)> + '_ {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn inverse(&self) -> Isomorphism {
        Isomorphism {
            map: self.map.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// `other ∘ self`: first apply `self`, then `other`. Vertices that
    /// `other` does not map are dropped.
    pub fn then(&self, other: &Isomorphism) -> Isomorphism {
        Isomorphism {
            map: self
                .map
                .iter()
                .filter_map(|(a, b)| other.get(b).map(|c| (a.clone(), c.clone())))
                .collect(),
        }
    }

    pub fn preserves_colours(&self) -> bool {
        self.map.iter().all(|(a, b)| a.colour == b.colour)
    }

    /// True if this map is a bijection from `g`'s vertices onto `h`'s that
    /// carries the edge multiset of `g` onto that of `h`.
    pub fn is_isomorphism(&self, g: &BipartiteGraph, h: &BipartiteGraph) -> bool {
        if self.map.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
            return false;
        }
        let n = g.vertex_count();
        let gv: Vec<VertexRef> = (0..n).map(|i| g.vertex_at(i)).collect();
        if !gv.iter().all(|v| self.map.contains_key(v)) {
            return false;
        }
        let mut image: Vec<VertexRef> = self.map.values().cloned().collect();
        image.sort();
        image.dedup();
        if image.len() != n || !image.iter().all(|v| h.contains(v)) {
            return false;
        }
        let key = |a: VertexRef, b: VertexRef| if a <= b { (a, b) } else { (b, a) };
        let mut mapped: Vec<_> = g
            .edges()
            .map(|(w, b)| {
                let w = self.map[&VertexRef { colour: Colour::White, label: w.clone() }].clone();
                let b = self.map[&VertexRef { colour: Colour::Black, label: b.clone() }].clone();
                key(w, b)
            })
            .collect();
        let mut target: Vec<_> = h
            .edges()
            .map(|(w, b)| {
                key(
                    VertexRef { colour: Colour::White, label: w.clone() },
                    VertexRef { colour: Colour::Black, label: b.clone() },
                )
            })
            .collect();
        mapped.sort();
        target.sort();
        mapped == target
    }
}

struct Dense {
    colour: Vec<Colour>,
    degree: Vec<usize>,
    /// Edge multiplicity between every pair of vertices.
    mult: Vec<Vec<usize>>,
    adj: Vec<Vec<usize>>,
}

impl Dense {
    fn of(g: &BipartiteGraph) -> Dense {
        let n = g.vertex_count();
        let w = g.whites().len();
        let mut mult = vec![vec![0; n]; n];
        for &(a, b) in g.edge_indices() {
            mult[a][w + b] += 1;
            mult[w + b][a] += 1;
        }
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| mult[u][v] > 0).collect())
            .collect();
        Dense {
            colour: (0..n)
                .map(|i| if i < w { Colour::White } else { Colour::Black })
                .collect(),
            degree: (0..n).map(|u| mult[u].iter().sum()).collect(),
            mult,
            adj,
        }
    }

    fn signature(&self, respect: bool) -> Vec<(Option<Colour>, usize)> {
        let mut s: Vec<_> = (0..self.degree.len())
            .map(|u| (respect.then_some(self.colour[u]), self.degree[u]))
            .collect();
        s.sort();
        s
    }
}

/// Searches for an isomorphism `g -> h`. With `respect_colours` whites must
/// go to whites; otherwise colour classes may be swapped (per component).
///
/// Backtracking over `g`'s vertices in breadth-first order; each candidate
/// must agree in degree, colour and edge multiplicity with every vertex
/// already placed.
pub fn are_isomorphic(
    g: &BipartiteGraph,
    h: &BipartiteGraph,
    respect_colours: bool,
) -> Option<Isomorphism> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (dg, dh) = (Dense::of(g), Dense::of(h));
    if dg.signature(respect_colours) != dh.signature(respect_colours) {
        return None;
    }
    let n = g.vertex_count();

    // BFS order over g, each component rooted at a vertex of maximum degree.
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut seen = vec![false; n];
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&u| std::cmp::Reverse(dg.degree[u]));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &dg.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    anchor[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(0, &order, &anchor, &dg, &dh, respect_colours, &mut image, &mut used) {
        return None;
    }
    Some(Isomorphism {
        map: (0..n).map(|u| (g.vertex_at(u), h.vertex_at(image[u]))).collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn extend(
    pos: usize,
    order: &[usize],
    anchor: &[Option<usize>],
    dg: &Dense,
    dh: &Dense,
    respect: bool,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(pos) else {
        return true;
    };
    let candidates: Vec<usize> = match anchor[u] {
        Some(a) => dh.adj[image[a]].clone(),
        None => (0..dh.degree.len()).collect(),
    };
    for c in candidates {
        if used[c]
            || dh.degree[c] != dg.degree[u]
            || (respect && dh.colour[c] != dg.colour[u])
            || dh.mult[c][c] != dg.mult[u][u]
        {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&p| dg.mult[u][p] == dh.mult[c][image[p]]);
        if !consistent {
            continue;
        }
        image[u] = c;
        used[c] = true;
        if extend(pos + 1, order, anchor, dg, dh, respect, image, used) {
            return true;
        }
        used[c] = false;
        image[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::standard::*;
    use super::*;
    use crate::label::Label;
    use proptest::prelude::*;

    /// Applies a permutation to each part's labels.
    fn permuted(g: &BipartiteGraph, pw: &[usize], pb: &[usize]) -> BipartiteGraph {
        let whites: Vec<Label> = pw.iter().map(|&i| g.whites()[i].clone()).collect();
        let blacks: Vec<Label> = pb.iter().map(|&i| g.blacks()[i].clone()).collect();
        // relabel: old white i becomes whites[i]
        let edges = g
            .edge_indices()
            .iter()
            .map(|&(w, b)| (whites[w].clone(), blacks[b].clone()))
            .collect();
        let mut sorted_w = whites.clone();
        sorted_w.sort();
        let mut sorted_b = blacks.clone();
        sorted_b.sort();
        BipartiteGraph::new("p", sorted_w, sorted_b, edges).unwrap()
    }

    #[test]
    fn heawood_is_isomorphic_to_its_dual() {
        let h = heawood();
        let iso = are_isomorphic(&h, &h.dual(), false).unwrap();
        assert!(iso.is_isomorphism(&h, &h.dual()));
        // The Fano plane is self-dual, so colours can be respected as well.
        assert!(are_isomorphic(&h, &h.dual(), true).is_some());
    }

    #[test]
    fn colour_respect_matters() {
        let p = path_y1_x1_y2();
        assert!(are_isomorphic(&p, &p.dual(), true).is_none());
        assert!(are_isomorphic(&p, &p.dual(), false).is_some());
        let k = complete_bipartite(1, 2);
        let k2 = complete_bipartite(2, 1);
        assert!(are_isomorphic(&k, &k2, true).is_none());
        assert!(are_isomorphic(&k, &k2, false).is_some());
    }

    #[test]
    fn distinguishes_multiplicities() {
        let c2 = even_cycle(1);
        let e = single_edge();
        assert!(are_isomorphic(&c2, &e, false).is_none());
        assert!(are_isomorphic(&even_cycle(4), &complete_bipartite(2, 2), true).is_none());
        assert!(are_isomorphic(&heawood(), &even_cycle(7), true).is_none());
    }

    #[test]
    fn inverse_and_composition() {
        let h = heawood();
        let a = are_isomorphic(&h, &h.dual(), true).unwrap();
        let b = a.inverse();
        assert!(b.is_isomorphism(&h.dual(), &h));
        let id = a.then(&b);
        assert!(id.pairs().all(|(x, y)| x == y));
    }

    fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn relabelled_heawood_is_isomorphic(pw in perm(7), pb in perm(7)) {
            let h = heawood();
            let p = permuted(&h, &pw, &pb);
            let iso = are_isomorphic(&h, &p, true).unwrap();
            prop_assert!(iso.is_isomorphism(&h, &p));
            prop_assert!(iso.preserves_colours());
            prop_assert!(iso.inverse().is_isomorphism(&p, &h));
        }

        #[test]
        fn relabelled_cycles_are_isomorphic(m in 1usize..8, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pw: Vec<usize> = (0..m).collect();
            let mut pb = pw.clone();
            pw.shuffle(&mut rng);
            pb.shuffle(&mut rng);
            let c = even_cycle(m);
            let p = permuted(&c, &pw, &pb);
            let iso = are_isomorphic(&c, &p, true).unwrap();
            prop_assert!(iso.is_isomorphism(&c, &p));
        }
    }
}
