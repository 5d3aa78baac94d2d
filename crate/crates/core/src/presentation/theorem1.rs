use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BasicBijection, PolygonalPresentation, PresentationError};
use crate::bigraph::{are_compatible_seeded, BipartiteGraph, Compatibility, GraphSet};
use crate::label::Label;

/// Builds a presentation whose polyhedron has the graphs of the given sets,
/// and their duals, as links.
///
/// Whites of set `j` are renamed `x{m}^j` with `m` their position in the
/// degree-preserving matching across sets, blacks `y{l}^j` in order of first
/// appearance. For each white position the incident edges of every set are
/// matched in order of black label (or a seeded shuffle), and each edge
/// `(x_m^1, y^1)` of the first set yields the cyclic word
/// `x_m^1 y^1 x_m^2 y^2 ... x_m^k y^k`.
///
/// The graph list holds each renamed graph `{name}_j` and its dual
/// `{name}_j_dual` whose blacks `x_m^j` are renamed `x_m^{j+1}` (cyclically).
/// `λ` is the identity on labels. Graphs with multiple edges are rejected,
/// since a repeated edge would repeat a prefix.
pub fn construct_theorem1(
    sets: &[GraphSet],
    seed: Option<u64>,
) -> Result<PolygonalPresentation, PresentationError> {
    for g in sets.iter().flat_map(|s| s.graphs()) {
        if g.has_multi_edges() {
            return Err(PresentationError::MultiEdge(g.name().to_string()));
        }
    }
    let matching = match are_compatible_seeded(sets, seed)? {
        Compatibility::Compatible(m) => m,
        Compatibility::Incompatible(i) => return Err(PresentationError::IncompatibleSets(i)),
    };
    let k = sets.len();
    let n = matching.white_count();
    let mut rng = seed.map(|s| {
        let mut r = ChaCha8Rng::seed_from_u64(s);
        r.set_stream(1);
        r
    });

    let x = |m: usize, j: usize| Label::with_family(format!("x{}", m + 1), j as u32 + 1);

    let mut originals = Vec::new();
    let mut duals = Vec::new();
    // edge_rows[j][m]: new black labels incident to white position m of set j.
    let mut edge_rows: Vec<Vec<Vec<Label>>> = Vec::with_capacity(k);
    for (j, set) in sets.iter().enumerate() {
        let fam = j as u32 + 1;
        let next = (j + 1) % k;
        let mut white_name: BTreeMap<(usize, &Label), Label> = BTreeMap::new();
        for (m, w) in matching.order(j).iter().enumerate() {
            white_name.insert((w.graph, &w.label), x(m, j));
        }
        let mut black_name: BTreeMap<(usize, &Label), Label> = BTreeMap::new();
        let mut l = 0;
        for (gi, g) in set.graphs().iter().enumerate() {
            for b in g.blacks() {
                l += 1;
                black_name.insert((gi, b), Label::with_family(format!("y{l}"), fam));
            }
        }

        let mut rows = vec![Vec::new(); n];
        for (gi, g) in set.graphs().iter().enumerate() {
            let renamed = g
                .relabelled(
                    |w| white_name[&(gi, w)].clone(),
                    |b| black_name[&(gi, b)].clone(),
                )?
                .renamed(format!("{}_{fam}", g.name()))?;
            for (w, b) in renamed.edges() {
                let m = white_position(w);
                rows[m].push(b.clone());
            }
            let dual = renamed
                .dual()
                .relabelled(|y| y.clone(), |xm| x(white_position(xm), next))?
                .renamed(format!("{}_{fam}_dual", g.name()))?
                .sorted();
            originals.push(renamed.sorted());
            duals.push(dual);
        }
        for row in rows.iter_mut() {
            row.sort();
            if let Some(rng) = rng.as_mut() {
                row.shuffle(rng);
            }
        }
        edge_rows.push(rows);
    }

    let mut tuples = Vec::new();
    for m in 0..n {
        for r in 0..matching.degree(m) {
            let mut word = Vec::with_capacity(2 * k);
            for (j, rows) in edge_rows.iter().enumerate() {
                word.push(x(m, j));
                word.push(rows[m][r].clone());
            }
            tuples.push(word);
        }
    }

    let graphs: Vec<BipartiteGraph> = originals.into_iter().chain(duals).collect();
    let mut blacks: Vec<Label> = graphs.iter().flat_map(|g| g.blacks().iter().cloned()).collect();
    blacks.sort();
    blacks.dedup();
    let lambda = BasicBijection::new(blacks.into_iter().map(|b| (b.clone(), b)))?;
    PolygonalPresentation::new(graphs, lambda, tuples)
}

/// Zero-based `m` of a white label `x{m+1}^j`.
fn white_position(l: &Label) -> usize {
    l.base()[1..].parse::<usize>().expect("renamed white label") - 1
}
