use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::bigraph::standard::*;
use crate::bigraph::GraphSet;
use crate::presentation::construct_theorem1;
use crate::wicks::parse_word;

fn word(s: &str) -> Polyhedron {
    Polyhedron::build_from_word(&parse_word(s).unwrap()).unwrap()
}

fn theorem1(k: usize, g: BipartiteGraph) -> PolygonalPresentation {
    let sets: Vec<GraphSet> = (0..k).map(|_| GraphSet::new(vec![g.clone()]).unwrap()).collect();
    construct_theorem1(&sets, None).unwrap()
}

/// Vertex classes by repeated merging of end sets until nothing changes.
fn vertex_classes_by_merging(k: &Polyhedron) -> usize {
    let mut classes: Vec<BTreeSet<End>> = Vec::new();
    for c in k.corners() {
        let (a, d) = k.corner_ends(c);
        classes.push([a, d].into_iter().collect());
    }
    loop {
        let mut merged = false;
        'outer: for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                if !classes[i].is_disjoint(&classes[j]) {
                    let other = classes.swap_remove(j);
                    classes[i].extend(other);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            return classes.len();
        }
    }
}

#[test]
fn torus_square() {
    let k = word("a b a' b'");
    assert_eq!(k.cell_counts(), (1, 2, 1));
    assert_eq!(k.euler_characteristic(), 0);
    let link = k.link_at(0).unwrap();
    assert_eq!((link.vertex_count(), link.edge_count()), (4, 4));
    assert!(link.is_cycle());
    assert!(k.verify_links(&[complete_bipartite(2, 2)]).passed());
    assert_eq!(
        k.check_mn().unwrap(),
        MnReport {
            m: Girth::Finite(4),
            n: 4,
            satisfies: true
        }
    );
    assert_eq!(k.link_at(1), Err(ComplexError::UnknownVertex(1)));
}

#[test]
fn doubled_letter_gives_double_edge_link() {
    let k = word("a a");
    assert_eq!(k.cell_counts(), (1, 1, 1));
    let link = k.link_at(0).unwrap();
    assert!(link.bipartite().unwrap().has_multi_edges());
    assert_eq!(
        k.verify_links(&[complete_bipartite(2, 2)]),
        LinkVerdict::Unmatched { vertex: 0 }
    );
    let mn = k.check_mn().unwrap();
    assert_eq!((mn.m, mn.n, mn.satisfies), (Girth::Finite(2), 2, false));
}

#[test]
fn word_must_be_quadratic() {
    assert_eq!(
        Polyhedron::build_from_word(&parse_word("a b a'").unwrap()),
        Err(ComplexError::NotQuadratic {
            letter: Label::new("b"),
            count: 1
        })
    );
    assert_eq!(
        Polyhedron::build_from_word(&[]),
        Err(ComplexError::EmptyFace)
    );
}

#[test]
fn two_square_sets() {
    let p = theorem1(2, complete_bipartite(2, 2));
    let k = Polyhedron::build_from_presentation(&p).unwrap();
    assert_eq!(k.cell_counts(), (4, 8, 4));
    assert_eq!(vertex_classes_by_merging(&k), 4);
    assert!(k.verify_links(p.graphs()).passed());
    let k22 = complete_bipartite(2, 2);
    let expected = [k22.clone(), k22.clone(), k22.dual(), k22.dual()];
    assert!(k.verify_links(&expected).passed());
    for link in k.links() {
        let g = link.bipartite().unwrap();
        assert!(
            crate::bigraph::are_isomorphic(g, &k22, true).is_some()
                || crate::bigraph::are_isomorphic(g, &k22.dual(), true).is_some()
        );
    }
    assert_eq!(remark_counts(&p), (4, 64, 16));
}

#[test]
fn presentation_links_keep_presentation_names() {
    let p = theorem1(2, complete_bipartite(2, 2));
    let k = Polyhedron::build_from_presentation(&p).unwrap();
    let names: BTreeSet<String> = k
        .links()
        .iter()
        .flat_map(|l| {
            let g = l.bipartite().unwrap();
            g.whites().iter().chain(g.blacks()).map(|x| x.to_string()).collect::<Vec<_>>()
        })
        .collect();
    assert!(names.contains("x1^1"));
    assert!(names.contains("y2^2"));
}

#[test]
fn digon_presentation() {
    let p = theorem1(1, complete_bipartite(2, 2));
    let k = Polyhedron::build_from_presentation(&p).unwrap();
    assert_eq!(k.face_count(), 4);
    assert!(k.faces().iter().all(|f| f.len() == 2));
    assert!(k.verify_links(p.graphs()).passed());
}

#[test]
fn three_square_sets_satisfy_mn() {
    let p = theorem1(3, complete_bipartite(2, 2));
    let k = Polyhedron::build_from_presentation(&p).unwrap();
    let mn = k.check_mn().unwrap();
    assert_eq!((mn.m, mn.n, mn.satisfies), (Girth::Finite(4), 6, true));
}

#[test]
fn heawood_links_have_girth_six() {
    let p = theorem1(2, heawood());
    let k = Polyhedron::build_from_presentation(&p).unwrap();
    assert!(k.verify_links(p.graphs()).passed());
    let mn = k.check_mn().unwrap();
    assert_eq!((mn.m, mn.n), (Girth::Finite(6), 4));
}

#[test]
fn empty_presentation_gives_empty_complex() {
    let p = PolygonalPresentation::new(vec![], Default::default(), []).unwrap();
    let k = Polyhedron::build_from_presentation(&p).unwrap();
    assert_eq!(k.cell_counts(), (0, 0, 0));
    assert_eq!(k.check_mn(), Err(ComplexError::Empty));
}

#[test]
fn axiom_failures_are_rejected() {
    let g = complete_bipartite(1, 1);
    let lambda =
        crate::presentation::BasicBijection::new([(Label::new("x1"), Label::new("y1"))]).unwrap();
    let p = PolygonalPresentation::new(vec![g], lambda, []).unwrap();
    assert!(matches!(
        Polyhedron::build_from_presentation(&p),
        Err(ComplexError::AxiomViolation(_))
    ));
}

#[test]
fn dump_lists_faces_vertices_and_links() {
    let text = word("a b a' b'").dump();
    assert_eq!(
        text,
        "face 0: a b a' b'\nvertices\nv0: a_out a_in b_out b_in\nlinks\ngraph v0\nb_out: a_in a_out\nb_in: a_in a_out\n"
    );
}

/// Random single-face words in which every letter appears twice, signs free.
fn quadratic_word() -> impl Strategy<Value = Vec<SignedLetter>> {
    (1usize..6).prop_flat_map(|e| {
        let letters: Vec<usize> = (0..e).flat_map(|i| [i, i]).collect();
        (
            Just(letters).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), 2 * e),
        )
            .prop_map(|(order, signs)| {
                order
                    .into_iter()
                    .zip(signs)
                    .map(|(i, s)| {
                        let base = Label::new(format!("e{i}"));
                        if s {
                            SignedLetter::plus(base)
                        } else {
                            SignedLetter::minus(base)
                        }
                    })
                    .collect()
            })
    })
}

proptest! {
    #[test]
    fn corner_and_end_counts(w in quadratic_word()) {
        let k = Polyhedron::build_from_word(&w).unwrap();
        let links = k.links();
        let corners: usize = links.iter().map(LinkGraph::edge_count).sum();
        let ends: usize = links.iter().map(LinkGraph::vertex_count).sum();
        prop_assert_eq!(corners, w.len());
        prop_assert_eq!(ends, 2 * k.edge_count());
        prop_assert_eq!(k.vertex_count(), vertex_classes_by_merging(&k));
        prop_assert!(links.iter().all(LinkGraph::is_connected));
    }

    #[test]
    fn orientable_words_have_integral_genus(w in quadratic_word()) {
        let balanced = w.iter().all(|l| w.iter().any(|m| l.is_inverse_of(m)));
        let k = Polyhedron::build_from_word(&w).unwrap();
        let defect = 2 - k.euler_characteristic();
        if balanced {
            prop_assert!(defect >= 0 && defect % 2 == 0);
        }
    }

    #[test]
    fn theorem1_links_match_inputs(k in 1usize..4, seed in proptest::option::of(any::<u64>()), which in 0usize..4) {
        let g = [complete_bipartite(2, 2), even_cycle(3), heawood(), complete_bipartite(3, 3)][which].clone();
        let sets: Vec<GraphSet> = (0..k).map(|_| GraphSet::new(vec![g.clone()]).unwrap()).collect();
        let p = construct_theorem1(&sets, seed).unwrap();
        let poly = Polyhedron::build_from_presentation(&p).unwrap();
        prop_assert!(poly.verify_links(p.graphs()).passed());
        let mut expected = Vec::new();
        for _ in 0..k {
            expected.push(g.clone());
            expected.push(g.dual());
        }
        prop_assert!(poly.verify_links(&expected).passed());
    }
}
