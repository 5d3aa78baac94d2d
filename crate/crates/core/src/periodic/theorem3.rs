use super::PeriodicError;
use crate::complex::{End, EndKind, FacePolygon, Polyhedron};
use crate::label::Label;
use crate::wicks::{inverse_word, CyclicWord, SignedLetter, Substitution, WicksForm};

fn letter(base: &str, n: usize) -> SignedLetter {
    SignedLetter::plus(Label::with_family(base, n as u32))
}

/// `x^from y^from x^(from+1) ... x^k y^k`.
fn path(x: &str, y: &str, from: usize, k: usize) -> Vec<SignedLetter> {
    (from..=k)
        .flat_map(|n| [letter(x, n), letter(y, n)])
        .collect()
}

/// The four right-angled `2k`-gons around a vertex `v`, the boundary word
/// `W` of their union and a Wicks form `U` carried onto `W` by a
/// non-cancelling substitution.
///
/// Polygon letters are `xi^n, xs^n, yj^n, yt^n` for `n = 1..k`; the
/// polygons are `xi yj`, `xi yt`, `xs yj` and `xs yt`, each read
/// `x^1 y^1 x^2 y^2 ... x^k y^k`, so that `v` is the head of every `x^1`.
/// `U` is written in `ai, as, bj, bt`.
#[derive(Clone, Debug)]
pub struct Theorem3 {
    k: usize,
    u: WicksForm,
    u_letters: Vec<SignedLetter>,
    w: CyclicWord,
    substitution: Substitution,
    polygons: [Vec<SignedLetter>; 4],
}

pub fn theorem3_word(k: usize) -> Result<Theorem3, PeriodicError> {
    if k < 3 {
        return Err(PeriodicError::BadParameter(format!("k = {k}; need k >= 3")));
    }

    let mut u = path("ai", "bj", 2, k);
    let mut seg = vec![letter("ai", 2)];
    for n in 2..k {
        seg.push(letter("bt", n));
        seg.push(letter("ai", n + 1));
    }
    u.extend(inverse_word(&seg));
    for n in 2..k {
        u.push(letter("bt", n));
        u.push(letter("as", n + 1));
    }
    let mut seg = vec![letter("bj", 2)];
    for n in 3..=k {
        seg.push(letter("as", n));
        seg.push(letter("bj", n));
    }
    u.extend(inverse_word(&seg));

    let mut w = path("xi", "yj", 2, k);
    w.extend(inverse_word(&path("xi", "yt", 2, k)));
    w.extend(path("xs", "yt", 2, k));
    w.extend(inverse_word(&path("xs", "yj", 2, k)));

    let base = |b: &str, n: usize| Label::with_family(b, n as u32);
    let mut pairs = vec![
        (
            base("ai", 2),
            vec![letter("xs", 2).inverse(), letter("xi", 2)],
        ),
        (
            base("bj", k),
            vec![letter("yj", k), letter("yt", k).inverse()],
        ),
    ];
    for n in 3..=k {
        pairs.push((base("ai", n), vec![letter("xi", n)]));
        pairs.push((base("as", n), vec![letter("xs", n)]));
    }
    for n in 2..k {
        pairs.push((base("bj", n), vec![letter("yj", n)]));
        pairs.push((base("bt", n), vec![letter("yt", n)]));
    }
    let substitution = Substitution::new(pairs)?;

    let u_word = CyclicWord::new(u.clone()).expect("nonempty");
    let w = CyclicWord::new(w).expect("nonempty");
    assert_eq!(substitution.apply(&u_word)?, w, "substitution carries U onto W");

    Ok(Theorem3 {
        k,
        u: WicksForm::new(u_word)?,
        u_letters: u,
        w,
        substitution,
        polygons: [
            path("xi", "yj", 1, k),
            path("xi", "yt", 1, k),
            path("xs", "yj", 1, k),
            path("xs", "yt", 1, k),
        ],
    })
}

impl Theorem3 {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &WicksForm {
        &self.u
    }

    /// `U` in the order it is built, before rotation to canonical form.
    pub fn u_letters(&self) -> &[SignedLetter] {
        &self.u_letters
    }

    pub fn w(&self) -> &CyclicWord {
        &self.w
    }

    pub fn substitution(&self) -> &Substitution {
        &self.substitution
    }

    pub fn polygons(&self) -> &[Vec<SignedLetter>; 4] {
        &self.polygons
    }

    /// Genus of the surface glued from `U`.
    pub fn genus(&self) -> usize {
        self.u.genus()
    }

    /// `2k - 4`, the genus this family is meant to reach.
    pub fn target_genus(&self) -> usize {
        2 * self.k - 4
    }

    /// `(vertices, edges)` of the graph of `U` on its surface.
    pub fn u_counts(&self) -> (usize, usize) {
        crate::wicks::surface_counts(self.u.word().letters()).expect("U is quadratic")
    }

    /// The closed surface glued from the four polygons.
    pub fn region_complex(&self) -> Polyhedron {
        Polyhedron::from_faces(
            self.polygons
                .iter()
                .map(|p| FacePolygon::from_word(p).expect("nonempty"))
                .collect(),
        )
    }

    /// The vertex of [`region_complex`](Self::region_complex) where all four
    /// polygons meet.
    pub fn centre(&self, k: &Polyhedron) -> usize {
        k.vertex_of(&End {
            label: Label::with_family("xi", 1),
            kind: EndKind::Head,
        })
        .expect("xi^1 is an edge")
    }
}
