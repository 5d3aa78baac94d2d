use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;

use super::PeriodicError;
use crate::complex::{ComplexError, Direction, FacePolygon, Polyhedron, Side};
use crate::label::Label;
use crate::presentation::PolygonalPresentation;
use crate::wicks::{inverse_word, CyclicWord, SignedLetter};

/// A vertex of the x-line where two x-edges enter and two y-edges leave.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StripState {
    /// Number of x-edges from the start of the walk.
    pub position: usize,
    /// `(from the left, from the right)`.
    pub entering: (Label, Label),
    /// `(upwards, downwards)`.
    pub leaving: (Label, Label),
}

impl StripState {
    /// The x-letter crossed next when walking right.
    pub fn x_letter(&self) -> &Label {
        &self.entering.1
    }

    fn configuration(&self) -> (Label, Label, Label, Label) {
        (
            self.entering.0.clone(),
            self.entering.1.clone(),
            self.leaving.0.clone(),
            self.leaving.1.clone(),
        )
    }
}

impl fmt::Display for StripState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "@{}: in {} {}, out {} {}",
            self.position, self.entering.0, self.entering.1, self.leaving.0, self.leaving.1
        )
    }
}

/// Roles of the letters of a presentation whose words read `x y u v` with
/// `u` determined by `x`.
struct Shape {
    xs: BTreeSet<Label>,
    ys: BTreeSet<Label>,
    to_u: BTreeMap<Label, Label>,
    /// The letter following each cyclically consecutive pair.
    next: BTreeMap<(Label, Label), Label>,
}

impl Shape {
    fn of(p: &PolygonalPresentation) -> Result<Shape, PeriodicError> {
        let report = p.verify_axioms().map_err(ComplexError::from)?;
        if !report.passed() {
            return Err(ComplexError::AxiomViolation(report).into());
        }
        let tuples: Vec<&[Label]> = p.tuples().collect();
        if tuples.is_empty() {
            return Err(PeriodicError::NotP2Shape("no words".into()));
        }
        if let Some(t) = tuples.iter().find(|t| t.len() != 4) {
            return Err(PeriodicError::NotP2Shape(format!(
                "word of length {}",
                t.len()
            )));
        }

        // Propagate positions mod 4 through shared letters; each connected
        // group of words starts from its first word read as given.
        let mut role: BTreeMap<&Label, (usize, usize)> = BTreeMap::new();
        let mut group_of = vec![None; tuples.len()];
        let mut groups = 0;
        loop {
            let mut progress = false;
            for (ti, t) in tuples.iter().enumerate() {
                if group_of[ti].is_some() {
                    continue;
                }
                let known = t
                    .iter()
                    .enumerate()
                    .find_map(|(i, l)| role.get(l).map(|&(g, r)| (g, (r + 4 - i) % 4)));
                if let Some((g, offset)) = known {
                    assign(&mut role, t, g, offset)?;
                    group_of[ti] = Some(g);
                    progress = true;
                }
            }
            if !progress {
                match group_of.iter().position(Option::is_none) {
                    Some(ti) => {
                        assign(&mut role, tuples[ti], groups, 0)?;
                        group_of[ti] = Some(groups);
                        groups += 1;
                    }
                    None => break,
                }
            }
        }

        // Within each group either the first or the second position plays x.
        let mut shift = vec![0; groups];
        let mut to_u = BTreeMap::new();
        for (g, s) in shift.iter_mut().enumerate() {
            let members: Vec<&[Label]> = (0..tuples.len())
                .filter(|&ti| group_of[ti] == Some(g))
                .map(|ti| tuples[ti])
                .collect();
            let found = [0, 1].into_iter().find_map(|cand| {
                let mut map = BTreeMap::new();
                for t in &members {
                    let i = (0..4)
                        .find(|&i| (role[&t[i]].1 + 4 - cand) % 4 == 0)
                        .expect("each position occurs once");
                    let (x, u) = (&t[i], &t[(i + 2) % 4]);
                    if map.insert(x.clone(), u.clone()).is_some_and(|old| &old != u) {
                        return None;
                    }
                }
                Some((cand, map))
            });
            match found {
                Some((cand, map)) => {
                    *s = cand;
                    to_u.extend(map);
                }
                None => {
                    return Err(PeriodicError::NotP2Shape(
                        "the letter opposite x is not determined by x".into(),
                    ))
                }
            }
        }

        let mut xs = BTreeSet::new();
        let mut ys = BTreeSet::new();
        for (l, &(g, r)) in &role {
            match (r + 4 - shift[g]) % 4 {
                0 => xs.insert((*l).clone()),
                1 => ys.insert((*l).clone()),
                _ => false,
            };
        }
        let mut next = BTreeMap::new();
        for t in &tuples {
            for i in 0..4 {
                next.insert(
                    (t[i].clone(), t[(i + 1) % 4].clone()),
                    t[(i + 2) % 4].clone(),
                );
            }
        }
        Ok(Shape { xs, ys, to_u, next })
    }

    fn after(&self, a: &Label, b: &Label) -> Option<&Label> {
        self.next.get(&(a.clone(), b.clone()))
    }

    fn has(&self, a: &Label, b: &Label) -> bool {
        self.after(a, b).is_some()
    }

    /// Least x-letter other than `avoid` satisfying `ok`.
    fn choose_x(&self, avoid: &Label, ok: impl Fn(&Label) -> bool) -> Option<Label> {
        self.xs.iter().find(|x| *x != avoid && ok(x)).cloned()
    }

    /// The vertical edge entering the out-vertex to the right of an
    /// in-vertex, on the side of `y`.
    fn opposite(&self, x: &Label, y: &Label) -> Result<Label, PeriodicError> {
        self.after(x, y)
            .and_then(|u| self.after(y, u))
            .cloned()
            .ok_or_else(|| PeriodicError::NoExtension(format!("no square at corner {x} {y}")))
    }

    /// Crosses the out-vertex to the right of `s` and the next x-edge.
    /// Every vertex on the way must see four distinct ends, i.e. a square
    /// cycle in its link, as it does in a flat plane.
    fn step(&self, s: &StripState) -> Result<StripState, PeriodicError> {
        let (_, xr) = &s.entering;
        let (yu, yd) = &s.leaving;
        let v_top = self.opposite(xr, yu)?;
        let v_bot = self.opposite(xr, yd)?;
        if v_top == v_bot {
            return Err(PeriodicError::NoExtension(format!(
                "both squares right of {xr} end in {v_top}"
            )));
        }
        let x1 = self
            .choose_x(xr, |x| self.has(&v_top, x) && self.has(&v_bot, x))
            .ok_or_else(|| {
                PeriodicError::NoExtension(format!(
                    "no x-edge other than {xr} after both {v_top} and {v_bot}"
                ))
            })?;
        let yu1 = self.after(&v_top, &x1).expect("chosen with this corner").clone();
        let yd1 = self.after(&v_bot, &x1).expect("chosen with this corner").clone();
        if yu1 == yd1 {
            return Err(PeriodicError::NoExtension(format!(
                "both squares right of {x1} continue with {yu1}"
            )));
        }
        let x2 = self
            .choose_x(&x1, |x| self.has(x, &yu1) && self.has(x, &yd1))
            .ok_or_else(|| {
                PeriodicError::NoExtension(format!(
                    "no x-edge other than {x1} before both {yu1} and {yd1}"
                ))
            })?;
        Ok(StripState {
            position: s.position + 2,
            entering: (x1, x2),
            leaving: (yu1, yd1),
        })
    }
}

fn assign<'a>(
    role: &mut BTreeMap<&'a Label, (usize, usize)>,
    t: &'a [Label],
    group: usize,
    offset: usize,
) -> Result<(), PeriodicError> {
    for (i, l) in t.iter().enumerate() {
        let r = (group, (i + offset) % 4);
        if let Some(old) = role.insert(l, r) {
            if old != r {
                return Err(PeriodicError::NotP2Shape(format!(
                    "{l} occurs in two different positions"
                )));
            }
        }
    }
    Ok(())
}

/// The least flat start for [`find_rectangle`]: an in-vertex with two
/// distinct x-edges and two distinct y-edges whose four corners are all
/// squares of the presentation.
pub fn strip_start(p: &PolygonalPresentation) -> Result<StripState, PeriodicError> {
    let shape = Shape::of(p)?;
    for xr in &shape.xs {
        let ys: Vec<&Label> = shape.ys.iter().filter(|y| shape.has(xr, y)).collect();
        for (i, yu) in ys.iter().enumerate() {
            for yd in &ys[i + 1..] {
                if let Some(xl) = shape.choose_x(xr, |x| shape.has(x, yu) && shape.has(x, yd)) {
                    return Ok(StripState {
                        position: 0,
                        entering: (xl, xr.clone()),
                        leaving: ((*yu).clone(), (*yd).clone()),
                    });
                }
            }
        }
    }
    Err(PeriodicError::NoExtension(
        "no in-vertex has a square cycle in its link".into(),
    ))
}

/// Walks right along the x-line from `start` until an in-vertex repeats the
/// configuration of an earlier one, and returns the rectangle between them.
/// Fails with `NoExtension` as soon as a vertex on the way cannot lie in a
/// flat plane.
///
/// There are at most `(#x · #y)²` configurations, so the walk takes at most
/// that many steps.
pub fn find_rectangle(
    p: &PolygonalPresentation,
    start: &StripState,
) -> Result<RectangleRelator, PeriodicError> {
    let shape = Shape::of(p)?;
    let (xl, xr) = &start.entering;
    let (yu, yd) = &start.leaving;
    if xl == xr || yu == yd {
        return Err(PeriodicError::NoExtension(
            "start needs two distinct x-edges and two distinct y-edges".into(),
        ));
    }
    for (x, y) in [(xl, yu), (xl, yd), (xr, yu), (xr, yd)] {
        if !shape.has(x, y) {
            return Err(PeriodicError::NoExtension(format!(
                "start has no square at corner {x} {y}"
            )));
        }
    }
    let bound = (shape.xs.len() * shape.ys.len()).pow(2);
    let mut states = vec![StripState {
        position: 0,
        ..start.clone()
    }];
    let mut seen = BTreeMap::new();
    let first = loop {
        let cur = states.last().expect("nonempty");
        if let Some(&i) = seen.get(&cur.configuration()) {
            break i;
        }
        assert!(
            seen.len() < bound.max(1),
            "more than (#x #y)^2 distinct configurations"
        );
        seen.insert(cur.configuration(), states.len() - 1);
        let next = shape.step(cur)?;
        states.push(next);
    };
    let steps = states.len() - 1;
    assert!(steps <= bound, "walk exceeded the pigeonhole bound");
    let states = states.split_off(first);

    let mut u = Vec::new();
    for pair in states.windows(2) {
        u.push(SignedLetter::minus(pair[0].entering.1.clone()));
        u.push(SignedLetter::plus(pair[1].entering.0.clone()));
    }
    let w = u
        .iter()
        .map(|l| SignedLetter {
            base: shape.to_u[&l.base].clone(),
            sign: l.sign.flipped(),
        })
        .collect();
    let v = &states[0];
    Ok(RectangleRelator {
        y1: v.leaving.0.clone(),
        y2: v.leaving.1.clone(),
        states,
        steps,
        bound,
        u,
        w,
    })
}

/// The rectangle between two in-vertices `v`, `w` of the same
/// configuration, cut out of the strip of squares along the x-line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleRelator {
    states: Vec<StripState>,
    steps: usize,
    bound: usize,
    u: Vec<SignedLetter>,
    w: Vec<SignedLetter>,
    y1: Label,
    y2: Label,
}

impl RectangleRelator {
    /// In-vertices from `v` to `w` inclusive.
    pub fn states(&self) -> &[StripState] {
        &self.states
    }

    /// Steps walked before the repeat was found.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// `(#x · #y)²`.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Number of x-edges between `v` and `w`.
    pub fn s(&self) -> usize {
        self.u.len()
    }

    /// The x-line between `v` and `w`, read left to right.
    pub fn u(&self) -> &[SignedLetter] {
        &self.u
    }

    /// The top (and bottom) row of the rectangle, read left to right.
    pub fn w(&self) -> &[SignedLetter] {
        &self.w
    }

    pub fn y1(&self) -> &Label {
        &self.y1
    }

    pub fn y2(&self) -> &Label {
        &self.y2
    }

    /// `y2' y1 W' y1' y2 W`: up the right side, along the top, down the left
    /// side, along the bottom.
    pub fn boundary(&self) -> Vec<SignedLetter> {
        let (a, b) = self.generators();
        let mut out = a.clone();
        out.extend(b.iter().cloned());
        out.extend(inverse_word(&a));
        out.extend(inverse_word(&b));
        out
    }

    pub fn boundary_word(&self) -> CyclicWord {
        CyclicWord::new(self.boundary()).expect("nonempty")
    }

    /// `(a, b) = (y2' y1, W')`, so that the boundary is `a b a' b'`.
    pub fn generators(&self) -> (Vec<SignedLetter>, Vec<SignedLetter>) {
        (
            vec![
                SignedLetter::minus(self.y2.clone()),
                SignedLetter::plus(self.y1.clone()),
            ],
            inverse_word(&self.w),
        )
    }

    /// Every letter of the boundary occurs exactly twice.
    pub fn is_quadratic(&self) -> bool {
        let mut count: BTreeMap<&Label, usize> = BTreeMap::new();
        let b = self.boundary();
        for l in &b {
            *count.entry(&l.base).or_default() += 1;
        }
        count.values().all(|&c| c == 2)
    }

    /// The boundary with a fresh letter for each side of the rectangle:
    /// `q' p T' p' q T` where `T = t0 t1 ...` carries the signs of `W`.
    pub fn positional_boundary(&self) -> Vec<SignedLetter> {
        let t: Vec<SignedLetter> = self
            .w
            .iter()
            .enumerate()
            .map(|(i, l)| SignedLetter {
                base: Label::new(format!("t{i}")),
                sign: l.sign,
            })
            .collect();
        let mut out = vec![
            SignedLetter::minus(Label::new("q")),
            SignedLetter::plus(Label::new("p")),
        ];
        out.extend(inverse_word(&t));
        out.extend([
            SignedLetter::minus(Label::new("p")),
            SignedLetter::plus(Label::new("q")),
        ]);
        out.extend(t);
        out
    }

    /// Angles along [`boundary`](Self::boundary) in multiples of π: `π/2`
    /// at the four corners of the rectangle, `π` elsewhere.
    pub fn boundary_angles(&self) -> Vec<Ratio<i64>> {
        let s = self.s();
        let corners = [1, s + 1, s + 3, 2 * s + 3];
        (0..2 * s + 4)
            .map(|i| {
                if corners.contains(&i) {
                    Ratio::new(1, 2)
                } else {
                    Ratio::from_integer(1)
                }
            })
            .collect()
    }

    /// The torus obtained by identifying opposite sides of the rectangle,
    /// as `2s` squares. Middle x-edges are `L{i}`, top/bottom edges
    /// `U{i}`, vertical edges above and below the x-line `A{i}` and `D{i}`.
    pub fn tessellation(&self) -> Polyhedron {
        let s = self.s();
        let side = |name: &str, i: usize, forward: bool| Side {
            label: Label::new(format!("{name}{}", i % s)),
            direction: if forward {
                Direction::Forward
            } else {
                Direction::Backward
            },
        };
        // x-edges at even positions point left, top edges above them point
        // right; verticals at in-vertices (even) leave the x-line.
        let even = |i: usize| i % 2 == 0;
        let mut faces = Vec::new();
        for i in 0..s {
            faces.push(
                FacePolygon::new(vec![
                    side("L", i, !even(i)),
                    side("A", i + 1, even(i + 1)),
                    side("U", i, !even(i)),
                    side("A", i, !even(i)),
                ])
                .expect("nonempty"),
            );
            faces.push(
                FacePolygon::new(vec![
                    side("U", i, even(i)),
                    side("D", i + 1, !even(i + 1)),
                    side("L", i, even(i)),
                    side("D", i, even(i)),
                ])
                .expect("nonempty"),
            );
        }
        Polyhedron::from_faces(faces)
    }
}
