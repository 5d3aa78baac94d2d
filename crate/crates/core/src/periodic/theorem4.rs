use num_rational::Ratio;

use super::PeriodicError;
use crate::complex::{End, EndKind, FacePolygon, Polyhedron};
use crate::label::Label;
use crate::wicks::{CyclicWord, SignedLetter, WicksForm};

fn letter(base: &str, i: usize) -> SignedLetter {
    SignedLetter::plus(Label::new(format!("{base}{i}")))
}

/// `a1 b1 b2' a1' a2 b2 b3' a2' ... am bm b1' am'` for any `m >= 2`.
pub fn theorem4_boundary(m: usize) -> Result<Vec<SignedLetter>, PeriodicError> {
    if m < 2 {
        return Err(PeriodicError::BadParameter(format!("m = {m}; need m >= 2")));
    }
    Ok((1..=m)
        .flat_map(|i| {
            let next = i % m + 1;
            [
                letter("a", i),
                letter("b", i),
                letter("b", next).inverse(),
                letter("a", i).inverse(),
            ]
        })
        .collect())
}

/// The `2m` squares around the centre vertex: `ai bi ci di` and
/// `ai b(i+1) ci d(i+1)`, indices mod `m`. The centre is the head of every
/// `c` and the tail of every `d`.
pub fn theorem4_squares(m: usize) -> Result<Vec<FacePolygon>, PeriodicError> {
    if m < 2 {
        return Err(PeriodicError::BadParameter(format!("m = {m}; need m >= 2")));
    }
    let square = |i: usize, j: usize| {
        FacePolygon::from_word(&[
            letter("a", i),
            letter("b", j),
            letter("c", i),
            letter("d", j),
        ])
        .expect("nonempty")
    };
    Ok((1..=m)
        .flat_map(|i| [square(i, i), square(i, i % m + 1)])
        .collect())
}

/// The boundary word of `2m` squares with angle `π/m` meeting at one
/// vertex, for `m` in `{3, 4, 6, 8}`.
#[derive(Clone, Debug)]
pub struct Theorem4 {
    m: usize,
    w: WicksForm,
    letters: Vec<SignedLetter>,
    squares: Vec<FacePolygon>,
}

pub fn theorem4_word(m: usize) -> Result<Theorem4, PeriodicError> {
    if ![3, 4, 6, 8].contains(&m) {
        return Err(PeriodicError::BadParameter(format!(
            "m = {m}; need m in {{3, 4, 6, 8}}"
        )));
    }
    let letters = theorem4_boundary(m)?;
    let w = WicksForm::new(CyclicWord::new(letters.clone()).expect("nonempty"))?;
    assert_eq!(w.genus(), m - 1, "boundary word has genus m - 1");
    Ok(Theorem4 {
        m,
        w,
        letters,
        squares: theorem4_squares(m)?,
    })
}

impl Theorem4 {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn w(&self) -> &WicksForm {
        &self.w
    }

    /// `W` in the order it is built.
    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn genus(&self) -> usize {
        self.w.genus()
    }

    pub fn squares(&self) -> &[FacePolygon] {
        &self.squares
    }

    /// The closed surface glued from the squares.
    pub fn region_complex(&self) -> Polyhedron {
        Polyhedron::from_faces(self.squares.clone())
    }

    pub fn centre(&self, k: &Polyhedron) -> usize {
        k.vertex_of(&End {
            label: Label::new("c1"),
            kind: EndKind::Head,
        })
        .expect("c1 is an edge")
    }

    /// Angles of the region along `W`, in multiples of π: one square
    /// (`π/m`) after each `a` and `b'`, two squares (`2π/m`) after each
    /// `b` and `a'`.
    pub fn boundary_angles(&self) -> Vec<Ratio<i64>> {
        let m = self.m as i64;
        (0..self.letters.len())
            .map(|i| {
                if i % 2 == 0 {
                    Ratio::new(1, m)
                } else {
                    Ratio::new(2, m)
                }
            })
            .collect()
    }
}
