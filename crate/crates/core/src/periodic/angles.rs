use num_rational::Ratio;

use super::PeriodicError;
use crate::complex::{Corner, Polyhedron};
use crate::wicks::SignedLetter;

/// Angle sums at every vertex of a glued complex, in multiples of π.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleCertificate {
    pub sums: Vec<Ratio<i64>>,
}

impl AngleCertificate {
    /// Every vertex has angle sum exactly 2π.
    pub fn passed(&self) -> bool {
        !self.sums.is_empty() && self.sums.iter().all(|s| *s == Ratio::from_integer(2))
    }

    pub fn failing_vertices(&self) -> Vec<usize> {
        (0..self.sums.len())
            .filter(|&v| self.sums[v] != Ratio::from_integer(2))
            .collect()
    }
}

/// Sums `angle(c)` over the corners at each vertex of `k`.
pub fn complex_angle_certificate(
    k: &Polyhedron,
    angle: impl Fn(Corner) -> Ratio<i64>,
) -> AngleCertificate {
    AngleCertificate {
        sums: (0..k.vertex_count())
            .map(|v| k.corners_at(v).into_iter().map(&angle).sum())
            .collect(),
    }
}

/// Glues the quadratic word `w` and gives every corner `corner_angle` (a
/// multiple of π).
pub fn angle_sum_certificate(
    w: &[SignedLetter],
    corner_angle: Ratio<i64>,
) -> Result<AngleCertificate, PeriodicError> {
    angle_sum_certificate_per_corner(w, &vec![corner_angle; w.len()])
}

/// As [`angle_sum_certificate`], with `angles[i]` the angle between
/// letters `i` and `i + 1`.
pub fn angle_sum_certificate_per_corner(
    w: &[SignedLetter],
    angles: &[Ratio<i64>],
) -> Result<AngleCertificate, PeriodicError> {
    if angles.len() != w.len() {
        return Err(PeriodicError::BadParameter(format!(
            "{} angles for a word of length {}",
            angles.len(),
            w.len()
        )));
    }
    let k = Polyhedron::build_from_word(w)?;
    Ok(complex_angle_certificate(&k, |c| angles[c.index]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexError;
    use crate::wicks::parse_word;

    fn pi_over(d: i64) -> Ratio<i64> {
        Ratio::new(1, d)
    }

    #[test]
    fn torus_square() {
        let w = parse_word("a b a' b'").unwrap();
        let c = angle_sum_certificate(&w, pi_over(2)).unwrap();
        assert_eq!(c.sums, vec![Ratio::from_integer(2)]);
        assert!(c.passed());
        let c = angle_sum_certificate(&w, pi_over(3)).unwrap();
        assert!(!c.passed());
        assert_eq!(c.sums, vec![Ratio::new(4, 3)]);
        assert_eq!(c.failing_vertices(), vec![0]);
    }

    #[test]
    fn hexagon_torus_needs_two_thirds() {
        // two vertices with three corners each
        let w = parse_word("a b c a' b' c'").unwrap();
        assert!(angle_sum_certificate(&w, Ratio::new(2, 3)).unwrap().passed());
        assert!(!angle_sum_certificate(&w, pi_over(2)).unwrap().passed());
    }

    #[test]
    fn errors() {
        let w = parse_word("a b a'").unwrap();
        assert!(matches!(
            angle_sum_certificate(&w, pi_over(2)),
            Err(PeriodicError::Complex(ComplexError::NotQuadratic { .. }))
        ));
        let w = parse_word("a b a' b'").unwrap();
        assert!(matches!(
            angle_sum_certificate_per_corner(&w, &[pi_over(2)]),
            Err(PeriodicError::BadParameter(_))
        ));
    }
}
