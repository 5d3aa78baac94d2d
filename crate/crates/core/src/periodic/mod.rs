//! Periodic planes: the rectangle relator of a square presentation, the two
//! explicit boundary-word families and angle-sum certificates.

mod angles;
mod strip;
mod theorem3;
mod theorem4;

use thiserror::Error;

use crate::complex::ComplexError;
use crate::wicks::{SubstitutionError, WicksError};

pub use angles::{
    angle_sum_certificate, angle_sum_certificate_per_corner, complex_angle_certificate,
    AngleCertificate,
};
pub use strip::{find_rectangle, strip_start, RectangleRelator, StripState};
pub use theorem3::{theorem3_word, Theorem3};
pub use theorem4::{theorem4_boundary, theorem4_squares, theorem4_word, Theorem4};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PeriodicError {
    #[error("presentation does not have the x y u v shape: {0}")]
    NotP2Shape(String),
    #[error("strip cannot be extended: {0}")]
    NoExtension(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Wicks(#[from] WicksError),
    #[error(transparent)]
    Substitution(#[from] SubstitutionError),
}
