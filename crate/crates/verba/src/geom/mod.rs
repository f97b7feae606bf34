//! Shapes as maximal line segments with labelled points.
//!
//! A [`Shape`] is a canonical set of maximal segments plus labelled
//! registration points. The algebra (`sum`, `product`, `difference`,
//! `subshape_of`) operates on segments as 1-dimensional point sets; a
//! [`Transform`] is a plane similarity (translation, rotation, uniform
//! scale, optional reflection); [`find_matches`] enumerates every similarity
//! embedding of one shape into another.

mod carrier;
mod matching;
mod point;
mod segment;
mod shape;
mod transform;

pub use carrier::Carrier;
pub use matching::{distinguished_points, find_matches, MatchOptions};
pub use point::{Point, Vec2};
pub use segment::Segment;
pub use shape::{LabelledPoint, SegmentCoords, Shape, ShapeDoc};
pub use transform::Transform;

use thiserror::Error;

/// Absolute coincidence tolerance: two points are the same point iff their
/// distance is at most this.
pub const EPS_ABS: f64 = 1e-9;

/// Relative tolerance for collinearity and length-ratio comparisons.
pub const EPS_REL: f64 = 1e-9;

/// Grid used when quantizing coordinates into hash/sort keys.
pub const QUANTUM: f64 = 1e-6;

pub(crate) fn quantize(x: f64) -> i64 {
    (x / QUANTUM).round() as i64
}

/// Round to 9 decimal places for serialized output, normalizing `-0.0`.
pub(crate) fn round9(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("coordinate is not finite")]
    NonFiniteCoordinate,
    #[error("zero-length segment at ({0}, {1})")]
    ZeroLengthSegment(f64, f64),
    #[error("empty label symbol")]
    EmptyLabel,
    #[error("label symbol {0:?} contains whitespace or non-printable characters")]
    BadLabel(String),
    #[error("linear part is not a similarity (columns must be orthogonal with equal norm)")]
    NotASimilarity,
    #[error("degenerate transform: scale factor {0} is below tolerance")]
    DegenerateScale(f64),
    #[error("degenerate point correspondence")]
    DegenerateCorrespondence,
    #[error(
        "underdetermined match: the pattern shape must have at least two distinct \
         carrier intersection points"
    )]
    UnderdeterminedMatch,
}
