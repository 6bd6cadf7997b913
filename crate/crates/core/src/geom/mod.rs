//! Planar primitives, predicates, reflections and point-to-set distances.

mod arc;
mod bbox;
mod clip;
mod compact;
mod halfplane;
mod line;
mod point;
mod predicates;
mod segment;

pub use arc::{Arc2, ArcDirection};
pub use bbox::BBox;
pub use clip::{clip_convex_region, clip_line};
pub use compact::{distance_point_set, CompactSet, Primitive};
pub use halfplane::{HalfPlane, Sign};
pub use line::{perpendicular_bisector, reflect_point, Line2};
pub use point::Point2;
pub use predicates::{orientation, Orientation, ORIENTATION_EPS};
pub use segment::Segment2;

use crate::scalar::Scalar;

/// Maps an angle into `[0, 2π)`.
pub fn normalize_angle<T: Scalar>(angle: T) -> T {
    let tau = T::TAU();
    let r = angle % tau;
    let r = if r < T::zero() { r + tau } else { r };
    // r + tau can round up to exactly tau
    if r >= tau {
        T::zero()
    } else {
        r
    }
}
