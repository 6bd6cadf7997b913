//! Convex polygons, and by approximation convex closed curves, realized as
//! equidistant sets `{X : d(X, K) = d(X, L)}` of two focal sets.
//!
//! * [`geom`]: primitives, predicates, reflections, half-plane clipping.
//! * [`focal`]: reflected focal points, Voronoi cells, exact midsets and the
//!   connected arc-chain focal set.
//! * [`numeric`]: the signed gap field and marching-squares midset extraction.
//! * [`hausdorff`]: Hausdorff distances, inscribed polygons, incircles and the
//!   convergence experiment.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*d` / `*f`
//! aliases below fix the coordinate type.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0)` also rejects NaN

pub mod error;
pub mod focal;
pub mod geom;
pub mod hausdorff;
pub mod numeric;
pub mod parallel;
pub mod polygon;
pub mod scalar;

pub use error::{GeomError, Result};
pub use geom::{
    clip_convex_region, distance_point_set, orientation, perpendicular_bisector, reflect_point, Arc2,
    ArcDirection, BBox, CompactSet, HalfPlane, Line2, Orientation, Point2, Primitive, Segment2, Sign,
};
pub use polygon::ConvexPolygon;
pub use scalar::Scalar;

pub type Point2d = Point2<f64>;
pub type Line2d = Line2<f64>;
pub type Segment2d = Segment2<f64>;
pub type Arc2d = Arc2<f64>;
pub type BBoxd = BBox<f64>;
pub type HalfPlaned = HalfPlane<f64>;
pub type CompactSetd = CompactSet<f64>;
pub type ConvexPolygond = ConvexPolygon<f64>;
pub type FocalPaird = focal::FocalPair<f64>;
pub type ArcChaind = focal::ArcChain<f64>;
pub type GapFieldd = numeric::GapField<f64>;

pub type Point2f = Point2<f32>;
pub type Line2f = Line2<f32>;
pub type Segment2f = Segment2<f32>;
pub type Arc2f = Arc2<f32>;
pub type ConvexPolygonf = ConvexPolygon<f32>;
pub type CompactSetf = CompactSet<f32>;
