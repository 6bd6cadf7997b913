use crate::error::{GeomError, Result};
use crate::geom::{CompactSet, Point2};
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// Default threshold for sampled verification.
pub const VERIFY_EPS: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryReport<T> {
    pub max_gap: T,
    pub worst_point: Point2<T>,
    pub passed: bool,
}

/// Samples `samples_per_edge` evenly spaced points on every edge (endpoints
/// included) and reports the largest `|d(X, k) − d(X, l)|`.
pub fn verify_equidistance_on_boundary<T: Scalar>(
    p: &ConvexPolygon<T>,
    k: &CompactSet<T>,
    l: &CompactSet<T>,
    samples_per_edge: usize,
    eps: T,
) -> Result<BoundaryReport<T>> {
    if samples_per_edge < 2 {
        return Err(GeomError::BadParameter("at least two samples per edge are required".into()));
    }
    let last = T::of_usize(samples_per_edge - 1);
    let mut max_gap = -T::one();
    let mut worst_point = p.vertex(0);
    for i in 0..p.len() {
        let (a, b) = p.edge(i);
        for s in 0..samples_per_edge {
            let x = a.lerp(b, T::of_usize(s) / last);
            let gap = (k.distance(x) - l.distance(x)).abs();
            if gap > max_gap {
                max_gap = gap;
                worst_point = x;
            }
        }
    }
    Ok(BoundaryReport { max_gap, worst_point, passed: max_gap < eps })
}
