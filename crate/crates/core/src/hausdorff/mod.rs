//! Hausdorff distances, inscribed polygons of convex curves, incircles, and
//! the polygon-to-curve convergence experiment.
//!
//! Distances are sampled: the first set is walked at a fixed pitch and each
//! sample is measured exactly against the primitives of the second set, so
//! the directed distance is underestimated by at most the pitch.

mod curve;
mod experiment;
mod incircle;

pub use curve::{inscribed_ngon, Curve, SampledCurve};
pub use experiment::{clip_to_disk, convergence_experiment, convergence_holds, ConvergenceRow};
pub use incircle::{chebyshev_center, exercise1_check, focal_ring_bounds, Exercise1Report, RingBounds};

use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::geom::CompactSet;
use crate::scalar::Scalar;

/// `max_{x ∈ a} d(x, b)` over samples of `a` spaced at most `pitch` apart.
pub fn directed_hausdorff<T: Scalar>(a: &CompactSet<T>, b: &CompactSet<T>, pitch: T) -> Result<T> {
    if !(pitch > T::zero()) {
        return Err(GeomError::BadParameter("sampling pitch must be positive".into()));
    }
    let samples = a.sample(pitch);
    if samples.is_empty() {
        return Err(GeomError::EmptySet);
    }
    Ok(samples
        .par_iter()
        .map(|x| b.distance(*x))
        .reduce(T::zero, T::max))
}

/// Larger of the two directed distances.
pub fn hausdorff_distance<T: Scalar>(a: &CompactSet<T>, b: &CompactSet<T>, pitch: T) -> Result<T> {
    Ok(directed_hausdorff(a, b, pitch)?.max(directed_hausdorff(b, a, pitch)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Arc2, Point2, Primitive};
    use crate::polygon::ConvexPolygon;

    fn circle() -> CompactSet<f64> {
        CompactSet::new(vec![Primitive::Arc(Arc2::full_circle(Point2::new(0.0, 0.0), 1.0).unwrap())]).unwrap()
    }

    fn regular(n: usize) -> CompactSet<f64> {
        CompactSet::new(vec![ConvexPolygon::regular(n, 1.0).unwrap().boundary()]).unwrap()
    }

    #[test]
    fn point_sets() {
        let a = CompactSet::point(Point2::new(0.0, 0.0));
        let b = CompactSet::point(Point2::new(3.0, 4.0));
        assert_eq!(directed_hausdorff(&a, &b, 0.1).unwrap(), 5.0);
        assert_eq!(hausdorff_distance(&a, &b, 0.1).unwrap(), 5.0);
        assert_eq!(hausdorff_distance(&a, &a, 0.1).unwrap(), 0.0);
    }

    #[test]
    fn circle_to_inscribed_square() {
        let pitch = 1e-3;
        let d = directed_hausdorff(&circle(), &regular(4), pitch).unwrap();
        assert!((d - (1.0 - 0.5f64.sqrt())).abs() <= pitch, "{d}");
        // the square is inside the disk but not on the circle, except at vertices
        assert!(directed_hausdorff(&regular(4), &circle(), pitch).unwrap() > 0.29);
    }

    #[test]
    fn subset_has_zero_directed_distance() {
        let sq = regular(4);
        let vertices = CompactSet::points(ConvexPolygon::<f64>::regular(4, 1.0).unwrap().vertices().to_vec()).unwrap();
        assert!(directed_hausdorff(&vertices, &sq, 0.01).unwrap() < 1e-15);
    }

    #[test]
    fn sixteen_gon_against_circle() {
        let pitch = 1e-3;
        let d = hausdorff_distance(&regular(16), &circle(), pitch).unwrap();
        let expected = 1.0 - (std::f64::consts::PI / 16.0).cos();
        assert!((d - expected).abs() <= pitch, "{d} vs {expected}");
        assert!((expected - 0.019215).abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_pitch() {
        assert!(directed_hausdorff(&circle(), &circle(), 0.0).is_err());
    }
}
