use crate::error::{GeomError, Result};
use crate::focal::construct_focal_pair;
use crate::geom::Point2;
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

const SEARCH_ITERATIONS: usize = 200;

/// Annulus about `O` containing every reflected focal point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingBounds<T> {
    pub r_min: T,
    pub r_max: T,
}

/// `|B_i − O|` is twice the distance from `O` to edge line `i`, so the focal
/// points lie between twice the nearest and twice the farthest edge line.
pub fn focal_ring_bounds<T: Scalar>(p: &ConvexPolygon<T>, o: Point2<T>) -> Result<RingBounds<T>> {
    let fp = construct_focal_pair(p, o)?;
    let two = T::of(2.0);
    let (lo, hi) = (0..p.len())
        .map(|i| p.inward_distance(i, o))
        .fold((T::infinity(), T::zero()), |(lo, hi), d| (lo.min(d), hi.max(d)));
    let bounds = RingBounds { r_min: two * lo, r_max: two * hi };
    let slack = T::tol(1e-12) * (T::one() + p.diameter());
    for (i, b) in fp.b.iter().enumerate() {
        let r = b.distance(o);
        if r < bounds.r_min - slack || r > bounds.r_max + slack {
            return Err(GeomError::Invariant(format!("focal point {i} outside ring")));
        }
    }
    Ok(bounds)
}

fn depth<T: Scalar>(p: &ConvexPolygon<T>, x: Point2<T>) -> T {
    (0..p.len()).map(|i| p.inward_distance(i, x)).fold(T::infinity(), T::min)
}

/// Ternary search for the maximum of a concave function on `[lo, hi]`.
fn ternary_max<T: Scalar>(mut lo: T, mut hi: T, tol: T, f: impl Fn(T) -> T) -> (T, T) {
    let third = T::one() / T::of(3.0);
    for _ in 0..SEARCH_ITERATIONS {
        if hi - lo <= tol {
            break;
        }
        let m1 = lo + (hi - lo) * third;
        let m2 = hi - (hi - lo) * third;
        if f(m1) < f(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let x = (lo + hi) * T::of(0.5);
    (x, f(x))
}

/// Interior point farthest from the boundary and that distance.
///
/// The depth `min_i dist(X, edge line i)` is concave on the whole plane, so
/// a nested ternary search over the bounding box finds its maximum. The
/// result is then snapped to the exact point equidistant from three of the
/// nearest edge lines when that point is at least as deep.
pub fn chebyshev_center<T: Scalar>(p: &ConvexPolygon<T>) -> (Point2<T>, T) {
    let bbox = p.bbox();
    let tol = T::tol(1e-10) * p.diameter() * T::of(1e-2);
    let (lo, hi) = (bbox.min(), bbox.max());
    let best_y = |x: T| ternary_max(lo.y, hi.y, tol, |y| depth(p, Point2::new(x, y)));
    let (x, _) = ternary_max(lo.x, hi.x, tol, |x| best_y(x).1);
    let (y, r) = best_y(x);
    let mut center = Point2::new(x, y);
    let mut radius = r;

    // polish: solve n_i·X + r = c_i exactly for triples of nearly active edges
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&i, &j| {
        p.inward_distance(i, center)
            .partial_cmp(&p.inward_distance(j, center))
            .unwrap()
    });
    let candidates = &order[..order.len().min(6)];
    let accept = T::tol(1e-9) * p.diameter();
    'outer: for (ai, &a) in candidates.iter().enumerate() {
        for (bi, &b) in candidates.iter().enumerate().skip(ai + 1) {
            for &c in candidates.iter().skip(bi + 1) {
                if let Some((q, rq)) = equidistant_point(p, [a, b, c]) {
                    let d = depth(p, q);
                    if (d - rq).abs() <= accept && d >= radius && q.distance(center) <= accept * T::of(1e3) {
                        center = q;
                        radius = d;
                        break 'outer;
                    }
                }
            }
        }
    }
    (center, radius)
}

/// Point at equal inward distance `r` from three edge lines, by Cramer's rule.
fn equidistant_point<T: Scalar>(p: &ConvexPolygon<T>, edges: [usize; 3]) -> Option<(Point2<T>, T)> {
    // inward distance: c_i − n_i·X = r  ⇔  n_i·X + r = c_i
    let rows: Vec<(T, T, T)> = edges
        .iter()
        .map(|&i| {
            let l = p.supporting_line(i);
            (l.normal().x, l.normal().y, l.offset())
        })
        .collect();
    let det3 = |m: [[T; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let a = [
        [rows[0].0, rows[0].1, T::one()],
        [rows[1].0, rows[1].1, T::one()],
        [rows[2].0, rows[2].1, T::one()],
    ];
    let det = det3(a);
    if det.abs() < T::tol(1e-9) {
        return None;
    }
    let rhs = [rows[0].2, rows[1].2, rows[2].2];
    let with_column = |col: usize| {
        let mut m = a;
        for (r, row) in m.iter_mut().enumerate() {
            row[col] = rhs[r];
        }
        det3(m) / det
    };
    Some((Point2::new(with_column(0), with_column(1)), with_column(2)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Exercise1Report<T> {
    pub is_tangential: bool,
    pub incenter: Point2<T>,
    /// Depth of the Chebyshev center (the inradius when tangential).
    pub r: T,
    /// `max_i ||B_i − O| − 2r|` with `O` at the incenter; `None` when the
    /// polygon has no incircle.
    pub max_radial_error: Option<T>,
}

/// Tangential polygons: with `O` at the incenter, all focal points lie on the
/// concentric circle of radius twice the inradius.
pub fn exercise1_check<T: Scalar>(p: &ConvexPolygon<T>) -> Result<Exercise1Report<T>> {
    let (incenter, r) = chebyshev_center(p);
    let (lo, hi) = (0..p.len())
        .map(|i| p.inward_distance(i, incenter))
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), d| (lo.min(d), hi.max(d)));
    let is_tangential = hi - lo <= T::tol(1e-6) * p.diameter();
    let max_radial_error = if is_tangential {
        let fp = construct_focal_pair(p, incenter)?;
        let two_r = T::of(2.0) * r;
        Some(
            fp.b.iter()
                .map(|b| (b.distance(incenter) - two_r).abs())
                .fold(T::zero(), T::max),
        )
    } else {
        None
    };
    Ok(Exercise1Report { is_tangential, incenter, r, max_radial_error })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(f64, f64)]) -> ConvexPolygon<f64> {
        ConvexPolygon::new(v.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn ring_bounds_examples() {
        let sq = poly(&[(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)]);
        let r = focal_ring_bounds(&sq, Point2::new(0.0, 0.0)).unwrap();
        assert_eq!((r.r_min, r.r_max), (2.0, 2.0));
        let r = focal_ring_bounds(&sq, Point2::new(0.5, 0.0)).unwrap();
        assert!((r.r_min - 1.0).abs() < 1e-15 && (r.r_max - 3.0).abs() < 1e-15);
        let t = poly(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        let r = focal_ring_bounds(&t, Point2::new(1.0, 1.0)).unwrap();
        assert!((r.r_min - 2.0).abs() < 1e-12 && (r.r_max - 2.0).abs() < 1e-12);
        assert!(matches!(
            focal_ring_bounds(&sq, Point2::new(-1.0, 0.3)),
            Err(GeomError::PointNotInterior { .. })
        ));
    }

    #[test]
    fn hexagon_incircle() {
        let h = ConvexPolygon::<f64>::regular(6, 1.0).unwrap();
        let rep = exercise1_check(&h).unwrap();
        assert!(rep.is_tangential);
        assert!((rep.r - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(rep.max_radial_error.unwrap() < 1e-9);
    }

    #[test]
    fn triangle_incircle() {
        let t = poly(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        let rep = exercise1_check(&t).unwrap();
        assert!(rep.is_tangential);
        assert!((rep.r - 1.0).abs() < 1e-12);
        assert!(rep.incenter.distance(Point2::new(1.0, 1.0)) < 1e-10);
        assert!(rep.max_radial_error.unwrap() < 1e-10);
    }

    #[test]
    fn rectangle_is_not_tangential() {
        let r = poly(&[(-1.0, -0.5), (1.0, -0.5), (1.0, 0.5), (-1.0, 0.5)]);
        let rep = exercise1_check(&r).unwrap();
        assert!(!rep.is_tangential);
        assert!((rep.r - 0.5).abs() < 1e-9);
        assert_eq!(rep.max_radial_error, None);
    }

    #[test]
    fn search_without_polish_is_close() {
        let t = poly(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        let bbox = t.bbox();
        let tol = 1e-14;
        let best_y = |x: f64| ternary_max(bbox.min().y, bbox.max().y, tol, |y| depth(&t, Point2::new(x, y)));
        let (x, _) = ternary_max(bbox.min().x, bbox.max().x, tol, |x| best_y(x).1);
        let (y, r) = best_y(x);
        assert!(Point2::new(x, y).distance(Point2::new(1.0, 1.0)) < 1e-8);
        assert!((r - 1.0).abs() < 1e-9);
    }
}
