use crate::geom::{orientation, BBox, HalfPlane, Line2, Orientation, Point2, Segment2, Sign};
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// `bbox ∩ (∩ halfplanes)` as a counterclockwise convex polygon, or `None`
/// when the intersection has no area. Computed by successive
/// Sutherland–Hodgman clipping of the box. The first vertex is the
/// lexicographically smallest `(x, y)`.
pub fn clip_convex_region<T: Scalar>(halfplanes: &[HalfPlane<T>], bbox: &BBox<T>) -> Option<ConvexPolygon<T>> {
    let mut poly: Vec<Point2<T>> = bbox.corners().to_vec();
    for h in halfplanes {
        poly = clip_by(&poly, h);
        if poly.len() < 3 {
            return None;
        }
    }
    cleanup(poly, bbox.scale())
}

fn clip_by<T: Scalar>(poly: &[Point2<T>], h: &HalfPlane<T>) -> Vec<Point2<T>> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    for (k, &p) in poly.iter().enumerate() {
        let q = poly[(k + 1) % poly.len()];
        let (vp, vq) = (h.value(p), h.value(q));
        let p_in = vp >= T::zero();
        let q_in = vq >= T::zero();
        if p_in {
            out.push(p);
        }
        if p_in != q_in {
            let t = vp / (vp - vq);
            out.push(p.lerp(q, t));
        }
    }
    out
}

fn cleanup<T: Scalar>(mut poly: Vec<Point2<T>>, scale: T) -> Option<ConvexPolygon<T>> {
    let same = T::tol(1e-12) * scale;
    poly.dedup_by(|b, a| a.distance(*b) <= same);
    while poly.len() > 1 && poly[0].distance(*poly.last().unwrap()) <= same {
        poly.pop();
    }
    loop {
        let n = poly.len();
        if n < 3 {
            return None;
        }
        let flat = (0..n).find(|&i| {
            orientation(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]) != Orientation::Left
        });
        match flat {
            Some(i) => {
                poly.remove(i);
            }
            None => break,
        }
    }
    let n = poly.len();
    let twice_area: T = (0..n).map(|i| poly[i].cross(poly[(i + 1) % n])).sum();
    if !(twice_area > T::tol(1e-14) * scale * scale) {
        return None;
    }
    let first = (0..n)
        .min_by(|&i, &j| {
            let (a, b) = (poly[i], poly[j]);
            a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap())
        })
        .unwrap();
    poly.rotate_left(first);
    Some(ConvexPolygon::from_clipped(poly))
}

/// The part of `line` inside `bbox ∩ (∩ halfplanes)`, oriented along
/// `line.direction()`. `None` if that part is empty or a single point.
pub fn clip_line<T: Scalar>(line: &Line2<T>, halfplanes: &[HalfPlane<T>], bbox: &BBox<T>) -> Option<Segment2<T>> {
    let anchor = line.anchor();
    let dir = line.direction();
    let (mut lo, mut hi) = (-T::infinity(), T::infinity());
    let [c0, _, c2, _] = bbox.corners();
    let box_sides = [
        HalfPlane::new(Line2::vertical(c0.x), Sign::Plus),
        HalfPlane::new(Line2::vertical(c2.x), Sign::Minus),
        HalfPlane::new(Line2::horizontal(c0.y), Sign::Plus),
        HalfPlane::new(Line2::horizontal(c2.y), Sign::Minus),
    ];
    let parallel = T::tol(1e-14);
    for h in halfplanes.iter().chain(box_sides.iter()) {
        // value(anchor + t·dir) = a + t·b
        let a = h.value(anchor);
        let b = h.side.value::<T>() * h.boundary.normal().dot(dir);
        if b.abs() <= parallel {
            if a < -T::tol(1e-12) * bbox.scale() {
                return None;
            }
            continue;
        }
        let t = -a / b;
        if b > T::zero() {
            lo = lo.max(t);
        } else {
            hi = hi.min(t);
        }
    }
    if !(hi > lo) {
        return None;
    }
    Segment2::new(anchor + dir * lo, anchor + dir * hi).ok()
}
