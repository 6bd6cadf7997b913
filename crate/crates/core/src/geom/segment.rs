use crate::error::{GeomError, Result};
use crate::geom::Point2;
use crate::scalar::Scalar;

/// A closed segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment2<T> {
    a: Point2<T>,
    b: Point2<T>,
}

impl<T: Scalar> Segment2<T> {
    pub fn new(a: Point2<T>, b: Point2<T>) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GeomError::NonFinite);
        }
        let scale = T::one() + a.norm().max(b.norm());
        if !(a.distance(b) > T::tol(1e-12) * scale) {
            return Err(GeomError::DegenerateInput("segment endpoints coincide".into()));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Point2<T> {
        self.a
    }

    pub fn b(&self) -> Point2<T> {
        self.b
    }

    pub fn length(&self) -> T {
        self.a.distance(self.b)
    }

    pub fn point_at(&self, t: T) -> Point2<T> {
        self.a.lerp(self.b, t)
    }

    pub fn reversed(&self) -> Self {
        Self { a: self.b, b: self.a }
    }

    pub fn closest_point(&self, p: Point2<T>) -> Point2<T> {
        closest_on_segment(self.a, self.b, p)
    }

    pub fn distance(&self, p: Point2<T>) -> T {
        self.closest_point(p).distance(p)
    }

    /// Evenly spaced points from `a` to `b` (both included) with spacing at most `pitch`.
    pub fn sample(&self, pitch: T) -> Vec<Point2<T>> {
        sample_between(self.a, self.b, pitch, true)
    }
}

/// Foot of the perpendicular from `p`, clamped to `[a, b]`. Handles `a == b`.
pub(crate) fn closest_on_segment<T: Scalar>(a: Point2<T>, b: Point2<T>, p: Point2<T>) -> Point2<T> {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == T::zero() {
        return a;
    }
    let t = ((p - a).dot(ab) / len2).max(T::zero()).min(T::one());
    a.lerp(b, t)
}

pub(crate) fn sample_between<T: Scalar>(
    a: Point2<T>,
    b: Point2<T>,
    pitch: T,
    include_end: bool,
) -> Vec<Point2<T>> {
    let len = a.distance(b);
    let steps = (len / pitch).ceil().to_usize().unwrap_or(1).max(1);
    let last = if include_end { steps } else { steps - 1 };
    (0..=last)
        .map(|k| a.lerp(b, T::of_usize(k) / T::of_usize(steps)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_cases() {
        let s = Segment2::new(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0)).unwrap();
        assert_eq!(s.distance(Point2::new(0.0, 3.0)), 3.0);
        assert_eq!(s.distance(Point2::new(4.0, 4.0)), 5.0);
        assert_eq!(s.distance(Point2::new(0.25, 0.0)), 0.0);
    }

    #[test]
    fn degenerate_segment_rejected() {
        let p = Point2::new(2.0, 2.0);
        assert!(Segment2::new(p, p).is_err());
    }

    #[test]
    fn sampling_respects_pitch() {
        let s = Segment2::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)).unwrap();
        let pts = s.sample(0.3);
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], s.a());
        assert_eq!(*pts.last().unwrap(), s.b());
        for w in pts.windows(2) {
            assert!(w[0].distance(w[1]) <= 0.3 + 1e-15);
        }
    }
}
