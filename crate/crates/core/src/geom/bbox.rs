use crate::error::{GeomError, Result};
use crate::geom::Point2;
use crate::scalar::Scalar;

/// Axis-aligned rectangle with positive width and height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox<T> {
    min: Point2<T>,
    max: Point2<T>,
}

impl<T: Scalar> BBox<T> {
    pub fn new(min: Point2<T>, max: Point2<T>) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if !(max.x > min.x && max.y > min.y) {
            return Err(GeomError::DegenerateInput("bounding box must have positive width and height".into()));
        }
        Ok(Self { min, max })
    }

    /// `[-half, half]²`.
    pub fn square(half: T) -> Result<Self> {
        Self::new(Point2::new(-half, -half), Point2::new(half, half))
    }

    /// Smallest box containing all points; fails for fewer than two distinct
    /// coordinates along either axis.
    pub fn around<I: IntoIterator<Item = Point2<T>>>(points: I) -> Result<Self> {
        let mut it = points.into_iter();
        let first = it.next().ok_or(GeomError::EmptySet)?;
        let (mut lo, mut hi) = (first, first);
        for p in it {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        Self::new(lo, hi)
    }

    pub fn min(&self) -> Point2<T> {
        self.min
    }

    pub fn max(&self) -> Point2<T> {
        self.max
    }

    pub fn width(&self) -> T {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> T {
        self.max.y - self.min.y
    }

    pub fn diagonal(&self) -> T {
        (self.max - self.min).norm()
    }

    pub fn center(&self) -> Point2<T> {
        self.min.midpoint(self.max)
    }

    /// Grows every side by `margin`.
    pub fn inflated(&self, margin: T) -> Self {
        let m = Point2::new(margin, margin);
        Self { min: self.min - m, max: self.max + m }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            min: Point2::new(self.min.x.min(other.min.x), self.min.y.min(other.min.y)),
            max: Point2::new(self.max.x.max(other.max.x), self.max.y.max(other.max.y)),
        }
    }

    pub fn contains(&self, p: Point2<T>) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    /// Corners in counterclockwise order starting at `min`.
    pub fn corners(&self) -> [Point2<T>; 4] {
        [
            self.min,
            Point2::new(self.max.x, self.min.y),
            self.max,
            Point2::new(self.min.x, self.max.y),
        ]
    }

    /// Magnitude used to scale absolute tolerances.
    pub fn scale(&self) -> T {
        T::one() + self.min.norm().max(self.max.norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_boxes_rejected() {
        assert!(BBox::new(Point2::new(0.0, 0.0), Point2::new(0.0, 1.0)).is_err());
        assert!(BBox::new(Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)).is_err());
        assert!(BBox::around([Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]).is_err());
        let b = BBox::around([Point2::new(0.0, 2.0), Point2::new(1.0, -1.0)]).unwrap();
        assert_eq!(b.min(), Point2::new(0.0, -1.0));
        assert_eq!(b.inflated(1.0).width(), 3.0);
    }
}
