use crate::error::{GeomError, Result};
use crate::geom::Point2;
use crate::scalar::Scalar;

/// The line `{P : normal · P = offset}` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2<T> {
    normal: Point2<T>,
    offset: T,
}

impl<T: Scalar> Line2<T> {
    /// Normalizes `normal` (and scales `offset` with it) so the unit-normal
    /// invariant holds.
    pub fn new(normal: Point2<T>, offset: T) -> Result<Self> {
        let len = normal.norm();
        if !(len > T::zero()) || !len.is_finite() || !offset.is_finite() {
            return Err(GeomError::DegenerateInput("line normal must be a finite non-zero vector".into()));
        }
        Ok(Self { normal: normal * (T::one() / len), offset: offset / len })
    }

    /// Line through two distinct points; the normal points to the right of `a → b`.
    pub fn through(a: Point2<T>, b: Point2<T>) -> Result<Self> {
        let dir = b - a;
        let normal = Point2::new(dir.y, -dir.x);
        let len = normal.norm();
        if !(len > T::tol(1e-12) * (T::one() + a.norm().max(b.norm()))) {
            return Err(GeomError::DegenerateInput("line through coincident points".into()));
        }
        let normal = normal * (T::one() / len);
        Ok(Self { normal, offset: normal.dot(a) })
    }

    /// Vertical line `x = c`.
    pub fn vertical(c: T) -> Self {
        Self { normal: Point2::new(T::one(), T::zero()), offset: c }
    }

    /// Horizontal line `y = c`.
    pub fn horizontal(c: T) -> Self {
        Self { normal: Point2::new(T::zero(), T::one()), offset: c }
    }

    pub fn normal(&self) -> Point2<T> {
        self.normal
    }

    pub fn offset(&self) -> T {
        self.offset
    }

    /// Unit direction vector, a quarter turn counterclockwise from the normal.
    pub fn direction(&self) -> Point2<T> {
        self.normal.perp()
    }

    /// Closest point of the line to the origin.
    pub fn anchor(&self) -> Point2<T> {
        self.normal * self.offset
    }

    pub fn signed_distance(&self, p: Point2<T>) -> T {
        self.normal.dot(p) - self.offset
    }

    pub fn distance(&self, p: Point2<T>) -> T {
        self.signed_distance(p).abs()
    }

    pub fn project(&self, p: Point2<T>) -> Point2<T> {
        p - self.normal * self.signed_distance(p)
    }

    pub fn flipped(&self) -> Self {
        Self { normal: -self.normal, offset: -self.offset }
    }
}

/// Mirror image of `p` across `l`.
pub fn reflect_point<T: Scalar>(p: Point2<T>, l: &Line2<T>) -> Point2<T> {
    p - l.normal * (T::of(2.0) * l.signed_distance(p))
}

/// The perpendicular bisector of `ab`; its normal points from `a` toward `b`.
pub fn perpendicular_bisector<T: Scalar>(a: Point2<T>, b: Point2<T>) -> Result<Line2<T>> {
    let d = b - a;
    let len = d.norm();
    let scale = T::one() + a.norm().max(b.norm());
    if !(len > T::tol(1e-12) * scale) {
        return Err(GeomError::DegenerateInput("bisector of coincident points".into()));
    }
    let normal = d * (T::one() / len);
    Ok(Line2 { normal, offset: normal.dot(a.midpoint(b)) })
}
