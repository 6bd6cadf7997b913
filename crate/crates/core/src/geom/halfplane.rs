use crate::geom::{Line2, Point2};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value<T: Scalar>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }
}

/// The closed region `{P : s · (n · P − c) ≥ 0}` bounded by a line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane<T> {
    pub boundary: Line2<T>,
    pub side: Sign,
}

impl<T: Scalar> HalfPlane<T> {
    pub fn new(boundary: Line2<T>, side: Sign) -> Self {
        Self { boundary, side }
    }

    /// The side of `boundary` that contains `p` (the `Plus` side if `p` is on it).
    pub fn containing(boundary: Line2<T>, p: Point2<T>) -> Self {
        let side = if boundary.signed_distance(p) >= T::zero() { Sign::Plus } else { Sign::Minus };
        Self { boundary, side }
    }

    /// Signed distance to the boundary, positive inside.
    pub fn value(&self, p: Point2<T>) -> T {
        self.side.value::<T>() * self.boundary.signed_distance(p)
    }

    /// Membership with slack `tol`; boundary points are members for any `tol ≥ 0`.
    pub fn contains(&self, p: Point2<T>, tol: T) -> bool {
        self.value(p) >= -tol
    }

    /// The boundary oriented so that the interior is its positive side.
    pub fn as_inward_line(&self) -> Line2<T> {
        match self.side {
            Sign::Plus => self.boundary,
            Sign::Minus => self.boundary.flipped(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_points_are_members() {
        let h = HalfPlane::<f64>::new(Line2::vertical(1.0), Sign::Minus);
        assert!(h.contains(Point2::new(1.0, 5.0), 0.0));
        assert!(h.contains(Point2::new(0.0, 0.0), 0.0));
        assert!(!h.contains(Point2::new(1.5, 0.0), 0.0));
        let g = HalfPlane::<f64>::containing(Line2::horizontal(2.0), Point2::new(0.0, 3.0));
        assert_eq!(g.side, Sign::Plus);
        assert!((g.as_inward_line().signed_distance(Point2::new(0.0, 3.0)) - 1.0).abs() < 1e-15);
    }
}
