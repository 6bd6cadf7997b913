use crate::geom::Point2;
use crate::scalar::Scalar;

/// Relative collinearity threshold for [`orientation`].
pub const ORIENTATION_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

/// Turn direction of `a → b → c`. The cross product is compared against
/// `ORIENTATION_EPS · |b − a| · |c − a|`, i.e. the sine of the angle at `a`.
pub fn orientation<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Orientation {
    let u = b - a;
    let v = c - a;
    let cross = u.cross(v);
    let threshold = T::tol(ORIENTATION_EPS) * u.norm() * v.norm();
    if cross > threshold {
        Orientation::Left
    } else if cross < -threshold {
        Orientation::Right
    } else {
        Orientation::Collinear
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)), Orientation::Left);
        assert_eq!(orientation(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)), Orientation::Collinear);
        assert_eq!(orientation(p(0.0, 0.0), p(0.0, 1.0), p(1.0, 0.0)), Orientation::Right);
    }

    #[test]
    fn scale_invariant() {
        for s in [1e-6, 1.0, 1e6] {
            assert_eq!(orientation(p(0.0, 0.0), p(s, 0.0), p(2.0 * s, 1e-12 * s)), Orientation::Collinear);
            assert_eq!(orientation(p(0.0, 0.0), p(s, 0.0), p(2.0 * s, 1e-6 * s)), Orientation::Left);
        }
        assert_eq!(orientation(p(1.0, 1.0), p(1.0, 1.0), p(3.0, 0.0)), Orientation::Collinear);
    }
}
