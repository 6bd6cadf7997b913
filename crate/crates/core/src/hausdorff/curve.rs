use crate::error::{GeomError, Result};
use crate::geom::{orientation, Arc2, CompactSet, Orientation, Point2, Primitive};
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// Dense ordered samples of a convex closed curve.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve<T> {
    points: Vec<Point2<T>>,
    closed: bool,
    pitch: T,
}

impl<T: Scalar> SampledCurve<T> {
    /// Validates spacing (every gap below `pitch`, including the closing gap
    /// when `closed`) and convexity (all turns on one side). Clockwise input
    /// is reversed; a repeated closing point is dropped.
    pub fn new(mut points: Vec<Point2<T>>, closed: bool, pitch: T) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        if closed && points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        if points.len() < 3 {
            return Err(GeomError::TooFewVertices(points.len()));
        }
        if !(pitch > T::zero()) {
            return Err(GeomError::BadParameter("sampling pitch must be positive".into()));
        }
        let n = points.len();
        let gaps = if closed { n } else { n - 1 };
        if let Some(i) = (0..gaps).find(|&i| !(points[i].distance(points[(i + 1) % n]) < pitch)) {
            return Err(GeomError::BadParameter(format!("gap after sample {i} exceeds the declared pitch")));
        }
        let turns = if closed { n } else { n - 2 };
        let (mut left, mut right) = (false, false);
        for i in 0..turns {
            match orientation(points[i], points[(i + 1) % n], points[(i + 2) % n]) {
                Orientation::Left => left = true,
                Orientation::Right => right = true,
                Orientation::Collinear => {}
            }
        }
        if left && right {
            return Err(GeomError::NotConvex(0));
        }
        if right {
            points.reverse();
        }
        Ok(Self { points, closed, pitch })
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn pitch(&self) -> T {
        self.pitch
    }

    fn closed_loop(&self) -> Vec<Point2<T>> {
        let mut pts = self.points.clone();
        pts.push(self.points[0]);
        pts
    }

    /// Point at fraction `t` of the closed arc length.
    fn point_at(&self, t: T) -> Point2<T> {
        let pts = self.closed_loop();
        let lengths: Vec<T> = pts.windows(2).map(|w| w[0].distance(w[1])).collect();
        let total: T = lengths.iter().copied().sum();
        let mut target = t * total;
        for (w, len) in pts.windows(2).zip(&lengths) {
            if target <= *len {
                return w[0].lerp(w[1], if *len > T::zero() { target / *len } else { T::zero() });
            }
            target -= *len;
        }
        pts[0]
    }
}

/// A convex closed curve centred at the origin, or a sampled one.
#[derive(Debug, Clone, PartialEq)]
pub enum Curve<T> {
    Circle { radius: T },
    Ellipse { a: T, b: T },
    Sampled(SampledCurve<T>),
}

impl<T: Scalar> Curve<T> {
    pub fn validate(&self) -> Result<()> {
        match self {
            Curve::Circle { radius } if !(*radius > T::zero() && radius.is_finite()) => {
                Err(GeomError::BadParameter("circle radius must be positive".into()))
            }
            Curve::Ellipse { a, b } if !(*a > T::zero() && *b > T::zero() && a.is_finite() && b.is_finite()) => {
                Err(GeomError::BadParameter("ellipse semi-axes must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// Point at uniform parameter `t ∈ [0, 1)`: the polar/eccentric angle
    /// `2πt` for circles and ellipses, arc-length fraction for sampled curves.
    pub fn point_at(&self, t: T) -> Point2<T> {
        let theta = T::TAU() * t;
        match self {
            Curve::Circle { radius } => Point2::from_polar(*radius, theta),
            Curve::Ellipse { a, b } => Point2::new(*a * theta.cos(), *b * theta.sin()),
            Curve::Sampled(s) => s.point_at(t),
        }
    }

    /// The curve as a compact set: an exact circle, or a closed polyline
    /// whose deviation from an ellipse is far below `pitch`.
    pub fn to_compact_set(&self, pitch: T) -> CompactSet<T> {
        let item = match self {
            Curve::Circle { radius } => Primitive::Arc(Arc2::full_circle(Point2::origin(), *radius).expect("valid radius")),
            Curve::Ellipse { a, b } => {
                let perimeter = T::TAU() * a.max(*b);
                let m = (perimeter / (pitch * T::of(0.25))).ceil().to_usize().unwrap_or(0).max(4096);
                let mut pts: Vec<_> = (0..m).map(|k| self.point_at(T::of_usize(k) / T::of_usize(m))).collect();
                pts.push(pts[0]);
                Primitive::Polyline(pts)
            }
            Curve::Sampled(s) => Primitive::Polyline(s.closed_loop()),
        };
        CompactSet::new(vec![item]).expect("non-empty")
    }

    /// Largest distance from the origin to the curve.
    pub fn bounding_radius(&self) -> T {
        match self {
            Curve::Circle { radius } => *radius,
            Curve::Ellipse { a, b } => a.max(*b),
            Curve::Sampled(s) => s.points.iter().map(|p| p.norm()).fold(T::zero(), T::max),
        }
    }

    /// Strict interior test.
    pub fn contains(&self, p: Point2<T>) -> bool {
        match self {
            Curve::Circle { radius } => p.norm() < *radius,
            Curve::Ellipse { a, b } => (p.x / *a).powi(2) + (p.y / *b).powi(2) < T::one(),
            Curve::Sampled(s) => {
                let pts = s.closed_loop();
                pts.windows(2).all(|w| orientation(w[0], w[1], p) == Orientation::Left)
            }
        }
    }

    /// Centroid of the region for the analytic curves; vertex mean for sampled ones.
    pub fn center(&self) -> Point2<T> {
        match self {
            Curve::Circle { .. } | Curve::Ellipse { .. } => Point2::origin(),
            Curve::Sampled(s) => {
                let sum = s.points.iter().fold(Point2::origin(), |acc, p| acc + *p);
                sum * (T::one() / T::of_usize(s.points.len()))
            }
        }
    }
}

/// Convex polygon with `n` vertices on `curve` at uniform parameter values.
pub fn inscribed_ngon<T: Scalar>(curve: &Curve<T>, n: usize) -> Result<ConvexPolygon<T>> {
    if n < 3 {
        return Err(GeomError::BadParameter(format!("inscribed polygon needs n >= 3, got {n}")));
    }
    curve.validate()?;
    ConvexPolygon::new((0..n).map(|k| curve.point_at(T::of_usize(k) / T::of_usize(n))).collect())
}
