use crate::error::{GeomError, Result};
use crate::geom::segment::{closest_on_segment, sample_between};
use crate::geom::{Arc2, BBox, Point2, Segment2};
use crate::scalar::Scalar;

/// One building block of a [`CompactSet`].
#[derive(Debug, Clone, PartialEq)]
pub enum Primitive<T> {
    Point(Point2<T>),
    Segment(Segment2<T>),
    Arc(Arc2<T>),
    /// Open chain of points; repeat the first point to close it.
    Polyline(Vec<Point2<T>>),
}

impl<T: Scalar> Primitive<T> {
    pub fn distance(&self, p: Point2<T>) -> T {
        match self {
            Primitive::Point(q) => p.distance(*q),
            Primitive::Segment(s) => s.distance(p),
            Primitive::Arc(a) => a.distance(p),
            Primitive::Polyline(pts) => polyline_distance(pts, p),
        }
    }

    /// Points on the primitive with consecutive spacing at most `pitch`.
    pub fn sample(&self, pitch: T) -> Vec<Point2<T>> {
        match self {
            Primitive::Point(q) => vec![*q],
            Primitive::Segment(s) => s.sample(pitch),
            Primitive::Arc(a) => a.sample(pitch),
            Primitive::Polyline(pts) => sample_polyline(pts, pitch),
        }
    }

    /// Finite point set with the same bounding box as the primitive.
    pub fn extreme_points(&self) -> Vec<Point2<T>> {
        match self {
            Primitive::Point(q) => vec![*q],
            Primitive::Segment(s) => vec![s.a(), s.b()],
            Primitive::Arc(a) => {
                // axis extremes that fall inside the sweep, plus the endpoints
                let mut pts = vec![a.start_point(), a.end_point()];
                for k in 0..4 {
                    let angle = T::FRAC_PI_2() * T::of_usize(k);
                    if a.contains_angle(angle) {
                        pts.push(a.center() + Point2::from_polar(a.radius(), angle));
                    }
                }
                pts
            }
            Primitive::Polyline(pts) => pts.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Primitive::Point(q) if !q.is_finite() => Err(GeomError::NonFinite),
            Primitive::Polyline(pts) if pts.is_empty() => Err(GeomError::EmptySet),
            Primitive::Polyline(pts) if pts.iter().any(|q| !q.is_finite()) => Err(GeomError::NonFinite),
            _ => Ok(()),
        }
    }
}

fn polyline_distance<T: Scalar>(pts: &[Point2<T>], p: Point2<T>) -> T {
    if pts.len() == 1 {
        return p.distance(pts[0]);
    }
    pts.windows(2)
        .map(|w| closest_on_segment(w[0], w[1], p).distance(p))
        .fold(T::infinity(), T::min)
}

fn sample_polyline<T: Scalar>(pts: &[Point2<T>], pitch: T) -> Vec<Point2<T>> {
    let mut out = Vec::new();
    for w in pts.windows(2) {
        out.extend(sample_between(w[0], w[1], pitch, false));
    }
    if let Some(last) = pts.last() {
        out.push(*last);
    }
    out
}

/// A non-empty finite union of points, segments, arcs and polylines.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactSet<T> {
    items: Vec<Primitive<T>>,
}

impl<T: Scalar> CompactSet<T> {
    pub fn new(items: Vec<Primitive<T>>) -> Result<Self> {
        if items.is_empty() {
            return Err(GeomError::EmptySet);
        }
        for item in &items {
            item.validate()?;
        }
        Ok(Self { items })
    }

    pub fn points<I: IntoIterator<Item = Point2<T>>>(points: I) -> Result<Self> {
        Self::new(points.into_iter().map(Primitive::Point).collect())
    }

    pub fn point(p: Point2<T>) -> Self {
        Self { items: vec![Primitive::Point(p)] }
    }

    pub fn items(&self) -> &[Primitive<T>] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Primitive<T>> {
        self.items
    }

    /// `inf { |x − a| : a ∈ self }`, evaluated exactly per primitive.
    pub fn distance(&self, x: Point2<T>) -> T {
        self.items
            .iter()
            .map(|item| item.distance(x))
            .fold(T::infinity(), T::min)
    }

    pub fn sample(&self, pitch: T) -> Vec<Point2<T>> {
        self.items.iter().flat_map(|item| item.sample(pitch)).collect()
    }

    /// Bounding box, or `None` when the set is a single point or axis-degenerate.
    pub fn bbox(&self) -> Option<BBox<T>> {
        BBox::around(self.items.iter().flat_map(|item| item.extreme_points())).ok()
    }
}

/// Distance from `x` to the set `s`.
pub fn distance_point_set<T: Scalar>(x: Point2<T>, s: &CompactSet<T>) -> T {
    s.distance(x)
}
