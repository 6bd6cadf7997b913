use crate::error::{GeomError, Result};
use crate::geom::{normalize_angle, Point2};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcDirection {
    Ccw,
    Cw,
}

/// A circular arc. Angles are stored in `[0, 2π)`; the arc sweeps from
/// `start_angle` to `end_angle` in `direction`, and equal angles mean the
/// full circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc2<T> {
    center: Point2<T>,
    radius: T,
    start_angle: T,
    end_angle: T,
    direction: ArcDirection,
}

impl<T: Scalar> Arc2<T> {
    pub fn new(
        center: Point2<T>,
        radius: T,
        start_angle: T,
        end_angle: T,
        direction: ArcDirection,
    ) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || !start_angle.is_finite() || !end_angle.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if !(radius > T::zero()) {
            return Err(GeomError::DegenerateInput("arc radius must be positive".into()));
        }
        Ok(Self {
            center,
            radius,
            start_angle: normalize_angle(start_angle),
            end_angle: normalize_angle(end_angle),
            direction,
        })
    }

    pub fn full_circle(center: Point2<T>, radius: T) -> Result<Self> {
        Self::new(center, radius, T::zero(), T::zero(), ArcDirection::Ccw)
    }

    /// Arc of the circle centred at `center` through `from`, running to the
    /// ray through `to`. The radius is `|from - center|`.
    pub fn between(center: Point2<T>, from: Point2<T>, to: Point2<T>, direction: ArcDirection) -> Result<Self> {
        let radius = from.distance(center);
        Self::new(center, radius, (from - center).angle(), (to - center).angle(), direction)
    }

    pub fn center(&self) -> Point2<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn start_angle(&self) -> T {
        self.start_angle
    }

    pub fn end_angle(&self) -> T {
        self.end_angle
    }

    pub fn direction(&self) -> ArcDirection {
        self.direction
    }

    /// Swept angle in `(0, 2π]`.
    pub fn extent(&self) -> T {
        let raw = match self.direction {
            ArcDirection::Ccw => self.end_angle - self.start_angle,
            ArcDirection::Cw => self.start_angle - self.end_angle,
        };
        let e = normalize_angle(raw);
        if e == T::zero() {
            T::TAU()
        } else {
            e
        }
    }

    pub fn is_full_circle(&self) -> bool {
        self.start_angle == self.end_angle
    }

    /// Whether the ray at `angle` from the centre meets the arc.
    pub fn contains_angle(&self, angle: T) -> bool {
        if self.is_full_circle() {
            return true;
        }
        let delta = match self.direction {
            ArcDirection::Ccw => normalize_angle(angle - self.start_angle),
            ArcDirection::Cw => normalize_angle(self.start_angle - angle),
        };
        delta <= self.extent()
    }

    fn angle_at(&self, s: T) -> T {
        match self.direction {
            ArcDirection::Ccw => self.start_angle + s * self.extent(),
            ArcDirection::Cw => self.start_angle - s * self.extent(),
        }
    }

    /// Point at fraction `s ∈ [0, 1]` of the sweep.
    pub fn point_at(&self, s: T) -> Point2<T> {
        self.center + Point2::from_polar(self.radius, self.angle_at(s))
    }

    pub fn start_point(&self) -> Point2<T> {
        self.point_at(T::zero())
    }

    pub fn end_point(&self) -> Point2<T> {
        self.point_at(T::one())
    }

    pub fn length(&self) -> T {
        self.radius * self.extent()
    }

    pub fn distance(&self, p: Point2<T>) -> T {
        let v = p - self.center;
        let r = v.norm();
        if r == T::zero() {
            return self.radius;
        }
        if self.contains_angle(v.angle()) {
            (r - self.radius).abs()
        } else {
            p.distance(self.start_point()).min(p.distance(self.end_point()))
        }
    }

    /// Points along the sweep with chord spacing at most `pitch`, both ends included.
    pub fn sample(&self, pitch: T) -> Vec<Point2<T>> {
        let steps = (self.length() / pitch).ceil().to_usize().unwrap_or(1).max(1);
        (0..=steps)
            .map(|k| self.point_at(T::of_usize(k) / T::of_usize(steps)))
            .collect()
    }
}
