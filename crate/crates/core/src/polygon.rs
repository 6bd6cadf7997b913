//! Strictly convex polygons with counterclockwise vertices.

use rand::Rng;

use crate::error::{GeomError, Result};
use crate::geom::{orientation, BBox, Line2, Orientation, Point2, Primitive, Segment2};
use crate::scalar::Scalar;

/// A strictly convex polygon `A_1 … A_n`, counterclockwise, indices taken mod `n`.
/// Edge `i` runs from `A_i` to `A_{i+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Point2<T>>,
}

impl<T: Scalar> ConvexPolygon<T> {
    /// Validates the vertex list. Errors name the first offending vertex index.
    pub fn new(vertices: Vec<Point2<T>>) -> Result<Self> {
        let n = vertices.len();
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        let scale = vertices.iter().map(|p| p.norm()).fold(T::one(), T::max);
        let same = T::tol(1e-12) * scale;
        for j in 1..n {
            for i in 0..j {
                if vertices[i].distance(vertices[j]) <= same {
                    return Err(GeomError::RepeatedVertex { index: j, other: i });
                }
            }
        }
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let next = vertices[(i + 1) % n];
            if orientation(prev, vertices[i], next) != Orientation::Left {
                return Err(GeomError::NotConvex(i));
            }
        }
        let turning: T = (0..n)
            .map(|i| {
                let u = vertices[(i + 1) % n] - vertices[i];
                let v = vertices[(i + 2) % n] - vertices[(i + 1) % n];
                u.cross(v).atan2(u.dot(v))
            })
            .sum();
        if (turning - T::TAU()).abs() > T::PI() {
            return Err(GeomError::NotSimple);
        }
        Ok(Self { vertices })
    }

    /// Output of half-plane clipping, already cleaned; skips the O(n²) checks.
    pub(crate) fn from_clipped(vertices: Vec<Point2<T>>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Self { vertices }
    }

    /// Regular `n`-gon inscribed in the circle of radius `circumradius` about
    /// the origin, first vertex on the positive x-axis.
    pub fn regular(n: usize, circumradius: T) -> Result<Self> {
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        let step = T::TAU() / T::of_usize(n);
        Self::new(
            (0..n)
                .map(|k| Point2::from_polar(circumradius, step * T::of_usize(k)))
                .collect(),
        )
    }

    /// Random strictly convex polygon: `n` points on the unit circle with
    /// angular gaps of at least `0.2 · 2π/n`, pushed through a random
    /// orientation-preserving affine map.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(GeomError::TooFewVertices(n));
        }
        let tau = std::f64::consts::TAU;
        let min_gap = 0.2 * tau / n as f64;
        let slack = tau - min_gap * n as f64;
        // spacings: a minimum gap plus a random share of the remaining slack
        let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
        let total: f64 = weights.iter().sum();
        let start = rng.gen_range(0.0..tau);
        let mut angle = start;
        let mut angles = Vec::with_capacity(n);
        for w in &weights {
            angles.push(angle);
            angle += min_gap + slack * w / total;
        }
        let sx = rng.gen_range(0.5..2.0);
        let sy = rng.gen_range(0.5..2.0);
        let shear = rng.gen_range(-0.5..0.5);
        let rot = rng.gen_range(0.0..tau);
        let (tx, ty) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let (c, s) = (rot.cos(), rot.sin());
        let vertices = angles
            .into_iter()
            .map(|a| {
                let (x, y) = (sx * a.cos() + shear * sy * a.sin(), sy * a.sin());
                Point2::new(T::of(c * x - s * y + tx), T::of(s * x + c * y + ty))
            })
            .collect();
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `A_i` with the index taken mod `n`.
    pub fn vertex(&self, i: usize) -> Point2<T> {
        self.vertices[i % self.vertices.len()]
    }

    /// Endpoints `(A_i, A_{i+1})` of edge `i`.
    pub fn edge(&self, i: usize) -> (Point2<T>, Point2<T>) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn edge_segment(&self, i: usize) -> Segment2<T> {
        let (a, b) = self.edge(i);
        Segment2::new(a, b).expect("distinct vertices")
    }

    /// Supporting line of edge `i` with the outward unit normal.
    pub fn supporting_line(&self, i: usize) -> Line2<T> {
        let (a, b) = self.edge(i);
        Line2::through(a, b).expect("distinct vertices")
    }

    /// Distance from `p` to the supporting line of edge `i`, positive inside.
    pub fn inward_distance(&self, i: usize, p: Point2<T>) -> T {
        -self.supporting_line(i).signed_distance(p)
    }

    /// Mean of the vertices; always interior for a convex polygon.
    pub fn centroid(&self) -> Point2<T> {
        let n = T::of_usize(self.vertices.len());
        let sum = self.vertices.iter().fold(Point2::origin(), |acc, p| acc + *p);
        sum * (T::one() / n)
    }

    pub fn area(&self) -> T {
        let n = self.vertices.len();
        let twice: T = (0..n).map(|i| self.vertex(i).cross(self.vertex(i + 1))).sum();
        twice * T::of(0.5)
    }

    pub fn perimeter(&self) -> T {
        (0..self.len()).map(|i| self.edge_segment(i).length()).sum()
    }

    pub fn diameter(&self) -> T {
        let mut d = T::zero();
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max(a.distance(*b));
            }
        }
        d
    }

    pub fn bbox(&self) -> BBox<T> {
        BBox::around(self.vertices.iter().copied()).expect("polygon has area")
    }

    /// Checks that `p` lies strictly inside; otherwise reports the first edge
    /// whose supporting line does not separate `p` from the outside.
    pub fn check_interior(&self, p: Point2<T>) -> Result<()> {
        let margin = T::tol(1e-12) * (T::one() + self.diameter() + p.norm());
        for i in 0..self.len() {
            if !(self.inward_distance(i, p) > margin) {
                return Err(GeomError::PointNotInterior { edge: i });
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: Point2<T>, tol: T) -> bool {
        (0..self.len()).all(|i| self.inward_distance(i, p) >= -tol)
    }

    /// Distance from `p` to the boundary.
    pub fn boundary_distance(&self, p: Point2<T>) -> T {
        (0..self.len())
            .map(|i| self.edge_segment(i).distance(p))
            .fold(T::infinity(), T::min)
    }

    /// The boundary as a closed polyline primitive.
    pub fn boundary(&self) -> Primitive<T> {
        let mut pts = self.vertices.clone();
        pts.push(self.vertices[0]);
        Primitive::Polyline(pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn pts(v: &[(f64, f64)]) -> Vec<Point2<f64>> {
        v.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    #[test]
    fn validation_names_offending_vertex() {
        assert_eq!(ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 0.0)])), Err(GeomError::TooFewVertices(2)));
        // clockwise square
        let cw = pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]);
        assert_eq!(ConvexPolygon::new(cw), Err(GeomError::NotConvex(0)));
        // collinear vertex 1
        let flat = pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (2.0, 2.0)]);
        assert_eq!(ConvexPolygon::new(flat), Err(GeomError::NotConvex(1)));
        let rep = pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (1.0, 1.0)]);
        assert_eq!(ConvexPolygon::new(rep), Err(GeomError::RepeatedVertex { index: 3, other: 2 }));
        let nan = pts(&[(0.0, 0.0), (1.0, f64::NAN), (1.0, 1.0)]);
        assert_eq!(ConvexPolygon::new(nan), Err(GeomError::NonFinite));
    }

    #[test]
    fn pentagram_rejected() {
        let star: Vec<_> = (0..5)
            .map(|k| Point2::from_polar(1.0, std::f64::consts::TAU * (2 * k) as f64 / 5.0))
            .collect();
        assert_eq!(ConvexPolygon::new(star), Err(GeomError::NotSimple));
    }

    #[test]
    fn interior_checks() {
        let sq = ConvexPolygon::new(pts(&[(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])).unwrap();
        assert!(sq.check_interior(Point2::new(0.0, 0.0)).is_ok());
        assert_eq!(sq.check_interior(Point2::new(1.0, 0.0)), Err(GeomError::PointNotInterior { edge: 1 }));
        assert!(sq.check_interior(Point2::new(3.0, 0.0)).is_err());
        assert_eq!(sq.area(), 4.0);
        assert_eq!(sq.perimeter(), 8.0);
        let l = sq.supporting_line(0);
        assert_eq!(l.normal(), Point2::new(0.0, -1.0));
    }

    #[test]
    fn random_polygons_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 3..60 {
            let p: ConvexPolygon<f64> = ConvexPolygon::random(&mut rng, n).unwrap();
            assert_eq!(p.len(), n);
            assert!(p.area() > 0.0);
            assert!(p.check_interior(p.centroid()).is_ok());
        }
    }
}
