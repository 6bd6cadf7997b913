//! Focal sets for convex polygons.
//!
//! Reflecting an interior point `O` across the supporting line of every edge
//! gives points `B_1 … B_n`; the polygon is then exactly the equidistant set of
//! `K = {O}` and `L = {B_1 … B_n}`. Edge `i` is the part of the perpendicular
//! bisector of `O B_i` that lies in the Voronoi cell of `B_i`.

mod arcs;
mod midset;
mod verify;
mod voronoi;

pub use arcs::{connected_focal_set, ArcChain};
pub use midset::{exact_midset, reconstruct_and_compare, MidsetExact, ReconstructionReport};
pub use verify::{verify_equidistance_on_boundary, BoundaryReport, VERIFY_EPS};
pub use voronoi::{default_bbox, voronoi_cells, VoronoiCell};

use crate::error::{GeomError, Result};
use crate::geom::{reflect_point, CompactSet, Point2};
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// Threshold for the construction checks (distinct focal points, equal vertex
/// distances), relative to `1 + diameter`.
pub const CONSTRUCTION_EPS: f64 = 1e-9;

/// `K = {O}` and `L = {B_1 … B_n}`, with `B_i` the mirror image of `O` in the
/// supporting line of edge `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalPair<T> {
    pub o: Point2<T>,
    pub b: Vec<Point2<T>>,
}

impl<T: Scalar> FocalPair<T> {
    pub fn k(&self) -> CompactSet<T> {
        CompactSet::point(self.o)
    }

    pub fn l(&self) -> CompactSet<T> {
        CompactSet::points(self.b.iter().copied()).expect("focal pair has points")
    }

    /// Per vertex `A_{i+1}`: `(|d(A_{i+1}, B_i) − d(A_{i+1}, O)|, |d(A_{i+1}, O) − d(A_{i+1}, B_{i+1})|)`.
    pub fn vertex_residuals(&self, p: &ConvexPolygon<T>) -> Vec<(T, T)> {
        let n = self.b.len();
        (0..n)
            .map(|i| {
                let a = p.vertex(i + 1);
                let to_o = a.distance(self.o);
                (
                    (a.distance(self.b[i]) - to_o).abs(),
                    (to_o - a.distance(self.b[(i + 1) % n])).abs(),
                )
            })
            .collect()
    }

    pub fn max_vertex_residual(&self, p: &ConvexPolygon<T>) -> T {
        self.vertex_residuals(p)
            .into_iter()
            .fold(T::zero(), |m, (u, v)| m.max(u).max(v))
    }

    /// Smallest `|B_i − B_j|` over `i ≠ j`.
    pub fn min_pairwise_distance(&self) -> T {
        let mut best = T::infinity();
        for (i, a) in self.b.iter().enumerate() {
            for c in &self.b[i + 1..] {
                best = best.min(a.distance(*c));
            }
        }
        best
    }

    /// For each vertex `A_{i+1}`: `d(A_{i+1}, B_i) − min_j d(A_{i+1}, B_j)`, zero
    /// when the vertex lies on the closure of the Voronoi cell of `B_i`.
    pub fn vertex_cell_residuals(&self, p: &ConvexPolygon<T>) -> Vec<T> {
        (0..self.b.len())
            .map(|i| {
                let a = p.vertex(i + 1);
                let nearest = self.b.iter().map(|q| a.distance(*q)).fold(T::infinity(), T::min);
                a.distance(self.b[i]) - nearest
            })
            .collect()
    }
}

/// Reflects `o` across every edge line of `p`.
pub fn construct_focal_pair<T: Scalar>(p: &ConvexPolygon<T>, o: Point2<T>) -> Result<FocalPair<T>> {
    p.check_interior(o)?;
    let b: Vec<_> = (0..p.len()).map(|i| reflect_point(o, &p.supporting_line(i))).collect();
    let pair = FocalPair { o, b };

    let tol = T::tol(CONSTRUCTION_EPS) * (T::one() + p.diameter());
    let min_gap = pair.min_pairwise_distance();
    if !(min_gap > tol) {
        return Err(GeomError::Invariant(format!("focal points not distinct (min gap {min_gap})")));
    }
    let residual = pair.max_vertex_residual(p);
    if !(residual < tol) {
        return Err(GeomError::Invariant(format!("vertex distance residual {residual}")));
    }
    Ok(pair)
}
