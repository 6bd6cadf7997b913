//! Numeric equidistant sets of arbitrary compact focal sets.
//!
//! The midset of `K` and `L` is the zero set of the gap field
//! `f(X) = d(X, K) − d(X, L)`, which is 2-Lipschitz. It is traced by marching
//! squares with every crossing refined by bisection along its grid edge.

mod contour;

pub use contour::{trace_zero_set, ContourGrid};

use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::geom::{BBox, CompactSet, Point2, Primitive};
use crate::hausdorff::hausdorff_distance;
use crate::parallel::Threads;
use crate::scalar::Scalar;

/// Fraction of grid nodes with a vanishing gap above which the midset is
/// considered thick.
pub const DEGENERATE_ZERO_FRACTION: f64 = 0.5;

/// `f(X) = d(X, k) − d(X, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GapField<T> {
    pub k: CompactSet<T>,
    pub l: CompactSet<T>,
}

impl<T: Scalar> GapField<T> {
    pub fn new(k: CompactSet<T>, l: CompactSet<T>) -> Self {
        Self { k, l }
    }

    #[inline]
    pub fn value(&self, x: Point2<T>) -> T {
        self.k.distance(x) - self.l.distance(x)
    }
}

/// `d(x, k) − d(x, l)`.
pub fn gap<T: Scalar>(x: Point2<T>, field: &GapField<T>) -> T {
    field.value(x)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MidsetNumeric<T> {
    /// Contour chains; closed chains repeat their first point at the end.
    pub polylines: Vec<Vec<Point2<T>>>,
    /// Largest grid spacing actually used (at most the requested pitch).
    pub resolution: T,
    /// Share of grid nodes where the gap vanished.
    pub zero_fraction: T,
    /// Set when the gap vanishes on a two-dimensional region; the contour is
    /// then unreliable.
    pub degenerate: bool,
}

impl<T: Scalar> MidsetNumeric<T> {
    pub fn vertex_count(&self) -> usize {
        self.polylines.iter().map(Vec::len).sum()
    }

    pub fn to_compact_set(&self) -> Result<CompactSet<T>> {
        CompactSet::new(self.polylines.iter().cloned().map(Primitive::Polyline).collect())
    }
}

/// Refinement target for crossing points at pitch `h`: `min(1e-9, h·1e-3)`.
pub fn refinement_tolerance<T: Scalar>(h: T) -> T {
    T::tol(1e-9).min(h * T::of(1e-3)).max(T::tol(0.0))
}

/// Traces `{f = 0}` inside `bbox` on a uniform grid of pitch at most `h`.
pub fn extract_midset<T: Scalar>(
    field: &GapField<T>,
    bbox: &BBox<T>,
    h: T,
    threads: Threads,
) -> Result<MidsetNumeric<T>> {
    if !(h > T::zero()) || !h.is_finite() {
        return Err(GeomError::BadParameter("grid pitch must be positive".into()));
    }
    let grid = ContourGrid::fit(bbox, h)?;
    let eval = |p: Point2<T>| field.value(p);
    let values = threads.install(|| {
        (0..grid.node_count())
            .into_par_iter()
            .map(|id| eval(grid.node(id)))
            .collect::<Vec<T>>()
    });

    let zero = T::tol(1e-12) * bbox.scale();
    let zeros = values.iter().filter(|v| v.abs() <= zero).count();
    let zero_fraction = T::of_usize(zeros) / T::of_usize(values.len());
    let degenerate = zero_fraction > T::of(DEGENERATE_ZERO_FRACTION);

    let polylines = if degenerate {
        Vec::new()
    } else {
        threads.install(|| trace_zero_set(&grid, &values, &eval, refinement_tolerance(h)))
    };
    Ok(MidsetNumeric { polylines, resolution: grid.pitch(), zero_fraction, degenerate })
}

/// Symmetric Hausdorff distance between the extracted contour and `reference`,
/// both sampled at half the grid pitch with exact distances on the far side.
pub fn hausdorff_to_reference<T: Scalar>(m: &MidsetNumeric<T>, reference: &CompactSet<T>) -> Result<T> {
    let contour = m.to_compact_set()?;
    hausdorff_distance(&contour, reference, m.resolution * T::of(0.5))
}
