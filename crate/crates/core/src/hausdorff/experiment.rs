use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::focal::construct_focal_pair;
use crate::geom::{BBox, CompactSet, Point2, Primitive};
use crate::hausdorff::{hausdorff_distance, inscribed_ngon, Curve};
use crate::numeric::{extract_midset, GapField};
use crate::parallel::Threads;
use crate::scalar::Scalar;

/// One polygon size of a convergence run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow<T> {
    pub n: usize,
    /// `d_H(P_n, C)`.
    pub dh_polygon: T,
    /// `d_H(midset_n ∩ D̄(R), C ∩ D̄(R))` for the numeric midset of `({O}, L_n)`.
    pub dh_midset: T,
    /// `d_H(L_n, L_{n_max})`.
    pub dh_focal: T,
}

/// Pieces of `polyline` inside the closed disk of radius `radius` about the origin.
pub fn clip_to_disk<T: Scalar>(polyline: &[Point2<T>], radius: T) -> Vec<Vec<Point2<T>>> {
    if polyline.len() == 1 {
        return if polyline[0].norm() <= radius { vec![polyline.to_vec()] } else { Vec::new() };
    }
    let mut pieces = Vec::new();
    let mut current: Vec<Point2<T>> = Vec::new();
    for w in polyline.windows(2) {
        let (p, q) = (w[0], w[1]);
        match segment_in_disk(p, q, radius) {
            None => {
                if current.len() > 1 {
                    pieces.push(std::mem::take(&mut current));
                }
                current.clear();
            }
            Some((t0, t1)) => {
                if t0 > T::zero() || current.is_empty() {
                    if current.len() > 1 {
                        pieces.push(std::mem::take(&mut current));
                    }
                    current = vec![p.lerp(q, t0)];
                }
                current.push(p.lerp(q, t1));
                if t1 < T::one() {
                    pieces.push(std::mem::take(&mut current));
                }
            }
        }
    }
    if current.len() > 1 {
        pieces.push(current);
    }
    pieces
}

/// Parameter interval of `p + t(q − p)`, `t ∈ [0, 1]`, inside the disk.
fn segment_in_disk<T: Scalar>(p: Point2<T>, q: Point2<T>, radius: T) -> Option<(T, T)> {
    let d = q - p;
    let a = d.norm_squared();
    let b = p.dot(d);
    let c = p.norm_squared() - radius * radius;
    if a == T::zero() {
        return (c <= T::zero()).then_some((T::zero(), T::one()));
    }
    let disc = b * b - a * c;
    if disc < T::zero() {
        return None;
    }
    let s = disc.sqrt();
    let t0 = ((-b - s) / a).max(T::zero());
    let t1 = ((-b + s) / a).min(T::one());
    (t0 <= t1).then_some((t0, t1))
}

/// Inscribed `n`-gons `P_n` of `curve`, their focal sets `L_n` about the fixed
/// point `o`, and the numeric midsets of `({o}, L_n)` inside `D̄(radius)`,
/// measured against the curve. Hausdorff distances use pitch `h / 2`.
pub fn convergence_experiment<T: Scalar>(
    curve: &Curve<T>,
    o: Point2<T>,
    n_list: &[usize],
    radius: T,
    h: T,
    threads: Threads,
) -> Result<Vec<ConvergenceRow<T>>> {
    curve.validate()?;
    if n_list.is_empty() {
        return Err(GeomError::BadParameter("empty list of polygon sizes".into()));
    }
    if let Some(&n) = n_list.iter().find(|&&n| n < 3) {
        return Err(GeomError::BadParameter(format!("polygon size {n} < 3")));
    }
    if !(h > T::zero()) {
        return Err(GeomError::BadParameter("grid pitch must be positive".into()));
    }
    if !(radius > curve.bounding_radius()) {
        return Err(GeomError::BadParameter("the disk must contain the curve".into()));
    }
    if !curve.contains(o) {
        return Err(GeomError::BadParameter("O must lie inside the curve".into()));
    }
    let pitch = h * T::of(0.5);
    let limit = curve.to_compact_set(pitch);
    let n_max = *n_list.iter().max().expect("non-empty");
    let reference = construct_focal_pair(&inscribed_ngon(curve, n_max)?, o)?.l();
    let bbox = BBox::square(radius)?;

    threads.install(|| {
        n_list
            .par_iter()
            .map(|&n| {
                let polygon = inscribed_ngon(curve, n)?;
                let fp = construct_focal_pair(&polygon, o)?;
                let boundary = CompactSet::new(vec![polygon.boundary()])?;
                let field = GapField::new(fp.k(), fp.l());
                let midset = extract_midset(&field, &bbox, h, Threads::default())?;
                let clipped: Vec<Primitive<T>> = midset
                    .polylines
                    .iter()
                    .flat_map(|pl| clip_to_disk(pl, radius))
                    .map(Primitive::Polyline)
                    .collect();
                let clipped = CompactSet::new(clipped)?;
                Ok(ConvergenceRow {
                    n,
                    dh_polygon: hausdorff_distance(&boundary, &limit, pitch)?,
                    dh_midset: hausdorff_distance(&clipped, &limit, pitch)?,
                    dh_focal: hausdorff_distance(&fp.l(), &reference, pitch)?,
                })
            })
            .collect()
    })
}

/// `dh_midset` never grows by more than `2h` from one row to the next and the
/// last value is below `threshold`.
pub fn convergence_holds<T: Scalar>(rows: &[ConvergenceRow<T>], h: T, threshold: T) -> bool {
    let slack = T::of(2.0) * h;
    let monotone = rows.windows(2).all(|w| w[1].dh_midset <= w[0].dh_midset + slack);
    monotone && rows.last().is_some_and(|r| r.dh_midset < threshold)
}
