//! Marching squares over a uniform grid.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::geom::{BBox, Point2};
use crate::scalar::Scalar;

const MAX_BISECTIONS: usize = 200;

/// Uniform node lattice covering a bounding box exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourGrid<T> {
    bbox: BBox<T>,
    nx: usize,
    ny: usize,
    hx: T,
    hy: T,
}

impl<T: Scalar> ContourGrid<T> {
    /// Smallest number of cells per axis such that spacing does not exceed `h`.
    pub fn fit(bbox: &BBox<T>, h: T) -> Result<Self> {
        let cells = |len: T| (len / h).ceil().to_usize().unwrap_or(1).max(1);
        let (nx, ny) = (cells(bbox.width()), cells(bbox.height()));
        Ok(Self {
            bbox: *bbox,
            nx,
            ny,
            hx: bbox.width() / T::of_usize(nx),
            hy: bbox.height() / T::of_usize(ny),
        })
    }

    pub fn cells(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn pitch(&self) -> T {
        self.hx.max(self.hy)
    }

    pub fn node_count(&self) -> usize {
        (self.nx + 1) * (self.ny + 1)
    }

    fn node_id(&self, i: usize, j: usize) -> usize {
        j * (self.nx + 1) + i
    }

    fn coord(min: T, max: T, step: T, k: usize, last: usize) -> T {
        if k == last {
            max
        } else {
            min + step * T::of_usize(k)
        }
    }

    /// Node by row-major id.
    pub fn node(&self, id: usize) -> Point2<T> {
        let (i, j) = (id % (self.nx + 1), id / (self.nx + 1));
        let (lo, hi) = (self.bbox.min(), self.bbox.max());
        Point2::new(
            Self::coord(lo.x, hi.x, self.hx, i, self.nx),
            Self::coord(lo.y, hi.y, self.hy, j, self.ny),
        )
    }

    fn horizontal_edges(&self) -> usize {
        self.nx * (self.ny + 1)
    }

    /// Node ids at the ends of a grid edge. Horizontal edges come first,
    /// numbered row-major, then vertical ones.
    fn edge_nodes(&self, edge: usize) -> (usize, usize) {
        if edge < self.horizontal_edges() {
            let (i, j) = (edge % self.nx, edge / self.nx);
            (self.node_id(i, j), self.node_id(i + 1, j))
        } else {
            let e = edge - self.horizontal_edges();
            let (i, j) = (e % (self.nx + 1), e / (self.nx + 1));
            (self.node_id(i, j), self.node_id(i, j + 1))
        }
    }

    /// Edge ids of cell `(i, j)`: bottom, right, top, left.
    fn cell_edges(&self, i: usize, j: usize) -> [usize; 4] {
        let h = self.horizontal_edges();
        [
            j * self.nx + i,
            h + j * (self.nx + 1) + i + 1,
            (j + 1) * self.nx + i,
            h + j * (self.nx + 1) + i,
        ]
    }
}

/// Edge pairs (as indices into bottom, right, top, left) per corner mask;
/// corners are bit 0 = bottom-left, 1 = bottom-right, 2 = top-right,
/// 3 = top-left. Saddles (5 and 10) are resolved separately.
const CASES: [&[(usize, usize)]; 16] = [
    &[],
    &[(3, 0)],
    &[(0, 1)],
    &[(3, 1)],
    &[(1, 2)],
    &[],
    &[(0, 2)],
    &[(3, 2)],
    &[(2, 3)],
    &[(0, 2)],
    &[],
    &[(1, 2)],
    &[(1, 3)],
    &[(0, 1)],
    &[(3, 0)],
    &[],
];

/// Traces the zero set of a field sampled at every grid node (`values`,
/// row-major) and returns chains of crossing points. Each crossing is
/// refined by bisection along its edge until `|f| < tol`.
pub fn trace_zero_set<T, F>(grid: &ContourGrid<T>, values: &[T], eval: &F, tol: T) -> Vec<Vec<Point2<T>>>
where
    T: Scalar,
    F: Fn(Point2<T>) -> T + Sync,
{
    let positive = |v: T| v >= T::zero();
    let (nx, ny) = grid.cells();

    let mut segments: Vec<(usize, usize)> = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let corners = [
                grid.node_id(i, j),
                grid.node_id(i + 1, j),
                grid.node_id(i + 1, j + 1),
                grid.node_id(i, j + 1),
            ];
            let mask = corners
                .iter()
                .enumerate()
                .fold(0usize, |m, (bit, &id)| m | (usize::from(positive(values[id])) << bit));
            let edges = grid.cell_edges(i, j);
            let pairs: &[(usize, usize)] = match mask {
                5 | 10 => {
                    let center = grid.node(corners[0]).midpoint(grid.node(corners[2]));
                    // which diagonal pair the center joins decides the split
                    let center_positive = positive(eval(center));
                    match (mask, center_positive) {
                        (5, true) | (10, false) => &[(0, 1), (2, 3)],
                        _ => &[(3, 0), (1, 2)],
                    }
                }
                m => CASES[m],
            };
            segments.extend(pairs.iter().map(|&(a, b)| (edges[a], edges[b])));
        }
    }
    if segments.is_empty() {
        return Vec::new();
    }

    let mut used: Vec<usize> = segments.iter().flat_map(|&(a, b)| [a, b]).collect();
    used.sort_unstable();
    used.dedup();
    let crossings: Vec<Point2<T>> = used
        .par_iter()
        .map(|&edge| {
            let (p, q) = grid.edge_nodes(edge);
            refine(grid.node(p), values[p], grid.node(q), values[q], eval, tol)
        })
        .collect();
    let point_of = |edge: usize| crossings[used.binary_search(&edge).expect("crossing computed")];

    stitch(&segments)
        .into_iter()
        .map(|chain| {
            let mut pts: Vec<Point2<T>> = chain.into_iter().map(point_of).collect();
            let closed = pts.len() > 2 && pts.first() == pts.last();
            pts.dedup_by(|b, a| a.distance(*b) <= tol);
            if closed && pts.len() > 1 && pts.first() != pts.last() {
                let first = pts[0];
                pts.push(first);
            }
            pts
        })
        .collect()
}

/// Bisection for a sign change of a continuous `f` between `p` and `q`.
fn refine<T, F>(mut p: Point2<T>, mut fp: T, mut q: Point2<T>, mut fq: T, eval: &F, tol: T) -> Point2<T>
where
    T: Scalar,
    F: Fn(Point2<T>) -> T,
{
    let p_positive = fp >= T::zero();
    for _ in 0..MAX_BISECTIONS {
        if fp.abs() < tol {
            return p;
        }
        if fq.abs() < tol {
            return q;
        }
        let m = p.midpoint(q);
        if m == p || m == q {
            break;
        }
        let fm = eval(m);
        if (fm >= T::zero()) == p_positive {
            p = m;
            fp = fm;
        } else {
            q = m;
            fq = fm;
        }
    }
    if fp.abs() <= fq.abs() {
        p
    } else {
        q
    }
}

/// Joins segments sharing an edge id into chains. Every edge id occurs in at
/// most two segments, so chains are paths or cycles; cycles repeat their
/// first id at the end. Open chains are emitted first, each group in
/// ascending order of its smallest start id.
fn stitch(segments: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut incident: HashMap<usize, Vec<usize>> = HashMap::new();
    for (s, &(a, b)) in segments.iter().enumerate() {
        incident.entry(a).or_default().push(s);
        incident.entry(b).or_default().push(s);
    }
    let mut starts: Vec<usize> = incident.keys().copied().collect();
    starts.sort_unstable();
    let mut used = vec![false; segments.len()];
    let mut chains = Vec::new();

    let walk = |start: usize, used: &mut Vec<bool>| -> Option<Vec<usize>> {
        let mut chain = vec![start];
        let mut at = start;
        loop {
            let next = incident[&at].iter().copied().find(|&s| !used[s]);
            let Some(s) = next else { break };
            used[s] = true;
            let (a, b) = segments[s];
            at = if a == at { b } else { a };
            chain.push(at);
        }
        (chain.len() > 1).then_some(chain)
    };

    for &e in &starts {
        if incident[&e].len() == 1 && !used[incident[&e][0]] {
            chains.extend(walk(e, &mut used));
        }
    }
    for &e in &starts {
        if incident[&e].iter().any(|&s| !used[s]) {
            chains.extend(walk(e, &mut used));
        }
    }
    chains
}
