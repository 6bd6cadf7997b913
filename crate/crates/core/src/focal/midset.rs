use crate::error::{GeomError, Result};
use crate::focal::{construct_focal_pair, voronoi_cells, FocalPair};
use crate::geom::{clip_line, perpendicular_bisector, BBox, CompactSet, Primitive, Segment2};
use crate::focal::default_bbox;
use crate::geom::Point2;
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// The equidistant set of `{O}` and `{B_i}`, one segment per focal point.
#[derive(Debug, Clone, PartialEq)]
pub struct MidsetExact<T> {
    pub pieces: Vec<Segment2<T>>,
}

impl<T: Scalar> MidsetExact<T> {
    pub fn to_compact_set(&self) -> CompactSet<T> {
        CompactSet::new(self.pieces.iter().copied().map(Primitive::Segment).collect()).expect("non-empty")
    }
}

/// Piece `i` is the perpendicular bisector of `O B_i` intersected with the
/// Voronoi cell of `B_i` (and `bbox`).
pub fn exact_midset<T: Scalar>(fp: &FocalPair<T>, bbox: &BBox<T>) -> Result<MidsetExact<T>> {
    let cells = voronoi_cells(&fp.b, bbox)?;
    let pieces = cells
        .iter()
        .map(|cell| {
            let line = perpendicular_bisector(fp.o, cell.site)?;
            clip_line(&line, &cell.halfplanes, bbox)
                .ok_or_else(|| GeomError::Invariant(format!("midset piece {} is empty", cell.site_index)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MidsetExact { pieces })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionReport<T> {
    pub max_endpoint_error: T,
    /// For edge `i`: `max(|start − A_i|, |end − A_{i+1}|)`.
    pub per_edge_errors: Vec<T>,
}

/// Builds the focal pair for `(p, o)`, recovers the midset, and measures how far
/// each recovered piece is from the corresponding edge.
pub fn reconstruct_and_compare<T: Scalar>(p: &ConvexPolygon<T>, o: Point2<T>) -> Result<ReconstructionReport<T>> {
    let fp = construct_focal_pair(p, o)?;
    let midset = exact_midset(&fp, &default_bbox(p))?;
    let per_edge_errors: Vec<T> = midset
        .pieces
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let (a, b) = p.edge(i);
            s.a().distance(a).max(s.b().distance(b))
        })
        .collect();
    let max_endpoint_error = per_edge_errors.iter().copied().fold(T::zero(), T::max);
    Ok(ReconstructionReport { max_endpoint_error, per_edge_errors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::focal::tests::{square, triangle_345};
    use rand::SeedableRng;

    #[test]
    fn square_pieces_are_edges() {
        let sq = square();
        let fp = construct_focal_pair(&sq, Point2::new(0.0, 0.0)).unwrap();
        let m = exact_midset(&fp, &BBox::square(4.0).unwrap()).unwrap();
        // edge 1 is x = 1: bisector of O and (2, 0) clipped to {x ≥ |y|}
        assert!(m.pieces[1].a().distance(Point2::new(1.0, -1.0)) < 1e-12);
        assert!(m.pieces[1].b().distance(Point2::new(1.0, 1.0)) < 1e-12);
        let r = reconstruct_and_compare(&sq, Point2::new(0.0, 0.0)).unwrap();
        assert!(r.max_endpoint_error < 1e-10);
        assert_eq!(r.per_edge_errors.len(), 4);
    }

    #[test]
    fn triangle_pieces_are_edges() {
        let r = reconstruct_and_compare(&triangle_345(), Point2::new(1.0, 1.0)).unwrap();
        assert!(r.max_endpoint_error < 1e-9);
    }

    #[test]
    fn two_sites_without_polygon_rejected() {
        let fp = FocalPair { o: Point2::new(0.0, 0.0), b: vec![Point2::new(2.0, 0.0)] };
        assert!(matches!(
            exact_midset(&fp, &BBox::square(4.0).unwrap()),
            Err(GeomError::TooFewSites { .. })
        ));
    }

    #[test]
    fn random_twelve_gon() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(12);
        let p: ConvexPolygon<f64> = ConvexPolygon::random(&mut rng, 12).unwrap();
        let r = reconstruct_and_compare(&p, p.centroid()).unwrap();
        assert!(r.max_endpoint_error < 1e-8, "{}", r.max_endpoint_error);
    }

    #[test]
    fn regular_64_gon() {
        let p = ConvexPolygon::regular(64, 1.0).unwrap();
        let r = reconstruct_and_compare(&p, Point2::new(0.0, 0.0)).unwrap();
        assert!(r.max_endpoint_error < 1e-8, "{}", r.max_endpoint_error);
    }
}
