use crate::error::{GeomError, Result};
use crate::geom::{clip_convex_region, perpendicular_bisector, BBox, HalfPlane, Point2, Sign};
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// Voronoi cell of one site, kept both as its defining half-planes `F_ij`
/// and as the realized region inside a bounding box.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiCell<T> {
    pub site_index: usize,
    pub site: Point2<T>,
    /// `F_ij` for every `j ≠ i`, in increasing `j`.
    pub halfplanes: Vec<HalfPlane<T>>,
    /// `None` when the cell misses the bounding box entirely.
    pub region: Option<ConvexPolygon<T>>,
}

impl<T: Scalar> VoronoiCell<T> {
    pub fn contains(&self, p: Point2<T>, tol: T) -> bool {
        self.halfplanes.iter().all(|h| h.contains(p, tol))
    }
}

/// Cells `V_i = ∩_{j≠i} F_ij`, each clipped to `bbox`. Direct O(n²)
/// half-plane intersection.
pub fn voronoi_cells<T: Scalar>(sites: &[Point2<T>], bbox: &BBox<T>) -> Result<Vec<VoronoiCell<T>>> {
    if sites.len() < 2 {
        return Err(GeomError::TooFewSites { needed: 2, got: sites.len() });
    }
    let scale = sites.iter().map(|p| p.norm()).fold(T::one(), T::max);
    for (j, b) in sites.iter().enumerate() {
        for (i, a) in sites[..j].iter().enumerate() {
            if a.distance(*b) <= T::tol(1e-12) * scale {
                return Err(GeomError::DuplicateSites(i, j));
            }
        }
    }
    Ok(sites
        .iter()
        .enumerate()
        .map(|(i, &site)| {
            let halfplanes: Vec<_> = sites
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &other)| {
                    // the bisector normal points from `site` to `other`
                    let line = perpendicular_bisector(site, other).expect("distinct sites");
                    HalfPlane::new(line, Sign::Minus)
                })
                .collect();
            let region = clip_convex_region(&halfplanes, bbox);
            VoronoiCell { site_index: i, site, halfplanes, region }
        })
        .collect())
}

/// The polygon's bounding box grown by four diameters on every side; it
/// contains every reflected focal point.
pub fn default_bbox<T: Scalar>(p: &ConvexPolygon<T>) -> BBox<T> {
    p.bbox().inflated(T::of(4.0) * p.diameter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn nearest(sites: &[Point2<f64>], q: Point2<f64>) -> f64 {
        sites.iter().map(|s| s.distance(q)).fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn four_sites_on_axes() {
        let sites = [p(2.0, 0.0), p(0.0, 2.0), p(-2.0, 0.0), p(0.0, -2.0)];
        let bbox = BBox::square(4.0).unwrap();
        let cells = voronoi_cells(&sites, &bbox).unwrap();
        let region = cells[0].region.as_ref().unwrap();
        let expected = [p(0.0, 0.0), p(4.0, -4.0), p(4.0, 4.0)];
        assert_eq!(region.len(), 3);
        for (a, b) in region.vertices().iter().zip(expected.iter()) {
            assert!(a.distance(*b) < 1e-12);
        }
        for c in &cells {
            assert!(c.region.as_ref().unwrap().contains(c.site, 1e-12));
        }
    }

    #[test]
    fn two_sites_split_the_box() {
        let sites = [p(-1.0, 0.0), p(1.0, 0.0)];
        let bbox = BBox::square(2.0).unwrap();
        let cells = voronoi_cells(&sites, &bbox).unwrap();
        assert!((cells[0].region.as_ref().unwrap().area() - 8.0).abs() < 1e-12);
        assert!((cells[1].region.as_ref().unwrap().area() - 8.0).abs() < 1e-12);
        assert!(cells[0].region.as_ref().unwrap().vertices().iter().all(|v| v.x <= 1e-12));
    }

    #[test]
    fn errors() {
        let bbox = BBox::square(2.0).unwrap();
        assert_eq!(
            voronoi_cells(&[p(0.0, 0.0)], &bbox),
            Err(GeomError::TooFewSites { needed: 2, got: 1 })
        );
        assert_eq!(
            voronoi_cells(&[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 0.0)], &bbox),
            Err(GeomError::DuplicateSites(0, 2))
        );
    }

    #[test]
    fn nearest_site_property_on_grid() {
        // focal points of the 3-4-5 triangle about its incenter; oracle is a
        // brute-force nearest site per grid point
        let sites = [p(1.0, -1.0), p(2.2, 2.6), p(-1.0, 1.0)];
        let bbox = BBox::square(6.0).unwrap();
        let cells = voronoi_cells(&sites, &bbox).unwrap();
        let mut covered = 0;
        for i in 0..100 {
            for j in 0..100 {
                let q = p(-6.0 + 0.12 * i as f64 + 0.06, -6.0 + 0.12 * j as f64 + 0.06);
                let best = nearest(&sites, q);
                let mut inside_any = false;
                for c in &cells {
                    let region = c.region.as_ref().unwrap();
                    if region.contains(q, 1e-12) {
                        inside_any = true;
                        assert!((q.distance(c.site) - best).abs() < 1e-9);
                    }
                }
                if inside_any {
                    covered += 1;
                }
            }
        }
        assert_eq!(covered, 10_000);
    }
}
