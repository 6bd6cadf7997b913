use equidist::focal::{connected_focal_set, construct_focal_pair, reconstruct_and_compare};
use equidist::hausdorff::hausdorff_distance;
use equidist::numeric::{gap, GapField};
use equidist::{
    clip_convex_region, orientation, perpendicular_bisector, reflect_point, BBox, CompactSet, ConvexPolygon,
    HalfPlane, Line2, Orientation, Point2, Primitive, Segment2, Sign,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn point() -> impl Strategy<Value = Point2<f64>> {
    (-50.0..50.0f64, -50.0..50.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

fn line() -> impl Strategy<Value = Line2<f64>> {
    (0.0..std::f64::consts::TAU, -20.0..20.0f64)
        .prop_map(|(a, c)| Line2::new(Point2::new(a.cos(), a.sin()), c).unwrap())
}

fn compact_set() -> impl Strategy<Value = CompactSet<f64>> {
    prop::collection::vec((point(), point()), 1..5).prop_map(|pairs| {
        let items = pairs
            .into_iter()
            .map(|(a, b)| match Segment2::new(a, b) {
                Ok(s) => Primitive::Segment(s),
                Err(_) => Primitive::Point(a),
            })
            .collect();
        CompactSet::new(items).unwrap()
    })
}

fn polygon_and_point() -> impl Strategy<Value = (ConvexPolygon<f64>, Point2<f64>)> {
    (any::<u64>(), 3usize..40, 0.05..0.95f64, 0.0..1.0f64).prop_map(|(seed, n, w, s)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = ConvexPolygon::random(&mut rng, n).unwrap();
        // a convex combination of the centroid and a vertex stays interior
        let c = p.centroid();
        let v = p.vertex((s * n as f64) as usize);
        (p, c.lerp(v, w * 0.9))
    })
}

proptest! {
    #[test]
    fn reflection_is_an_involution(p in point(), l in line()) {
        let q = reflect_point(p, &l);
        prop_assert!(reflect_point(q, &l).distance(p) < 1e-10);
        // l bisects pq
        if p.distance(q) > 1e-9 {
            let b = perpendicular_bisector(p, q).unwrap();
            prop_assert!((b.normal().dot(l.normal()).abs() - 1.0).abs() < 1e-9);
            prop_assert!(l.distance(p.midpoint(q)) < 1e-10);
        }
    }

    #[test]
    fn bisector_points_are_equidistant(a in point(), b in point(), t in -100.0..100.0f64) {
        prop_assume!(a.distance(b) > 1e-6);
        let l = perpendicular_bisector(a, b).unwrap();
        let x = l.anchor() + l.direction() * t;
        prop_assert!((x.distance(a) - x.distance(b)).abs() < 1e-10 * (1.0 + x.norm()));
        prop_assert!(l.distance(a.midpoint(b)) < 1e-10 * (1.0 + a.norm().max(b.norm())));
    }

    #[test]
    fn set_distance_is_one_lipschitz(x in point(), y in point(), s in compact_set()) {
        prop_assert!((s.distance(x) - s.distance(y)).abs() <= x.distance(y) + 1e-12);
    }

    #[test]
    fn gap_is_two_lipschitz(x in point(), y in point(), k in compact_set(), l in compact_set()) {
        let f = GapField::new(k, l);
        prop_assert!((gap(x, &f) - gap(y, &f)).abs() <= 2.0 * x.distance(y) + 1e-12);
    }

    #[test]
    fn clipped_regions_are_convex(lines in prop::collection::vec((line(), any::<bool>()), 0..8)) {
        let hs: Vec<_> = lines
            .into_iter()
            .map(|(l, s)| HalfPlane::new(l, if s { Sign::Plus } else { Sign::Minus }))
            .collect();
        let bbox = BBox::square(30.0).unwrap();
        if let Some(region) = clip_convex_region(&hs, &bbox) {
            let v = region.vertices();
            let n = v.len();
            for i in 0..n {
                let o = orientation(v[i], v[(i + 1) % n], v[(i + 2) % n]);
                prop_assert!(o != Orientation::Right);
            }
            for q in v {
                prop_assert!(hs.iter().all(|h| h.contains(*q, 1e-9)));
            }
        }
    }

    #[test]
    fn focal_pair_invariants((p, o) in polygon_and_point()) {
        let fp = construct_focal_pair(&p, o).unwrap();
        for (u, v) in fp.vertex_residuals(&p) {
            prop_assert!(u < 1e-10 && v < 1e-10);
        }
        prop_assert!(fp.min_pairwise_distance() > 1e-9);
        for r in fp.vertex_cell_residuals(&p) {
            prop_assert!(r.abs() < 1e-9);
        }
    }

    #[test]
    fn exact_midset_round_trip((p, o) in polygon_and_point()) {
        let r = reconstruct_and_compare(&p, o).unwrap();
        prop_assert!(r.max_endpoint_error < 1e-8, "error {}", r.max_endpoint_error);
    }

    #[test]
    fn arc_chain_invariants((p, o) in polygon_and_point()) {
        let chain = connected_focal_set(&p, o).unwrap();
        prop_assert!(chain.closure_error() < 1e-9);
        prop_assert!(chain.circle_residual(o) < 1e-10);
    }

    #[test]
    fn hausdorff_axioms(a in compact_set(), b in compact_set(), c in compact_set()) {
        let pitch = 0.5;
        let ab = hausdorff_distance(&a, &b, pitch).unwrap();
        let ba = hausdorff_distance(&b, &a, pitch).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(hausdorff_distance(&a, &a, pitch).unwrap() < 1e-12);
        let bc = hausdorff_distance(&b, &c, pitch).unwrap();
        let ac = hausdorff_distance(&a, &c, pitch).unwrap();
        prop_assert!(ac <= ab + bc + 2.0 * pitch);
    }
}

#[test]
fn f32_pipeline_smoke() {
    let p = ConvexPolygon::<f32>::regular(6, 1.0).unwrap();
    let r = reconstruct_and_compare(&p, Point2::new(0.0, 0.0)).unwrap();
    assert!(r.max_endpoint_error < 1e-4);
}
