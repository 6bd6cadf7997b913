use crate::error::Result;
use crate::focal::construct_focal_pair;
use crate::geom::{Arc2, ArcDirection, CompactSet, Point2, Primitive};
use crate::polygon::ConvexPolygon;
use crate::scalar::Scalar;

/// A closed chain of circular arcs: arc `i` is centred at `A_{i+1}` with
/// radius `|A_{i+1} O|` and runs from `B_i` to `B_{i+1}` on the side away from `O`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcChain<T> {
    pub arcs: Vec<Arc2<T>>,
}

impl<T: Scalar> ArcChain<T> {
    /// Largest gap between the end of arc `i` and the start of arc `i + 1`.
    pub fn closure_error(&self) -> T {
        let n = self.arcs.len();
        (0..n)
            .map(|i| self.arcs[i].end_point().distance(self.arcs[(i + 1) % n].start_point()))
            .fold(T::zero(), T::max)
    }

    /// Largest `||center − o| − radius|`; zero when every full circle passes through `o`.
    pub fn circle_residual(&self, o: Point2<T>) -> T {
        self.arcs
            .iter()
            .map(|a| (a.center().distance(o) - a.radius()).abs())
            .fold(T::zero(), T::max)
    }

    pub fn to_compact_set(&self) -> CompactSet<T> {
        CompactSet::new(self.arcs.iter().copied().map(Primitive::Arc).collect()).expect("non-empty chain")
    }
}

/// Connected focal set `M` for `(p, o)`. Of the two arcs joining `B_i` and
/// `B_{i+1}` on the circle about `A_{i+1}`, the one avoiding `O` is taken.
pub fn connected_focal_set<T: Scalar>(p: &ConvexPolygon<T>, o: Point2<T>) -> Result<ArcChain<T>> {
    let fp = construct_focal_pair(p, o)?;
    let n = p.len();
    let arcs = (0..n)
        .map(|i| {
            let center = p.vertex(i + 1);
            let radius = center.distance(o);
            let from = (fp.b[i] - center).angle();
            let to = (fp.b[(i + 1) % n] - center).angle();
            let ccw = Arc2::new(center, radius, from, to, ArcDirection::Ccw)?;
            if ccw.contains_angle((o - center).angle()) {
                Arc2::new(center, radius, from, to, ArcDirection::Cw)
            } else {
                Ok(ccw)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ArcChain { arcs })
}
