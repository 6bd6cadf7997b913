//! Scene documents: the input format of every subcommand.

use std::collections::BTreeMap;
use std::path::Path;

use equidist::hausdorff::{Curve, SampledCurve};
use equidist::{Arc2d, ArcDirection, BBoxd, CompactSetd, ConvexPolygond, Point2d, Primitive, Segment2d};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Finite focal set: the reflections of O across the edge lines.
    #[default]
    Points,
    /// Connected focal set: the chain of circular arcs through the reflections.
    Arcs,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Points => "points",
            Mode::Arcs => "arcs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum PrimitiveDoc {
    Point { at: [f64; 2] },
    Segment { a: [f64; 2], b: [f64; 2] },
    Arc { center: [f64; 2], radius: f64, start_angle: f64, end_angle: f64, #[serde(default)] clockwise: bool },
    Polyline { points: Vec<[f64; 2]> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveDoc {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    Sampled { points: Vec<[f64; 2]>, #[serde(default = "yes")] closed: bool, pitch: f64 },
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    Polygon,
    Focal,
    Voronoi,
    Midset,
    Arcs,
    Contour,
}

impl Layer {
    pub const ALL: [Layer; 6] = [Layer::Polygon, Layer::Focal, Layer::Voronoi, Layer::Midset, Layer::Arcs, Layer::Contour];

    pub fn name(self) -> &'static str {
        match self {
            Layer::Polygon => "polygon",
            Layer::Focal => "focal",
            Layer::Voronoi => "voronoi",
            Layer::Midset => "midset",
            Layer::Arcs => "arcs",
            Layer::Contour => "contour",
        }
    }

    pub fn default_color(self) -> &'static str {
        match self {
            Layer::Polygon => "#000000",
            Layer::Focal => "#c0392b",
            Layer::Voronoi => "#7f8c8d",
            Layer::Midset => "#2471a3",
            Layer::Arcs => "#1e8449",
            Layer::Contour => "#8e44ad",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FigureDoc {
    #[serde(default)]
    pub layers: Vec<Layer>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stroke_width: Option<f64>,
    /// Per-layer stroke colors keyed by layer name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub colors: BTreeMap<Layer, String>,
}

/// Every field except `version` is optional; each subcommand checks for the
/// fields it needs.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polygon: Option<Vec<[f64; 2]>>,
    /// Interior point; defaults to the vertex centroid.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub o: Option<[f64; 2]>,
    /// Replaces the constructed reflections in points mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focal_points: Option<Vec<[f64; 2]>>,
    /// Explicit focal sets for `midset`, used when there is no polygon.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<PrimitiveDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<PrimitiveDoc>>,
    /// Exact midset of `k` and `l`, if known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<Vec<PrimitiveDoc>>,
    /// `[xmin, ymin, xmax, ymax]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bbox: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pitch: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_list: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<FigureDoc>,
}

impl Scene {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read scene {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let scene: Scene = serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("scene: {e}")))?;
        if scene.version != SCHEMA_VERSION {
            return Err(CliError::Invalid(format!(
                "scene: unsupported version {}, expected {SCHEMA_VERSION}",
                scene.version
            )));
        }
        Ok(scene)
    }

    pub fn polygon(&self) -> Result<Option<ConvexPolygond>, CliError> {
        self.polygon
            .as_ref()
            .map(|v| ConvexPolygond::new(v.iter().copied().map(Point2d::from).collect()))
            .transpose()
            .map_err(|e| CliError::Invalid(format!("polygon: {e}")))
    }

    pub fn require_polygon(&self) -> Result<ConvexPolygond, CliError> {
        self.polygon()?.ok_or_else(|| CliError::Invalid("scene has no polygon".into()))
    }

    /// `o` if given, else the vertex centroid.
    pub fn o_for(&self, p: &ConvexPolygond) -> Point2d {
        self.o.map(Point2d::from).unwrap_or_else(|| p.centroid())
    }

    pub fn bbox(&self) -> Result<Option<BBoxd>, CliError> {
        self.bbox
            .map(|[x0, y0, x1, y1]| BBoxd::new(Point2d::new(x0, y0), Point2d::new(x1, y1)))
            .transpose()
            .map_err(|e| CliError::Invalid(format!("bbox: {e}")))
    }

    pub fn curve(&self) -> Result<Curve<f64>, CliError> {
        let doc = self.curve.as_ref().ok_or_else(|| CliError::Invalid("scene has no curve".into()))?;
        let curve = match doc {
            CurveDoc::Circle { radius } => Curve::Circle { radius: *radius },
            CurveDoc::Ellipse { a, b } => Curve::Ellipse { a: *a, b: *b },
            CurveDoc::Sampled { points, closed, pitch } => Curve::Sampled(
                SampledCurve::new(points.iter().copied().map(Point2d::from).collect(), *closed, *pitch)
                    .map_err(|e| CliError::Invalid(format!("curve: {e}")))?,
            ),
        };
        curve.validate().map_err(|e| CliError::Invalid(format!("curve: {e}")))?;
        Ok(curve)
    }
}

pub fn primitive_from_doc(doc: &PrimitiveDoc) -> Result<Primitive<f64>, CliError> {
    let bad = |e: equidist::GeomError| CliError::Invalid(format!("primitive: {e}"));
    Ok(match doc {
        PrimitiveDoc::Point { at } => {
            Primitive::Point(Point2d::try_new(at[0], at[1]).map_err(bad)?)
        }
        PrimitiveDoc::Segment { a, b } => {
            Primitive::Segment(Segment2d::new(Point2d::from(*a), Point2d::from(*b)).map_err(bad)?)
        }
        PrimitiveDoc::Arc { center, radius, start_angle, end_angle, clockwise } => {
            let direction = if *clockwise { ArcDirection::Cw } else { ArcDirection::Ccw };
            Primitive::Arc(Arc2d::new(Point2d::from(*center), *radius, *start_angle, *end_angle, direction).map_err(bad)?)
        }
        PrimitiveDoc::Polyline { points } => {
            if points.is_empty() || points.iter().any(|p| !p[0].is_finite() || !p[1].is_finite()) {
                return Err(CliError::Invalid("primitive: polyline needs finite points".into()));
            }
            Primitive::Polyline(points.iter().copied().map(Point2d::from).collect())
        }
    })
}

pub fn set_from_docs(name: &str, docs: &[PrimitiveDoc]) -> Result<CompactSetd, CliError> {
    let items = docs.iter().map(primitive_from_doc).collect::<Result<Vec<_>, _>>()?;
    CompactSetd::new(items).map_err(|e| CliError::Invalid(format!("{name}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_version_and_fields() {
        assert!(Scene::parse(r#"{"version": 2}"#).is_err());
        assert!(Scene::parse(r#"{"version": 1, "polygn": []}"#).is_err());
        assert!(Scene::parse(r#"{"version": 1}"#).is_ok());
    }

    #[test]
    fn polygon_errors_name_the_vertex() {
        let s = Scene::parse(r#"{"version": 1, "polygon": [[0,0],[2,0],[1,0.5],[2,2],[0,2]]}"#).unwrap();
        let msg = s.polygon().unwrap_err().to_string();
        assert!(msg.contains("vertex 2"), "{msg}");
    }

    #[test]
    fn layers_parse_by_name() {
        let s = Scene::parse(r##"{"version": 1, "figure": {"layers": ["polygon", "arcs"], "colors": {"arcs": "#00ff00"}}}"##).unwrap();
        let fig = s.figure.unwrap();
        assert_eq!(fig.layers, vec![Layer::Polygon, Layer::Arcs]);
        assert_eq!(fig.colors[&Layer::Arcs], "#00ff00");
    }
}
