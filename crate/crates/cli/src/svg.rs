//! Deterministic SVG figures. World coordinates are y-up; a single group
//! transform maps them onto the canvas, which is fitted to the scene with a
//! 5% margin. Strokes do not scale with the transform.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use equidist::focal::{connected_focal_set, exact_midset, voronoi_cells};
use equidist::numeric::{extract_midset, GapField};
use equidist::parallel::Threads;
use equidist::{Arc2d, ArcDirection, BBoxd, CompactSetd, Point2d, Primitive};

use crate::commands::{default_pitch, PolygonScene, Report};
use crate::error::CliError;
use crate::fmt::num;
use crate::scene::{set_from_docs, FigureDoc, Layer, Mode, Scene};

pub const DEFAULT_WIDTH: f64 = 800.0;
pub const DEFAULT_STROKE: f64 = 1.5;
pub const MARGIN: f64 = 0.05;
/// Bottom to top.
pub const DRAW_ORDER: [Layer; 6] = [Layer::Voronoi, Layer::Contour, Layer::Midset, Layer::Arcs, Layer::Polygon, Layer::Focal];

#[derive(Debug, Clone, PartialEq)]
enum Shape {
    Dot(Point2d),
    /// Dot drawn in black regardless of the layer color.
    Anchor(Point2d),
    Line(Vec<Point2d>),
    Dashed(Point2d, Point2d),
    Loop(Vec<Point2d>),
    Arc(Arc2d),
}

/// World-to-canvas map `(x, y) ↦ (s·x + tx, −s·y + ty)`.
struct Frame {
    width: f64,
    height: f64,
    scale: f64,
    tx: f64,
    ty: f64,
}

impl Frame {
    fn fit(view: &BBoxd, width: Option<f64>, height: Option<f64>) -> Result<Self, CliError> {
        let width = width.unwrap_or(DEFAULT_WIDTH);
        let height = height.unwrap_or_else(|| (width * view.height() / view.width()).round());
        if !(width >= 1.0 && height >= 1.0 && width.is_finite() && height.is_finite()) {
            return Err(CliError::Invalid("figure canvas must be at least 1x1".into()));
        }
        let scale = (width / view.width()).min(height / view.height());
        let c = view.center();
        Ok(Self { width, height, scale, tx: 0.5 * width - scale * c.x, ty: 0.5 * height + scale * c.y })
    }
}

fn primitive_shapes(item: &Primitive<f64>) -> Vec<Shape> {
    match item {
        Primitive::Point(p) => vec![Shape::Dot(*p)],
        Primitive::Segment(s) => vec![Shape::Line(vec![s.a(), s.b()])],
        Primitive::Arc(a) => vec![Shape::Arc(*a)],
        Primitive::Polyline(pts) if pts.len() == 1 => vec![Shape::Dot(pts[0])],
        Primitive::Polyline(pts) => vec![Shape::Line(pts.clone())],
    }
}

fn set_shapes(set: &CompactSetd) -> Vec<Shape> {
    set.items().iter().flat_map(primitive_shapes).collect()
}

fn extent(points: impl IntoIterator<Item = Point2d>) -> Option<(Point2d, Point2d)> {
    points.into_iter().fold(None, |acc, p| match acc {
        None => Some((p, p)),
        Some((lo, hi)) => Some((Point2d::new(lo.x.min(p.x), lo.y.min(p.y)), Point2d::new(hi.x.max(p.x), hi.y.max(p.y)))),
    })
}

/// Tight box around `points` plus the margin; degenerate extents get unit size.
fn view_around(points: Vec<Point2d>) -> Result<BBoxd, CliError> {
    let (lo, hi) = extent(points).ok_or_else(|| CliError::Invalid("nothing to draw".into()))?;
    let side = (hi.x - lo.x).max(hi.y - lo.y).max(f64::EPSILON.sqrt());
    let pad = MARGIN * side;
    let half = |a: f64, b: f64| (0.5 * (b - a)).max(0.5 * side * 1e-3) + pad;
    let (cx, cy) = (0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
    let (hx, hy) = (half(lo.x, hi.x), half(lo.y, hi.y));
    Ok(BBoxd::new(Point2d::new(cx - hx, cy - hy), Point2d::new(cx + hx, cy + hy))?)
}

fn layer_set(requested: &[Layer]) -> Result<BTreeSet<Layer>, CliError> {
    if requested.is_empty() {
        return Err(CliError::Invalid("no figure layers requested".into()));
    }
    Ok(requested.iter().copied().collect())
}

fn missing(layer: Layer, what: &str) -> CliError {
    CliError::Invalid(format!("layer '{}' needs {what} in the scene", layer.name()))
}

/// Shapes of every requested layer in draw order, the view box, and a note
/// when a layer came out degenerate.
struct Computed {
    shapes: Vec<(Layer, Vec<Shape>)>,
    view: BBoxd,
    note: Option<String>,
}

fn compute_layers(
    scene: &Scene,
    layers: &BTreeSet<Layer>,
    pitch: Option<f64>,
    mode: Mode,
) -> Result<Computed, CliError> {
    let ps = if scene.polygon.is_some() { Some(PolygonScene::from_scene(scene)?) } else { None };
    let sets = match (&scene.k, &scene.l) {
        (Some(k), Some(l)) if ps.is_none() => Some((set_from_docs("k", k)?, set_from_docs("l", l)?)),
        _ => None,
    };
    for &layer in layers {
        let ok = match layer {
            Layer::Focal | Layer::Contour => ps.is_some() || sets.is_some(),
            _ => ps.is_some(),
        };
        if !ok {
            let what = if matches!(layer, Layer::Focal | Layer::Contour) { "a polygon or focal sets k and l" } else { "a polygon" };
            return Err(missing(layer, what));
        }
    }

    let pair = ps.as_ref().map(|ps| ps.points_pair(scene)).transpose()?;
    let chain = match (&ps, layers.contains(&Layer::Arcs) || (layers.contains(&Layer::Contour) && mode == Mode::Arcs)) {
        (Some(ps), true) => Some(connected_focal_set(&ps.polygon, ps.pair.o)?),
        _ => None,
    };

    let view = match scene.bbox()? {
        Some(b) => b,
        None => {
            let mut pts = Vec::new();
            if let (Some(ps), Some(pair)) = (&ps, &pair) {
                pts.extend(ps.polygon.vertices().iter().copied());
                pts.push(pair.o);
                pts.extend(pair.b.iter().copied());
                if layers.contains(&Layer::Arcs) {
                    if let Some(chain) = &chain {
                        pts.extend(chain.arcs.iter().flat_map(|a| Primitive::Arc(*a).extreme_points()));
                    }
                }
            }
            if let Some((k, l)) = &sets {
                pts.extend(k.items().iter().chain(l.items()).flat_map(Primitive::extreme_points));
            }
            view_around(pts)?
        }
    };

    let mut note = None;
    let mut out = Vec::new();
    for layer in DRAW_ORDER.into_iter().filter(|l| layers.contains(l)) {
        let shapes = match layer {
            Layer::Polygon => {
                let ps = ps.as_ref().expect("checked above");
                vec![Shape::Loop(ps.polygon.vertices().to_vec())]
            }
            Layer::Focal => match (&pair, &sets) {
                (Some(pair), _) => {
                    let mut s: Vec<_> = pair.b.iter().map(|&b| Shape::Dashed(pair.o, b)).collect();
                    s.extend(pair.b.iter().map(|&b| Shape::Dot(b)));
                    s.push(Shape::Anchor(pair.o));
                    s
                }
                (None, Some((k, l))) => {
                    let mut s = set_shapes(l);
                    s.extend(set_shapes(k).into_iter().map(|sh| match sh {
                        Shape::Dot(p) => Shape::Anchor(p),
                        other => other,
                    }));
                    s
                }
                (None, None) => unreachable!("checked above"),
            },
            Layer::Voronoi => {
                let pair = pair.as_ref().expect("checked above");
                voronoi_cells(&pair.b, &view)?
                    .into_iter()
                    .filter_map(|c| c.region.map(|r| Shape::Loop(r.vertices().to_vec())))
                    .collect()
            }
            Layer::Midset => {
                let pair = pair.as_ref().expect("checked above");
                set_shapes(&exact_midset(pair, &view)?.to_compact_set())
            }
            Layer::Arcs => chain.as_ref().expect("built when requested").arcs.iter().map(|&a| Shape::Arc(a)).collect(),
            Layer::Contour => {
                let (k, l) = match (&ps, &sets) {
                    (Some(ps), _) => {
                        let l = match mode {
                            Mode::Points => pair.as_ref().expect("polygon scene").l(),
                            Mode::Arcs => chain.as_ref().expect("built for arcs mode").to_compact_set(),
                        };
                        (ps.pair.k(), l)
                    }
                    (None, Some((k, l))) => (k.clone(), l.clone()),
                    (None, None) => unreachable!("checked above"),
                };
                let h = pitch.or(scene.pitch).unwrap_or_else(|| default_pitch(&view));
                if !(h > 0.0 && h.is_finite()) {
                    return Err(CliError::Invalid(format!("pitch must be positive, got {h}")));
                }
                let m = extract_midset(&GapField::new(k, l), &view, h, Threads::from_env())?;
                if m.degenerate {
                    note = Some(format!(
                        "DegenerateField: the gap vanishes on {} of the grid; contour omitted",
                        num(m.zero_fraction)
                    ));
                }
                m.polylines.into_iter().map(Shape::Line).collect()
            }
        };
        out.push((layer, shapes));
    }
    Ok(Computed { shapes: out, view, note })
}

/// Coordinate text; values below `snap` in magnitude print as zero.
fn c(x: f64, snap: f64) -> String {
    num(if x.abs() < snap { 0.0 } else { x })
}

fn coords(pts: &[Point2d], snap: f64) -> String {
    pts.iter().map(|p| format!("{},{}", c(p.x, snap), c(p.y, snap))).collect::<Vec<_>>().join(" ")
}

fn arc_path(a: &Arc2d, snap: f64) -> String {
    let r = num(a.radius());
    let sweep = match a.direction() {
        ArcDirection::Ccw => 1,
        ArcDirection::Cw => 0,
    };
    let start = a.start_point();
    let mut d = format!("M {} {}", c(start.x, snap), c(start.y, snap));
    // SVG cannot draw a full circle in one arc command
    let pieces = if a.is_full_circle() { vec![0.5, 1.0] } else { vec![1.0] };
    let extent = a.extent();
    let step = extent / pieces.len() as f64;
    for s in pieces {
        let p = a.point_at(s);
        let large = u8::from(step > std::f64::consts::PI);
        let _ = write!(d, " A {r} {r} 0 {large} {sweep} {} {}", c(p.x, snap), c(p.y, snap));
    }
    d
}

fn write_shape(svg: &mut String, shape: &Shape, dot_radius: f64, color: &str, snap: f64) {
    const NS: &str = r#"vector-effect="non-scaling-stroke""#;
    let _ = match shape {
        Shape::Dot(p) => writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{color}" stroke="none"/>"#,
            c(p.x, snap),
            c(p.y, snap),
            num(dot_radius)
        ),
        Shape::Anchor(p) => writeln!(
            svg,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#000000" stroke="none"/>"##,
            c(p.x, snap),
            c(p.y, snap),
            num(dot_radius)
        ),
        Shape::Line(pts) => writeln!(svg, r#"<polyline points="{}" {NS}/>"#, coords(pts, snap)),
        Shape::Dashed(a, b) => writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-dasharray="4 3" {NS}/>"#,
            c(a.x, snap),
            c(a.y, snap),
            c(b.x, snap),
            c(b.y, snap)
        ),
        Shape::Loop(pts) => writeln!(svg, r#"<polygon points="{}" {NS}/>"#, coords(pts, snap)),
        Shape::Arc(a) => writeln!(svg, r#"<path d="{}" {NS}/>"#, arc_path(a, snap)),
    };
}

/// The figure as SVG text, plus a note when a layer came out degenerate.
pub fn render_svg(
    scene: &Scene,
    layers: &[Layer],
    pitch: Option<f64>,
    mode: Mode,
) -> Result<(String, Option<String>), CliError> {
    let figure = scene.figure.clone().unwrap_or_default();
    let layers = layer_set(layers)?;
    let stroke = figure.stroke_width.unwrap_or(DEFAULT_STROKE);
    if !(stroke > 0.0 && stroke.is_finite()) {
        return Err(CliError::Invalid("stroke_width must be positive".into()));
    }
    let Computed { shapes, view, note } = compute_layers(scene, &layers, pitch, mode)?;
    let frame = Frame::fit(&view, figure.width, figure.height)?;
    let dot_radius = 2.5 * stroke / frame.scale;
    let snap = 1e-12 * view.scale();

    let mut svg = String::new();
    let (w, h) = (num(frame.width), num(frame.height));
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);
    let _ = writeln!(
        svg,
        r#"<g transform="matrix({s} 0 0 {ns} {tx} {ty})" fill="none" stroke-linecap="round" stroke-linejoin="round">"#,
        s = num(frame.scale),
        ns = num(-frame.scale),
        tx = num(frame.tx),
        ty = num(frame.ty)
    );
    for (layer, items) in &shapes {
        let color = figure.colors.get(layer).map_or(layer.default_color(), String::as_str);
        let _ = writeln!(svg, r#"<g id="{}" stroke="{color}" stroke-width="{}">"#, layer.name(), num(stroke));
        for shape in items {
            write_shape(&mut svg, shape, dot_radius, color, snap);
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok((svg, note))
}

pub fn render(
    scene: &Scene,
    layers: Option<&[Layer]>,
    pitch: Option<f64>,
    mode: Option<Mode>,
    out: Option<&Path>,
) -> Result<Report, CliError> {
    let mode = mode.or(scene.mode).unwrap_or_default();
    let from_scene = scene.figure.as_ref().map(|f: &FigureDoc| f.layers.as_slice()).unwrap_or(&[]);
    let layers = layers.unwrap_or(from_scene);
    if let Some(f) = &scene.figure {
        if let Some(bad) = f.colors.values().find(|c| c.is_empty() || c.contains(['"', '<', '>', '&'])) {
            return Err(CliError::Invalid(format!("figure: invalid color {bad:?}")));
        }
    }
    let (svg, note) = render_svg(scene, layers, pitch, mode)?;
    let passed = note.is_none();
    let stdout = match out {
        Some(path) => {
            std::fs::write(path, &svg)?;
            format!("wrote {} layer(s) to {}\n", layers.iter().collect::<BTreeSet<_>>().len(), path.display())
        }
        None => svg,
    };
    Ok(Report::new(stdout, passed, note.unwrap_or_default()))
}
