use std::path::Path;

use equidist::focal::{
    connected_focal_set, construct_focal_pair, default_bbox, exact_midset, verify_equidistance_on_boundary,
    voronoi_cells, FocalPair, VERIFY_EPS,
};
use equidist::hausdorff::{convergence_experiment, convergence_holds};
use equidist::numeric::{extract_midset, hausdorff_to_reference, GapField};
use equidist::parallel::Threads;
use equidist::{BBoxd, CompactSetd, ConvexPolygond, Point2d, Primitive};

use crate::docs::{
    bbox_doc, pt, to_json, CellDoc, CellsDoc, ConstructDoc, ConvergeRecord, FocalDoc, MidsetDoc, ResidualDoc,
    VerifyDoc,
};
use crate::error::CliError;
use crate::fmt::{num, round12};
use crate::scene::{set_from_docs, Mode, Scene, SCHEMA_VERSION};

/// Limits checked by `construct`.
pub const RESIDUAL_TOL: f64 = 1e-10;
pub const DISTINCT_TOL: f64 = 1e-9;

pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_N_LIST: [usize; 5] = [4, 8, 16, 32, 64];
pub const DEFAULT_CONVERGE_PITCH: f64 = 0.01;
pub const DEFAULT_THRESHOLD: f64 = 0.02;
/// Default grid: this many cells across the longer side of the box.
pub const DEFAULT_GRID_CELLS: f64 = 200.0;

/// Result of a subcommand that ran to completion.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub stdout: String,
    pub passed: bool,
    /// Printed to stderr when the check failed.
    pub note: String,
}

impl Report {
    pub fn new(stdout: String, passed: bool, note: impl Into<String>) -> Self {
        Self { stdout, passed, note: note.into() }
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Writes `doc` to `out` and returns a summary line, or returns `doc` itself
/// for stdout when there is no output path.
fn emit(doc: String, out: Option<&Path>, summary: String) -> Result<String, CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, doc)?;
            Ok(summary)
        }
        None => Ok(doc),
    }
}

/// The polygon, its interior point and the constructed focal pair.
pub struct PolygonScene {
    pub polygon: ConvexPolygond,
    pub pair: FocalPair<f64>,
}

impl PolygonScene {
    pub fn from_scene(scene: &Scene) -> Result<Self, CliError> {
        let polygon = scene.require_polygon()?;
        let o = scene.o_for(&polygon);
        let pair = construct_focal_pair(&polygon, o)?;
        Ok(Self { polygon, pair })
    }

    /// The constructed pair, or `O` with the scene's replacement points.
    pub fn points_pair(&self, scene: &Scene) -> Result<FocalPair<f64>, CliError> {
        match &scene.focal_points {
            None => Ok(self.pair.clone()),
            Some(pts) if pts.is_empty() => Err(CliError::Invalid("focal_points is empty".into())),
            Some(pts) => {
                let b = pts.iter().copied().map(Point2d::from).collect::<Vec<_>>();
                if b.iter().any(|p| !p.is_finite()) {
                    return Err(CliError::Invalid("focal_points: non-finite coordinate".into()));
                }
                Ok(FocalPair { o: self.pair.o, b })
            }
        }
    }

    /// `L` for the chosen mode.
    pub fn l(&self, scene: &Scene, mode: Mode) -> Result<CompactSetd, CliError> {
        match mode {
            Mode::Points => Ok(self.points_pair(scene)?.l()),
            Mode::Arcs => Ok(connected_focal_set(&self.polygon, self.pair.o)?.to_compact_set()),
        }
    }

    /// Box for midset extraction: the polygon's box grown by half its diameter.
    pub fn view(&self) -> BBoxd {
        self.polygon.bbox().inflated(0.5 * self.polygon.diameter())
    }
}

pub fn construct(scene: &Scene, out: Option<&Path>) -> Result<Report, CliError> {
    let ps = PolygonScene::from_scene(scene)?;
    let (p, fp) = (&ps.polygon, &ps.pair);
    let bbox = scene.bbox()?.unwrap_or_else(|| default_bbox(p));
    let cells = voronoi_cells(&fp.b, &bbox)?;

    let residuals: Vec<_> = fp
        .vertex_residuals(p)
        .into_iter()
        .enumerate()
        .map(|(i, (previous, next))| ResidualDoc {
            vertex: (i + 1) % p.len(),
            previous: round12(previous),
            next: round12(next),
        })
        .collect();
    let max_residual = fp.max_vertex_residual(p);
    let min_distance = fp.min_pairwise_distance();
    let passed = max_residual < RESIDUAL_TOL && min_distance > DISTINCT_TOL;

    let doc = ConstructDoc {
        version: SCHEMA_VERSION,
        polygon: p.vertices().iter().map(|&v| pt(v)).collect(),
        focal: FocalDoc {
            o: pt(fp.o),
            points: fp.b.iter().map(|&b| pt(b)).collect(),
            residuals,
            max_residual: round12(max_residual),
            min_pairwise_distance: round12(min_distance),
        },
        voronoi: CellsDoc { bbox: bbox_doc(&bbox), cells: cells.iter().map(CellDoc::from_cell).collect() },
        passed,
    };
    let summary = format!(
        "max_residual {} min_pairwise_distance {} {}\n",
        num(max_residual),
        num(min_distance),
        verdict(passed)
    );
    let stdout = emit(to_json(&doc), out, summary)?;
    let note = format!(
        "construction check failed: max residual {} (limit {RESIDUAL_TOL:e}), min pairwise distance {} (limit {DISTINCT_TOL:e})",
        num(max_residual),
        num(min_distance)
    );
    Ok(Report::new(stdout, passed, note))
}

pub fn verify(
    scene: &Scene,
    mode: Option<Mode>,
    samples: Option<usize>,
    eps: Option<f64>,
    out: Option<&Path>,
) -> Result<Report, CliError> {
    let mode = mode.or(scene.mode).unwrap_or_default();
    let samples = samples.or(scene.samples).unwrap_or(DEFAULT_SAMPLES);
    let eps = eps.or(scene.eps).unwrap_or(VERIFY_EPS);
    if !(eps > 0.0) {
        return Err(CliError::Invalid("eps must be positive".into()));
    }
    let ps = PolygonScene::from_scene(scene)?;
    let k = ps.pair.k();
    let l = ps.l(scene, mode)?;
    let report = verify_equidistance_on_boundary(&ps.polygon, &k, &l, samples, eps)?;

    let line = format!(
        "max_gap {} worst_point ({}, {}) {}\n",
        num(report.max_gap),
        num(report.worst_point.x),
        num(report.worst_point.y),
        verdict(report.passed)
    );
    let doc = VerifyDoc {
        version: SCHEMA_VERSION,
        mode,
        samples,
        eps: round12(eps),
        max_gap: round12(report.max_gap),
        worst_point: pt(report.worst_point),
        passed: report.passed,
    };
    if let Some(path) = out {
        std::fs::write(path, to_json(&doc))?;
    }
    let note = format!("boundary is not equidistant: max_gap {} >= eps {}", num(report.max_gap), num(eps));
    Ok(Report::new(line, report.passed, note))
}

/// Focal sets, extraction box and optional exact reference for `midset`.
struct MidsetProblem {
    k: CompactSetd,
    l: CompactSetd,
    bbox: BBoxd,
    reference: Option<CompactSetd>,
}

fn midset_problem(scene: &Scene, mode: Mode) -> Result<MidsetProblem, CliError> {
    if scene.polygon.is_some() {
        let ps = PolygonScene::from_scene(scene)?;
        let bbox = scene.bbox()?.unwrap_or_else(|| ps.view());
        let reference = match mode {
            Mode::Points => exact_midset(&ps.points_pair(scene)?, &bbox)?.to_compact_set(),
            Mode::Arcs => CompactSetd::new(vec![ps.polygon.boundary()])?,
        };
        return Ok(MidsetProblem { k: ps.pair.k(), l: ps.l(scene, mode)?, bbox, reference: Some(reference) });
    }
    let (Some(k), Some(l)) = (&scene.k, &scene.l) else {
        return Err(CliError::Invalid("scene needs a polygon or both focal sets k and l".into()));
    };
    let k = set_from_docs("k", k)?;
    let l = set_from_docs("l", l)?;
    let bbox = match scene.bbox()? {
        Some(b) => b,
        None => auto_bbox(&k, &l)?,
    };
    let reference = scene.reference.as_deref().map(|r| set_from_docs("reference", r)).transpose()?;
    Ok(MidsetProblem { k, l, bbox, reference })
}

/// Box around both sets, grown by half its diagonal (at least one unit).
fn auto_bbox(k: &CompactSetd, l: &CompactSetd) -> Result<BBoxd, CliError> {
    let pts: Vec<Point2d> = k.items().iter().chain(l.items()).flat_map(Primitive::extreme_points).collect();
    let lo = pts.iter().fold(pts[0], |a, p| Point2d::new(a.x.min(p.x), a.y.min(p.y)));
    let hi = pts.iter().fold(pts[0], |a, p| Point2d::new(a.x.max(p.x), a.y.max(p.y)));
    let margin = (0.5 * lo.distance(hi)).max(1.0);
    let grow = Point2d::new(margin, margin);
    Ok(BBoxd::new(lo - grow, hi + grow)?)
}

pub fn default_pitch(bbox: &BBoxd) -> f64 {
    bbox.width().max(bbox.height()) / DEFAULT_GRID_CELLS
}

fn positive_pitch(h: f64) -> Result<f64, CliError> {
    if h > 0.0 && h.is_finite() {
        Ok(h)
    } else {
        Err(CliError::Invalid(format!("pitch must be positive, got {h}")))
    }
}

pub fn midset(scene: &Scene, pitch: Option<f64>, mode: Option<Mode>, out: Option<&Path>) -> Result<Report, CliError> {
    let mode = mode.or(scene.mode).unwrap_or_default();
    let problem = midset_problem(scene, mode)?;
    let h = positive_pitch(pitch.or(scene.pitch).unwrap_or_else(|| default_pitch(&problem.bbox)))?;
    let field = GapField::new(problem.k, problem.l);
    let m = extract_midset(&field, &problem.bbox, h, Threads::from_env())?;

    let (deviation, note) = if m.degenerate {
        let note = format!(
            "DegenerateField: the gap vanishes on {} of the grid; the midset has interior",
            num(m.zero_fraction)
        );
        (None, note)
    } else {
        match (&problem.reference, m.polylines.is_empty()) {
            (None, _) => (None, String::new()),
            (Some(_), true) => (None, "no contour found inside the box".to_string()),
            (Some(r), false) => {
                let d = hausdorff_to_reference(&m, r)?;
                (Some(d), format!("deviation {} from the exact midset exceeds 2h = {}", num(d), num(2.0 * h)))
            }
        }
    };
    let passed = !m.degenerate
        && match &problem.reference {
            None => true,
            Some(_) => deviation.is_some_and(|d| d < 2.0 * h),
        };

    let doc = MidsetDoc {
        version: SCHEMA_VERSION,
        pitch: round12(h),
        resolution: round12(m.resolution),
        bbox: bbox_doc(&problem.bbox),
        zero_fraction: round12(m.zero_fraction),
        degenerate: m.degenerate,
        polylines: m.polylines.iter().map(|pl| pl.iter().map(|&p| pt(p)).collect()).collect(),
        deviation: deviation.map(round12),
        passed,
    };
    let summary = format!(
        "polylines {} vertices {} deviation {} {}\n",
        m.polylines.len(),
        m.vertex_count(),
        deviation.map_or_else(|| "none".to_string(), num),
        if m.degenerate { "DegenerateField" } else { verdict(passed) }
    );
    let stdout = emit(to_json(&doc), out, summary)?;
    Ok(Report::new(stdout, passed, note))
}

pub fn converge(
    scene: &Scene,
    n_list: Option<&[usize]>,
    radius: Option<f64>,
    pitch: Option<f64>,
    out: Option<&Path>,
) -> Result<Report, CliError> {
    let curve = scene.curve()?;
    let o = scene.o.map(Point2d::from).unwrap_or_else(|| curve.center());
    let n_list = n_list.or(scene.n_list.as_deref()).unwrap_or(&DEFAULT_N_LIST);
    let radius = radius.or(scene.radius).unwrap_or_else(|| 3.0 * curve.bounding_radius());
    let h = positive_pitch(pitch.or(scene.pitch).unwrap_or(DEFAULT_CONVERGE_PITCH))?;
    let threshold = scene.threshold.unwrap_or(DEFAULT_THRESHOLD);
    if !curve.contains(o) {
        return Err(CliError::Invalid("o must lie strictly inside the curve".into()));
    }
    let rows = convergence_experiment(&curve, o, n_list, radius, h, Threads::from_env())?;
    let passed = convergence_holds(&rows, h, threshold);

    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(ConvergeRecord {
            n: r.n,
            dh_polygon: round12(r.dh_polygon),
            dh_midset: round12(r.dh_midset),
            dh_focal: round12(r.dh_focal),
        })
        .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    }
    let table = String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?)
        .expect("csv output is utf-8");
    let last = rows.last().map_or(f64::NAN, |r| r.dh_midset);
    let summary = format!("rows {} final_dh_midset {} {}\n", rows.len(), num(last), verdict(passed));
    let stdout = emit(table, out, summary)?;
    let note = format!(
        "midset distances do not settle: need non-increasing within 2h = {} and final value below {}",
        num(2.0 * h),
        num(threshold)
    );
    Ok(Report::new(stdout, passed, note))
}
