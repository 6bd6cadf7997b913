//! Output documents. Every value is rounded to 12 significant digits before
//! it is stored, so a document reads back exactly as written.

use equidist::focal::VoronoiCell;
use equidist::{BBoxd, Point2d, Sign};
use serde::{Deserialize, Serialize};

use crate::fmt::{round12, round_point};
use crate::scene::Mode;

pub fn pt(p: Point2d) -> [f64; 2] {
    round_point([p.x, p.y])
}

pub fn bbox_doc(b: &BBoxd) -> [f64; 4] {
    let (lo, hi) = (pt(b.min()), pt(b.max()));
    [lo[0], lo[1], hi[0], hi[1]]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualDoc {
    /// Index of the vertex `A_{i+1}` shared by edges `i` and `i + 1`.
    pub vertex: usize,
    /// `|d(A, B_i) − d(A, O)|`.
    pub previous: f64,
    /// `|d(A, O) − d(A, B_{i+1})|`.
    pub next: f64,
}

/// The boundary line `{P : normal · P = offset}` and the kept side (`+1` or `-1`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfPlaneDoc {
    pub normal: [f64; 2],
    pub offset: f64,
    pub side: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellDoc {
    pub site_index: usize,
    pub site: [f64; 2],
    pub halfplanes: Vec<HalfPlaneDoc>,
    pub region: Option<Vec<[f64; 2]>>,
}

impl CellDoc {
    pub fn from_cell(c: &VoronoiCell<f64>) -> Self {
        Self {
            site_index: c.site_index,
            site: pt(c.site),
            halfplanes: c
                .halfplanes
                .iter()
                .map(|h| HalfPlaneDoc {
                    normal: pt(h.boundary.normal()),
                    offset: round12(h.boundary.offset()),
                    side: match h.side {
                        Sign::Plus => 1,
                        Sign::Minus => -1,
                    },
                })
                .collect(),
            region: c.region.as_ref().map(|r| r.vertices().iter().map(|&v| pt(v)).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FocalDoc {
    pub o: [f64; 2],
    pub points: Vec<[f64; 2]>,
    pub residuals: Vec<ResidualDoc>,
    pub max_residual: f64,
    pub min_pairwise_distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellsDoc {
    pub bbox: [f64; 4],
    pub cells: Vec<CellDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructDoc {
    pub version: u32,
    pub polygon: Vec<[f64; 2]>,
    pub focal: FocalDoc,
    pub voronoi: CellsDoc,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub version: u32,
    pub mode: Mode,
    pub samples: usize,
    pub eps: f64,
    pub max_gap: f64,
    pub worst_point: [f64; 2],
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MidsetDoc {
    pub version: u32,
    pub pitch: f64,
    /// Grid spacing actually used.
    pub resolution: f64,
    pub bbox: [f64; 4],
    pub zero_fraction: f64,
    pub degenerate: bool,
    pub polylines: Vec<Vec<[f64; 2]>>,
    /// Hausdorff distance to the exact midset, when one is known.
    pub deviation: Option<f64>,
    pub passed: bool,
}

/// One CSV row of `converge`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergeRecord {
    pub n: usize,
    pub dh_polygon: f64,
    pub dh_midset: f64,
    pub dh_focal: f64,
}

/// Pretty JSON with numeric arrays such as coordinate pairs kept on one line.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let pretty = serde_json::to_string_pretty(doc).expect("documents serialize");
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty.as_str();
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..=open]);
        rest = &rest[open + 1..];
        let Some(close) = rest.find(']') else { break };
        let inner = &rest[..close];
        let numeric = inner.chars().all(|c| c.is_ascii_digit() || ".eE+-, \n".contains(c));
        if numeric && !inner.trim().is_empty() {
            let items: Vec<&str> = inner.split(',').map(str::trim).collect();
            out.push_str(&items.join(", "));
            out.push(']');
            rest = &rest[close + 1..];
        }
    }
    out.push_str(rest);
    out.push('\n');
    out
}
