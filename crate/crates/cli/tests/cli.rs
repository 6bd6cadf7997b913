mod common;

use std::path::Path;

use common::{equidist, field, run_to_file, scene};
use equidist_cli::docs::{ConstructDoc, ConvergeRecord, MidsetDoc, VerifyDoc};
use equidist_cli::scene::Scene;

fn s(name: &str) -> String {
    scene(name).to_str().unwrap().to_string()
}

#[test]
fn construct_exit_codes() {
    let ok = equidist(&["construct", "--scene", &s("square.json")]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    let doc: ConstructDoc = serde_json::from_str(&ok.stdout).unwrap();
    let mut b = doc.focal.points.clone();
    b.sort_by(|p, q| p.partial_cmp(q).unwrap());
    assert_eq!(b, vec![[-2.0, 0.0], [0.0, -2.0], [0.0, 2.0], [2.0, 0.0]]);
    assert!(doc.focal.max_residual < 1e-10);
    assert_eq!(doc.voronoi.cells.len(), 4);
    assert!(doc.voronoi.cells.iter().all(|c| c.halfplanes.len() == 3 && c.region.is_some()));

    let edge = equidist(&["construct", "--scene", &s("triangle_o_on_edge.json")]);
    assert_eq!(edge.code, 2);
    assert!(edge.stderr.contains("PointNotInterior"), "{}", edge.stderr);

    let bad = equidist(&["construct", "--scene", &s("nonconvex.json")]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("vertex 2"), "{}", bad.stderr);

    let missing = equidist(&["construct", "--scene", "/nonexistent/scene.json"]);
    assert_eq!(missing.code, 2);
    let unknown_flag = equidist(&["construct", "--scene", &s("square.json"), "--bogus"]);
    assert_eq!(unknown_flag.code, 2);
}

#[test]
fn dodecagon_residuals_are_tiny() {
    let run = equidist(&["construct", "--scene", &s("dodecagon.json")]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc: ConstructDoc = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(doc.focal.residuals.len(), 12);
    assert!(doc.focal.residuals.iter().all(|r| r.previous < 1e-10 && r.next < 1e-10));
}

#[test]
fn verify_exit_codes() {
    for mode in ["points", "arcs"] {
        let run = equidist(&["verify", "--scene", &s("square.json"), "--mode", mode, "--samples", "200", "--eps", "1e-8"]);
        assert_eq!(run.code, 0, "{mode}: {}{}", run.stdout, run.stderr);
        assert!(field(&run.stdout, "max_gap").unwrap() < 1e-8);
    }
    let bad = equidist(&["verify", "--scene", &s("square_perturbed.json"), "--mode", "points"]);
    assert_eq!(bad.code, 1);
    assert!(field(&bad.stdout, "max_gap").unwrap() >= 0.01);
    assert_eq!(equidist(&["verify", "--scene", &s("triangle_o_on_edge.json")]).code, 2);
    assert_eq!(equidist(&["verify", "--scene", &s("two_points.json")]).code, 2);
    assert_eq!(equidist(&["verify", "--scene", &s("square.json"), "--samples", "1"]).code, 2);
    assert_eq!(equidist(&["verify", "--scene", &s("square.json"), "--mode", "lines"]).code, 2);
}

#[test]
fn midset_exit_codes() {
    let (run, bytes) = run_to_file(&["midset"], "two_points.json", "m.json", None);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc: MidsetDoc = serde_json::from_slice(&bytes.unwrap()).unwrap();
    assert!(doc.deviation.unwrap() < 0.05);
    assert!(doc.polylines.iter().flatten().all(|p| p[0].abs() < 1e-9));

    let (run, bytes) = run_to_file(&["midset", "--pitch", "0.02"], "square.json", "m.json", None);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc: MidsetDoc = serde_json::from_slice(&bytes.unwrap()).unwrap();
    assert!(doc.deviation.unwrap() < 0.04);

    let (run, bytes) = run_to_file(&["midset"], "identical_sets.json", "m.json", None);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("DegenerateField"), "{}", run.stderr);
    let doc: MidsetDoc = serde_json::from_slice(&bytes.unwrap()).unwrap();
    assert!(doc.degenerate && !doc.passed);

    assert_eq!(equidist(&["midset", "--scene", &s("circle.json")]).code, 2);
    assert_eq!(equidist(&["midset", "--scene", &s("square.json"), "--pitch", "0"]).code, 2);
}

#[test]
fn converge_exit_codes() {
    let run = equidist(&["converge", "--scene", &s("circle.json"), "--n-list", "4,8,16"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let mut rdr = csv::Reader::from_reader(run.stdout.as_bytes());
    let rows: Vec<ConvergeRecord> = rdr.deserialize().collect::<Result<_, _>>().unwrap();
    assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 8, 16]);
    for r in &rows {
        let exact = 1.0 - (std::f64::consts::PI / r.n as f64).cos();
        assert!((r.dh_polygon - exact).abs() < 0.01);
    }
    // the distances above the default threshold make the run fail without being invalid
    let coarse = equidist(&["converge", "--scene", &s("circle.json"), "--n-list", "3,4"]);
    assert_eq!(coarse.code, 1);
    assert_eq!(equidist(&["converge", "--scene", &s("circle_n2.json")]).code, 2);
    assert_eq!(equidist(&["converge", "--scene", &s("circle.json"), "--radius", "0.5"]).code, 2);
    assert_eq!(equidist(&["converge", "--scene", &s("square.json")]).code, 2);
}

#[test]
fn render_exit_codes() {
    assert_eq!(equidist(&["render", "--scene", &s("square_voronoi.json")]).code, 0);
    let empty = equidist(&["render", "--scene", &s("square_no_layers.json")]);
    assert_eq!(empty.code, 2);
    assert_eq!(equidist(&["render", "--scene", &s("square.json")]).code, 2);
    assert_eq!(equidist(&["render", "--scene", &s("two_points.json"), "--layers", "polygon"]).code, 2);
    assert_eq!(equidist(&["render", "--scene", &s("square.json"), "--layers", "shadows"]).code, 2);
    let kl = equidist(&["render", "--scene", &s("two_points.json"), "--layers", "focal,contour"]);
    assert_eq!(kl.code, 0, "{}", kl.stderr);
    assert!(kl.stdout.contains(r#"<g id="contour""#));
    let degenerate = equidist(&["render", "--scene", &s("identical_sets.json"), "--layers", "contour"]);
    assert_eq!(degenerate.code, 1);
    assert!(degenerate.stderr.contains("DegenerateField"));
}

fn golden(name: &str, svg: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, svg).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert!(expected == svg, "{name} differs from the golden file; rerun with UPDATE_GOLDEN=1 if intended");
}

#[test]
fn golden_figures() {
    for (scene_name, golden_name) in
        [("square_voronoi.json", "square_voronoi.svg"), ("square_arcs.json", "square_arcs.svg")]
    {
        let (run, bytes) = run_to_file(&["render"], scene_name, "f.svg", None);
        assert_eq!(run.code, 0, "{}", run.stderr);
        golden(golden_name, &String::from_utf8(bytes.unwrap()).unwrap());
    }
}

#[test]
fn output_documents_round_trip() {
    fn check<T>(bytes: &[u8])
    where
        T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
    {
        let doc: T = serde_json::from_slice(bytes).unwrap();
        let again = equidist_cli::docs::to_json(&doc);
        assert_eq!(again.as_bytes(), bytes);
        assert_eq!(serde_json::from_str::<T>(&again).unwrap(), doc);
    }
    check::<ConstructDoc>(&run_to_file(&["construct"], "triangle.json", "c.json", None).1.unwrap());
    check::<VerifyDoc>(&run_to_file(&["verify", "--mode", "arcs"], "triangle.json", "v.json", None).1.unwrap());
    check::<MidsetDoc>(&run_to_file(&["midset", "--pitch", "0.05"], "triangle.json", "m.json", None).1.unwrap());

    let (_, table) = run_to_file(&["converge", "--n-list", "4,8"], "circle.json", "t.csv", None);
    let table = table.unwrap();
    let rows: Vec<ConvergeRecord> =
        csv::Reader::from_reader(table.as_slice()).deserialize().collect::<Result<_, _>>().unwrap();
    let mut w = csv::Writer::from_writer(Vec::new());
    rows.iter().for_each(|r| w.serialize(r).unwrap());
    assert_eq!(w.into_inner().unwrap(), table);

    for name in ["square_voronoi.json", "two_points.json", "ellipse.json"] {
        let text = std::fs::read_to_string(scene(name)).unwrap();
        let parsed = Scene::parse(&text).unwrap();
        let back = Scene::parse(&serde_json::to_string(&parsed).unwrap()).unwrap();
        assert_eq!(back, parsed);
    }
}
