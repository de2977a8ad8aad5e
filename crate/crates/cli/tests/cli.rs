use std::path::Path;

use bar1vis::{Bar, BarDrawing, Family, Graph1Planar, Segment};
use bar1vis_cli::{parse_drawing, parse_graph, run, serialize_drawing, serialize_graph, FormatError};
use proptest::prelude::*;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["bar1vis"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_draw_validate_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let drawing = dir.path().join("d.json");
    let svg = dir.path().join("d.svg");
    let (code, _, err) = invoke(&[
        "generate",
        "--family",
        "diagonal-grid",
        "--p",
        "3",
        "--q",
        "3",
        "-o",
        path_str(&graph),
    ]);
    assert_eq!(code, 0, "{err}");
    let (code, _, err) = invoke(&["draw", path_str(&graph), "-o", path_str(&drawing)]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = invoke(&["validate", path_str(&graph), path_str(&drawing)]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["pass"], true);
    let (code, _, err) = invoke(&[
        "render",
        path_str(&drawing),
        "-o",
        path_str(&svg),
        "--highlight-crossings",
    ]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches(r#"class="crossing""#).count(), 4);
}

#[test]
fn corrupted_drawing_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let drawing = dir.path().join("d.json");
    invoke(&[
        "generate",
        "--family",
        "pdw-even",
        "--n",
        "3",
        "-o",
        path_str(&graph),
    ]);
    invoke(&["draw", path_str(&graph), "-o", path_str(&drawing)]);
    let mut d = parse_drawing(&std::fs::read_to_string(&drawing).unwrap()).unwrap();
    d.segments[0].x = d.x_range().unwrap().1 + 5;
    std::fs::write(&drawing, serialize_drawing(&d)).unwrap();
    let (code, out, _) = invoke(&["validate", path_str(&graph), path_str(&drawing)]);
    assert_eq!(code, 2);
    assert!(out.contains("segment-off-bar"), "{out}");
}

#[test]
fn stdout_output_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = invoke(&[
        "generate",
        "--family",
        "recursive-quadrangle",
        "--i",
        "1",
        "--optimal",
    ]);
    assert_eq!(code, 0);
    let graph = dir.path().join("g.json");
    std::fs::write(&graph, &out).unwrap();
    let (code, out, _) = invoke(&["report", path_str(&graph)]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["optimal_1planar"], true);
}

#[test]
fn outer_graph_without_family_draws() {
    let dir = tempfile::tempdir().unwrap();
    let mut g = bar1vis::gen_quadrangle_chain(4).unwrap();
    g.family = None;
    let graph = dir.path().join("g.json");
    std::fs::write(&graph, serialize_graph(&g)).unwrap();
    let (code, out, err) = invoke(&["draw", path_str(&graph), "--algorithm", "maximal-outer"]);
    assert_eq!(code, 0, "{err}");
    assert!(bar1vis::validate(&g, &parse_drawing(&out).unwrap(), 1).pass);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(invoke(&["frobnicate"]).0, 1);
    assert_eq!(
        invoke(&["generate", "--family", "diagonal-grid", "--p", "3"]).0,
        1
    );
    assert_eq!(invoke(&["draw", "/nonexistent/graph.json"]).0, 1);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn bad_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    std::fs::write(&graph, "{\"schema_version\": \"1\",\n \"n\": }").unwrap();
    let (code, _, err) = invoke(&["report", path_str(&graph)]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn wrong_schema_version_rejected() {
    let text = r#"{"schema_version":"2","n":0,"edges":[]}"#;
    assert!(
        matches!(parse_graph(text), Err(FormatError::SchemaViolation { field, .. }) if field == "schema_version")
    );
}

fn random_graph() -> impl Strategy<Value = Graph1Planar> {
    (
        2usize..12,
        proptest::collection::vec((0usize..12, 0usize..12), 0..30),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(n, raw, with_order, with_labels)| {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (u, v) in raw {
                let (u, v) = (u % n, v % n);
                if u != v && !edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                    edges.push((u, v));
                }
            }
            let mut g = Graph1Planar::new(n, edges).unwrap();
            g.crossing_pairs = (0..g.edges.len() / 2)
                .step_by(2)
                .map(|i| (2 * i, 2 * i + 1))
                .collect();
            if with_order {
                g.outer_order = Some((0..n).rev().collect());
            }
            if with_labels {
                g.labels = Some((0..n).map(|v| format!("v{v}")).collect());
            }
            g
        })
}

fn random_drawing() -> impl Strategy<Value = BarDrawing> {
    let bars = proptest::collection::vec((0usize..20, -9i64..9, -9i64..9, 0i64..9), 0..10);
    let segs = proptest::collection::vec((0usize..20, 0usize..20, -9i64..9, -9i64..9, 0i64..9), 0..10);
    (bars, segs).prop_map(|(bars, segs)| {
        BarDrawing::new(
            bars.into_iter()
                .map(|(v, y, x0, w)| Bar { v, y, x0, x1: x0 + w })
                .collect(),
            segs.into_iter()
                .map(|(u, v, x, y0, h)| Segment {
                    u,
                    v,
                    x,
                    y0,
                    y1: y0 + h,
                })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn graphs_round_trip(g in random_graph()) {
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn drawings_round_trip(d in random_drawing()) {
        let text = serialize_drawing(&d);
        prop_assert_eq!(parse_drawing(&text).unwrap(), d);
    }

    #[test]
    fn family_documents_round_trip(p in 2usize..6, q in 2usize..6) {
        let g = bar1vis::generate(Family::DiagonalGrid { p, q }).unwrap();
        let back = parse_graph(&serialize_graph(&g)).unwrap();
        prop_assert_eq!(back.family, Some(Family::DiagonalGrid { p, q }));
    }
}
