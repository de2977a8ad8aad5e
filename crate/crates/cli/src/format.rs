//! JSON documents for graphs and drawings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use bar1vis::{Bar, BarDrawing, Family, Graph1Planar, Segment};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    SyntaxError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation in `{field}`: {reason}")]
    SchemaViolation { field: String, reason: String },
}

fn violation(field: &str, reason: impl Into<String>) -> FormatError {
    FormatError::SchemaViolation {
        field: field.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema_version: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub crossings: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingDocument {
    pub schema_version: String,
    pub bars: Vec<Bar>,
    pub segments: Vec<Segment>,
    pub width: i64,
    pub height: i64,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        match e.classify() {
            serde_json::error::Category::Data => violation("document", e.to_string()),
            _ => FormatError::SyntaxError {
                line,
                column,
                message: e.to_string(),
            },
        }
    })
}

fn check_version(v: &str) -> Result<(), FormatError> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(violation(
            "schema_version",
            format!("expected \"{SCHEMA_VERSION}\", found \"{v}\""),
        ))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph1Planar, FormatError> {
    let doc: GraphDocument = from_json(text)?;
    check_version(&doc.schema_version)?;
    let n = doc.n;
    let mut seen = std::collections::HashSet::new();
    for (i, &[u, v]) in doc.edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(violation(
                "edges",
                format!("edge {i} has an endpoint outside 0..{n}"),
            ));
        }
        if u == v {
            return Err(violation("edges", format!("edge {i} is a self-loop")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(violation("edges", format!("edge {i} duplicates an earlier edge")));
        }
    }
    let m = doc.edges.len();
    let mut crossed = vec![false; m];
    for (i, &[a, b]) in doc.crossings.iter().enumerate() {
        for e in [a, b] {
            if e >= m {
                return Err(violation(
                    "crossings",
                    format!("crossing {i} refers to edge {e} of {m}"),
                ));
            }
            if std::mem::replace(&mut crossed[e], true) {
                return Err(violation(
                    "crossings",
                    format!("edge {e} is crossed more than once"),
                ));
            }
        }
    }
    let g = Graph1Planar {
        vertex_count: n,
        edges: doc.edges.iter().map(|&[u, v]| (u, v)).collect(),
        crossing_pairs: doc.crossings.iter().map(|&[a, b]| (a, b)).collect(),
        outer_order: doc.outer_order,
        labels: doc.labels,
        family: doc.family,
    };
    g.check().map_err(|e| violation("graph", e.to_string()))?;
    Ok(g)
}

pub fn serialize_graph(g: &Graph1Planar) -> String {
    let doc = GraphDocument {
        schema_version: SCHEMA_VERSION.into(),
        n: g.vertex_count,
        edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        crossings: g.crossing_pairs.iter().map(|&(a, b)| [a, b]).collect(),
        outer_order: g.outer_order.clone(),
        labels: g.labels.clone(),
        family: g.family,
    };
    to_text(&doc)
}

pub fn parse_drawing(text: &str) -> Result<BarDrawing, FormatError> {
    let doc: DrawingDocument = from_json(text)?;
    check_version(&doc.schema_version)?;
    let d = BarDrawing::new(doc.bars, doc.segments);
    if d.width() != doc.width {
        return Err(violation(
            "width",
            format!("declared {}, drawing spans {}", doc.width, d.width()),
        ));
    }
    if d.height() != doc.height {
        return Err(violation(
            "height",
            format!("declared {}, drawing spans {}", doc.height, d.height()),
        ));
    }
    Ok(d)
}

pub fn serialize_drawing(d: &BarDrawing) -> String {
    let doc = DrawingDocument {
        schema_version: SCHEMA_VERSION.into(),
        bars: d.bars.clone(),
        segments: d.segments.clone(),
        width: d.width(),
        height: d.height(),
    };
    to_text(&doc)
}

fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use bar1vis::{draw_diagonal_grid, gen_diagonal_grid, DiagonalGridParams};

    const GRID: DiagonalGridParams = DiagonalGridParams { p: 2, q: 2 };

    #[test]
    fn graph_round_trip() {
        let g = gen_diagonal_grid(GRID).unwrap();
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn drawing_round_trip() {
        let d = draw_diagonal_grid(GRID).unwrap();
        assert_eq!(parse_drawing(&serialize_drawing(&d)).unwrap(), d);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let text = r#"{"schema_version":"1","n":3,"edges":[[0,1],[1,0]]}"#;
        assert!(
            matches!(parse_graph(text), Err(FormatError::SchemaViolation { field, .. }) if field == "edges")
        );
    }

    #[test]
    fn crossing_out_of_range_rejected() {
        let text = r#"{"schema_version":"1","n":3,"edges":[[0,1]],"crossings":[[0,4]]}"#;
        assert!(
            matches!(parse_graph(text), Err(FormatError::SchemaViolation { field, .. }) if field == "crossings")
        );
    }

    #[test]
    fn syntax_error_has_position() {
        let text = "{\n  \"schema_version\": \"1\",\n  \"n\": 3,,\n}";
        match parse_graph(text) {
            Err(FormatError::SyntaxError { line, column, .. }) => assert_eq!((line, column), (3, 10)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_field_rejected() {
        let text = r#"{"schema_version":"1","n":1,"edges":[],"colour":"red"}"#;
        let err = parse_graph(text).unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
    }

    #[test]
    fn wrong_extent_rejected() {
        let mut text = serialize_drawing(&draw_diagonal_grid(GRID).unwrap());
        text = text.replace("\"height\": 4", "\"height\": 5");
        assert!(
            matches!(parse_drawing(&text), Err(FormatError::SchemaViolation { field, .. }) if field == "height")
        );
    }
}
