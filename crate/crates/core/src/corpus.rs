//! Parameter sweeps over the graph families and small layered st-graphs,
//! shared by tests, benchmarks and the command-line tool.

use crate::embedding::rotation_from_positions;
use crate::error::Result;
use crate::graph::Family;
use crate::stgraph::{build_plane_st_graph, EmbeddedDigraph, PlaneStGraph};

/// Every family instance in the standard sweep: diagonal grids up to 8x8,
/// quadrangle chains up to 20, recursive quadrangles up to depth 4 (both
/// variants) and pseudo double wheels with `n` in `3..=10`.
pub fn families() -> Vec<Family> {
    let mut out = Vec::new();
    for p in 2..=8 {
        for q in 2..=8 {
            out.push(Family::DiagonalGrid { p, q });
        }
    }
    out.extend((1..=20).map(|k| Family::QuadrangleChain { k }));
    for i in 0..=4 {
        for optimal in [false, true] {
            out.push(Family::RecursiveQuadrangle { i, optimal });
        }
    }
    for n in 3..=10 {
        out.push(Family::PdwEven { n });
        out.push(Family::PdwOdd { n });
    }
    out
}

/// A layered plane st-graph together with its vertical paths.
#[derive(Debug, Clone)]
pub struct LayeredStGraph {
    pub graph: PlaneStGraph,
    /// For each grid column, the directed path `s -> column -> t`.
    pub columns: Vec<Vec<usize>>,
}

/// A `p x q` grid whose columns run from a source below to a sink above.
/// Each horizontal edge and each up-right diagonal is kept when `keep`
/// returns true for its running index; vertical edges are always present.
pub fn layered_st_graph(p: usize, q: usize, mut keep: impl FnMut(usize) -> bool) -> Result<LayeredStGraph> {
    let n = p * q;
    let (s, t) = (n, n + 1);
    let id = |i: usize, j: usize| i * q + j;
    let mut edges = Vec::new();
    let mut columns = vec![Vec::new(); q];
    for (j, col) in columns.iter_mut().enumerate() {
        col.push(edges.len());
        edges.push((s, id(0, j)));
        for i in 0..p - 1 {
            col.push(edges.len());
            edges.push((id(i, j), id(i + 1, j)));
        }
        col.push(edges.len());
        edges.push((id(p - 1, j), t));
    }
    let mut optional = 0;
    for i in 0..p {
        for j in 0..q.saturating_sub(1) {
            if keep(optional) {
                edges.push((id(i, j), id(i, j + 1)));
            }
            optional += 1;
            if i + 1 < p {
                if keep(optional) {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                }
                optional += 1;
            }
        }
    }
    let mut pos: Vec<(i64, i64)> = (0..n).map(|v| ((v % q) as i64, (v / q) as i64 + 1)).collect();
    pos.extend([(0, 0), (0, p as i64 + 1)]);
    let dag = EmbeddedDigraph {
        vertex_count: n + 2,
        rotation: rotation_from_positions(&pos, &edges),
        edges,
    };
    Ok(LayeredStGraph {
        graph: build_plane_st_graph(&dag, s, t)?,
        columns,
    })
}
