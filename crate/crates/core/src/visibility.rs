//! Visibility drawings of plane st-graphs, with optional vertical alignment
//! of prescribed directed paths.

use std::collections::HashMap;

use crate::drawing::{Bar, BarDrawing, Segment};
use crate::error::{Error, Result};
use crate::numbering::{weighted_topological_numbering, Numbering};
use crate::stgraph::{dual_of, PlaneStGraph};

/// Visibility drawing from the primal longest-path numbering (rows) and the
/// dual one (columns). Every segment lies in the column of its left face.
pub fn visibility_drawing(g: &PlaneStGraph) -> Result<BarDrawing> {
    constrained_visibility_drawing(g, &[])
}

/// Visibility drawing with caller-chosen rows. `rows` must increase
/// strictly along every edge.
pub fn visibility_drawing_with_rows(g: &PlaneStGraph, rows: &Numbering) -> Result<BarDrawing> {
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        if rows.get(v) <= rows.get(u) {
            return Err(Error::InvalidNumbering {
                edge: e,
                from: u,
                to: v,
            });
        }
    }
    draw(g, rows, &[])
}

/// Visibility drawing in which all edges of each path in `paths` share one
/// column. The paths must be directed, edge-disjoint and non-crossing.
pub fn constrained_visibility_drawing(g: &PlaneStGraph, paths: &[Vec<usize>]) -> Result<BarDrawing> {
    check_nonintersecting(g, paths)?;
    draw(g, &g.longest_path_numbering(), paths)
}

fn draw(g: &PlaneStGraph, y: &Numbering, paths: &[Vec<usize>]) -> Result<BarDrawing> {
    // one extra dual node per path, squeezed between the faces of its edges
    let dual = dual_of(g);
    let mut edges = dual.edges.clone();
    let mut on_path = vec![usize::MAX; g.edge_count()];
    for (i, path) in paths.iter().enumerate() {
        let node = g.face_count + i;
        for &e in path {
            on_path[e] = node;
            edges.push((g.left[e], node, 0));
            edges.push((node, g.right[e], 1));
        }
    }
    let x = weighted_topological_numbering(g.face_count + paths.len(), &edges)?;

    let bars = (0..g.vertex_count)
        .map(|v| Bar {
            v,
            y: y.get(v),
            x0: x.get(g.vertex_left[v]),
            x1: x.get(g.vertex_right[v]) - 1,
        })
        .collect();
    let segments = g
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| Segment {
            u,
            v,
            x: x.get(if on_path[e] == usize::MAX {
                g.left[e]
            } else {
                on_path[e]
            }),
            y0: y.get(u),
            y1: y.get(v),
        })
        .collect();
    Ok(BarDrawing::new(bars, segments))
}

/// Checks that every path is a directed walk of existing edges, that no two
/// paths share an edge, and that no two paths cross at a common vertex.
pub fn check_nonintersecting(g: &PlaneStGraph, paths: &[Vec<usize>]) -> Result<()> {
    let mut owner: HashMap<usize, usize> = HashMap::new();
    // vertex -> (path, edge into it, edge out of it)
    let mut through: HashMap<usize, Vec<(usize, usize, usize)>> = HashMap::new();
    for (i, path) in paths.iter().enumerate() {
        if path.is_empty() {
            return Err(Error::InvalidPath(i));
        }
        for &e in path {
            if e >= g.edge_count() {
                return Err(Error::UnknownEdge(e));
            }
            if let Some(&j) = owner.get(&e) {
                return Err(Error::PathsIntersect(j, i));
            }
            owner.insert(e, i);
        }
        for w in path.windows(2) {
            if g.dest(w[0]) != g.orig(w[1]) {
                return Err(Error::InvalidPath(i));
            }
            through.entry(g.dest(w[0])).or_default().push((i, w[0], w[1]));
        }
    }
    for (v, list) in &through {
        let rot = &g.rotation[*v];
        let pos = |e: usize| rot.iter().position(|&f| f == e).expect("edge in rotation");
        for (a, &(pa, a1, a2)) in list.iter().enumerate() {
            for &(pb, b1, b2) in &list[a + 1..] {
                if pa == pb {
                    return Err(Error::InvalidPath(pa));
                }
                let (lo, hi) = (pos(a1).min(pos(a2)), pos(a1).max(pos(a2)));
                let inside = |e: usize| (lo < pos(e)) && (pos(e) < hi);
                if inside(b1) != inside(b2) {
                    return Err(Error::PathsIntersect(pa, pb));
                }
            }
        }
    }
    Ok(())
}
