use crate::drawing::{Bar, BarDrawing, Segment};
use crate::embedding::rotation_from_positions;
use crate::error::Result;
use crate::generators::{gen_diagonal_grid, DiagonalGridParams};
use crate::numbering::Numbering;
use crate::stgraph::{build_plane_st_graph, EmbeddedDigraph};
use crate::visibility::visibility_drawing_with_rows;

/// Bar 1-visibility drawing of the diagonal grid `G_{p,q}`.
///
/// The grid without its left diagonals is drawn as a visibility drawing
/// with row `Y(v_{i,j}) = j + 2(i-1)`. Each right diagonal then gets a fresh
/// column just right of it, into which the cell's up-left bar is extended
/// and the cell's bottom-right bar is pulled back, so the left diagonal fits
/// there between two adjacent rows. The right diagonal ends up crossing the
/// up-left bar. Segment `e` of the result draws edge `e` of
/// [`gen_diagonal_grid`].
pub fn draw_diagonal_grid(params: DiagonalGridParams) -> Result<BarDrawing> {
    let g = gen_diagonal_grid(params)?;
    let DiagonalGridParams { p, q } = params;
    let n = p * q;
    let (s, t) = (n, n + 1);
    let (row_of, col_of) = (|v: usize| v / q + 1, |v: usize| v % q + 1);
    let level = |v: usize| (col_of(v) + 2 * (row_of(v) - 1)) as i64;

    let mut is_left = vec![false; g.edge_count()];
    for &(_, l) in &g.crossing_pairs {
        is_left[l] = true;
    }
    let mut dag_edges = Vec::new();
    let mut dag_id = vec![usize::MAX; g.edge_count()];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        if !is_left[e] {
            dag_id[e] = dag_edges.len();
            dag_edges.push(if level(u) < level(v) { (u, v) } else { (v, u) });
        }
    }
    for j in 0..q {
        dag_edges.push((s, j));
        dag_edges.push(((p - 1) * q + j, t));
    }
    let mut pos: Vec<(i64, i64)> = (0..n).map(|v| (col_of(v) as i64, row_of(v) as i64)).collect();
    pos.extend([(0, 0), (0, p as i64 + 1)]);
    let mut rows: Vec<i64> = (0..n).map(level).collect();
    rows.extend([0, level(n - 1) + 1]);

    let dag = EmbeddedDigraph {
        vertex_count: n + 2,
        rotation: rotation_from_positions(&pos, &dag_edges),
        edges: dag_edges,
    };
    let st = build_plane_st_graph(&dag, s, t)?;
    let base = visibility_drawing_with_rows(&st, &Numbering::new(rows))?;

    // one new column right after each distinct right-diagonal column
    let diag_cols: Vec<i64> = g
        .crossing_pairs
        .iter()
        .map(|&(r, _)| base.segments[dag_id[r]].x)
        .collect();
    let mut cols = diag_cols.clone();
    cols.sort_unstable();
    cols.dedup();
    let shift = |x: i64| x + cols.partition_point(|&c| c < x) as i64;

    let mut bars: Vec<Bar> = base.bars[..n]
        .iter()
        .map(|b| Bar {
            x0: shift(b.x0),
            x1: shift(b.x1),
            ..*b
        })
        .collect();
    let mut segments: Vec<Segment> = (0..g.edge_count())
        .map(|e| match dag_id[e] {
            usize::MAX => Segment {
                u: 0,
                v: 0,
                x: 0,
                y0: 0,
                y1: 0,
            },
            id => Segment {
                x: shift(base.segments[id].x),
                ..base.segments[id]
            },
        })
        .collect();
    for (&(_, l), &c) in g.crossing_pairs.iter().zip(&diag_cols) {
        let x = shift(c) + 1;
        let (u, v) = g.edges[l];
        let (low, high) = if level(u) < level(v) { (u, v) } else { (v, u) };
        bars[high].x1 = bars[high].x1.max(x);
        bars[low].x0 = bars[low].x0.min(x);
        segments[l] = Segment {
            u: low,
            v: high,
            x,
            y0: level(low),
            y1: level(high),
        };
    }
    let mut d = BarDrawing::new(bars, segments);
    d.normalize();
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::validate;

    #[test]
    fn right_diagonal_crosses_up_left_bar() {
        let params = DiagonalGridParams { p: 2, q: 2 };
        let g = gen_diagonal_grid(params).unwrap();
        let r = validate(&g, &draw_diagonal_grid(params).unwrap(), 1);
        let (right, _) = g.crossing_pairs[0];
        // cell a=v11, b=v12, c=v22, d=v21
        assert_eq!(r.crossings_of(right).unwrap().crossed_bars, vec![2]);
    }

    #[test]
    fn grids_validate() {
        for p in 2..=8 {
            for q in 2..=8 {
                let params = DiagonalGridParams { p, q };
                let g = gen_diagonal_grid(params).unwrap();
                let d = draw_diagonal_grid(params).unwrap();
                let r = validate(&g, &d, 1);
                assert!(r.pass, "{p}x{q}: {:?}", r.violations);
                let (h, w) = (d.height(), d.width());
                assert!(h <= (q + 2 * p - 2) as i64, "{p}x{q} height {h}");
                assert!(w <= (3 * (p + q) - 3) as i64, "{p}x{q} width {w}");
                for &(right, left) in &g.crossing_pairs {
                    assert_eq!(r.crossings_of(right).unwrap().crossing_count, 1);
                    assert_eq!(r.crossings_of(left).unwrap().crossing_count, 0);
                }
                for y in 0..h {
                    assert!(d.bars.iter().any(|b| b.y == y), "{p}x{q} empty row {y}");
                }
                for x in 0..w - 1 {
                    let used =
                        d.segments.iter().any(|s| s.x == x) || d.bars.iter().any(|b| b.x0 == x || b.x1 == x);
                    assert!(used, "{p}x{q} empty column {x}");
                }
            }
        }
    }
}
