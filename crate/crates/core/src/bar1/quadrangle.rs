use std::collections::HashMap;

use crate::drawing::{Bar, BarDrawing, Segment};
use crate::error::Result;
use crate::generators::{gen_recursive_quadrangle, ring_vertex, RecursiveQuadrangleParams};
use crate::graph::key;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

// Innermost rectangle with both diagonals: (role, row, x0, x1).
const CORE_BARS: [(usize, i64, i64, i64); 4] = [(A, 0, 1, 3), (D, 1, 0, 2), (B, 2, 1, 3), (C, 3, 0, 3)];
// (role, role, column); a-b crosses d and a-c crosses b.
const CORE_SEGMENTS: [(usize, usize, i64); 6] =
    [(D, C, 0), (A, B, 1), (B, C, 1), (A, D, 2), (D, B, 2), (A, C, 3)];

struct Layout {
    bars: Vec<Bar>,
    segments: HashMap<(usize, usize), i64>,
    left: i64,
    right: i64,
}

impl Layout {
    fn bar(&mut self, r: usize, role: usize) -> &mut Bar {
        &mut self.bars[ring_vertex(r, role)]
    }

    fn seg(&mut self, u: usize, v: usize, x: i64) {
        self.segments.insert(key(u, v), x);
    }

    /// Wraps ring `r` around ring `r - 1`, keeping: a bottom, d second from
    /// bottom, b second from top, c top; c and d starting at the left edge
    /// with a and b one further right; b and c ending at the right edge.
    fn step(&mut self, r: usize) {
        let (l, rt) = (self.left, self.right);
        let ymin = self.bar(r - 1, A).y;
        let ymax = self.bar(r - 1, C).y;
        self.bar(r - 1, A).x0 -= 4;
        self.bar(r - 1, D).x0 -= 4;
        self.bar(r - 1, B).x0 -= 2;
        self.bar(r - 1, C).x1 += 5;
        self.bar(r - 1, B).x1 += 5;
        for (role, y, x0, x1) in [
            (A, ymin - 2, l - 5, rt + 1),
            (D, ymin - 1, l - 6, rt + 3),
            (B, ymax + 1, l - 5, rt + 6),
            (C, ymax + 2, l - 6, rt + 6),
        ] {
            let v = ring_vertex(r, role);
            self.bars[v] = Bar { v, y, x0, x1 };
        }
        let o = |role| ring_vertex(r - 1, role);
        let n = |role| ring_vertex(r, role);
        for (u, v, x) in [
            (n(C), n(D), l - 6),
            (n(A), n(B), l - 5),
            (n(A), o(D), l - 4),
            (o(D), n(C), l - 4),
            (n(A), o(A), l - 3),
            (o(A), n(B), l - 3),
            (n(D), o(D), l - 2),
            (n(A), n(D), l - 1),
            (n(D), o(A), l - 1),
            (o(B), n(C), l - 1),
            (n(A), o(B), rt + 1),
            (o(B), n(B), rt + 1),
            (n(D), o(C), rt + 3),
            (o(C), n(B), rt + 3),
            (o(C), n(C), rt + 5),
            (n(B), n(C), rt + 6),
        ] {
            self.seg(u, v, x);
        }
        self.left = l - 6;
        self.right = rt + 6;
    }
}

/// Bar 1-visibility drawing of the recursive quadrangle graph `G_i`.
///
/// The innermost rectangle is drawn from a fixed table and every further
/// ring is wrapped around the previous one. In the optimal variant the two
/// diagonals of the outermost rectangle are drawn just outside the left and
/// right edges. Segment `e` draws edge `e` of [`gen_recursive_quadrangle`].
pub fn draw_recursive_quadrangle(params: RecursiveQuadrangleParams) -> Result<BarDrawing> {
    let g = gen_recursive_quadrangle(params)?;
    let rings = params.i + 2;
    let mut layout = Layout {
        bars: (0..g.vertex_count)
            .map(|v| Bar {
                v,
                y: 0,
                x0: 0,
                x1: 0,
            })
            .collect(),
        segments: HashMap::new(),
        left: 0,
        right: 3,
    };
    for (role, y, x0, x1) in CORE_BARS {
        *layout.bar(0, role) = Bar {
            v: ring_vertex(0, role),
            y,
            x0,
            x1,
        };
    }
    for (u, v, x) in CORE_SEGMENTS {
        layout.seg(ring_vertex(0, u), ring_vertex(0, v), x);
    }
    for r in 1..rings {
        layout.step(r);
    }
    if params.optimal {
        let r = rings - 1;
        let (l, rt) = (layout.left, layout.right);
        layout.bar(r, A).x0 = l - 1;
        layout.bar(r, C).x0 = l - 1;
        layout.bar(r, B).x1 = rt + 1;
        layout.bar(r, D).x1 = rt + 1;
        layout.seg(ring_vertex(r, A), ring_vertex(r, C), l - 1);
        layout.seg(ring_vertex(r, B), ring_vertex(r, D), rt + 1);
    }

    let bars = layout.bars;
    let segments = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let (lo, hi) = if bars[u].y < bars[v].y { (u, v) } else { (v, u) };
            Segment {
                u: lo,
                v: hi,
                x: layout.segments[&key(u, v)],
                y0: bars[lo].y,
                y1: bars[hi].y,
            }
        })
        .collect();
    let mut d = BarDrawing::new(bars, segments);
    d.normalize();
    Ok(d)
}

/// Checks the wrapping invariants for the outermost ring `r` of a drawing
/// from [`draw_recursive_quadrangle`] (without the optimal pair): row order
/// a < d < (inner rings) < b < c, c and d starting leftmost with a and b
/// one column further right, b and c ending rightmost, and the segment
/// a-b crossing bar d.
pub fn ring_invariants_hold(d: &BarDrawing, r: usize) -> bool {
    let bar = |role| d.bar(ring_vertex(r, role)).copied();
    let (Some(a), Some(b), Some(c), Some(dd)) = (bar(A), bar(B), bar(C), bar(D)) else {
        return false;
    };
    let inner: Vec<&Bar> = d.bars.iter().filter(|x| x.v < 4 * r).collect();
    let rows = a.y < dd.y && inner.iter().all(|x| dd.y < x.y && x.y < b.y) && b.y < c.y;
    let min_x0 = d.bars.iter().filter(|x| x.v < 4 * (r + 1)).map(|x| x.x0).min();
    let max_x1 = d.bars.iter().filter(|x| x.v < 4 * (r + 1)).map(|x| x.x1).max();
    let (Some(lo), Some(hi)) = (min_x0, max_x1) else {
        return false;
    };
    let starts =
        c.x0 == lo && dd.x0 == lo && a.x0 == lo + 1 && b.x0 == lo + 1 && inner.iter().all(|x| x.x0 > lo);
    let ends = b.x1 == hi && c.x1 == hi;
    let crossing = d
        .segment(a.v, b.v)
        .is_some_and(|s| s.y0 < dd.y && dd.y < s.y1 && dd.covers(s.x));
    rows && starts && ends && crossing
}
