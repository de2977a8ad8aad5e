//! Geometric validation of bar k-visibility drawings.
//!
//! Conventions: a segment attaches to its endpoint bars at any x inside their
//! closed intervals. It crosses a bar `w` (not an endpoint) when `y(w)` lies
//! strictly between the segment's ends and the segment's column lies in the
//! closed x-interval of `w`. Degenerate (single-point) bars are crossable.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::drawing::{BarDrawing, Segment};
use crate::graph::{key, Graph1Planar};

/// A structural problem found in a drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    MissingBar { vertex: usize },
    DuplicateBar { vertex: usize },
    UnknownBar { bar: usize },
    MalformedBar { vertex: usize },
    MissingSegment { edge: usize },
    UnknownSegment { segment: usize },
    SegmentOffBar { segment: usize, vertex: usize },
    EndpointMismatch { segment: usize },
    BarOverlap { a: usize, b: usize },
    SegmentOverlap { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCrossings {
    pub edge: usize,
    pub segment: usize,
    pub crossing_count: usize,
    pub crossed_bars: Vec<usize>,
}

/// Edge count against the known upper bounds. A flag is `None` when the
/// graph is below the vertex count where the bound is stated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub limit_1planar: i64,
    pub limit_bar1visible: i64,
    pub limit_rac: i64,
    pub within_1planar: Option<bool>,
    pub within_bar1visible: Option<bool>,
    pub within_rac: Option<bool>,
    pub optimal_1planar: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub pass: bool,
    pub k: usize,
    pub per_edge: Vec<EdgeCrossings>,
    pub violations: Vec<Violation>,
    pub bounds: BoundReport,
}

impl ValidationReport {
    pub fn max_crossings(&self) -> usize {
        self.per_edge.iter().map(|e| e.crossing_count).max().unwrap_or(0)
    }

    /// Number of edges crossing exactly `c` bars.
    pub fn count_with(&self, c: usize) -> usize {
        self.per_edge.iter().filter(|e| e.crossing_count == c).count()
    }

    pub fn crossings_of(&self, edge: usize) -> Option<&EdgeCrossings> {
        self.per_edge.iter().find(|e| e.edge == edge)
    }
}

pub fn edge_bound_report(g: &Graph1Planar) -> BoundReport {
    bounds(g.vertex_count, g.edge_count())
}

fn bounds(n: usize, m: usize) -> BoundReport {
    let (ni, mi) = (n as i64, m as i64);
    let limit_1planar = 4 * ni - 8;
    let limit_bar1visible = 6 * ni - 20;
    let limit_rac = 4 * ni - 10;
    BoundReport {
        n,
        m,
        limit_1planar,
        limit_bar1visible,
        limit_rac,
        within_1planar: (n >= 3).then_some(mi <= limit_1planar),
        within_bar1visible: (n >= 5).then_some(mi <= limit_bar1visible),
        within_rac: (n >= 4).then_some(mi <= limit_rac),
        optimal_1planar: n >= 3 && mi == limit_1planar,
    }
}

/// Validates `d` as a bar k-visibility drawing of `g`.
pub fn validate(g: &Graph1Planar, d: &BarDrawing, k: usize) -> ValidationReport {
    validate_edges(g.vertex_count, &g.edges, d, k)
}

/// Same as [`validate`] for an arbitrary (multi)set of undirected edges.
pub fn validate_edges(n: usize, edges: &[(usize, usize)], d: &BarDrawing, k: usize) -> ValidationReport {
    let mut violations = Vec::new();

    // vertex <-> bar
    let mut bar_of = vec![usize::MAX; n];
    for (i, b) in d.bars.iter().enumerate() {
        if b.v >= n {
            violations.push(Violation::UnknownBar { bar: i });
        } else if bar_of[b.v] != usize::MAX {
            violations.push(Violation::DuplicateBar { vertex: b.v });
        } else {
            bar_of[b.v] = i;
            if b.x0 > b.x1 {
                violations.push(Violation::MalformedBar { vertex: b.v });
            }
        }
    }
    for (v, &b) in bar_of.iter().enumerate() {
        if b == usize::MAX {
            violations.push(Violation::MissingBar { vertex: v });
        }
    }

    // edge <-> segment, matching parallel edges in order
    let mut pending: HashMap<(usize, usize), VecDeque<usize>> = HashMap::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        pending.entry(key(u, v)).or_default().push_back(e);
    }
    let mut edge_of = vec![usize::MAX; d.segments.len()];
    for (i, s) in d.segments.iter().enumerate() {
        match pending.get_mut(&key(s.u, s.v)).and_then(|q| q.pop_front()) {
            Some(e) => edge_of[i] = e,
            None => violations.push(Violation::UnknownSegment { segment: i }),
        }
    }
    let mut leftover: Vec<usize> = pending.into_values().flatten().collect();
    leftover.sort_unstable();
    violations.extend(
        leftover
            .into_iter()
            .map(|edge| Violation::MissingSegment { edge }),
    );

    // attachment to endpoint bars
    for (i, s) in d.segments.iter().enumerate() {
        if edge_of[i] == usize::MAX {
            continue;
        }
        let (bu, bv) = (bar_of[s.u], bar_of[s.v]);
        if bu == usize::MAX || bv == usize::MAX {
            continue;
        }
        let (bu, bv) = (&d.bars[bu], &d.bars[bv]);
        for b in [bu, bv] {
            if !b.covers(s.x) {
                violations.push(Violation::SegmentOffBar {
                    segment: i,
                    vertex: b.v,
                });
            }
        }
        let (lo, hi) = (bu.y.min(bv.y), bu.y.max(bv.y));
        if lo == hi || s.y0 != lo || s.y1 != hi {
            violations.push(Violation::EndpointMismatch { segment: i });
        }
    }

    // bars sharing a row must be disjoint
    let mut rows: Vec<usize> = (0..d.bars.len()).collect();
    rows.sort_by_key(|&i| (d.bars[i].y, d.bars[i].x0));
    let mut widest: Option<usize> = None; // bar reaching furthest right in the row
    for &i in &rows {
        let b = &d.bars[i];
        match widest.map(|j| &d.bars[j]) {
            Some(a) if a.y == b.y => {
                if b.x0 <= a.x1 {
                    violations.push(Violation::BarOverlap { a: a.v, b: b.v });
                }
                if b.x1 > a.x1 {
                    widest = Some(i);
                }
            }
            _ => widest = Some(i),
        }
    }

    // segments sharing a column may only touch at a common endpoint bar
    let mut cols: Vec<usize> = (0..d.segments.len()).collect();
    cols.sort_by_key(|&i| (d.segments[i].x, d.segments[i].y0, d.segments[i].y1));
    let mut reach: Option<(i64, i64, usize)> = None; // (x, max y1, segment)
    for &i in &cols {
        let s = &d.segments[i];
        if let Some((x, top, j)) = reach {
            if x == s.x {
                let t = &d.segments[j];
                if s.y0 < top || (s.y0 == top && !shares_endpoint_at(t, s, top, d, &bar_of)) {
                    violations.push(Violation::SegmentOverlap { a: j, b: i });
                }
                if s.y1 > top {
                    reach = Some((x, s.y1, i));
                }
                continue;
            }
        }
        reach = Some((s.x, s.y1, i));
    }

    let counts = sweep_crossings(d);
    let per_edge: Vec<EdgeCrossings> = (0..d.segments.len())
        .filter(|&i| edge_of[i] != usize::MAX)
        .map(|i| EdgeCrossings {
            edge: edge_of[i],
            segment: i,
            crossing_count: counts[i].len(),
            crossed_bars: counts[i].clone(),
        })
        .collect();
    let pass = violations.is_empty() && per_edge.iter().all(|e| e.crossing_count <= k);
    ValidationReport {
        pass,
        k,
        per_edge,
        violations,
        bounds: bounds(n, edges.len()),
    }
}

// `lower` ends at row y where `upper` starts: they must meet on one bar.
fn shares_endpoint_at(lower: &Segment, upper: &Segment, y: i64, d: &BarDrawing, bar_of: &[usize]) -> bool {
    let at = |s: &Segment| -> Vec<usize> {
        [s.u, s.v]
            .into_iter()
            .filter(|&v| {
                bar_of
                    .get(v)
                    .is_some_and(|&b| b != usize::MAX && d.bars[b].y == y)
            })
            .collect()
    };
    let a = at(lower);
    at(upper).iter().any(|v| a.contains(v))
}

/// Crossed bars (by vertex) for every segment, via a left-to-right sweep
/// keeping the bars that cover the current column ordered by row.
pub fn sweep_crossings(d: &BarDrawing) -> Vec<Vec<usize>> {
    let mut by_start: Vec<usize> = (0..d.bars.len()).collect();
    by_start.sort_by_key(|&i| d.bars[i].x0);
    let mut by_end = by_start.clone();
    by_end.sort_by_key(|&i| d.bars[i].x1);
    let mut order: Vec<usize> = (0..d.segments.len()).collect();
    order.sort_by_key(|&i| d.segments[i].x);

    let mut active: BTreeSet<(i64, usize)> = BTreeSet::new();
    let (mut si, mut ei) = (0, 0);
    let mut out = vec![Vec::new(); d.segments.len()];
    for i in order {
        let s = &d.segments[i];
        while si < by_start.len() && d.bars[by_start[si]].x0 <= s.x {
            let b = &d.bars[by_start[si]];
            active.insert((b.y, by_start[si]));
            si += 1;
        }
        while ei < by_end.len() && d.bars[by_end[ei]].x1 < s.x {
            let b = &d.bars[by_end[ei]];
            active.remove(&(b.y, by_end[ei]));
            ei += 1;
        }
        if s.y1 - s.y0 < 2 {
            continue;
        }
        let crossed = &mut out[i];
        for &(_, b) in active.range((s.y0 + 1, 0)..(s.y1, 0)) {
            let v = d.bars[b].v;
            if v != s.u && v != s.v {
                crossed.push(v);
            }
        }
        crossed.sort_unstable();
    }
    out
}

/// Test oracle: per-segment crossing counts from exhaustive pairwise
/// segment-versus-bar tests.
pub fn brute_force_crossings(d: &BarDrawing) -> Vec<usize> {
    d.segments
        .iter()
        .map(|s| {
            d.bars
                .iter()
                .filter(|b| b.v != s.u && b.v != s.v)
                .filter(|b| s.y0 < b.y && b.y < s.y1 && b.x0 <= s.x && s.x <= b.x1)
                .count()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::Bar;

    fn bar(v: usize, y: i64, x0: i64, x1: i64) -> Bar {
        Bar { v, y, x0, x1 }
    }

    fn seg(u: usize, v: usize, x: i64, y0: i64, y1: i64) -> Segment {
        Segment { u, v, x, y0, y1 }
    }

    #[test]
    fn two_bars_one_segment() {
        let g = Graph1Planar::new(2, vec![(0, 1)]).unwrap();
        let d = BarDrawing::new(vec![bar(0, 0, 0, 2), bar(1, 1, 1, 3)], vec![seg(0, 1, 1, 0, 1)]);
        let r = validate(&g, &d, 0);
        assert!(r.pass, "{r:?}");
        assert_eq!(r.per_edge[0].crossing_count, 0);
    }

    #[test]
    fn stacked_bars_k_boundary() {
        let g = Graph1Planar::new(3, vec![(0, 2)]).unwrap();
        let d = BarDrawing::new(
            vec![bar(0, 0, 0, 2), bar(1, 1, 0, 2), bar(2, 2, 0, 2)],
            vec![seg(0, 2, 1, 0, 2)],
        );
        assert!(validate(&g, &d, 1).pass);
        let r0 = validate(&g, &d, 0);
        assert!(!r0.pass);
        assert!(r0.violations.is_empty());
        assert_eq!(r0.per_edge[0].crossed_bars, vec![1]);
    }

    #[test]
    fn endpoint_x_is_attachment() {
        let g = Graph1Planar::new(3, vec![(0, 2)]).unwrap();
        // middle bar ends exactly at the segment column: still crossed
        let d = BarDrawing::new(
            vec![bar(0, 0, 0, 2), bar(1, 1, 0, 1), bar(2, 2, 0, 2)],
            vec![seg(0, 2, 1, 0, 2)],
        );
        assert_eq!(validate(&g, &d, 1).per_edge[0].crossing_count, 1);
        // point bar left of the column: not crossed
        let d = BarDrawing::new(
            vec![bar(0, 0, 0, 2), bar(1, 1, 0, 0), bar(2, 2, 0, 2)],
            vec![seg(0, 2, 1, 0, 2)],
        );
        assert_eq!(validate(&g, &d, 0).per_edge[0].crossing_count, 0);
    }

    #[test]
    fn structural_violations_reported() {
        let g = Graph1Planar::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let d = BarDrawing::new(
            vec![bar(0, 0, 0, 1), bar(1, 1, 3, 4), bar(2, 1, 4, 6)],
            vec![seg(0, 1, 1, 0, 1)],
        );
        let r = validate(&g, &d, 1);
        assert!(!r.pass);
        assert!(r.violations.contains(&Violation::SegmentOffBar {
            segment: 0,
            vertex: 1
        }));
        assert!(r.violations.contains(&Violation::BarOverlap { a: 1, b: 2 }));
        assert!(r.violations.contains(&Violation::MissingSegment { edge: 1 }));
        assert!(!r.violations.contains(&Violation::EndpointMismatch { segment: 0 }));
    }

    #[test]
    fn overlap_behind_a_long_bar() {
        let g = Graph1Planar::new(3, vec![]).unwrap();
        let d = BarDrawing::new(vec![bar(0, 0, 0, 10), bar(1, 0, 2, 3), bar(2, 0, 5, 6)], vec![]);
        let r = validate(&g, &d, 0);
        assert!(r.violations.contains(&Violation::BarOverlap { a: 0, b: 1 }));
        assert!(r.violations.contains(&Violation::BarOverlap { a: 0, b: 2 }));
    }

    #[test]
    fn overlapping_segments_reported() {
        let g = Graph1Planar::new(4, vec![(0, 2), (1, 3)]).unwrap();
        let d = BarDrawing::new(
            vec![bar(0, 0, 0, 0), bar(1, 1, 0, 0), bar(2, 2, 0, 0), bar(3, 3, 0, 0)],
            vec![seg(0, 2, 0, 0, 2), seg(1, 3, 0, 1, 3)],
        );
        let r = validate(&g, &d, 2);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SegmentOverlap { .. })));
    }

    #[test]
    fn touching_segments_need_common_bar() {
        let g = Graph1Planar::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let d = BarDrawing::new(
            vec![bar(0, 0, 0, 0), bar(1, 1, 0, 0), bar(2, 2, 0, 0)],
            vec![seg(0, 1, 0, 0, 1), seg(1, 2, 0, 1, 2)],
        );
        assert!(validate(&g, &d, 0).pass);
    }

    #[test]
    fn missing_and_unknown() {
        let g = Graph1Planar::new(2, vec![(0, 1)]).unwrap();
        let d = BarDrawing::new(vec![bar(0, 0, 0, 0), bar(5, 1, 0, 0)], vec![seg(0, 5, 0, 0, 1)]);
        let r = validate(&g, &d, 1);
        assert!(r.violations.contains(&Violation::MissingBar { vertex: 1 }));
        assert!(r.violations.contains(&Violation::UnknownBar { bar: 1 }));
        assert!(r.violations.contains(&Violation::UnknownSegment { segment: 0 }));
        assert!(r.violations.contains(&Violation::MissingSegment { edge: 0 }));
    }

    #[test]
    fn bounds() {
        let k4 = Graph1Planar::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let b = edge_bound_report(&k4);
        assert_eq!(b.limit_1planar, 8);
        assert_eq!(b.within_1planar, Some(true));
        assert_eq!(b.within_bar1visible, None);
        assert!(!b.optimal_1planar);
    }

    #[test]
    fn brute_force_empty() {
        assert!(brute_force_crossings(&BarDrawing::default()).is_empty());
        let d = BarDrawing::new(vec![bar(0, 0, 0, 3)], vec![]);
        assert!(brute_force_crossings(&d).is_empty());
    }
}
