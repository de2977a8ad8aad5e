//! Bar drawings: horizontal bars for vertices, vertical segments for edges.

use serde::{Deserialize, Serialize};

/// Horizontal bar of vertex `v` at row `y` spanning columns `x0..=x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bar {
    pub v: usize,
    pub y: i64,
    pub x0: i64,
    pub x1: i64,
}

impl Bar {
    pub fn covers(&self, x: i64) -> bool {
        self.x0 <= x && x <= self.x1
    }
}

/// Vertical segment of edge `(u, v)` in column `x` spanning rows `y0..=y1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Segment {
    pub u: usize,
    pub v: usize,
    pub x: i64,
    pub y0: i64,
    pub y1: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BarDrawing {
    pub bars: Vec<Bar>,
    pub segments: Vec<Segment>,
}

impl BarDrawing {
    pub fn new(bars: Vec<Bar>, segments: Vec<Segment>) -> Self {
        BarDrawing { bars, segments }
    }

    /// Smallest and largest column used, or `None` for an empty drawing.
    pub fn x_range(&self) -> Option<(i64, i64)> {
        let xs = self
            .bars
            .iter()
            .flat_map(|b| [b.x0, b.x1])
            .chain(self.segments.iter().map(|s| s.x));
        min_max(xs)
    }

    pub fn y_range(&self) -> Option<(i64, i64)> {
        let ys = self
            .bars
            .iter()
            .map(|b| b.y)
            .chain(self.segments.iter().flat_map(|s| [s.y0, s.y1]));
        min_max(ys)
    }

    /// Number of vertical grid lines spanned by the drawing.
    pub fn width(&self) -> i64 {
        self.x_range().map_or(0, |(lo, hi)| hi - lo + 1)
    }

    /// Number of horizontal grid lines spanned by the drawing.
    pub fn height(&self) -> i64 {
        self.y_range().map_or(0, |(lo, hi)| hi - lo + 1)
    }

    /// Translates the drawing so that its bounding box starts at (0, 0).
    pub fn normalize(&mut self) {
        let (Some((x_lo, _)), Some((y_lo, _))) = (self.x_range(), self.y_range()) else {
            return;
        };
        for b in &mut self.bars {
            b.x0 -= x_lo;
            b.x1 -= x_lo;
            b.y -= y_lo;
        }
        for s in &mut self.segments {
            s.x -= x_lo;
            s.y0 -= y_lo;
            s.y1 -= y_lo;
        }
    }

    /// Bar of vertex `v`, if present.
    pub fn bar(&self, v: usize) -> Option<&Bar> {
        self.bars.iter().find(|b| b.v == v)
    }

    /// Segment joining `u` and `v` in either orientation.
    pub fn segment(&self, u: usize, v: usize) -> Option<&Segment> {
        self.segments
            .iter()
            .find(|s| (s.u == u && s.v == v) || (s.u == v && s.v == u))
    }
}

fn min_max(it: impl Iterator<Item = i64>) -> Option<(i64, i64)> {
    it.fold(None, |acc, v| match acc {
        None => Some((v, v)),
        Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
    })
}
