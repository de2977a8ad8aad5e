//! Undirected graphs carrying 1-planarity annotations.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Generator family a graph was built from, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Family {
    DiagonalGrid { p: usize, q: usize },
    RecursiveQuadrangle { i: usize, optimal: bool },
    PdwEven { n: usize },
    PdwOdd { n: usize },
    QuadrangleChain { k: usize },
}

/// An undirected simple graph with optional 1-planar annotations.
///
/// `crossing_pairs` lists pairs of edge indices that cross in the intended
/// 1-planar drawing. `outer_order` is the counterclockwise order of the
/// vertices along the outer face, present for outer-1-plane inputs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph1Planar {
    pub vertex_count: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub crossing_pairs: Vec<(EdgeId, EdgeId)>,
    pub outer_order: Option<Vec<VertexId>>,
    pub labels: Option<Vec<String>>,
    pub family: Option<Family>,
}

impl Graph1Planar {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let g = Graph1Planar {
            vertex_count,
            edges,
            ..Default::default()
        };
        g.check()?;
        Ok(g)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Checks the structural invariants: endpoints in range, no self-loops,
    /// no duplicate edges, each edge in at most one crossing pair, and
    /// `outer_order` (if any) a permutation of the vertices.
    pub fn check(&self) -> Result<()> {
        let n = self.vertex_count;
        let mut seen = HashSet::with_capacity(self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {i} has endpoint out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {i} is a self-loop")));
            }
            if !seen.insert(key(u, v)) {
                return Err(Error::InvalidGraph(format!("edge {i} ({u},{v}) is a duplicate")));
            }
        }
        let mut crossed = vec![false; self.edges.len()];
        for &(a, b) in &self.crossing_pairs {
            for e in [a, b] {
                if e >= self.edges.len() {
                    return Err(Error::InvalidGraph(format!(
                        "crossing refers to unknown edge {e}"
                    )));
                }
                if crossed[e] {
                    return Err(Error::InvalidGraph(format!(
                        "edge {e} is in more than one crossing pair"
                    )));
                }
                crossed[e] = true;
            }
        }
        if let Some(order) = &self.outer_order {
            if !is_permutation(order, n) {
                return Err(Error::InvalidGraph(
                    "outer_order is not a permutation of the vertices".into(),
                ));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Error::InvalidGraph(
                    "labels length differs from vertex count".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Degrees of all vertices.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Map from unordered endpoint pair to edge index.
    pub fn edge_index(&self) -> HashMap<(VertexId, VertexId), EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (key(u, v), i))
            .collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.iter().any(|&(a, b)| key(a, b) == key(u, v))
    }

    /// Per-edge flag: does the edge belong to a crossing pair?
    pub fn crossing_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.edges.len()];
        for &(a, b) in &self.crossing_pairs {
            flags[a] = true;
            flags[b] = true;
        }
        flags
    }

    /// The quadrangles of an outer-1-plane graph, one per crossing pair, as
    /// the four endpoints in outer (counterclockwise) order.
    pub fn quadrangles(&self) -> Result<Vec<Quadrangle>> {
        let order = self
            .outer_order
            .as_ref()
            .ok_or_else(|| Error::NotOuter1Plane("missing outer_order".into()))?;
        let pos = positions(order, self.vertex_count);
        let mut quads = Vec::with_capacity(self.crossing_pairs.len());
        for &(e1, e2) in &self.crossing_pairs {
            let mut corners = [
                self.edges[e1].0,
                self.edges[e1].1,
                self.edges[e2].0,
                self.edges[e2].1,
            ];
            corners.sort_by_key(|&v| pos[v]);
            quads.push(Quadrangle {
                corners,
                diagonals: (e1, e2),
            });
        }
        Ok(quads)
    }

    /// Structural test for outer-1-plane inputs: all vertices in the outer
    /// order, chords cross exactly when annotated as a crossing pair, and
    /// every crossing pair is surrounded by a 4-cycle of non-crossing edges.
    pub fn check_outer_1_plane(&self) -> Result<()> {
        self.check().map_err(|e| Error::NotOuter1Plane(e.to_string()))?;
        let order = self
            .outer_order
            .as_ref()
            .ok_or_else(|| Error::NotOuter1Plane("missing outer_order".into()))?;
        if self.crossing_pairs.is_empty() {
            return Err(Error::NotOuter1Plane("no crossing pairs".into()));
        }
        let pos = positions(order, self.vertex_count);
        let flags = self.crossing_flags();
        // Chords of a convex polygon cross iff their endpoints interleave.
        // Every annotated pair must interleave and no other pair may, so the
        // total number of interleaving pairs must equal the annotation count.
        for &(a, b) in &self.crossing_pairs {
            if !interleaved(self.edges[a], self.edges[b], &pos) {
                return Err(Error::NotOuter1Plane(format!(
                    "edges {a} and {b} are annotated as crossing but do not interleave"
                )));
            }
        }
        let total = count_interleaved(&self.edges, &pos);
        if total != self.crossing_pairs.len() {
            return Err(Error::NotOuter1Plane(format!(
                "{total} chord crossings but {} annotated",
                self.crossing_pairs.len()
            )));
        }
        let index = self.edge_index();
        for q in self.quadrangles()? {
            let c = q.corners;
            for k in 0..4 {
                let (u, v) = (c[k], c[(k + 1) % 4]);
                match index.get(&key(u, v)) {
                    Some(&e) if !flags[e] => {}
                    _ => {
                        return Err(Error::NotOuter1Plane(format!(
                            "crossing {:?} not surrounded by a non-crossing 4-cycle",
                            q.diagonals
                        )))
                    }
                }
            }
        }
        Ok(())
    }
}

/// A crossing pair together with the 4-cycle surrounding it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadrangle {
    /// Corners in counterclockwise outer order.
    pub corners: [VertexId; 4],
    pub diagonals: (EdgeId, EdgeId),
}

pub(crate) fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

pub(crate) fn is_permutation(order: &[usize], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub(crate) fn positions(order: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Number of chord pairs whose endpoints strictly interleave along the
/// outer order, in `O(m log m)`.
fn count_interleaved(edges: &[(VertexId, VertexId)], pos: &[usize]) -> usize {
    let mut spans: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| key(pos[u], pos[v])).collect();
    spans.sort_unstable();
    let mut tree = vec![0usize; pos.len() + 1];
    let prefix = |tree: &[usize], mut i: usize| {
        let mut sum = 0;
        while i > 0 {
            sum += tree[i];
            i &= i - 1;
        }
        sum
    };
    let mut total = 0;
    let mut i = 0;
    while i < spans.len() {
        let start = i;
        while i < spans.len() && spans[i].0 == spans[start].0 {
            let (c, d) = spans[i];
            // earlier spans (a, b) with a < c and c < b < d
            total += prefix(&tree, d) - prefix(&tree, c + 1);
            i += 1;
        }
        for &(_, b) in &spans[start..i] {
            let mut j = b + 1;
            while j < tree.len() {
                tree[j] += 1;
                j += j & j.wrapping_neg();
            }
        }
    }
    total
}

fn interleaved(a: (usize, usize), b: (usize, usize), pos: &[usize]) -> bool {
    let (a0, a1) = key(pos[a.0], pos[a.1]);
    let (b0, b1) = (pos[b.0], pos[b.1]);
    if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
        return false;
    }
    let inside = |p: usize| a0 < p && p < a1;
    inside(b0) != inside(b1)
}
