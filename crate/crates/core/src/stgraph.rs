//! Plane st-graphs, their faces and the dual st-graph.

use crate::error::{Error, Result};
use crate::numbering::{topological_order, weighted_topological_numbering, Numbering};

pub type FaceId = usize;

/// Left outer face `s*`.
pub const S_STAR: FaceId = 0;
/// Right outer face `t*`.
pub const T_STAR: FaceId = 1;

/// A directed multigraph with a combinatorial embedding.
///
/// `rotation[v]` lists the ids of the edges incident to `v` in
/// counterclockwise order. For the source, the list must start at the
/// rightmost edge and end at the leftmost one, i.e. the outer face lies in
/// the angle from the last entry back to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedDigraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<usize>>,
}

/// An embedded st-digraph with its faces and left/right face references.
#[derive(Debug, Clone)]
pub struct PlaneStGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub rotation: Vec<Vec<usize>>,
    pub source: usize,
    pub sink: usize,
    /// Number of faces, counting `s*` and `t*` separately.
    pub face_count: usize,
    pub left: Vec<FaceId>,
    pub right: Vec<FaceId>,
    pub vertex_left: Vec<FaceId>,
    pub vertex_right: Vec<FaceId>,
    /// Boundary of each face as the edges it contains.
    pub faces: Vec<Vec<usize>>,
}

impl PlaneStGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn orig(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn dest(&self, e: usize) -> usize {
        self.edges[e].1
    }

    pub fn is_st_edge(&self, e: usize) -> bool {
        self.edges[e] == (self.source, self.sink)
    }

    /// Optimal unit-weight topological numbering of the primal digraph.
    pub fn longest_path_numbering(&self) -> Numbering {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        weighted_topological_numbering(self.vertex_count, &edges).expect("plane st-graphs are acyclic")
    }
}

/// The dual st-graph on the faces of a plane st-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualStGraph {
    pub face_count: usize,
    /// `(left(e), right(e), weight)` per primal edge.
    pub edges: Vec<(FaceId, FaceId, u32)>,
    /// Primal edge id of each dual edge.
    pub primal: Vec<usize>,
}

impl DualStGraph {
    pub fn numbering(&self) -> Result<Numbering> {
        weighted_topological_numbering(self.face_count, &self.edges)
    }
}

/// Builds the plane st-graph: traverses the faces of the embedding and
/// assigns `left(e)`/`right(e)`, splitting the outer face into `s*` (the
/// left boundary) and `t*` (the right boundary).
pub fn build_plane_st_graph(dag: &EmbeddedDigraph, s: usize, t: usize) -> Result<PlaneStGraph> {
    let n = dag.vertex_count;
    let m = dag.edges.len();
    if s >= n || t >= n || s == t {
        return Err(Error::MultipleSourcesOrSinks(
            "s and t must be distinct vertices".into(),
        ));
    }
    if dag.rotation.len() != n {
        return Err(Error::EmbeddingInconsistent(
            "one rotation list per vertex required".into(),
        ));
    }
    // position of each edge in the rotation at its origin / destination
    let mut pos_orig = vec![usize::MAX; m];
    let mut pos_dest = vec![usize::MAX; m];
    for (v, list) in dag.rotation.iter().enumerate() {
        for (i, &e) in list.iter().enumerate() {
            let (u, w) = *dag.edges.get(e).ok_or(Error::UnknownEdge(e))?;
            let slot = if u == v {
                &mut pos_orig[e]
            } else if w == v {
                &mut pos_dest[e]
            } else {
                return Err(Error::EmbeddingInconsistent(format!(
                    "edge {e} listed at non-incident vertex {v}"
                )));
            };
            if *slot != usize::MAX {
                return Err(Error::EmbeddingInconsistent(format!(
                    "edge {e} listed twice at {v}"
                )));
            }
            *slot = i;
        }
    }
    for e in 0..m {
        if dag.edges[e].0 == dag.edges[e].1 {
            return Err(Error::EmbeddingInconsistent(format!("edge {e} is a loop")));
        }
        if pos_orig[e] == usize::MAX || pos_dest[e] == usize::MAX {
            return Err(Error::EmbeddingInconsistent(format!(
                "edge {e} missing from a rotation list"
            )));
        }
    }

    if topological_order(n, dag.edges.iter().copied()).is_none() {
        return Err(Error::NotAcyclic);
    }
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(u, v) in &dag.edges {
        outdeg[u] += 1;
        indeg[v] += 1;
    }
    let sources: Vec<_> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let sinks: Vec<_> = (0..n).filter(|&v| outdeg[v] == 0).collect();
    if sources != [s] || sinks != [t] {
        return Err(Error::MultipleSourcesOrSinks(format!(
            "sources {sources:?}, sinks {sinks:?}"
        )));
    }

    // Darts: 2e runs orig -> dest, 2e+1 runs dest -> orig. The face on the
    // left of a dart continues with the edge clockwise-next around its head.
    let head = |d: usize| {
        if d % 2 == 0 {
            dag.edges[d / 2].1
        } else {
            dag.edges[d / 2].0
        }
    };
    let pos_at_head = |d: usize| {
        if d % 2 == 0 {
            pos_dest[d / 2]
        } else {
            pos_orig[d / 2]
        }
    };
    let leaving = |v: usize, e: usize| if dag.edges[e].0 == v { 2 * e } else { 2 * e + 1 };
    let next = |d: usize| {
        let v = head(d);
        let list = &dag.rotation[v];
        let i = pos_at_head(d);
        let j = if i == 0 { list.len() - 1 } else { i - 1 };
        leaving(v, list[j])
    };
    let mut face_of = vec![usize::MAX; 2 * m];
    let mut raw_faces: Vec<Vec<usize>> = Vec::new();
    for start in 0..2 * m {
        if face_of[start] != usize::MAX {
            continue;
        }
        let f = raw_faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            if face_of[d] != usize::MAX {
                return Err(Error::EmbeddingInconsistent(
                    "face traversal does not close".into(),
                ));
            }
            face_of[d] = f;
            walk.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        raw_faces.push(walk);
    }
    if m + 2 != n + raw_faces.len() {
        return Err(Error::EmbeddingInconsistent(format!(
            "{} faces for {n} vertices and {m} edges violates Euler's formula",
            raw_faces.len()
        )));
    }

    let s_rot = &dag.rotation[s];
    let outer = face_of[leaving(s, *s_rot.last().expect("source has edges"))];
    if !raw_faces[outer].iter().any(|&d| head(d) == t) {
        return Err(Error::StNotOnOuterFace);
    }
    // renumber: s* = 0, t* = 1, inner faces from 2
    let mut rename = vec![usize::MAX; raw_faces.len()];
    let mut next_id = 2;
    for (f, r) in rename.iter_mut().enumerate() {
        if f != outer {
            *r = next_id;
            next_id += 1;
        }
    }
    let face_count = next_id;
    let mut left = vec![0; m];
    let mut right = vec![0; m];
    for e in 0..m {
        let (fl, fr) = (face_of[2 * e], face_of[2 * e + 1]);
        left[e] = if fl == outer { S_STAR } else { rename[fl] };
        right[e] = if fr == outer { T_STAR } else { rename[fr] };
        if left[e] == right[e] {
            return Err(Error::EmbeddingInconsistent(format!(
                "edge {e} has the same face on both sides"
            )));
        }
    }
    let mut faces = vec![Vec::new(); face_count];
    for e in 0..m {
        faces[left[e]].push(e);
        faces[right[e]].push(e);
    }

    // left(v)/right(v): the faces separating outgoing from incoming edges
    let mut vertex_left = vec![S_STAR; n];
    let mut vertex_right = vec![T_STAR; n];
    for v in 0..n {
        if v == s || v == t {
            continue;
        }
        let list = &dag.rotation[v];
        let is_out = |e: usize| dag.edges[e].0 == v;
        let k = list.len();
        let mut out_to_in = Vec::new();
        let mut in_to_out = Vec::new();
        for i in 0..k {
            let (a, b) = (list[i], list[(i + 1) % k]);
            match (is_out(a), is_out(b)) {
                (true, false) => out_to_in.push(a),
                (false, true) => in_to_out.push(b),
                _ => {}
            }
        }
        if out_to_in.len() != 1 || in_to_out.len() != 1 {
            return Err(Error::EmbeddingInconsistent(format!(
                "incoming and outgoing edges of vertex {v} are not contiguous"
            )));
        }
        vertex_left[v] = left[out_to_in[0]];
        vertex_right[v] = right[in_to_out[0]];
    }

    Ok(PlaneStGraph {
        vertex_count: n,
        edges: dag.edges.clone(),
        rotation: dag.rotation.clone(),
        source: s,
        sink: t,
        face_count,
        left,
        right,
        vertex_left,
        vertex_right,
        faces,
    })
}

/// Dual st-graph with one unit-weight edge `left(e) -> right(e)` for every
/// primal edge `e`.
pub fn dual_of(g: &PlaneStGraph) -> DualStGraph {
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut primal = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        edges.push((g.left[e], g.right[e], 1));
        primal.push(e);
    }
    DualStGraph {
        face_count: g.face_count,
        edges,
        primal,
    }
}
