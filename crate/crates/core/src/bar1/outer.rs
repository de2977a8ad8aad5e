use crate::drawing::{BarDrawing, Segment};
use crate::error::{Error, Result};
use crate::graph::{key, positions, Graph1Planar, VertexId};
use crate::stgraph::{build_plane_st_graph, EmbeddedDigraph};
use crate::visibility::constrained_visibility_drawing;

/// Labels `1..=n` such that in every quadrangle the minimum and maximum
/// labels sit on the two ends of one diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalLabeling {
    pub labels: Vec<usize>,
}

impl DiagonalLabeling {
    pub fn label(&self, v: VertexId) -> usize {
        self.labels[v]
    }

    /// Vertices in increasing label order.
    pub fn order(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = (0..self.labels.len()).collect();
        vs.sort_by_key(|&v| self.labels[v]);
        vs
    }
}

/// Labels the vertices of an outer-1-plane graph starting from vertex 0.
///
/// Vertices are processed in label order. Each one hands out the next
/// labels first to its unlabeled neighbors over non-crossing edges, then to
/// those over crossing edges, both in counterclockwise outer order. The
/// min/max-diagonal property is verified before returning.
pub fn diagonal_labeling(g: &Graph1Planar) -> Result<DiagonalLabeling> {
    g.check_outer_1_plane()?;
    let n = g.vertex_count;
    let pos = positions(g.outer_order.as_deref().unwrap_or_default(), n);
    let crossing = g.crossing_flags();
    let mut incident: Vec<Vec<(VertexId, bool)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        incident[u].push((v, crossing[e]));
        incident[v].push((u, crossing[e]));
    }

    let mut labels = vec![0usize; n];
    let mut order = vec![0];
    labels[0] = 1;
    let mut next = 0;
    while next < order.len() {
        let v = order[next];
        next += 1;
        let offset = |w: VertexId| (pos[w] + n - pos[v]) % n;
        let mut nbrs = incident[v].clone();
        nbrs.sort_by_key(|&(w, crossed)| (crossed, offset(w)));
        for (w, _) in nbrs {
            if labels[w] == 0 {
                order.push(w);
                labels[w] = order.len();
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotOuter1Plane("graph is disconnected".into()));
    }

    for q in g.quadrangles()? {
        let c = q.corners;
        let lo = *c.iter().min_by_key(|&&v| labels[v]).expect("four corners");
        let hi = *c.iter().max_by_key(|&&v| labels[v]).expect("four corners");
        let (a, b) = g.edges[q.diagonals.0];
        let (x, y) = g.edges[q.diagonals.1];
        if key(lo, hi) != key(a, b) && key(lo, hi) != key(x, y) {
            return Err(Error::LabelingPropertyViolated(c));
        }
    }
    Ok(DiagonalLabeling { labels })
}

/// The planarized, st-oriented graph drawn by [`draw_maximal_outer`].
#[derive(Debug, Clone)]
pub struct OuterPlanarization {
    pub labeling: DiagonalLabeling,
    pub dag: EmbeddedDigraph,
    pub source: VertexId,
    pub sink: VertexId,
    /// Constraint paths, one per quadrangle, replacing its min-max diagonal.
    pub paths: Vec<Vec<usize>>,
    /// Original edge drawn by each digraph edge (`None` for dummy edges).
    /// Both edges of a constraint path map to the rerouted diagonal.
    pub original: Vec<Option<usize>>,
}

/// Orients edges from low to high label, replaces each min-max diagonal
/// by a parallel path through the quadrangle corner on its right, and joins
/// every other sink to the highest sink through the outer face.
pub fn planarize_maximal_outer(g: &Graph1Planar) -> Result<OuterPlanarization> {
    let labeling = diagonal_labeling(g)?;
    let n = g.vertex_count;
    let order = g.outer_order.clone().expect("checked by labeling");
    let pos = positions(&order, n);
    let index = g.edge_index();
    for k in 0..n {
        if !index.contains_key(&key(order[k], order[(k + 1) % n])) {
            return Err(Error::NotOuter1Plane("outer cycle is incomplete".into()));
        }
    }
    let lab = |v: VertexId| labeling.labels[v];
    let offset = |v: VertexId, w: VertexId| (pos[w] + n - pos[v]) % n;
    let oriented = |u: VertexId, v: VertexId| if lab(u) < lab(v) { (u, v) } else { (v, u) };

    let mut rerouted = vec![false; g.edge_count()];
    let mut reroutes = Vec::new();
    for q in g.quadrangles()? {
        let c = q.corners;
        let lo = *c.iter().min_by_key(|&&v| lab(v)).expect("four corners");
        let hi = *c.iter().max_by_key(|&&v| lab(v)).expect("four corners");
        let diag = if key(g.edges[q.diagonals.0].0, g.edges[q.diagonals.0].1) == key(lo, hi) {
            q.diagonals.0
        } else {
            q.diagonals.1
        };
        // the corner on the counterclockwise arc from lo to hi lies right of lo->hi
        let w = *c
            .iter()
            .find(|&&v| v != lo && v != hi && offset(lo, v) < offset(lo, hi))
            .expect("a corner on each side of a diagonal");
        rerouted[diag] = true;
        reroutes.push((diag, lo, w, hi, c));
    }

    // per digraph edge: the original edge and rotation tie-breaks at both ends
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut original = Vec::new();
    let mut tiebreak: Vec<(i64, i64)> = Vec::new();
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        if !rerouted[e] {
            edges.push(oriented(u, v));
            original.push(Some(e));
            tiebreak.push((0, 0));
        }
    }
    // a copy sits on the quadrangle-interior side of the side it doubles
    let side = |v: VertexId, o: VertexId, c: [VertexId; 4]| -> i64 {
        let other = *c.iter().find(|&&x| x != v && x != o).expect("four corners");
        if offset(v, other) > offset(v, o) {
            1
        } else {
            -1
        }
    };
    let mut paths = Vec::new();
    for &(diag, lo, w, hi, c) in &reroutes {
        let first = edges.len();
        for (a, b) in [(lo, w), (w, hi)] {
            edges.push((a, b));
            original.push(Some(diag));
            tiebreak.push((side(a, b, c), side(b, a, c)));
        }
        paths.push(vec![first, first + 1]);
    }

    let mut outdeg = vec![0usize; n];
    let mut indeg = vec![0usize; n];
    for &(u, v) in &edges {
        outdeg[u] += 1;
        indeg[v] += 1;
    }
    let sources: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    if sources.len() != 1 {
        return Err(Error::MultipleSourcesOrSinks(format!("sources {sources:?}")));
    }
    let source = sources[0];
    let sinks: Vec<VertexId> = (0..n).filter(|&v| outdeg[v] == 0).collect();
    let sink = *sinks
        .iter()
        .max_by_key(|&&v| lab(v))
        .expect("acyclic graphs have a sink");
    let first_dummy = edges.len();
    for &w in sinks.iter().filter(|&&w| w != sink) {
        edges.push((w, sink));
        original.push(None);
        tiebreak.push((0, 0));
    }

    // counterclockwise rotation: neighbors by outer offset, dummies in the
    // outer gap. At the sink the dummies nest by decreasing offset, which is
    // the same order whichever way each one runs around the outside, so the
    // face left of the source stays outer.
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sort_key: Vec<Vec<(u8, usize, i64)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        for (at, other, tb) in [(u, v, tiebreak[e].0), (v, u, tiebreak[e].1)] {
            let k = if e >= first_dummy {
                (1, n - offset(at, other), 0)
            } else {
                (0, offset(at, other), tb)
            };
            rotation[at].push(e);
            sort_key[at].push(k);
        }
    }
    for v in 0..n {
        let mut pairs: Vec<_> = rotation[v]
            .iter()
            .copied()
            .zip(sort_key[v].iter().copied())
            .collect();
        pairs.sort_by_key(|&(_, k)| k);
        rotation[v] = pairs.into_iter().map(|(e, _)| e).collect();
    }

    Ok(OuterPlanarization {
        labeling,
        dag: EmbeddedDigraph {
            vertex_count: n,
            edges,
            rotation,
        },
        source,
        sink,
        paths,
        original,
    })
}

/// Bar 1-visibility drawing of a maximal outer 1-plane graph. Every
/// rerouted diagonal becomes a single segment crossing the bar of the
/// corner it was routed through. Segment `e` draws edge `e` of `g`.
pub fn draw_maximal_outer(g: &Graph1Planar) -> Result<BarDrawing> {
    let plan = planarize_maximal_outer(g)?;
    let st = build_plane_st_graph(&plan.dag, plan.source, plan.sink)?;
    let base = constrained_visibility_drawing(&st, &plan.paths)?;

    let mut segments: Vec<Option<Segment>> = vec![None; g.edge_count()];
    for (id, s) in base.segments.iter().enumerate() {
        let Some(e) = plan.original[id] else { continue };
        segments[e] = Some(match segments[e] {
            None => *s,
            // second half of a constraint path: merge into one segment
            Some(t) => {
                let (u, v) = g.edges[e];
                let (y0, y1) = (t.y0.min(s.y0), t.y1.max(s.y1));
                let (lo, hi) = if base.bar(u).map(|b| b.y) == Some(y0) {
                    (u, v)
                } else {
                    (v, u)
                };
                Segment {
                    u: lo,
                    v: hi,
                    x: s.x,
                    y0,
                    y1,
                }
            }
        });
    }
    let segments = segments
        .into_iter()
        .map(|s| s.expect("every edge drawn"))
        .collect();
    let mut d = BarDrawing::new(base.bars, segments);
    d.normalize();
    Ok(d)
}
