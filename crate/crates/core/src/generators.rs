//! Constructors for the graph families and the hub splitting operation.

use crate::error::{Error, Result};
use crate::graph::{Family, Graph1Planar, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalGridParams {
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecursiveQuadrangleParams {
    pub i: usize,
    pub optimal: bool,
}

#[derive(Default)]
struct Builder {
    edges: Vec<(VertexId, VertexId)>,
    crossings: Vec<(usize, usize)>,
}

impl Builder {
    fn edge(&mut self, u: VertexId, v: VertexId) -> usize {
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    fn cross(&mut self, a: (VertexId, VertexId), b: (VertexId, VertexId)) {
        let (ea, eb) = (self.edge(a.0, a.1), self.edge(b.0, b.1));
        self.crossings.push((ea, eb));
    }

    fn finish(self, n: usize, family: Family, labels: Vec<String>) -> Graph1Planar {
        let g = Graph1Planar {
            vertex_count: n,
            edges: self.edges,
            crossing_pairs: self.crossings,
            outer_order: None,
            labels: Some(labels),
            family: Some(family),
        };
        debug_assert_eq!(g.check(), Ok(()));
        g
    }
}

/// Vertex id of grid vertex `(i, j)`, rows and columns counted from 1 with
/// row 1 at the bottom.
pub fn grid_vertex(q: usize, i: usize, j: usize) -> VertexId {
    (i - 1) * q + (j - 1)
}

/// The p x q grid with both diagonals in every cell. Each cell contributes
/// the crossing pair (right diagonal, left diagonal): the right diagonal
/// joins the bottom-left and top-right corners.
pub fn gen_diagonal_grid(params: DiagonalGridParams) -> Result<Graph1Planar> {
    let DiagonalGridParams { p, q } = params;
    if p < 2 || q < 2 {
        return Err(Error::InvalidParams(format!(
            "diagonal grid needs p, q >= 2, got {p}x{q}"
        )));
    }
    let v = |i, j| grid_vertex(q, i, j);
    let mut b = Builder::default();
    for i in 1..=p {
        for j in 1..q {
            b.edge(v(i, j), v(i, j + 1));
        }
    }
    for i in 1..p {
        for j in 1..=q {
            b.edge(v(i, j), v(i + 1, j));
        }
    }
    for i in 1..p {
        for j in 1..q {
            b.cross((v(i, j), v(i + 1, j + 1)), (v(i, j + 1), v(i + 1, j)));
        }
    }
    let labels = (1..=p)
        .flat_map(|i| (1..=q).map(move |j| format!("v{i},{j}")))
        .collect();
    Ok(b.finish(p * q, Family::DiagonalGrid { p, q }, labels))
}

/// Corner `role` (0 = a, 1 = b, 2 = c, 3 = d) of ring `r`.
pub fn ring_vertex(r: usize, role: usize) -> VertexId {
    4 * r + role
}

/// Nested rectangles `a b c d`, ring 0 innermost. Ring 0 carries both of
/// its diagonals as a crossing pair; every further ring is joined to the
/// previous one by four radials and one crossing pair per ring quadrangle.
/// `G_i` has rings `0..=i+1`; the optimal variant adds the crossing
/// diagonals of the outermost rectangle.
pub fn gen_recursive_quadrangle(params: RecursiveQuadrangleParams) -> Result<Graph1Planar> {
    let rings = params.i + 2;
    let n = 4 * rings;
    let mut b = Builder::default();
    let rect = |b: &mut Builder, r: usize| {
        for k in 0..4 {
            b.edge(ring_vertex(r, k), ring_vertex(r, (k + 1) % 4));
        }
    };
    rect(&mut b, 0);
    b.cross((0, 2), (1, 3));
    for r in 1..rings {
        rect(&mut b, r);
        for k in 0..4 {
            b.edge(ring_vertex(r - 1, k), ring_vertex(r, k));
        }
        for k in 0..4 {
            let l = (k + 1) % 4;
            b.cross(
                (ring_vertex(r - 1, k), ring_vertex(r, l)),
                (ring_vertex(r - 1, l), ring_vertex(r, k)),
            );
        }
    }
    if params.optimal {
        let r = rings - 1;
        b.cross(
            (ring_vertex(r, 0), ring_vertex(r, 2)),
            (ring_vertex(r, 1), ring_vertex(r, 3)),
        );
    }
    let labels = (0..n)
        .map(|v| format!("{}{}", ["a", "b", "c", "d"][v % 4], v / 4))
        .collect();
    let family = Family::RecursiveQuadrangle {
        i: params.i,
        optimal: params.optimal,
    };
    Ok(b.finish(n, family, labels))
}

/// Cycle `v_1 u_1 ... v_n u_n` as vertices `0..2n` (so `v_i = 2i-2` and
/// `u_i = 2i-1`), hub `x = 2n` joined to every `u_i` and hub `y = 2n+1` to
/// every `v_i`, with one crossing pair in each quadrangular face.
pub fn gen_pseudo_double_wheel_even(n: usize) -> Result<Graph1Planar> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "pseudo double wheel needs n >= 3, got {n}"
        )));
    }
    let len = 2 * n;
    let (x, y) = (len, len + 1);
    let c = |k: usize| k % len;
    let mut b = Builder::default();
    for k in 0..len {
        b.edge(c(k), c(k + 1));
    }
    for i in 0..n {
        b.edge(x, 2 * i + 1);
    }
    for i in 0..n {
        b.edge(y, 2 * i);
    }
    for i in 0..n {
        let (v, u, v_next, u_next) = (2 * i, 2 * i + 1, c(2 * i + 2), c(2 * i + 3));
        b.cross((y, u), (v, v_next));
        b.cross((x, v_next), (u, u_next));
    }
    let mut labels: Vec<String> = (0..len)
        .map(|k| format!("{}{}", if k % 2 == 0 { "v" } else { "u" }, k / 2 + 1))
        .collect();
    labels.extend(["x".to_string(), "y".to_string()]);
    Ok(b.finish(len + 2, Family::PdwEven { n }, labels))
}

/// Splits `v1` into `v1` and a new vertex `v4`.
///
/// Neighbors of `v1` are taken in ascending id order. `v2` and `v3` are the
/// first non-adjacent pair in that order; the neighbors from `v2` to `v3`
/// stay with `v1` and the others move to `v4`. The edges `(v1, v4)` and
/// `(v2, v3)` are added as a new crossing pair, together with `(v4, v2)`
/// and `(v4, v3)`.
pub fn qv_split(g: &Graph1Planar, v1: VertexId) -> Result<Graph1Planar> {
    if v1 >= g.vertex_count {
        return Err(Error::InvalidParams(format!("vertex {v1} out of range")));
    }
    let adj = g.adjacency();
    let mut nbrs = adj[v1].clone();
    nbrs.sort_unstable();
    let adjacent = |a: VertexId, b: VertexId| adj[a].contains(&b);
    let (i2, i3) = (0..nbrs.len())
        .flat_map(|a| (a + 1..nbrs.len()).map(move |b| (a, b)))
        .find(|&(a, b)| !adjacent(nbrs[a], nbrs[b]))
        .ok_or(Error::NoValidSplitPair(v1))?;
    let (v2, v3) = (nbrs[i2], nbrs[i3]);
    let v4 = g.vertex_count;
    let stays: Vec<VertexId> = nbrs[i2..=i3].to_vec();

    let mut out = g.clone();
    for e in out.edges.iter_mut() {
        if e.0 == v1 && !stays.contains(&e.1) {
            e.0 = v4;
        } else if e.1 == v1 && !stays.contains(&e.0) {
            e.1 = v4;
        }
    }
    let m = out.edges.len();
    out.edges.extend([(v1, v4), (v2, v3), (v4, v2), (v4, v3)]);
    out.crossing_pairs.push((m, m + 1));
    out.vertex_count += 1;
    if let Some(labels) = &mut out.labels {
        labels.push(if labels.iter().any(|l| l == "z") {
            format!("z{v4}")
        } else {
            "z".into()
        });
    }
    out.outer_order = None;
    out.check()?;
    Ok(out)
}

/// The even pseudo double wheel split at hub `y`, which yields the helper
/// vertex `z = 2n+2`.
pub fn gen_pseudo_double_wheel_odd(n: usize) -> Result<Graph1Planar> {
    let even = gen_pseudo_double_wheel_even(n)?;
    let mut g = qv_split(&even, 2 * n + 1)?;
    g.family = Some(Family::PdwOdd { n });
    Ok(g)
}

/// `k` quadrangles in a row, each with both diagonals crossing. Bottom
/// vertices are `0..=k` left to right and the top vertex above `i` is
/// `2k+1-i`, so `0..2k+2` is the counterclockwise outer order.
pub fn gen_quadrangle_chain(k: usize) -> Result<Graph1Planar> {
    if k == 0 {
        return Err(Error::InvalidParams("quadrangle chain needs k >= 1".into()));
    }
    let n = 2 * k + 2;
    let top = |i: usize| n - 1 - i;
    let mut b = Builder::default();
    for i in 0..k {
        b.edge(i, i + 1);
        b.edge(top(i + 1), top(i));
    }
    for i in 0..=k {
        b.edge(i, top(i));
    }
    for i in 0..k {
        b.cross((i, top(i + 1)), (i + 1, top(i)));
    }
    let labels = (0..n).map(|v| format!("w{v}")).collect();
    let mut g = b.finish(n, Family::QuadrangleChain { k }, labels);
    g.outer_order = Some((0..n).collect());
    Ok(g)
}

/// Builds the generator output named by `family`.
pub fn generate(family: Family) -> Result<Graph1Planar> {
    match family {
        Family::DiagonalGrid { p, q } => gen_diagonal_grid(DiagonalGridParams { p, q }),
        Family::RecursiveQuadrangle { i, optimal } => {
            gen_recursive_quadrangle(RecursiveQuadrangleParams { i, optimal })
        }
        Family::PdwEven { n } => gen_pseudo_double_wheel_even(n),
        Family::PdwOdd { n } => gen_pseudo_double_wheel_odd(n),
        Family::QuadrangleChain { k } => gen_quadrangle_chain(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let g = gen_diagonal_grid(DiagonalGridParams { p: 2, q: 2 }).unwrap();
        assert_eq!(
            (g.vertex_count, g.edge_count(), g.crossing_pairs.len()),
            (4, 6, 1)
        );
        let g = gen_diagonal_grid(DiagonalGridParams { p: 3, q: 3 }).unwrap();
        assert_eq!(
            (g.vertex_count, g.edge_count(), g.crossing_pairs.len()),
            (9, 20, 4)
        );
        assert!(matches!(
            gen_diagonal_grid(DiagonalGridParams { p: 2, q: 1 }),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn grid_right_diagonal_first() {
        let g = gen_diagonal_grid(DiagonalGridParams { p: 2, q: 2 }).unwrap();
        let (r, l) = g.crossing_pairs[0];
        assert_eq!(g.edges[r], (0, 3));
        assert_eq!(g.edges[l], (1, 2));
    }

    #[test]
    fn recursive_quadrangle_counts() {
        let count = |i, optimal| {
            let g = gen_recursive_quadrangle(RecursiveQuadrangleParams { i, optimal }).unwrap();
            (g.vertex_count, g.edge_count())
        };
        assert_eq!(count(0, false), (8, 22));
        assert_eq!(count(1, false), (12, 38));
        assert_eq!(count(0, true), (8, 24));
    }

    #[test]
    fn pdw_counts() {
        let g = gen_pseudo_double_wheel_even(3).unwrap();
        assert_eq!((g.vertex_count, g.edge_count()), (8, 24));
        assert_eq!(gen_pseudo_double_wheel_even(4).unwrap().edge_count(), 32);
        assert!(gen_pseudo_double_wheel_even(2).is_err());
        let g = gen_pseudo_double_wheel_odd(3).unwrap();
        assert_eq!((g.vertex_count, g.edge_count()), (9, 28));
        let g = gen_pseudo_double_wheel_odd(5).unwrap();
        assert_eq!((g.vertex_count, g.edge_count()), (13, 44));
        assert!(gen_pseudo_double_wheel_odd(2).is_err());
    }

    #[test]
    fn odd_split_degree_census() {
        let n = 4;
        let g = gen_pseudo_double_wheel_odd(n).unwrap();
        let eight: Vec<usize> = (0..2 * n).filter(|&v| g.degree(v) == 8).collect();
        assert_eq!(eight, vec![0, 3]);
        assert!((0..2 * n).all(|v| g.degree(v) == 6 || g.degree(v) == 8));
    }

    #[test]
    fn split_without_pair_fails() {
        // K4: every pair of neighbors is adjacent
        let k4 = Graph1Planar::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(qv_split(&k4, 0), Err(Error::NoValidSplitPair(0)));
    }

    #[test]
    fn chain_counts_and_outer() {
        let g = gen_quadrangle_chain(1).unwrap();
        assert_eq!(
            (g.vertex_count, g.edge_count(), g.crossing_pairs.len()),
            (4, 6, 1)
        );
        let g = gen_quadrangle_chain(2).unwrap();
        assert_eq!(
            (g.vertex_count, g.edge_count(), g.crossing_pairs.len()),
            (6, 11, 2)
        );
        g.check_outer_1_plane().unwrap();
        assert!(gen_quadrangle_chain(0).is_err());
    }
}
