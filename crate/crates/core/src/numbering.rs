//! Weighted topological numbering by longest-path layering.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Integer value per vertex of a numbered digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numbering {
    pub values: Vec<i64>,
}

impl Numbering {
    pub fn new(values: Vec<i64>) -> Self {
        Numbering { values }
    }

    pub fn get(&self, v: usize) -> i64 {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> i64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> i64 {
        self.values.iter().copied().min().unwrap_or(0)
    }

    /// `value(v) >= value(u) + w` for every weighted edge `(u, v, w)`.
    pub fn satisfies(&self, edges: &[(usize, usize, u32)]) -> bool {
        edges
            .iter()
            .all(|&(u, v, w)| self.values[v] >= self.values[u] + i64::from(w))
    }
}

/// Topological order by Kahn peeling; `None` if the digraph has a cycle.
pub fn topological_order(
    n: usize,
    edges: impl Iterator<Item = (usize, usize)> + Clone,
) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for (u, v) in edges {
        indeg[v] += 1;
        out[u].push(v);
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Optimal weighted topological numbering: every source gets 0 and every
/// other vertex the weight of the longest path reaching it.
pub fn weighted_topological_numbering(n: usize, edges: &[(usize, usize, u32)]) -> Result<Numbering> {
    let mut out: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(u, v, w) in edges {
        out[u].push((v, w));
        indeg[v] += 1;
    }
    let mut values = vec![0i64; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut done = 0;
    while let Some(u) = queue.pop_front() {
        done += 1;
        for &(v, w) in &out[u] {
            values[v] = values[v].max(values[u] + i64::from(w));
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    if done != n {
        return Err(Error::CycleDetected);
    }
    Ok(Numbering { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive longest path from any source by enumerating all paths.
    fn brute_longest(n: usize, edges: &[(usize, usize, u32)]) -> Vec<i64> {
        fn walk(v: usize, len: i64, edges: &[(usize, usize, u32)], best: &mut [i64]) {
            best[v] = best[v].max(len);
            for &(a, b, w) in edges {
                if a == v {
                    walk(b, len + i64::from(w), edges, best);
                }
            }
        }
        let mut best = vec![i64::MIN; n];
        let has_in: Vec<bool> = (0..n).map(|v| edges.iter().any(|e| e.1 == v)).collect();
        for s in (0..n).filter(|&v| !has_in[v]) {
            walk(s, 0, edges, &mut best);
        }
        best
    }

    #[test]
    fn path_unit_weights() {
        let num = weighted_topological_numbering(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(num.values, vec![0, 1, 2]);
    }

    #[test]
    fn single_vertex() {
        assert_eq!(weighted_topological_numbering(1, &[]).unwrap().values, vec![0]);
    }

    #[test]
    fn cycle_detected() {
        let r = weighted_topological_numbering(2, &[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(r, Err(Error::CycleDetected));
    }

    #[test]
    fn zero_weights_allow_ties() {
        let num = weighted_topological_numbering(3, &[(0, 1, 0), (1, 2, 2)]).unwrap();
        assert_eq!(num.values, vec![0, 0, 2]);
    }

    fn small_dag() -> impl Strategy<Value = (usize, Vec<(usize, usize, u32)>)> {
        (1usize..=12)
            .prop_flat_map(|n| {
                let pairs = proptest::collection::vec((0..n, 0..n, 0u32..4), 0..30);
                (Just(n), pairs)
            })
            .prop_map(|(n, raw)| {
                // orient low index -> high index so the result is acyclic
                let edges = raw
                    .into_iter()
                    .filter(|&(a, b, _)| a != b)
                    .map(|(a, b, w)| if a < b { (a, b, w) } else { (b, a, w) })
                    .collect();
                (n, edges)
            })
    }

    proptest! {
        #[test]
        fn numbering_is_valid_and_optimal((n, edges) in small_dag()) {
            let num = weighted_topological_numbering(n, &edges).unwrap();
            prop_assert!(num.satisfies(&edges));
            prop_assert_eq!(num.values, brute_longest(n, &edges));
        }
    }
}
