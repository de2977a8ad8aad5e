//! Rotation systems derived from straight-line placements on integer points.

use std::cmp::Ordering;

/// Counterclockwise incidence lists for a straight-line drawing.
///
/// Each list starts with the first edge counterclockwise from the downward
/// direction, so for a vertex whose edges all point upward the list runs
/// from the rightmost edge to the leftmost one and the gap between the last
/// and the first entry faces down.
pub fn rotation_from_positions(positions: &[(i64, i64)], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); positions.len()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        rot[u].push(e);
        rot[v].push(e);
    }
    for (w, list) in rot.iter_mut().enumerate() {
        let origin = positions[w];
        let dir = |e: usize| {
            let (u, v) = edges[e];
            let other = if u == w { v } else { u };
            (positions[other].0 - origin.0, positions[other].1 - origin.1)
        };
        list.sort_by(|&a, &b| angle_cmp(dir(a), dir(b)));
    }
    rot
}

/// Orders direction vectors by counterclockwise angle measured from the
/// downward direction (0, -1), which itself sorts last.
pub fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

// 0: directions strictly right of the downward ray sweeping to straight up
// (x > 0, or straight up); 1: the left half including straight down.
fn half(d: (i64, i64)) -> u8 {
    if d.0 > 0 || (d.0 == 0 && d.1 > 0) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_counterclockwise_from_down() {
        let dirs = [
            (0, -1),
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, 1),
            (1, 1),
            (1, 0),
            (1, -1),
        ];
        let mut sorted = dirs.to_vec();
        sorted.sort_by(|&a, &b| angle_cmp(a, b));
        assert_eq!(
            sorted,
            vec![
                (1, -1),
                (1, 0),
                (1, 1),
                (0, 1),
                (-1, 1),
                (-1, 0),
                (-1, -1),
                (0, -1)
            ]
        );
    }

    #[test]
    fn upward_star_runs_right_to_left() {
        let pos = [(0, 0), (-1, 1), (0, 1), (1, 1)];
        let rot = rotation_from_positions(&pos, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(rot[0], vec![2, 1, 0]);
    }
}
