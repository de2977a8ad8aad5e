use std::collections::HashMap;

use crate::drawing::{Bar, BarDrawing, Segment};
use crate::error::{Error, Result};
use crate::generators::{gen_pseudo_double_wheel_even, gen_pseudo_double_wheel_odd};
use crate::graph::{key, Graph1Planar};

/// Bar 1-visibility drawing of the even pseudo double wheel on `2n + 2`
/// vertices.
///
/// Cycle bars are stacked with `v_1` directly below the hubs `x` and `y`
/// (y on top). Cycle vertex `c_k` owns the four columns `4k..4k+3`, holding
/// its edges to x, to y (crossing x), to `c_{k+1}` and to `c_{k+2}`
/// (crossing `c_{k+1}`). The three edges closing the cycle use columns
/// left of 0. Segment `e` draws edge `e` of
/// [`gen_pseudo_double_wheel_even`].
pub fn draw_pdw_even(n: usize) -> Result<BarDrawing> {
    let g = gen_pseudo_double_wheel_even(n)?;
    let len = 2 * n as i64;
    let (x, y) = (2 * n, 2 * n + 1);
    let last = 4 * len - 1;
    let mut bars = Vec::with_capacity(g.vertex_count);
    for k in 0..len {
        let (x0, x1) = match k {
            0 => (-3, 3),
            1 => (-1, 7),
            _ if k == len - 2 => (-2, 4 * k + 3),
            _ if k == len - 1 => (-3, 4 * k + 3),
            _ => (4 * k - 5, 4 * k + 3),
        };
        bars.push(Bar {
            v: k as usize,
            y: len - 1 - k,
            x0,
            x1,
        });
    }
    bars.push(Bar {
        v: x,
        y: len,
        x0: -3,
        x1: last,
    });
    bars.push(Bar {
        v: y,
        y: len + 1,
        x0: -3,
        x1: last,
    });

    let mut cols = HashMap::new();
    let c = |k: i64| k as usize;
    for k in 0..len {
        cols.insert(key(c(k), x), 4 * k);
        cols.insert(key(c(k), y), 4 * k + 1);
        if k + 1 < len {
            cols.insert(key(c(k), c(k + 1)), 4 * k + 2);
        }
        if k + 2 < len {
            cols.insert(key(c(k), c(k + 2)), 4 * k + 3);
        }
    }
    cols.insert(key(0, c(len - 1)), -3);
    cols.insert(key(0, c(len - 2)), -2);
    cols.insert(key(1, c(len - 1)), -1);
    Ok(assemble(&g, bars, &cols))
}

/// Bar 1-visibility drawing of the odd pseudo double wheel on `2n + 3`
/// vertices.
///
/// The split of hub y leaves y adjacent to the arc `v_1 u_1 v_2 u_2` and
/// moves the rest of the cycle to the new hub z. The two cycle vertices of
/// degree 8 created by the split are the ends of that arc. Bars from the
/// top: z, y, x, then the cycle as in the even case, with five columns per
/// cycle vertex. Segment `e` draws edge `e` of
/// [`gen_pseudo_double_wheel_odd`].
pub fn draw_pdw_odd(n: usize) -> Result<BarDrawing> {
    let g = gen_pseudo_double_wheel_odd(n)?;
    let len = 2 * n as i64;
    let (x, y, z) = (2 * n, 2 * n + 1, 2 * n + 2);
    let deg = g.degrees();
    let eight: Vec<usize> = (0..2 * n).filter(|&v| deg[v] == 8).collect();
    let (vi, vj) = match eight[..] {
        [a, b] if (a, b) == (0, 3) => (a, b),
        _ => {
            return Err(Error::InvalidGraph(format!(
                "unexpected split vertices {eight:?}"
            )))
        }
    };
    let last = 5 * (len - 1) + 1;
    let mut bars = Vec::with_capacity(g.vertex_count);
    for k in 0..len {
        let (x0, x1) = match k {
            0 => (-3, 4),
            1 => (-1, 9),
            2 => (4, 14),
            3 => (3, 19),
            _ if k == len - 2 => (-2, 5 * k + 2),
            _ if k == len - 1 => (-3, 5 * k + 1),
            _ => (5 * k - 7, 5 * k + 4),
        };
        bars.push(Bar {
            v: k as usize,
            y: len - 1 - k,
            x0,
            x1,
        });
    }
    bars.push(Bar {
        v: x,
        y: len,
        x0: -3,
        x1: last,
    });
    bars.push(Bar {
        v: y,
        y: len + 1,
        x0: 1,
        x1: 16,
    });
    bars.push(Bar {
        v: z,
        y: len + 2,
        x0: -3,
        x1: last,
    });

    let mut cols = HashMap::new();
    let c = |k: i64| k as usize;
    for k in 0..len {
        let hub = if k <= 3 { y } else { z };
        cols.insert(key(c(k), x), 5 * k);
        cols.insert(key(c(k), hub), 5 * k + 1);
        if k + 1 < len {
            cols.insert(key(c(k), c(k + 1)), 5 * k + 2);
        }
        if k + 2 < len {
            cols.insert(key(c(k), c(k + 2)), 5 * k + 3);
        }
    }
    // the arc ends: v_1 - v_2 moves to the spare column, v_1 - u_2 takes its place
    cols.insert(key(vi, 2), 4);
    cols.insert(key(vi, vj), 3);
    cols.insert(key(y, z), 2);
    cols.insert(key(vi, z), -3);
    cols.insert(key(vj, z), 19);
    cols.insert(key(0, c(len - 1)), -3);
    cols.insert(key(0, c(len - 2)), -2);
    cols.insert(key(1, c(len - 1)), -1);
    Ok(assemble(&g, bars, &cols))
}

fn assemble(g: &Graph1Planar, bars: Vec<Bar>, cols: &HashMap<(usize, usize), i64>) -> BarDrawing {
    let segments = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let (lo, hi) = if bars[u].y < bars[v].y { (u, v) } else { (v, u) };
            Segment {
                u: lo,
                v: hi,
                x: cols[&key(u, v)],
                y0: bars[lo].y,
                y1: bars[hi].y,
            }
        })
        .collect();
    let mut d = BarDrawing::new(bars, segments);
    d.normalize();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::validate;

    #[test]
    fn even_validates() {
        for n in 3..=12 {
            let g = gen_pseudo_double_wheel_even(n).unwrap();
            let d = draw_pdw_even(n).unwrap();
            let r = validate(&g, &d, 1);
            assert!(r.pass, "n={n}: {:?}", r.violations);
            let y = 2 * n + 1;
            for e in &r.per_edge {
                let (a, b) = g.edges[e.edge];
                if a == y || b == y {
                    assert_eq!(e.crossed_bars, vec![2 * n]);
                }
            }
        }
        assert!(draw_pdw_even(2).is_err());
    }

    #[test]
    fn odd_validates() {
        for n in 3..=12 {
            let g = gen_pseudo_double_wheel_odd(n).unwrap();
            let d = draw_pdw_odd(n).unwrap();
            let r = validate(&g, &d, 1);
            assert!(r.pass, "n={n}: {:?}", r.violations);
        }
        assert!(draw_pdw_odd(2).is_err());
    }
}
