//! Bar 1-visibility drawing algorithms, one per graph family.

mod diagonal_grid;
mod outer;
mod pdw;
mod quadrangle;

pub use diagonal_grid::draw_diagonal_grid;
pub use outer::{
    diagonal_labeling, draw_maximal_outer, planarize_maximal_outer, DiagonalLabeling, OuterPlanarization,
};
pub use pdw::{draw_pdw_even, draw_pdw_odd};
pub use quadrangle::{draw_recursive_quadrangle, ring_invariants_hold};

use crate::drawing::BarDrawing;
use crate::error::{Error, Result};
use crate::generators::{generate, DiagonalGridParams, RecursiveQuadrangleParams};
use crate::graph::{Family, Graph1Planar};

/// Draws `g` with the algorithm for its family. Family graphs must match
/// the generator output exactly; graphs without a family but with an outer
/// order go to [`draw_maximal_outer`].
pub fn draw(g: &Graph1Planar) -> Result<BarDrawing> {
    let Some(family) = g.family else {
        if g.outer_order.is_some() {
            return draw_maximal_outer(g);
        }
        return Err(Error::InvalidParams(
            "graph has neither a family nor an outer order".into(),
        ));
    };
    if let Family::QuadrangleChain { .. } = family {
        return draw_maximal_outer(g);
    }
    let expected = generate(family)?;
    if expected.vertex_count != g.vertex_count || expected.edges != g.edges {
        return Err(Error::InvalidGraph(format!(
            "graph does not match its family {family:?}"
        )));
    }
    match family {
        Family::DiagonalGrid { p, q } => draw_diagonal_grid(DiagonalGridParams { p, q }),
        Family::RecursiveQuadrangle { i, optimal } => {
            draw_recursive_quadrangle(RecursiveQuadrangleParams { i, optimal })
        }
        Family::PdwEven { n } => draw_pdw_even(n),
        Family::PdwOdd { n } => draw_pdw_odd(n),
        Family::QuadrangleChain { .. } => unreachable!("handled above"),
    }
}
