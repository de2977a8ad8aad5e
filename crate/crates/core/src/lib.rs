//! Bar 1-visibility drawings for families of 1-planar graphs.
//!
//! Graphs are described by [`Graph1Planar`]; drawings by [`BarDrawing`].
//! The drawing algorithms live in [`bar1`], the geometric checker in
//! [`checker`], and graph constructors in [`generators`].

pub mod bar1;
pub mod checker;
pub mod corpus;
pub mod drawing;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod numbering;
pub mod stgraph;
pub mod visibility;

pub use bar1::{
    diagonal_labeling, draw, draw_diagonal_grid, draw_maximal_outer, draw_pdw_even, draw_pdw_odd,
    draw_recursive_quadrangle, DiagonalLabeling,
};
pub use checker::{
    brute_force_crossings, edge_bound_report, validate, validate_edges, BoundReport, EdgeCrossings,
    ValidationReport, Violation,
};
pub use drawing::{Bar, BarDrawing, Segment};
pub use error::{Error, Result};
pub use generators::{
    gen_diagonal_grid, gen_pseudo_double_wheel_even, gen_pseudo_double_wheel_odd, gen_quadrangle_chain,
    gen_recursive_quadrangle, generate, qv_split, DiagonalGridParams, RecursiveQuadrangleParams,
};
pub use graph::{EdgeId, Family, Graph1Planar, Quadrangle, VertexId};
pub use numbering::{weighted_topological_numbering, Numbering};
pub use stgraph::{build_plane_st_graph, dual_of, DualStGraph, EmbeddedDigraph, PlaneStGraph};
pub use visibility::{
    check_nonintersecting, constrained_visibility_drawing, visibility_drawing, visibility_drawing_with_rows,
};
