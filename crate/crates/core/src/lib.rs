//! Linear colorings of graphs and the perfect graph classes around them.
//!
//! A coloring is *linear* when the closed neighborhoods inside each color
//! class form a chain under inclusion. [`linear_coloring::linear_color`]
//! computes an optimal one in polynomial time from a minimum path cover of
//! the neighborhood-inclusion DAG. The rest of the crate recognizes related
//! classes (chordal, split, threshold, strongly chordal, ...), provides
//! exponential reference oracles, and runs exhaustive verification sweeps.

pub mod classes;
pub mod dag;
pub mod graph;
pub mod io;
pub mod linear_coloring;
pub mod oracles;
pub mod path_cover;
pub mod patterns;
pub mod report;
pub mod strong_ordering;
pub mod verify;

pub use dag::NeighborhoodDag;
pub use graph::{Graph, GraphError, VertexSet};
pub use linear_coloring::{linear_chromatic_number, linear_color, LinearColoring, Verdict};
pub use path_cover::{min_path_cover, PathCover};
