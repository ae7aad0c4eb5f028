//! Two-page drawings of the complete graph K_n.
//!
//! - [`cyclic`]: residues, chords and the interleaving predicate; Guy's Z(n).
//! - [`drawing`]: page assignments, the cylindrical drawing with Z(n)
//!   crossings, and the counting identities behind it.
//! - [`crossing_graph`] / [`maxcut`]: the chord crossing graph G_n, cuts,
//!   exact and heuristic MAX-CUT, and the resulting crossing lower bound.
//! - [`fourier`]: the crossing indicator on the 4-torus, its Fourier series
//!   and the quadratic forms used to bound MAX-CUT(G_n) asymptotically.
//! - [`verify`]: the sweeps exposed by the command line.

pub mod crossing_graph;
pub mod cyclic;
pub mod drawing;
pub mod error;
pub mod fourier;
pub mod maxcut;
pub mod svg;
pub mod verify;

pub use crossing_graph::{
    asymptotic_lower_bound, build_crossing_graph, crossing_lower_bound, cut_from_drawing, cut_value, CrossingGraph,
    Cut, Side, LEADING_COEFFICIENT,
};
pub use cyclic::{all_chords, binomial, chords_cross, guy_number, Chord, CyclicLabel};
pub use drawing::{
    build_cylindrical, closed_form_crossings, count_crossings, cycle_is_crossing_free, opposite_page_at_half_span,
    same_page_shift_count, Page, TwoPageDrawing,
};
pub use error::{Error, Result};
pub use maxcut::{exact_max_cut, heuristic_max_cut, HeuristicParams, MaxCutResult, Method, DEFAULT_EXACT_LIMIT};
pub use svg::{render_svg, SvgLayout, SvgOptions};
