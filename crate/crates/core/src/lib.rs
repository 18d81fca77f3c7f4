//! Weak majority dimension of digraphs.
//!
//! A vector `x` in `Z^d` beats `y` when it is strictly larger in more
//! coordinates than it is strictly smaller. A realizer of a digraph maps
//! vertices to vectors so that `u -> v` is an arc exactly when `f(u)` beats
//! `f(v)`; the weak majority dimension is the least `d` that admits one.
//!
//! ```
//! use majdim::{generate, dimension, realize_path, verify, Family};
//!
//! let p3 = generate(Family::Path(3)).unwrap();
//! assert_eq!(dimension(&p3, 6, 1_000_000).dimension.exact(), Some(3));
//!
//! let p10 = generate(Family::Path(10)).unwrap();
//! let f = realize_path(10).unwrap();
//! assert_eq!(f.dim(), 4);
//! assert!(verify(&p10, &f).unwrap().valid());
//! ```

pub mod chains;
pub mod cli;
pub mod constructions;
pub mod cycle_matrix;
pub mod digraph;
pub mod io;
pub mod profiles;
pub mod realizer;
pub mod solver;
pub mod sweep;

pub use chains::{es_chain_or_antichain, ChainError, Kind, Point, Witness};
pub use constructions::{
    add_arc_realizer, condense_lift, generic_realizer, realize_acyclic_tournament, realize_cycle,
    realize_empty, realize_path, union_realizer, ConstructionError,
};
pub use cycle_matrix::{Condition, CycleMatrix, CycleMatrixError};
pub use digraph::{
    all_labeled, generate, Arc, Condensation, Digraph, DigraphError, Family, Vertex,
};
pub use io::{format_edge_list, parse_edge_list, parse_points, ParseError};
pub use profiles::{
    majority_digraph, majority_margin, profile_to_realizer, realizer_to_profile, Profile,
    ProfileError,
};
pub use realizer::{margin, realizes, tally, verify, Realizer, RealizerError, VerifyReport};
pub use solver::{
    dimension, dimension_with, is_realizable, is_realizable_with, Dimension, DimensionResult,
    SearchOptions, SolveOutcome, Verdict, DEFAULT_BUDGET,
};
pub use sweep::{summarize, sweep, SweepRow};
