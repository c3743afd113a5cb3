//! List homomorphisms from graphs into cycles `C_k`.
//!
//! * [`oracle`]: exact backtracking solver and verifier (any target graph).
//! * [`solver`]: polynomial algorithm for P9-free graphs (k = 5, 7, 9) and the
//!   window-localized solver for k >= 10.
//! * [`gadgets`]: hardness constructions and the forbidden-subgraph classifier.

pub mod error;
pub mod gadgets;
pub mod graph;
pub mod lists;
pub mod oracle;
pub mod random;
pub mod solver;
pub mod twosat;

pub use error::{CapExceeded, EncodeError, GadgetError, GraphError, Infeasible, ListError, NotAWalk, SolveError};
pub use graph::{build_graph, Graph, Vertex, VertexSet};
pub use lists::{ColorSet, CycleColors, ListAssignment, ListShape, TargetGraph};
pub use oracle::Coloring;
pub use twosat::{Clause, Lit, TwoSatFormula};
pub use solver::{solve, solve_with, SolveOptions, SolveStats, StatsSnapshot};
pub use gadgets::{GadgetInstance, Metadata};
