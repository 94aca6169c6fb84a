//! Exact computations around Turán-type extremal problems on graphs with at
//! most 64 vertices: forbidden-subgraph detection, closed-form bounds as
//! exact values, exact extremal numbers for small `n`, and the constructive
//! steps behind the blow-up and layer arguments.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod construct;
pub mod detect;
pub mod graph;
pub mod graph6;
pub mod lemma;
pub mod rational;
pub mod search;

pub use bounds::{BoundError, BoundKind, BoundParams, BoundValue};
pub use construct::{ConstructError, NamedGraph};
pub use detect::{Coloring, DetectError, ForbiddenPattern};
pub use graph::{DegreeProfile, Graph, GraphBuilder, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use rational::Rational;
pub use search::{ExtremalReport, SearchError, SearchPlan, Strategy, Theorem};
