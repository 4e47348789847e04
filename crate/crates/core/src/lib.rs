//! Kempe-chain reconfiguration of graph colourings.
//!
//! * [`graph`]: simple graphs, graph6/edge-list I/O, separators, degeneracy,
//!   induced claw/net/house/diamond search, small-graph isomorphism.
//! * [`coloring`]: colourings, Kempe chains and changes, enumeration,
//!   witness replay.
//! * [`analyze`]: exhaustive Kempe classes, shortest-witness search and
//!   corpus verification for cubic graphs.
//! * [`solver`]: constructive Kempe-change witnesses between 3-colourings of
//!   cubic graphs, without global search.
//! * [`generate`]: connected cubic graphs up to isomorphism.

pub mod analyze;
pub mod cli;
pub mod coloring;
pub mod generate;
pub mod graph;
pub mod solver;

pub use coloring::{Coloring, KempeMove, KempeSequence};
pub use graph::Graph;
