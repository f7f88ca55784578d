//! Deciding and certifying the three-perfect-matching intersection property.
//!
//! A matching covered graph is *3PM-admissible* when it has perfect
//! matchings `M1`, `M2`, `M3` with `M1 ∩ M2 ∩ M3 = ∅`. This crate decides
//! the property by direct search and through its structural
//! characterization (an even 2-factor, or a spanning bisubdivision of a
//! 3-edge-colourable cubic graph), and emits certificates that can be
//! checked independently.
//!
//! * [`graph`]: multigraphs, graph6 / edge-list I/O, named generators.
//! * [`matching`]: maximum matching, enumeration, Gallai–Edmonds.
//! * [`tripm`]: certificates, searches and the [`tripm::check`] pipeline.
//! * [`certificate`]: the JSON certificate format.

pub mod budget;
pub mod certificate;
pub mod graph;
pub mod matching;
pub mod tripm;

pub use budget::{Budget, BudgetExhausted};
pub use graph::{EdgeId, EdgeSet, Graph, VertexId, VertexSet};
