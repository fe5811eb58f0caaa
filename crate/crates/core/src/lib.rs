//! Degree-preserving 2-switch transformations on labeled graphs.
//!
//! The crate covers the 2-switch operation and its forest-preserving
//! variants, transitions between graphs and forests with a common degree
//! sequence, exact small-graph parameters, and exhaustive exploration of
//! realization families.

pub mod explorer;
pub mod fixtures;
pub mod graph;
pub mod params;
pub mod random;
pub mod switch;
pub mod transition;

pub use explorer::{ExplorerError, FamilyKind};
pub use graph::{is_graphical, Bipartition, DegreeSequence, Graph, GraphError, Vertex, MAX_ORDER};
pub use params::{compute, ParamError, ParameterKind};
pub use switch::{
    apply_switch, classify, inverse_matrix, is_interchangeable, ActionMatrix, SwitchKind,
};
pub use transition::{
    leaf_fixing_switch, transition_forest, transition_graph, trimmable_leaves, validate_trace,
    SwitchTrace, TraceReport, TraceStep, TransitionError,
};
