//! Monitoring edge-geodetic sets: exact computation, closed forms for
//! special classes, and meg after edge deletions.
//!
//! A set `M` of vertices monitors an edge `e` when some pair in `M` has
//! `e` on every one of its shortest paths. `meg(G)` is the size of the
//! smallest `M` monitoring every edge.

pub mod distance;
pub mod dynamic;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod monitor;
pub mod solver;
pub mod structure;

pub use distance::{all_pairs, Distance, DistanceTable};
pub use dynamic::{DeletionReport, GridEdgeContext, Prediction, PredictionKind, Verdict};
pub use formulas::{ClassTag, UnicyclicCase, UnicyclicProfile};
pub use generators::{GeneratedGraph, GraphTag};
pub use graph::{parse_graph, serialize_graph, EdgeId, Graph, GraphError, ParseError, Vertex};
pub use monitor::{monitor_table, monitors, monitors_by_counts, MonitorTable};
pub use solver::{meg_number, min_meg, MegCertificate, SolverConfig, SolverError};
pub use structure::{structure, StructureSummary};
