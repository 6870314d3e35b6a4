//! Warm-start maintenance of all-pairs shortest path (APSP) matrices on
//! dense weighted graphs.
//!
//! Once the APSP matrix of a graph is known, small mutations do not need a
//! fresh O(n^3) solve:
//!
//! * [`apsp_add_node`] extends the matrix for one appended node in
//!   Theta(n^2),
//! * [`apsp_remove_node`] repairs it after a node removal, re-running
//!   Dijkstra only for the sources its need-update list marks dirty (or
//!   falling back to Floyd-Warshall when the removal cost crosses `delta`),
//! * [`apsp_modify_edge`] rewrites one edge weight by removing the cheaper
//!   endpoint and re-adding it,
//! * [`warm_shortest_path`] extracts a point-to-point path by pruning to the
//!   nodes that can lie on a shortest path before running Dijkstra.
//!
//! Cold-start baselines ([`floyd_warshall`], [`dijkstra_apsp`],
//! [`shortest_path_dijkstra`]) double as correctness oracles and benchmark
//! comparators. Graphs and matrices serialize to a small text format
//! ([`wgm`]).

pub mod apsp;
pub mod error;
pub mod gen;
pub mod graph;
pub mod query;
pub mod solvers;
pub mod update;
pub mod weight;
pub mod wgm;

pub use apsp::ApspMatrix;
pub use error::GraphError;
pub use gen::random_graph;
pub use graph::{DenseGraph, NodeId};
pub use query::{candidate_nodes, warm_shortest_path, CandidateSet};
pub use solvers::{
    dijkstra_apsp, dijkstra_row, floyd_warshall, shortest_path_dijkstra, PathResult,
};
pub use update::{
    apsp_add_node, apsp_modify_edge, apsp_remove_node, build_need_update_list, removal_cost,
    NeedUpdateList, RemovalCost, RemovalOutcome, Strategy, StrategyOverride, UpdateConfig,
};
pub use weight::Weight;
