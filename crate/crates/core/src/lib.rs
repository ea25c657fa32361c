//! Rigidity and redundancy indices of planar graphs.
//!
//! The rigidity index `K_r` measures how close a graph is to generic rigidity
//! in the plane; the redundancy index `K_u` measures the share of edges whose
//! loss leaves `K_r` unchanged. Both are computed from the generic rigidity
//! matroid, whose independence is decided combinatorially by a (2,3) pebble
//! game ([`oracle`]) and cross-checked against exact rigidity-matrix ranks
//! ([`numeric`]). [`geometric`] and [`sweep`] apply the indices to random
//! geometric graphs as the sensing radius grows.

pub mod connectivity;
pub mod error;
pub mod formats;
pub mod geometric;
pub mod graph;
pub mod indices;
pub mod matroid;
pub mod numeric;
pub mod oracle;
pub mod ratio;
pub mod sweep;

pub use error::{Error, Result};
pub use geometric::{geometric_graph, sample_deployment, Deployment};
pub use graph::{Edge, Graph, VertexId};
pub use indices::{
    analyze, is_generalized_redundant, redundancy_index, redundancy_index_k, redundant_edge_set,
    rigidity_index, HigherOrderIndex, IndexReport,
};
pub use matroid::{independent_basis, is_minimally_rigid, is_rigid, matroid_rank};
pub use numeric::{generic_rank, matrix_rank, rigidity_matrix, Configuration, RigidityMatrix};
pub use oracle::RigidityOracle;
pub use ratio::RatioValue;
pub use sweep::{
    relative_increase, sweep_average, sweep_single, threshold_ratio, unit_grid, SweepCurve, Which,
};
