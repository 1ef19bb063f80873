//! Minimal dominating sets, their expansion/contraction reconfiguration
//! graphs, the graph families whose reconfiguration graphs are known in
//! closed form, and a harness that checks those closed forms mechanically.

pub mod canon;
pub mod domination;
mod error;
pub mod families;
pub mod formats;
pub mod graph;
mod limits;
pub mod list_graph;
pub mod metrics;
pub mod reconfig;
pub mod verify;

pub use canon::{canonical_form, isomorphic, CanonicalForm};
pub use domination::{
    classify_vertices, domination_number, enumerate_mds, enumerate_mds_exhaustive,
    enumerate_mds_with, is_dominating, is_minimal_dominating, minimum_mds, DominationProfile,
    MdsCollection,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use limits::Limits;
pub use list_graph::ListGraph;
pub use metrics::Metrics;
pub use reconfig::{
    build_gamma_graph, build_gamma_graph_with, build_reconfig_graph, build_reconfig_graph_with,
    mds_adjacent,
    ReconfigGraph, ReconfigKind,
};
