//! Fuzzy subgraph connectivity.
//!
//! A fuzzy graph assigns each vertex a membership `σ` and each edge a
//! membership `μ ≤ min(σ(u), σ(v))`. The strength of a path is its weakest
//! edge, and the connectivity `CONN(u, v)` of two vertices is the strength
//! of their strongest path. This crate lifts that to vertex–subgraph and
//! subgraph–subgraph connectivity and builds structural analysis on top:
//! fuzzy bridges, strongest paths, edge-strength bounds, fuzzy trees and
//! complete fuzzy graphs.
//!
//! ```
//! use fsc_core::{bundled, conn_subgraphs, disjoint_pair, ConnSemantics};
//!
//! let g = bundled::example_graph();
//! let (h1, h2) = disjoint_pair(&g, ["a", "d"], ["b", "c"]).unwrap();
//! let conn = conn_subgraphs(&g, &h1, &h2, ConnSemantics::PathMaxMin).unwrap();
//! assert_eq!(conn.value.to_string(), "0.4");
//! ```

pub mod connectivity;
pub mod error;
pub mod graph;
pub mod io;
pub mod membership;
pub mod oracle;
pub mod structural;
pub mod theorems;

pub use connectivity::{
    all_pairs_conn, conn_subgraphs, conn_vertex, conn_vertex_to_subgraph, is_t_connected,
    is_t_connected_within, path_strength, t_equivalence_classes, t_equivalence_classes_within,
    ConnMatrix, ConnSemantics, ConnValue, PathWitness, TPartition, TransitivityViolation,
};
pub use error::{Error, Result};
pub use graph::{disjoint_pair, FuzzyGraph, FuzzySubgraph, GraphBuilder, VertexId};
pub use io::bundled;
pub use io::document::{GraphDocument, Role, SubgraphDecl};
pub use io::report::{generate_report, ConnectivityReport, ReportOptions};
pub use io::Endpoint;
pub use membership::Membership;
pub use oracle::{count_simple_paths, oracle_bridges, oracle_conn, OracleBudget};
pub use structural::{
    bridge_realizing_subgraphs, eccentric_vertex, fuzzy_bridges, is_complete_fuzzy_graph,
    is_fuzzy_bridge, is_fuzzy_tree, strength_summary, strongest_path, BridgeReport,
    StrengthSummary, WeakenedPair,
};
pub use theorems::{check_theorems, TheoremCheck};
