//! Clustering with Euclidean minimum spanning trees.
//!
//! Two stages:
//!
//! * [`emstrd`] cuts the EMST of a point set into exactly `k` subtrees and
//!   reports each subtree's tree center, eccentricity radius and diameter,
//!   and RMS variance, plus overall compactness.
//! * [`emstucc`] builds a second EMST over the `k` centers, turns it into a
//!   dendrogram by merging along its shortest edges first, and picks the
//!   central cluster as the center of that tree.
//!
//! [`pipeline::run`] wires both stages to CSV input and the result files
//! described in [`io`].

mod dsu;

pub mod divisive;
pub mod emst;
pub mod error;
pub mod io;
pub mod meta;
pub mod metrics;
pub mod model;
pub mod pipeline;
pub mod synthetic;

pub use divisive::{emstrd, select_edge_to_remove, zahn_inconsistent, ClusteringResult, FiredCriterion, RemovedEdge};
pub use emst::{brute_force_mst_weight, build_emst, edge_statistics, EdgeStats};
pub use error::{Error, ErrorKind, Result};
pub use meta::{build_meta_emst, central_cluster, emstucc, tree_distance, MetaResult, TreeDistance};
pub use metrics::{
    center_and_radius, centroid, centroid_diameter, centroid_radius, cluster_compactness, cluster_variance,
    diameter_and_set, eccentricity, path_distance_table, Compactness, DistanceTable,
};
pub use model::{
    euclidean_distance, Cluster, ClusterReport, CriterionConfig, CriterionMode, Dataset, Dendrogram, Edge, Merge,
    Point, SpanningForest,
};
