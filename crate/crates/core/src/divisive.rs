//! Divisive clustering: cut the Euclidean MST one edge at a time until exactly
//! `k` subtrees remain, then describe each subtree by its tree center, radius,
//! diameter and variance.

use std::collections::VecDeque;

use serde::Serialize;

use crate::emst::{build_emst, edge_statistics, weight_statistics, EdgeStats};
use crate::error::{Error, Result};
use crate::metrics::{cluster_compactness, cluster_report, cluster_variance, Compactness};
use crate::model::{Cluster, ClusterReport, CriterionConfig, CriterionMode, Dataset, Edge, Point, SpanningForest};

/// Which rule selected a removed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiredCriterion {
    /// Weight exceeded mean + std of the original tree.
    Threshold,
    /// Heaviest remaining edge, taken when no rule flagged anything.
    Longest,
    /// Inconsistent with its depth neighborhoods.
    Zahn,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RemovedEdge {
    #[serde(flatten)]
    pub edge: Edge,
    pub criterion: FiredCriterion,
}

#[derive(Clone, Debug)]
pub struct ClusteringResult {
    /// The full EMST before any removal.
    pub tree: SpanningForest,
    /// Statistics of `tree`; `None` for a single-point dataset.
    pub edge_stats: Option<EdgeStats>,
    /// Variance of the whole dataset.
    pub dataset_variance: f64,
    /// Clusters ordered by lowest member index; position is the cluster id.
    pub clusters: Vec<Cluster>,
    pub reports: Vec<ClusterReport>,
    pub centers: Vec<Point>,
    pub removed_edges: Vec<RemovedEdge>,
    pub compactness: Compactness,
}

impl ClusteringResult {
    pub fn k(&self) -> usize {
        self.clusters.len()
    }

    /// Cluster id of every point, indexed by point.
    pub fn assignments(&self) -> Vec<usize> {
        let n = self.tree.vertex_count();
        let mut out = vec![usize::MAX; n];
        for (id, c) in self.clusters.iter().enumerate() {
            for &x in c.members() {
                out[x] = id;
            }
        }
        out
    }
}

/// Heaviest edge, ties going to the smallest `(u, v)`.
fn heaviest<'a>(edges: impl Iterator<Item = &'a Edge>) -> Option<&'a Edge> {
    edges.fold(None, |best: Option<&Edge>, e| match best {
        Some(b) if b.weight > e.weight || (b.weight == e.weight && b.endpoints() < e.endpoints()) => Some(b),
        _ => Some(e),
    })
}

/// Picks the next edge to cut.
///
/// Threshold mode always returns the globally heaviest edge and tags it
/// [`FiredCriterion::Threshold`] when its weight exceeds `stats.threshold()`.
/// Zahn mode returns the heaviest inconsistent edge, or the heaviest edge
/// overall when none is inconsistent.
pub fn select_edge_to_remove(
    forest: &SpanningForest,
    stats: &EdgeStats,
    config: &CriterionConfig,
) -> Result<RemovedEdge> {
    let top = *heaviest(forest.edges().iter()).ok_or(Error::Degenerate("no edges left to remove"))?;
    match config.mode {
        CriterionMode::StdThresholdOrLongest => {
            let criterion = if top.weight > stats.threshold() {
                FiredCriterion::Threshold
            } else {
                FiredCriterion::Longest
            };
            Ok(RemovedEdge { edge: top, criterion })
        }
        CriterionMode::Zahn => {
            config.validate()?;
            let adj = forest.adjacency();
            let flagged = forest
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, e)| is_inconsistent(forest, &adj, i, e, config));
            Ok(match heaviest(flagged.map(|(_, e)| e)) {
                Some(&edge) => RemovedEdge {
                    edge,
                    criterion: FiredCriterion::Zahn,
                },
                None => RemovedEdge {
                    edge: top,
                    criterion: FiredCriterion::Longest,
                },
            })
        }
    }
}

/// Weights of the edges reachable from `start` within `depth` hops without
/// crossing edge `skip`.
fn neighborhood_weights(
    forest: &SpanningForest,
    adj: &[Vec<(usize, usize)>],
    start: usize,
    skip: usize,
    depth: usize,
) -> Vec<f64> {
    let mut weights = Vec::new();
    let mut queue = VecDeque::from([(start, usize::MAX, 0usize)]);
    while let Some((x, parent, hops)) = queue.pop_front() {
        if hops == depth {
            continue;
        }
        for &(y, idx) in &adj[x] {
            if idx == skip || y == parent {
                continue;
            }
            weights.push(forest.edges()[idx].weight);
            queue.push_back((y, x, hops + 1));
        }
    }
    weights
}

fn is_inconsistent(
    forest: &SpanningForest,
    adj: &[Vec<(usize, usize)>],
    position: usize,
    e: &Edge,
    config: &CriterionConfig,
) -> bool {
    let c = config.zahn_c;
    let w = e.weight;
    let sides: Vec<Option<EdgeStats>> = [e.u, e.v]
        .iter()
        .map(|&end| weight_statistics(&neighborhood_weights(forest, adj, end, position, config.zahn_depth)))
        .collect();
    let bounds: Vec<f64> = sides.iter().flatten().map(|s| s.mean_weight + c * s.std_weight).collect();

    // Sides with an empty neighborhood carry no evidence for conditions 1 and 2.
    let cond1 = bounds.iter().any(|&b| w > b);
    let cond2 = !bounds.is_empty() && w > bounds.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if cond1 || cond2 {
        return true;
    }
    let spread = sides
        .iter()
        .map(|s| s.map_or(0.0, |s| c * s.std_weight))
        .fold(0.0, f64::max);
    spread > 0.0 && w / spread > config.zahn_f
}

/// Zahn's three-condition inconsistency test for edge `e` of `tree`.
///
/// Each endpoint's neighborhood is the set of edges within `zahn_depth` hops
/// of it, not passing through `e`. Condition 3 is skipped when both
/// neighborhood deviations are zero.
pub fn zahn_inconsistent(tree: &SpanningForest, e: &Edge, config: &CriterionConfig) -> Result<bool> {
    if config.mode == CriterionMode::Zahn {
        config.validate()?;
    }
    let position = tree.position(e.u, e.v).ok_or(Error::EdgeNotInTree { u: e.u, v: e.v })?;
    let edge = tree.edges()[position];
    Ok(is_inconsistent(tree, &tree.adjacency(), position, &edge, config))
}

/// Splits `dataset` into exactly `k` subtree clusters.
pub fn emstrd(dataset: &Dataset, k: usize, config: &CriterionConfig) -> Result<ClusteringResult> {
    let n = dataset.len();
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    config.validate()?;

    let tree = build_emst(dataset);
    let edge_stats = edge_statistics(&tree).ok();
    let dataset_variance = cluster_variance(dataset.points())?;

    let mut forest = tree.clone();
    let mut removed_edges = Vec::with_capacity(k - 1);
    while forest.component_count() < k {
        let stats = edge_stats.expect("k > 1 implies at least one edge");
        let pick = select_edge_to_remove(&forest, &stats, config)?;
        forest = forest.without_edge(pick.edge.u, pick.edge.v)?;
        removed_edges.push(pick);
    }

    let clusters = forest.components();
    debug_assert_eq!(clusters.len(), k);
    let reports: Vec<ClusterReport> = clusters.iter().map(|c| cluster_report(c, dataset)).collect();
    let centers = reports.iter().map(|r| dataset.point(r.center_index).clone()).collect();
    let compactness = cluster_compactness(&clusters, dataset)?;

    Ok(ClusteringResult {
        tree,
        edge_stats,
        dataset_variance,
        clusters,
        reports,
        centers,
        removed_edges,
        compactness,
    })
}
