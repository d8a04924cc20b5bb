//! Agglomerative meta-clustering over cluster centers: an MST over the
//! centers is consumed shortest edge first into a dendrogram, and the center
//! of that tree marks the central cluster.

use std::collections::HashSet;

use crate::dsu::DisjointSets;
use crate::emst::{build_emst, edge_key_less};
use crate::error::{Error, Result};
use crate::metrics::tree_shape;
use crate::model::{Cluster, Dataset, Dendrogram, Merge, Point, SpanningForest};

#[derive(Clone, Debug)]
pub struct MetaResult {
    /// MST over the centers; vertex `i` is cluster `i`.
    pub meta_tree: SpanningForest,
    pub dendrogram: Dendrogram,
    pub central_cluster: usize,
    pub meta_radius: f64,
}

/// Edge-set difference between two subtrees, in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeDistance {
    /// Edges of the first tree missing from the second.
    pub forward: usize,
    /// Edges of the second tree missing from the first.
    pub backward: usize,
}

impl TreeDistance {
    pub fn value(&self) -> usize {
        self.forward
    }

    pub fn is_symmetric(&self) -> bool {
        self.forward == self.backward
    }
}

/// Counts edges present in one subtree but not the other, matching edges by
/// endpoint pair.
pub fn tree_distance(t1: &Cluster, t2: &Cluster) -> TreeDistance {
    let pairs = |c: &Cluster| c.edges().iter().map(|e| e.endpoints()).collect::<HashSet<_>>();
    let (a, b) = (pairs(t1), pairs(t2));
    TreeDistance {
        forward: a.difference(&b).count(),
        backward: b.difference(&a).count(),
    }
}

pub fn build_meta_emst(centers: &[Point]) -> Result<SpanningForest> {
    let dataset = Dataset::new(centers.to_vec())?;
    Ok(build_emst(&dataset))
}

/// Lowest-index vertex of minimum eccentricity, with that eccentricity.
pub fn central_cluster(meta_tree: &SpanningForest) -> Result<(usize, f64)> {
    let whole = Cluster::from_tree(meta_tree)?;
    let shape = tree_shape(&whole);
    Ok((shape.center[0], shape.radius))
}

/// Merges clusters along the meta tree's edges in ascending
/// `(weight, min endpoint, max endpoint)` order. Each merge sits at the level
/// of its edge weight; contracted vertices keep their original edge weights.
pub fn dendrogram_from_tree(tree: &SpanningForest) -> Dendrogram {
    let k = tree.vertex_count();
    let mut order: Vec<_> = tree.edges().to_vec();
    order.sort_by(|a, b| {
        if edge_key_less(a.weight, a.u, a.v, b.weight, b.u, b.v) {
            std::cmp::Ordering::Less
        } else if edge_key_less(b.weight, b.u, b.v, a.weight, a.u, a.v) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });

    let mut sets = DisjointSets::new(k);
    // Current dendrogram node of each union-find root.
    let mut node_of: Vec<usize> = (0..k).collect();
    let mut merges = Vec::with_capacity(order.len());
    for (i, e) in order.iter().enumerate() {
        let (ru, rv) = (sets.find(e.u), sets.find(e.v));
        let (left, right) = (node_of[ru], node_of[rv]);
        let new_node = k + i;
        sets.union(ru, rv);
        node_of[sets.find(ru)] = new_node;
        merges.push(Merge {
            m: i + 1,
            level: e.weight,
            left,
            right,
            new_node,
        });
    }
    Dendrogram::new(k, merges)
}

pub fn emstucc(centers: &[Point]) -> Result<MetaResult> {
    if centers.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let meta_tree = build_meta_emst(centers)?;
    let (central_cluster, meta_radius) = central_cluster(&meta_tree)?;
    let dendrogram = dendrogram_from_tree(&meta_tree);
    Ok(MetaResult {
        meta_tree,
        dendrogram,
        central_cluster,
        meta_radius,
    })
}
