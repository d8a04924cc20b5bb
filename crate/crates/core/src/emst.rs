//! Euclidean minimum spanning tree construction and edge-weight statistics.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Dataset, Edge, SpanningForest};

/// Mean and population standard deviation of a tree's edge weights.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeStats {
    pub mean_weight: f64,
    pub std_weight: f64,
}

impl EdgeStats {
    /// Weight above which an edge counts as inconsistent: mean + one std.
    pub fn threshold(&self) -> f64 {
        self.mean_weight + self.std_weight
    }
}

/// Total order used to break weight ties between candidate edges.
#[inline]
pub(crate) fn edge_key_less(w1: f64, a1: usize, b1: usize, w2: f64, a2: usize, b2: usize) -> bool {
    let (lo1, hi1) = (a1.min(b1), a1.max(b1));
    let (lo2, hi2) = (a2.min(b2), a2.max(b2));
    w1 < w2 || (w1 == w2 && (lo1, hi1) < (lo2, hi2))
}

/// Builds the Euclidean minimum spanning tree with dense Prim over the
/// implicit complete graph, O(n²) time and O(n) extra space.
///
/// Ties on weight go to the lexicographically smallest `(min, max)` endpoint
/// pair, which makes the edge set unique even with repeated distances.
pub fn build_emst(dataset: &Dataset) -> SpanningForest {
    let n = dataset.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 1 {
        let mut in_tree = vec![false; n];
        let mut best_weight = vec![f64::INFINITY; n];
        let mut best_parent = vec![usize::MAX; n];
        let mut newest = 0;
        in_tree[0] = true;

        for _ in 1..n {
            let anchor = dataset.point(newest).coords();
            let mut pick = usize::MAX;
            for v in 0..n {
                if in_tree[v] {
                    continue;
                }
                let w = crate::model::distance(anchor, dataset.point(v).coords());
                if best_parent[v] == usize::MAX
                    || edge_key_less(w, newest, v, best_weight[v], best_parent[v], v)
                {
                    best_weight[v] = w;
                    best_parent[v] = newest;
                }
                if pick == usize::MAX
                    || edge_key_less(
                        best_weight[v],
                        best_parent[v],
                        v,
                        best_weight[pick],
                        best_parent[pick],
                        pick,
                    )
                {
                    pick = v;
                }
            }
            in_tree[pick] = true;
            newest = pick;
            edges.push(
                Edge::new(best_parent[pick], pick, best_weight[pick]).expect("distinct finite endpoints"),
            );
        }
    }
    SpanningForest::new(n, edges).expect("prim output is a tree")
}

pub fn edge_statistics(tree: &SpanningForest) -> Result<EdgeStats> {
    let weights: Vec<f64> = tree.edges().iter().map(|e| e.weight).collect();
    weight_statistics(&weights).ok_or(Error::Degenerate("edge statistics need at least one edge"))
}

/// Mean and population standard deviation; `None` for an empty slice.
pub(crate) fn weight_statistics(weights: &[f64]) -> Option<EdgeStats> {
    if weights.is_empty() {
        return None;
    }
    let n = weights.len() as f64;
    let mean = weights.iter().sum::<f64>() / n;
    let var = weights.iter().map(|w| (w - mean) * (w - mean)).sum::<f64>() / n;
    Some(EdgeStats {
        mean_weight: mean,
        std_weight: var.sqrt(),
    })
}

/// Exact MST weight by enumerating every labelled tree through its Prüfer
/// sequence (n^(n-2) trees). Test oracle only; refuses more than 8 points.
pub fn brute_force_mst_weight(dataset: &Dataset) -> Result<f64> {
    let n = dataset.len();
    if n > 8 {
        return Err(Error::OracleTooLarge(n));
    }
    match n {
        1 => return Ok(0.0),
        2 => return Ok(dataset.distance(0, 1)),
        _ => {}
    }
    let dist: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| dataset.distance(i, j)).collect())
        .collect();

    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut best = f64::INFINITY;
    let mut degree = vec![0usize; n];
    loop {
        degree.iter_mut().for_each(|d| *d = 1);
        for &s in &seq {
            degree[s] += 1;
        }
        let mut total = 0.0;
        for &s in &seq {
            let leaf = (0..n).find(|&x| degree[x] == 1).expect("a leaf always exists");
            total += dist[leaf][s];
            degree[leaf] = 0;
            degree[s] -= 1;
        }
        let mut last = (0..n).filter(|&x| degree[x] == 1);
        let (a, b) = (last.next().unwrap(), last.next().unwrap());
        total += dist[a][b];
        best = best.min(total);

        // Odometer increment over [0, n)^(n-2).
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(best);
            }
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}
