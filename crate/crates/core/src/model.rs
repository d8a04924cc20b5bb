//! Domain types shared by every stage of the pipeline.
//!
//! Everything here is immutable once constructed; constructors validate the
//! invariants so downstream code can rely on them.

use serde::Serialize;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};

/// A point in `d`-dimensional Euclidean space with finite coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if let Some((index, &value)) = coords.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Point(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn euclidean_distance(p: &Point, q: &Point) -> Result<f64> {
    if p.dimension() != q.dimension() {
        return Err(Error::DimensionMismatch {
            expected: p.dimension(),
            found: q.dimension(),
        });
    }
    Ok(distance(p.coords(), q.coords()))
}

#[inline]
pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum()
}

#[inline]
pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

/// A non-empty, indexed set of points sharing one dimension.
///
/// Vertex indices used throughout the crate are positions in this set.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    points: Vec<Point>,
    dimension: usize,
}

impl Dataset {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dimension = points.first().ok_or(Error::EmptyDataset)?.dimension();
        if let Some(p) = points.iter().find(|p| p.dimension() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: p.dimension(),
            });
        }
        Ok(Dataset { points, dimension })
    }

    pub fn from_rows<I>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<f64>>,
    {
        let points = rows.into_iter().map(Point::new).collect::<Result<Vec<_>>>()?;
        Dataset::new(points)
    }

    /// One-dimensional dataset from scalar values.
    pub fn from_scalars(values: &[f64]) -> Result<Self> {
        Dataset::from_rows(values.iter().map(|&v| vec![v]))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always `false`; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &Point {
        &self.points[index]
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        distance(self.points[i].coords(), self.points[j].coords())
    }

    pub fn subset(&self, indices: &[usize]) -> Vec<Point> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// Weighted undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl Edge {
    /// Builds an edge with normalized endpoint order.
    pub fn new(a: usize, b: usize, weight: f64) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(Error::BadWeight(weight));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(Edge { u, v, weight })
    }

    /// Edge between two dataset vertices weighted by their Euclidean distance.
    pub fn between(dataset: &Dataset, a: usize, b: usize) -> Result<Self> {
        for index in [a, b] {
            if index >= dataset.len() {
                return Err(Error::VertexOutOfRange {
                    index,
                    count: dataset.len(),
                });
            }
        }
        Edge::new(a, b, dataset.distance(a, b))
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// Acyclic edge set over `vertex_count` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanningForest {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl SpanningForest {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyDataset);
        }
        let mut sets = DisjointSets::new(vertex_count);
        for e in &edges {
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if !(e.weight.is_finite() && e.weight >= 0.0) {
                return Err(Error::BadWeight(e.weight));
            }
            for index in [e.u, e.v] {
                if index >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index,
                        count: vertex_count,
                    });
                }
            }
            if !sets.union(e.u, e.v) {
                return Err(Error::Cycle { u: e.u, v: e.v });
            }
        }
        Ok(SpanningForest {
            vertex_count,
            edges,
        })
    }

    /// Forest with no edges: every vertex is its own component.
    pub fn empty(vertex_count: usize) -> Result<Self> {
        SpanningForest::new(vertex_count, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Number of connected components; exact because the edge set is acyclic.
    pub fn component_count(&self) -> usize {
        self.vertex_count - self.edges.len()
    }

    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().position(|e| e.u == u && e.v == v)
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.position(u, v).is_some()
    }

    /// A copy of this forest with the edge `(u, v)` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let at = self.position(u, v).ok_or(Error::EdgeNotInTree { u, v })?;
        let mut edges = self.edges.clone();
        edges.remove(at);
        Ok(SpanningForest {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Adjacency lists of `(neighbor, edge position)` pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        adj
    }

    /// Connected components as clusters, ordered by their lowest member index.
    pub fn components(&self) -> Vec<Cluster> {
        let mut sets = DisjointSets::new(self.vertex_count);
        for e in &self.edges {
            sets.union(e.u, e.v);
        }
        let mut slot_of_root = vec![usize::MAX; self.vertex_count];
        let mut clusters: Vec<Cluster> = Vec::new();
        // Scanning vertices in order numbers the components by lowest member.
        for x in 0..self.vertex_count {
            let root = sets.find(x);
            if slot_of_root[root] == usize::MAX {
                slot_of_root[root] = clusters.len();
                clusters.push(Cluster {
                    members: Vec::new(),
                    edges: Vec::new(),
                });
            }
            clusters[slot_of_root[root]].members.push(x);
        }
        for e in &self.edges {
            let slot = slot_of_root[sets.find(e.u)];
            clusters[slot].edges.push(*e);
        }
        clusters
    }
}

/// A connected subtree of a spanning forest: its member vertices (sorted) and
/// the edges joining them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cluster {
    members: Vec<usize>,
    edges: Vec<Edge>,
}

impl Cluster {
    pub fn new(mut members: Vec<usize>, edges: Vec<Edge>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || edges.len() + 1 != members.len() {
            return Err(Error::NotATree);
        }
        let local = |x: usize| members.binary_search(&x).map_err(|_| Error::NotATree);
        let mut sets = DisjointSets::new(members.len());
        for e in &edges {
            if !sets.union(local(e.u)?, local(e.v)?) {
                return Err(Error::NotATree);
            }
        }
        Ok(Cluster { members, edges })
    }

    pub fn singleton(vertex: usize) -> Self {
        Cluster {
            members: vec![vertex],
            edges: Vec::new(),
        }
    }

    /// The whole forest as one cluster; fails unless it has a single component.
    pub fn from_tree(tree: &SpanningForest) -> Result<Self> {
        if tree.component_count() != 1 {
            return Err(Error::NotATree);
        }
        Ok(Cluster {
            members: (0..tree.vertex_count()).collect(),
            edges: tree.edges().to_vec(),
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always `false`: clusters have at least one member.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.members.binary_search(&vertex).is_ok()
    }

    /// Position of `vertex` within `members`.
    pub fn local_index(&self, vertex: usize) -> Option<usize> {
        self.members.binary_search(&vertex).ok()
    }
}

/// Per-cluster summary: tree center, eccentricity radius and diameter, and
/// RMS variance about the centroid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClusterReport {
    pub center_index: usize,
    pub radius: f64,
    pub diameter: f64,
    pub variance: f64,
    pub size: usize,
}

/// One agglomeration step. Leaves are nodes `0..leaf_count`; the node created
/// by merge `m` has id `leaf_count + m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Merge {
    pub m: usize,
    pub level: f64,
    pub left: usize,
    pub right: usize,
    pub new_node: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Dendrogram {
    leaf_count: usize,
    merges: Vec<Merge>,
}

impl Dendrogram {
    pub(crate) fn new(leaf_count: usize, merges: Vec<Merge>) -> Self {
        debug_assert!(merges.iter().enumerate().all(|(i, r)| r.m == i + 1));
        debug_assert!(merges.windows(2).all(|w| w[0].level <= w[1].level));
        Dendrogram { leaf_count, merges }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    /// Id of the node that contains every leaf, if the clustering is conjoint.
    pub fn root(&self) -> Option<usize> {
        if self.merges.len() + 1 != self.leaf_count {
            return None;
        }
        Some(self.merges.last().map_or(0, |r| r.new_node))
    }

    /// Merge height of a node; leaves sit at 0.
    pub fn node_level(&self, node: usize) -> f64 {
        if node < self.leaf_count {
            0.0
        } else {
            self.merges[node - self.leaf_count].level
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionMode {
    /// Remove the heaviest remaining edge; record whether it exceeded mean + std.
    StdThresholdOrLongest,
    /// Remove the heaviest edge that is inconsistent with its local neighborhood.
    Zahn,
}

/// Edge-removal policy for the divisive stage.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriterionConfig {
    pub mode: CriterionMode,
    pub zahn_c: f64,
    pub zahn_f: f64,
    pub zahn_depth: usize,
}

impl Default for CriterionConfig {
    fn default() -> Self {
        CriterionConfig {
            mode: CriterionMode::StdThresholdOrLongest,
            zahn_c: 2.0,
            zahn_f: 2.0,
            zahn_depth: 2,
        }
    }
}

impl CriterionConfig {
    pub fn std_threshold() -> Self {
        Self::default()
    }

    pub fn zahn(c: f64, f: f64, depth: usize) -> Result<Self> {
        let config = CriterionConfig {
            mode: CriterionMode::Zahn,
            zahn_c: c,
            zahn_f: f,
            zahn_depth: depth,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.mode != CriterionMode::Zahn {
            return Ok(());
        }
        if !(self.zahn_c.is_finite() && self.zahn_c > 0.0) {
            return Err(Error::Config(format!("zahn c must be positive, got {}", self.zahn_c)));
        }
        if !(self.zahn_f.is_finite() && self.zahn_f > 0.0) {
            return Err(Error::Config(format!("zahn f must be positive, got {}", self.zahn_f)));
        }
        if self.zahn_depth == 0 {
            return Err(Error::Config("zahn depth must be at least 1".into()));
        }
        Ok(())
    }
}
