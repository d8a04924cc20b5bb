//! Tree-center metrics (eccentricity, radius, center, diameter) over weighted
//! subtrees, and centroid-based spread measures: RMS radius, RMS pairwise
//! diameter, variance and compactness.
//!
//! Eccentricities use weighted path lengths inside the subtree, never direct
//! Euclidean distances between members.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{squared_distance, Cluster, ClusterReport, Dataset, Point};

/// All-pairs weighted path distances inside one subtree.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceTable {
    vertices: Vec<usize>,
    dist: Vec<f64>,
}

impl DistanceTable {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn local(&self, x: usize) -> Result<usize> {
        self.vertices.binary_search(&x).map_err(|_| Error::VertexOutOfRange {
            index: x,
            count: self.vertices.len(),
        })
    }

    pub fn get(&self, x: usize, y: usize) -> Result<f64> {
        let (i, j) = (self.local(x)?, self.local(y)?);
        Ok(self.dist[i * self.len() + j])
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.len()..(i + 1) * self.len()]
    }
}

/// Local adjacency of a cluster: `(neighbor local index, weight)`.
fn local_adjacency(cluster: &Cluster) -> Vec<Vec<(usize, f64)>> {
    let mut adj = vec![Vec::new(); cluster.len()];
    for e in cluster.edges() {
        let (a, b) = (
            cluster.local_index(e.u).expect("edge endpoint in cluster"),
            cluster.local_index(e.v).expect("edge endpoint in cluster"),
        );
        adj[a].push((b, e.weight));
        adj[b].push((a, e.weight));
    }
    adj
}

/// Path distances from `source` to every vertex, by tree traversal.
fn distances_from(adj: &[Vec<(usize, f64)>], source: usize, out: &mut [f64]) {
    out.iter_mut().for_each(|d| *d = f64::NAN);
    out[source] = 0.0;
    let mut stack = vec![source];
    while let Some(x) = stack.pop() {
        for &(y, w) in &adj[x] {
            if out[y].is_nan() {
                out[y] = out[x] + w;
                stack.push(y);
            }
        }
    }
}

/// Builds the full distance table by one traversal per member; O(m²).
pub fn path_distance_table(cluster: &Cluster) -> DistanceTable {
    let m = cluster.len();
    let adj = local_adjacency(cluster);
    let mut dist = vec![0.0; m * m];
    for (i, row) in dist.chunks_mut(m).enumerate() {
        distances_from(&adj, i, row);
    }
    // Traversals from opposite ends sum a path in different orders; mirror the
    // upper triangle so d(x, y) and d(y, x) are the same float.
    for i in 0..m {
        for j in i + 1..m {
            dist[j * m + i] = dist[i * m + j];
        }
    }
    DistanceTable {
        vertices: cluster.members().to_vec(),
        dist,
    }
}

pub fn eccentricity(table: &DistanceTable, x: usize) -> Result<f64> {
    let i = table.local(x)?;
    Ok(row_max(table.row(i)))
}

fn row_max(row: &[f64]) -> f64 {
    row.iter().copied().fold(0.0, f64::max)
}

fn table_eccentricities(table: &DistanceTable) -> Vec<f64> {
    (0..table.len()).map(|i| row_max(table.row(i))).collect()
}

fn argmin_set(vertices: &[usize], ecc: &[f64]) -> (Vec<usize>, f64) {
    let best = ecc.iter().copied().fold(f64::INFINITY, f64::min);
    let set = vertices.iter().zip(ecc).filter(|(_, &e)| e == best).map(|(&v, _)| v).collect();
    (set, best)
}

fn argmax_set(vertices: &[usize], ecc: &[f64]) -> (Vec<usize>, f64) {
    let best = ecc.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let set = vertices.iter().zip(ecc).filter(|(_, &e)| e == best).map(|(&v, _)| v).collect();
    (set, best)
}

/// Center set (sorted ascending) and radius.
pub fn center_and_radius(table: &DistanceTable) -> (Vec<usize>, f64) {
    argmin_set(&table.vertices, &table_eccentricities(table))
}

/// Diameter and the set of vertices attaining it.
pub fn diameter_and_set(table: &DistanceTable) -> (f64, Vec<usize>) {
    let (set, d) = argmax_set(&table.vertices, &table_eccentricities(table));
    (d, set)
}

/// Eccentricity of every member (aligned with `cluster.members()`) in O(m).
///
/// In a tree with non-negative weights the farthest vertex from any `x` is one
/// of the two endpoints `a`, `b` of a longest path, so `e(x) = max(d(x,a), d(x,b))`.
/// `a` is found as the farthest vertex from an arbitrary start and `b` as the
/// farthest from `a`.
pub fn tree_eccentricities(cluster: &Cluster) -> Vec<f64> {
    let m = cluster.len();
    let adj = local_adjacency(cluster);
    let farthest = |d: &[f64]| {
        d.iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &x)| if x > acc.1 { (i, x) } else { acc })
            .0
    };
    let mut from_a = vec![0.0; m];
    let mut from_b = vec![0.0; m];
    distances_from(&adj, 0, &mut from_a);
    let a = farthest(&from_a);
    distances_from(&adj, a, &mut from_a);
    let b = farthest(&from_a);
    distances_from(&adj, b, &mut from_b);
    // Both ends of the longest path must see the same length.
    from_b[a] = from_a[b];
    from_a.iter().zip(&from_b).map(|(x, y)| x.max(*y)).collect()
}

/// Center, radius and diameter of a cluster without materializing the table.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeShape {
    pub center: Vec<usize>,
    pub radius: f64,
    pub diameter: f64,
    pub diameter_set: Vec<usize>,
}

pub fn tree_shape(cluster: &Cluster) -> TreeShape {
    let ecc = tree_eccentricities(cluster);
    let (center, radius) = argmin_set(cluster.members(), &ecc);
    let (diameter_set, diameter) = argmax_set(cluster.members(), &ecc);
    TreeShape {
        center,
        radius,
        diameter,
        diameter_set,
    }
}

fn check_uniform(points: &[Point]) -> Result<usize> {
    let d = points.first().ok_or(Error::EmptyDataset)?.dimension();
    if let Some(p) = points.iter().find(|p| p.dimension() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.dimension(),
        });
    }
    Ok(d)
}

fn mean_of<'a>(rows: impl ExactSizeIterator<Item = &'a [f64]>, dim: usize) -> Vec<f64> {
    let n = rows.len() as f64;
    let mut acc = vec![0.0; dim];
    for row in rows {
        acc.iter_mut().zip(row).for_each(|(a, x)| *a += x);
    }
    acc.iter_mut().for_each(|a| *a /= n);
    acc
}

/// Coordinate-wise mean.
pub fn centroid(points: &[Point]) -> Result<Point> {
    let dim = check_uniform(points)?;
    Point::new(mean_of(points.iter().map(Point::coords), dim))
}

fn mean_squared_deviation<'a>(rows: impl ExactSizeIterator<Item = &'a [f64]> + Clone, dim: usize) -> f64 {
    let n = rows.len() as f64;
    let center = mean_of(rows.clone(), dim);
    rows.map(|r| squared_distance(r, &center)).sum::<f64>() / n
}

/// Root-mean-square distance from the centroid, `sqrt(Σ|x_i - x_0|² / n)`.
pub fn centroid_radius(points: &[Point]) -> Result<f64> {
    let dim = check_uniform(points)?;
    let n = points.len() as f64;
    let c = mean_of(points.iter().map(Point::coords), dim);
    let sum: f64 = points
        .iter()
        .flat_map(|p| p.coords().iter().zip(&c).map(|(x, m)| (x - m) * (x - m)))
        .sum();
    Ok((sum / n).sqrt())
}

/// Root of the mean squared distance over ordered pairs `i != j`; 0 for a
/// single point.
///
/// Uses `ΣΣ|x_i - x_j|² = 2n Σ|x_i - x_0|²`, so the cost is linear.
pub fn centroid_diameter(points: &[Point]) -> Result<f64> {
    let dim = check_uniform(points)?;
    let n = points.len();
    if n == 1 {
        return Ok(0.0);
    }
    let msd = mean_squared_deviation(points.iter().map(Point::coords), dim);
    let nf = n as f64;
    Ok((2.0 * nf * nf * msd / (nf * (nf - 1.0))).sqrt())
}

/// `v(T) = sqrt((1/n) Σ d²(x_i, x_0))` with Euclidean `d`.
pub fn cluster_variance(points: &[Point]) -> Result<f64> {
    let dim = check_uniform(points)?;
    Ok(mean_squared_deviation(points.iter().map(Point::coords), dim).sqrt())
}

fn variance_of_indices(dataset: &Dataset, indices: &[usize]) -> f64 {
    let rows = indices.iter().map(|&i| dataset.point(i).coords());
    mean_squared_deviation(rows, dataset.dimension()).sqrt()
}

/// Mean ratio of cluster variance to whole-dataset variance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Compactness {
    pub value: f64,
    /// Set when the dataset variance is zero; `value` is then 0.
    pub degenerate: bool,
}

pub fn cluster_compactness(clusters: &[Cluster], dataset: &Dataset) -> Result<Compactness> {
    let mut seen = vec![false; dataset.len()];
    for &x in clusters.iter().flat_map(|c| c.members()) {
        if x >= dataset.len() {
            return Err(Error::VertexOutOfRange {
                index: x,
                count: dataset.len(),
            });
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::Degenerate("clusters overlap"));
        }
    }
    if clusters.is_empty() || seen.contains(&false) {
        return Err(Error::Degenerate("clusters do not cover the dataset"));
    }
    let all: Vec<usize> = (0..dataset.len()).collect();
    let whole = variance_of_indices(dataset, &all);
    if whole == 0.0 {
        return Ok(Compactness {
            value: 0.0,
            degenerate: true,
        });
    }
    let sum: f64 = clusters
        .iter()
        .map(|c| variance_of_indices(dataset, c.members()) / whole)
        .sum();
    Ok(Compactness {
        value: sum / clusters.len() as f64,
        degenerate: false,
    })
}

/// Report for one cluster; the center is the lowest-index member of the
/// eccentricity center set.
pub fn cluster_report(cluster: &Cluster, dataset: &Dataset) -> ClusterReport {
    let shape = tree_shape(cluster);
    ClusterReport {
        center_index: shape.center[0],
        radius: shape.radius,
        diameter: shape.diameter,
        variance: variance_of_indices(dataset, cluster.members()),
        size: cluster.len(),
    }
}
