//! Independent oracles shared by the integration suites. Nothing here calls
//! into the traversal, Prim or double-sweep code paths it is used to check.
#![allow(dead_code)]

use metaclust_core::{Cluster, Edge};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random tree on `members`: each vertex after the first hangs off a random
/// earlier one. `integer_weights` draws weights from {0..=5} so that path
/// sums are exact and eccentricity ties are common.
pub fn random_tree(rng: &mut impl Rng, members: &[usize], integer_weights: bool) -> Cluster {
    let edges = (1..members.len())
        .map(|i| {
            let j = rng.random_range(0..i);
            let w = if integer_weights {
                rng.random_range(0..=5) as f64
            } else {
                rng.random_range(0.0..10.0)
            };
            Edge::new(members[i], members[j], w).unwrap()
        })
        .collect();
    Cluster::new(members.to_vec(), edges).unwrap()
}

/// All-pairs path lengths by Floyd–Warshall on the cluster's edge list,
/// indexed by position in `cluster.members()`.
pub fn all_pairs(cluster: &Cluster) -> Vec<Vec<f64>> {
    let m = cluster.len();
    let idx = |x: usize| cluster.members().binary_search(&x).unwrap();
    let mut d = vec![vec![f64::INFINITY; m]; m];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for e in cluster.edges() {
        let (a, b) = (idx(e.u), idx(e.v));
        d[a][b] = e.weight;
        d[b][a] = e.weight;
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub struct OracleShape {
    pub ecc: Vec<f64>,
    pub radius: f64,
    pub center: Vec<usize>,
    pub diameter: f64,
    pub diameter_set: Vec<usize>,
}

/// Eccentricity summary from the Floyd–Warshall table; set membership uses
/// a `tol` band so rounding differences between routes do not matter.
pub fn oracle_shape(cluster: &Cluster, tol: f64) -> OracleShape {
    let d = all_pairs(cluster);
    let ecc: Vec<f64> = d.iter().map(|row| row.iter().copied().fold(0.0, f64::max)).collect();
    let radius = ecc.iter().copied().fold(f64::INFINITY, f64::min);
    let diameter = ecc.iter().copied().fold(0.0, f64::max);
    let pick = |target: f64| {
        cluster
            .members()
            .iter()
            .zip(&ecc)
            .filter(|(_, &e)| (e - target).abs() <= tol)
            .map(|(&v, _)| v)
            .collect()
    };
    OracleShape {
        center: pick(radius),
        diameter_set: pick(diameter),
        ecc,
        radius,
        diameter,
    }
}

/// Minimum distance between the two sides of a bipartition.
pub fn min_cross_distance(points: &[Vec<f64>], side: &[bool]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..points.len() {
        for j in 0..points.len() {
            if side[i] && !side[j] {
                let d: f64 = points[i].iter().zip(&points[j]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
                best = best.min(d);
            }
        }
    }
    best
}

/// Best achievable minimum inter-side distance over all bipartitions.
pub fn best_bipartition_gap(points: &[Vec<f64>]) -> f64 {
    let n = points.len();
    let mut best = f64::NEG_INFINITY;
    // Fix point 0 on side `true` to skip mirrored masks.
    for mask in 0..(1u32 << (n - 1)) {
        let side: Vec<bool> = (0..n).map(|i| i == 0 || mask & (1 << (i - 1)) == 0).collect();
        if side.iter().all(|&s| s) {
            continue;
        }
        best = best.max(min_cross_distance(points, &side));
    }
    best
}

/// Parsed Newick node.
#[derive(Debug)]
pub enum NewickNode {
    Leaf(String, f64),
    Inner(Vec<NewickNode>, f64),
}

/// Small recursive-descent Newick parser (names, branch lengths, nesting).
pub fn parse_newick(text: &str) -> NewickNode {
    let bytes = text.trim().as_bytes();
    let mut pos = 0;
    let node = parse_node(bytes, &mut pos);
    assert_eq!(bytes.get(pos), Some(&b';'), "missing terminator");
    assert_eq!(pos + 1, bytes.len(), "trailing input");
    node
}

fn parse_node(b: &[u8], pos: &mut usize) -> NewickNode {
    if b[*pos] == b'(' {
        *pos += 1;
        let mut children = vec![parse_node(b, pos)];
        while b[*pos] == b',' {
            *pos += 1;
            children.push(parse_node(b, pos));
        }
        assert_eq!(b[*pos], b')');
        *pos += 1;
        NewickNode::Inner(children, parse_length(b, pos))
    } else {
        let start = *pos;
        while !matches!(b[*pos], b':' | b',' | b')' | b';') {
            *pos += 1;
        }
        let name = String::from_utf8(b[start..*pos].to_vec()).unwrap();
        NewickNode::Leaf(name, parse_length(b, pos))
    }
}

fn parse_length(b: &[u8], pos: &mut usize) -> f64 {
    if b.get(*pos) != Some(&b':') {
        return 0.0;
    }
    *pos += 1;
    let start = *pos;
    while !matches!(b[*pos], b',' | b')' | b';') {
        *pos += 1;
    }
    std::str::from_utf8(&b[start..*pos]).unwrap().parse().unwrap()
}

/// (leaf count, internal count, root-to-leaf heights).
pub fn newick_shape(root: &NewickNode) -> (usize, usize, Vec<f64>) {
    let mut leaves = 0;
    let mut inner = 0;
    let mut heights = Vec::new();
    let mut stack = vec![(root, 0.0)];
    while let Some((node, depth)) = stack.pop() {
        match node {
            NewickNode::Leaf(_, len) => {
                leaves += 1;
                heights.push(depth + len);
            }
            NewickNode::Inner(children, len) => {
                inner += 1;
                for c in children {
                    stack.push((c, depth + len));
                }
            }
        }
    }
    (leaves, inner, heights)
}

/// Whether every block of `fine` lies inside a block of `coarse`.
pub fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    let mut map = std::collections::HashMap::new();
    fine.iter().zip(coarse).all(|(f, c)| *map.entry(*f).or_insert(*c) == *c)
}
