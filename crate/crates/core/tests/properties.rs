mod common;

use common::*;
use metaclust_core::io::{parse_points_csv, points_to_csv, to_newick};
use metaclust_core::metrics::{tree_eccentricities, tree_shape};
use metaclust_core::synthetic::{gaussian_blobs, uniform_points};
use metaclust_core::*;
use proptest::prelude::*;
use rand::Rng;

fn coords(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0..100.0f64, dim)
}

fn point_set(max_n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=3).prop_flat_map(move |d| prop::collection::vec(coords(d), 1..=max_n))
}

fn dataset(rows: &[Vec<f64>]) -> Dataset {
    Dataset::from_rows(rows.to_vec()).unwrap()
}

fn points(rows: &[Vec<f64>]) -> Vec<Point> {
    rows.iter().map(|r| Point::new(r.clone()).unwrap()).collect()
}

proptest! {
    #[test]
    fn distance_is_symmetric_and_triangular((a, b, c) in (1usize..5).prop_flat_map(|d| (coords(d), coords(d), coords(d)))) {
        let (a, b, c) = (Point::new(a).unwrap(), Point::new(b).unwrap(), Point::new(c).unwrap());
        let ab = euclidean_distance(&a, &b).unwrap();
        prop_assert_eq!(ab, euclidean_distance(&b, &a).unwrap());
        let ac = euclidean_distance(&a, &c).unwrap();
        let cb = euclidean_distance(&c, &b).unwrap();
        prop_assert!(ab <= ac + cb + 1e-9);
    }

    #[test]
    fn emst_matches_exhaustive_oracle(rows in point_set(7)) {
        let ds = dataset(&rows);
        let tree = build_emst(&ds);
        prop_assert_eq!(tree.edges().len(), ds.len() - 1);
        prop_assert_eq!(tree.components().len(), 1);
        prop_assert!((tree.total_weight() - brute_force_mst_weight(&ds).unwrap()).abs() < 1e-9);
        prop_assert_eq!(&build_emst(&ds), &tree);
    }

    #[test]
    fn heaviest_cut_maximizes_the_gap(rows in (1usize..=3).prop_flat_map(|d| prop::collection::vec(coords(d), 2..=8))) {
        let ds = dataset(&rows);
        let res = emstrd(&ds, 2, &CriterionConfig::default()).unwrap();
        let side: Vec<bool> = res.assignments().iter().map(|&c| c == 0).collect();
        let gap = min_cross_distance(&rows, &side);
        prop_assert!((gap - best_bipartition_gap(&rows)).abs() < 1e-9);
        prop_assert!((gap - res.removed_edges[0].edge.weight).abs() < 1e-9);
    }

    #[test]
    fn variance_equals_centroid_radius(rows in point_set(30)) {
        let pts = points(&rows);
        let v = cluster_variance(&pts).unwrap();
        prop_assert!((v - centroid_radius(&pts).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn centroid_diameter_matches_pairwise_sum(rows in point_set(20)) {
        let pts = points(&rows);
        let n = rows.len();
        let direct = if n == 1 {
            0.0
        } else {
            let mut sum = 0.0;
            for a in &rows {
                for b in &rows {
                    sum += a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>();
                }
            }
            (sum / (n * (n - 1)) as f64).sqrt()
        };
        prop_assert!((centroid_diameter(&pts).unwrap() - direct).abs() < 1e-9 * direct.max(1.0));
    }

    #[test]
    fn spread_measures_are_translation_invariant(rows in point_set(20), shift in -50.0..50.0f64) {
        let moved: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|x| x + shift).collect()).collect();
        let (p, q) = (points(&rows), points(&moved));
        prop_assert!((centroid_radius(&p).unwrap() - centroid_radius(&q).unwrap()).abs() < 1e-9);
        prop_assert!((centroid_diameter(&p).unwrap() - centroid_diameter(&q).unwrap()).abs() < 1e-9);
        prop_assert!((cluster_variance(&p).unwrap() - cluster_variance(&q).unwrap()).abs() < 1e-9);

        let k = rows.len().div_ceil(2);
        let (a, b) = (dataset(&rows), dataset(&moved));
        let ra = emstrd(&a, k, &CriterionConfig::default()).unwrap();
        let ca = cluster_compactness(&ra.clusters, &a).unwrap();
        let cb = cluster_compactness(&ra.clusters, &b).unwrap();
        prop_assert_eq!(ca.degenerate, cb.degenerate);
        prop_assert!((ca.value - cb.value).abs() < 1e-9);
    }

    #[test]
    fn csv_round_trip(rows in point_set(25)) {
        let ds = dataset(&rows);
        let back = parse_points_csv(&points_to_csv(&ds), "mem.csv").unwrap();
        prop_assert_eq!(back, ds);
    }

    #[test]
    fn divisive_invariants(rows in (1usize..=3).prop_flat_map(|d| prop::collection::vec(coords(d), 1..=14)), zahn in any::<bool>()) {
        let ds = dataset(&rows);
        let config = if zahn { CriterionConfig::zahn(2.0, 2.0, 2).unwrap() } else { CriterionConfig::default() };
        let mut previous: Option<Vec<usize>> = None;
        for k in 1..=ds.len() {
            let res = emstrd(&ds, k, &config).unwrap();
            prop_assert_eq!(res.k(), k);
            prop_assert_eq!(res.removed_edges.len(), k - 1);

            let assignment = res.assignments();
            prop_assert!(assignment.iter().all(|&c| c < k));
            let total: usize = res.clusters.iter().map(Cluster::len).sum();
            prop_assert_eq!(total, ds.len());

            // Subtree edges plus removed edges give back the original tree.
            let mut pairs: Vec<_> = res.clusters.iter().flat_map(|c| c.edges().iter().map(|e| e.endpoints())).collect();
            pairs.extend(res.removed_edges.iter().map(|r| r.edge.endpoints()));
            pairs.sort();
            let mut original: Vec<_> = res.tree.edges().iter().map(|e| e.endpoints()).collect();
            original.sort();
            prop_assert_eq!(pairs, original);

            for ((c, r), center) in res.clusters.iter().zip(&res.reports).zip(&res.centers) {
                prop_assert!(c.contains(r.center_index));
                prop_assert_eq!(center, ds.point(r.center_index));
                prop_assert_eq!(r.size, c.len());
                prop_assert!(r.radius <= r.diameter && r.diameter <= 2.0 * r.radius + 1e-12);
            }

            if !zahn {
                let min_removed = res.removed_edges.iter().map(|r| r.edge.weight).fold(f64::INFINITY, f64::min);
                let max_kept = res.clusters.iter().flat_map(|c| c.edges()).map(|e| e.weight).fold(0.0, f64::max);
                prop_assert!(res.removed_edges.is_empty() || min_removed >= max_kept);
            }
            if let Some(prev) = &previous {
                prop_assert!(refines(&assignment, prev));
            }
            previous = Some(assignment);
        }
    }

    #[test]
    fn meta_invariants(rows in point_set(20)) {
        let centers = points(&rows);
        let meta = emstucc(&centers).unwrap();
        let k = centers.len();
        let merges = meta.dendrogram.merges();
        prop_assert_eq!(merges.len(), k - 1);
        prop_assert!(merges.windows(2).all(|w| w[0].level <= w[1].level));
        prop_assert!(merges.iter().enumerate().all(|(i, m)| m.m == i + 1 && m.new_node == k + i));
        let level_sum: f64 = merges.iter().map(|m| m.level).sum();
        prop_assert!((level_sum - meta.meta_tree.total_weight()).abs() < 1e-9);

        let whole = Cluster::from_tree(&meta.meta_tree).unwrap();
        let oracle = oracle_shape(&whole, 1e-9);
        prop_assert_eq!(meta.central_cluster, oracle.center[0]);
        prop_assert!((meta.meta_radius - oracle.radius).abs() < 1e-9);

        let parsed = parse_newick(&to_newick(&meta.dendrogram));
        let (leaves, inner, heights) = newick_shape(&parsed);
        prop_assert_eq!(leaves, k);
        prop_assert_eq!(inner, k - 1);
        let top = merges.last().map_or(0.0, |m| m.level);
        prop_assert!(heights.iter().all(|h| (h - top).abs() < 1e-9));
    }
}

#[test]
fn tree_metrics_match_floyd_warshall() {
    let mut rng = rng(11);
    for round in 0..200 {
        let n = rng.random_range(1..=50);
        // Sparse, shuffled vertex labels so local/global indexing is exercised.
        let mut members: Vec<usize> = (0..n).map(|i| i * 3 + 1).collect();
        members.rotate_left(round % n);
        let integer = round % 2 == 0;
        let tree = random_tree(&mut rng, &members, integer);
        let oracle = oracle_shape(&tree, if integer { 0.0 } else { 1e-9 });

        let table = path_distance_table(&tree);
        let fw = all_pairs(&tree);
        for (i, &x) in tree.members().iter().enumerate() {
            for (j, &y) in tree.members().iter().enumerate() {
                assert!((table.get(x, y).unwrap() - fw[i][j]).abs() < 1e-9);
            }
            assert!((eccentricity(&table, x).unwrap() - oracle.ecc[i]).abs() < 1e-9);
        }
        let fast = tree_eccentricities(&tree);
        for (a, b) in fast.iter().zip(&oracle.ecc) {
            assert!((a - b).abs() < 1e-9);
        }

        let (center, radius) = center_and_radius(&table);
        let (diameter, dia_set) = diameter_and_set(&table);
        assert!((radius - oracle.radius).abs() < 1e-9);
        assert!((diameter - oracle.diameter).abs() < 1e-9);
        assert!(radius <= diameter && diameter <= 2.0 * radius + 1e-9);
        if integer {
            assert_eq!(center, oracle.center);
            assert_eq!(dia_set, oracle.diameter_set);
            let shape = tree_shape(&tree);
            assert_eq!(shape.center, oracle.center);
            assert_eq!(shape.diameter_set, oracle.diameter_set);
        } else {
            assert!(center.iter().all(|c| oracle.center.contains(c)));
            assert!(dia_set.iter().all(|c| oracle.diameter_set.contains(c)));
        }
    }
}

#[test]
fn tree_distance_is_symmetric_for_equal_sizes() {
    let mut rng = rng(5);
    for _ in 0..200 {
        let n = rng.random_range(2..=12);
        let members: Vec<usize> = (0..n).collect();
        let a = random_tree(&mut rng, &members, true);
        let b = random_tree(&mut rng, &members, true);
        let d = tree_distance(&a, &b);
        assert!(d.is_symmetric(), "{d:?}");
        assert_eq!(tree_distance(&a, &a).value(), 0);
    }
}

#[test]
fn max_diameter_shrinks_with_k() {
    let ds = uniform_points(80, 2, 0.0, 10.0, 3);
    let mut last = f64::INFINITY;
    for k in 1..=ds.len() {
        let res = emstrd(&ds, k, &CriterionConfig::default()).unwrap();
        let widest = res.reports.iter().map(|r| r.diameter).fold(0.0, f64::max);
        assert!(widest <= last, "k = {k}: {widest} > {last}");
        last = widest;
    }
    assert_eq!(last, 0.0);
}

#[test]
fn separated_blobs_split_cleanly() {
    let (ds, labels) = gaussian_blobs(&[vec![0.0, 0.0], vec![0.0, 30.0]], 40, 0.5, 9);
    let res = emstrd(&ds, 2, &CriterionConfig::default()).unwrap();
    assert_eq!(res.assignments(), labels);
    assert_eq!(res.removed_edges[0].criterion, FiredCriterion::Threshold);
}
