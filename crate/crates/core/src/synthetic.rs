//! Seeded synthetic point sets for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::model::Dataset;

/// Isotropic Gaussian blobs, `per_blob` points around each center with
/// standard deviation `spread`. Returns the dataset and each point's blob.
pub fn gaussian_blobs(centers: &[Vec<f64>], per_blob: usize, spread: f64, seed: u64) -> (Dataset, Vec<usize>) {
    assert!(!centers.is_empty() && per_blob > 0, "need at least one point");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, spread).expect("spread must be finite and non-negative");
    let mut rows = Vec::with_capacity(centers.len() * per_blob);
    let mut labels = Vec::with_capacity(rows.capacity());
    for (label, center) in centers.iter().enumerate() {
        for _ in 0..per_blob {
            rows.push(center.iter().map(|c| c + noise.sample(&mut rng)).collect());
            labels.push(label);
        }
    }
    (Dataset::from_rows(rows).expect("finite coordinates"), labels)
}

/// `n` points drawn uniformly from the cube `[lo, hi)^dimension`.
pub fn uniform_points(n: usize, dimension: usize, lo: f64, hi: f64, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..n).map(|_| (0..dimension).map(|_| rng.random_range(lo..hi)).collect());
    Dataset::from_rows(rows.collect::<Vec<Vec<f64>>>()).expect("finite coordinates")
}
