//! Fixtures shared by the criterion benchmarks.

use metaclust_core::synthetic::gaussian_blobs;
use metaclust_core::Dataset;

/// `blobs` 2-D Gaussian blobs laid out on a ring of radius 50, unit spread.
pub fn ring_of_blobs(blobs: usize, per_blob: usize, seed: u64) -> Dataset {
    let centers: Vec<Vec<f64>> = (0..blobs)
        .map(|i| {
            let t = i as f64 / blobs as f64 * std::f64::consts::TAU;
            vec![50.0 * t.cos(), 50.0 * t.sin()]
        })
        .collect();
    gaussian_blobs(&centers, per_blob, 1.0, seed).0
}
