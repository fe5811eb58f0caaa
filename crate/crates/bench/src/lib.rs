//! Shared inputs for the criterion benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoswitch::random::{random_forest, random_forest_walk};
use twoswitch::Graph;

/// Seeded pairs of forests on `n` vertices with equal degree sequences.
pub fn forest_pairs(n: usize, count: usize, seed: u64) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let f = random_forest(n, 0.9, &mut rng);
            let g = random_forest_walk(&f, 4 * n, &mut rng);
            (f, g)
        })
        .collect()
}

/// Seeded G(n, p) graphs.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::new(n, edges).expect("labels are in range")
        })
        .collect()
}
