//! Random labeled forests and forest-preserving switch walks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::switch::nontrivial_switches;

/// A random labeled forest on `[n]`: a random recursive tree on a shuffled
/// labeling, with each edge kept with probability `keep`.
pub fn random_forest<R: Rng + ?Sized>(n: usize, keep: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        if rng.gen_bool(keep) {
            edges.push((parent.min(order[i]), parent.max(order[i])));
        }
    }
    Graph::new(n, edges).expect("random forest edges are valid")
}

/// Applies `steps` uniformly chosen forest-preserving 2-switches (t- or
/// f-switches). Stops early when none exists.
pub fn random_forest_walk<R: Rng + ?Sized>(f: &Graph, steps: usize, rng: &mut R) -> Graph {
    let mut g = f.clone();
    for _ in 0..steps {
        let moves: Vec<_> = nontrivial_switches(&g)
            .into_iter()
            .filter(|a| a.classify(&g).preserves_forest())
            .collect();
        match moves.choose(rng) {
            Some(a) => g = a.apply(&g),
            None => break,
        }
    }
    g
}
