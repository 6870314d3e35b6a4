//! Seeded random graph generation for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::DenseGraph;
use crate::weight::Weight;

/// A random dense graph: every candidate edge (ordered pair when directed,
/// unordered otherwise) appears with probability `density` and weight
/// uniform in `[1, 100]`. The same seed always yields the same graph.
pub fn random_graph(
    n: usize,
    directed: bool,
    density: f64,
    seed: u64,
) -> Result<DenseGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall);
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(GraphError::BadDensity(density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = DenseGraph::new(n, directed)?;
    if directed {
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                if rng.gen_bool(density) {
                    g.set_weight(i, j, Weight::new(rng.gen_range(1.0..=100.0))?)?;
                }
            }
        }
    } else {
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(density) {
                    g.set_weight(i, j, Weight::new(rng.gen_range(1.0..=100.0))?)?;
                }
            }
        }
    }
    Ok(g)
}
