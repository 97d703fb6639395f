use cuttree::rational::rat;
use cuttree::WeightedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The fixed 200-graph test corpus: seeded random connected graphs with
/// 2..=10 vertices and integer weights 1..=20.
pub fn corpus() -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(20260826);
    (0..200).map(|_| random_connected(&mut rng)).collect()
}

fn random_connected(rng: &mut ChaCha8Rng) -> WeightedGraph {
    let n = rng.gen_range(2..=10usize);
    let mut edges = Vec::new();
    let mut present = vec![false; n * n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u * n + v] = true;
        edges.push((u, v, rat(rng.gen_range(1..=20))));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !present[u * n + v] && rng.gen_bool(0.3) {
                edges.push((u, v, rat(rng.gen_range(1..=20))));
            }
        }
    }
    WeightedGraph::new(n, edges).expect("spanning tree keeps it connected")
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}
