//! Unified interface for answering lambda and smallest-cut queries.
//!
//! The constructions in [`crate::construct`] are stated for an abstract set
//! function and specialize to graphs; this trait lets them run against
//! either. Graph queries go to the max-flow engine, abstract-oracle queries
//! to exhaustive enumeration.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::maxflow;
use crate::oracle::SetFunctionOracle;
use crate::rational::Rational;
use crate::verify::BruteForce;

pub trait CutEngine {
    fn ground_size(&self) -> usize;

    /// Minimum cut value between two distinct vertices.
    fn lambda(&self, u: usize, v: usize) -> Result<Rational>;

    /// The inclusion-smallest optimal `u-v` cut `X_{u,v}`.
    fn smallest_cut(&self, u: usize, v: usize) -> Result<Cut>;

    /// Value of an arbitrary cut.
    fn cut_cost(&self, x: &Cut) -> Result<Rational>;

    /// The inclusion-largest optimal `u-v` cut, by complement duality.
    fn largest_cut(&self, u: usize, v: usize) -> Result<Cut> {
        Ok(self.smallest_cut(v, u)?.complement())
    }
}

/// Max-flow-backed engine for graphs, with a query cache: tree construction
/// asks for the same `X_{u,v}` at many recursion nodes.
pub struct MaxFlowEngine<'a> {
    g: &'a WeightedGraph,
    cache: Mutex<HashMap<(usize, usize), (Rational, Cut)>>,
}

impl<'a> MaxFlowEngine<'a> {
    pub fn new(g: &'a WeightedGraph) -> Self {
        MaxFlowEngine {
            g,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &WeightedGraph {
        self.g
    }

    fn query(&self, u: usize, v: usize) -> Result<(Rational, Cut)> {
        if let Some(hit) = self.cache.lock().unwrap().get(&(u, v)) {
            return Ok(hit.clone());
        }
        let r = maxflow::max_flow(self.g, u, v)?;
        let entry = (r.value, r.source_reach);
        self.cache
            .lock()
            .unwrap()
            .insert((u, v), entry.clone());
        Ok(entry)
    }
}

impl CutEngine for MaxFlowEngine<'_> {
    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn lambda(&self, u: usize, v: usize) -> Result<Rational> {
        Ok(self.query(u, v)?.0)
    }

    fn smallest_cut(&self, u: usize, v: usize) -> Result<Cut> {
        Ok(self.query(u, v)?.1)
    }

    fn cut_cost(&self, x: &Cut) -> Result<Rational> {
        self.g.cut_value(x)
    }
}

/// Enumeration-backed engine for abstract oracles. The whole value table is
/// materialized up front, so construction is subject to the enumeration cap.
pub struct ExhaustiveEngine {
    brute: BruteForce,
}

impl ExhaustiveEngine {
    pub fn new(b: &dyn SetFunctionOracle, cap: usize) -> Result<Self> {
        Ok(ExhaustiveEngine {
            brute: BruteForce::from_oracle(b, cap)?,
        })
    }

    pub fn from_graph(g: &WeightedGraph, cap: usize) -> Result<Self> {
        Ok(ExhaustiveEngine {
            brute: BruteForce::from_graph(g, cap)?,
        })
    }

    pub fn brute(&self) -> &BruteForce {
        &self.brute
    }
}

impl CutEngine for ExhaustiveEngine {
    fn ground_size(&self) -> usize {
        self.brute.n()
    }

    fn lambda(&self, u: usize, v: usize) -> Result<Rational> {
        self.brute.lambda(u, v)?.into_finite()
    }

    fn smallest_cut(&self, u: usize, v: usize) -> Result<Cut> {
        let (value, _) = self.brute.optimal_cuts(u, v)?;
        let small = self.brute.smallest(u, v)?;
        if *self.brute.value_of(&small) != value {
            return Err(Error::PropertyViolation(format!(
                "intersection of optimal {u}-{v} cuts is not optimal; oracle is not submodular"
            )));
        }
        Ok(small)
    }

    fn cut_cost(&self, x: &Cut) -> Result<Rational> {
        self.brute.value_of(x).clone().into_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::graph_cut_oracle;
    use crate::rational::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_connected_graph(
        rng: &mut ChaCha8Rng,
        n_range: std::ops::RangeInclusive<usize>,
    ) -> WeightedGraph {
        let n = rng.gen_range(n_range);
        let mut edges = Vec::new();
        for i in 1..n {
            let p = rng.gen_range(0..i);
            edges.push((p, i, rat(rng.gen_range(1..=20))));
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.3) {
                    edges.push((u, v, rat(rng.gen_range(1..=20))));
                }
            }
        }
        WeightedGraph::new(n, edges).unwrap()
    }

    #[test]
    fn engines_agree_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let g = random_connected_graph(&mut rng, 2..=8);
            let flow = MaxFlowEngine::new(&g);
            let exhaustive = ExhaustiveEngine::new(&graph_cut_oracle(&g), 12).unwrap();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u == v {
                        continue;
                    }
                    assert_eq!(flow.lambda(u, v).unwrap(), exhaustive.lambda(u, v).unwrap());
                    assert_eq!(
                        flow.smallest_cut(u, v).unwrap(),
                        exhaustive.smallest_cut(u, v).unwrap()
                    );
                    assert_eq!(
                        flow.largest_cut(u, v).unwrap(),
                        exhaustive.largest_cut(u, v).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn largest_is_complement_of_reverse_smallest() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let g = random_connected_graph(&mut rng, 2..=9);
            let engine = MaxFlowEngine::new(&g);
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u != v {
                        assert_eq!(
                            crate::maxflow::largest_optimal_cut(&g, u, v).unwrap(),
                            engine.smallest_cut(v, u).unwrap().complement()
                        );
                    }
                }
            }
        }
    }
}
