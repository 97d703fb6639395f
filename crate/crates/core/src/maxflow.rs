//! Exact max-flow/min-cut on undirected weighted graphs.
//!
//! Each undirected edge becomes a pair of opposite arcs, each carrying the
//! full edge weight as capacity. Augmentation is Edmonds-Karp (shortest
//! augmenting paths by BFS in vertex-index order), which terminates for any
//! capacities and keeps the arithmetic exact.
//!
//! After a max flow, the set of vertices reachable from the source in the
//! residual network is the inclusion-smallest optimal `u-v` cut; the
//! complement of the set that reaches the sink is the largest. Both sets are
//! canonical, independent of the augmenting order.

use num::Zero;

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::Rational;

/// Lambda plus the two canonical optimal cuts for one vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPairResult {
    pub lambda: Rational,
    /// Smallest optimal `u-v` cut: intersection of all optimal `u-v` cuts.
    pub smallest: Cut,
    /// Largest optimal `u-v` cut: union of all optimal `u-v` cuts.
    pub largest: Cut,
}

pub struct MaxFlowResult {
    pub value: Rational,
    /// Vertices reachable from the source in the final residual network.
    pub source_reach: Cut,
    /// Vertices that can reach the sink in the final residual network.
    pub sink_coreach: Cut,
}

struct FlowNet {
    n: usize,
    // paired arcs: arc 2i and 2i+1 are opposite; residual capacity in place
    head: Vec<usize>,
    residual: Vec<Rational>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(g: &WeightedGraph) -> Self {
        let n = g.n();
        let mut head = Vec::with_capacity(g.edges().len() * 2);
        let mut residual = Vec::with_capacity(g.edges().len() * 2);
        let mut adj = vec![Vec::new(); n];
        for (u, v, w) in g.edges() {
            adj[*u].push(head.len());
            head.push(*v);
            residual.push(w.clone());
            adj[*v].push(head.len());
            head.push(*u);
            residual.push(w.clone());
        }
        // deterministic BFS: scan neighbors in increasing vertex order
        for list in &mut adj {
            list.sort_by_key(|&a| head[a]);
        }
        FlowNet {
            n,
            head,
            residual,
            adj,
        }
    }

    /// BFS over positive-residual arcs; returns per-vertex incoming arc.
    fn bfs(&self, s: usize, t: usize) -> Option<Vec<Option<usize>>> {
        let mut parent_arc: Vec<Option<usize>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if !seen[y] && !self.residual[a].is_zero() {
                    seen[y] = true;
                    parent_arc[y] = Some(a);
                    if y == t {
                        return Some(parent_arc);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    fn arc_tail(&self, a: usize) -> usize {
        self.head[a ^ 1]
    }

    fn reachable_from(&self, s: usize) -> Cut {
        let mut seen = Cut::singleton(self.n, s);
        let mut queue = vec![s];
        while let Some(x) = queue.pop() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if !seen.contains(y) && !self.residual[a].is_zero() {
                    seen.insert(y);
                    queue.push(y);
                }
            }
        }
        seen
    }

    fn coreachable_to(&self, t: usize) -> Cut {
        let mut seen = Cut::singleton(self.n, t);
        let mut queue = vec![t];
        while let Some(y) = queue.pop() {
            for &a in &self.adj[y] {
                // arc a^1 runs head[a] -> y; traversable when it has residual
                let x = self.head[a];
                if !seen.contains(x) && !self.residual[a ^ 1].is_zero() {
                    seen.insert(x);
                    queue.push(x);
                }
            }
        }
        seen
    }
}

/// Exact max flow between `u` and `v`; the value equals `lambda(u, v)`.
pub fn max_flow(g: &WeightedGraph, u: usize, v: usize) -> Result<MaxFlowResult> {
    if u == v {
        return Err(Error::input(format!("max flow endpoints coincide: {u}")));
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::input("max flow endpoint out of range"));
    }
    let mut net = FlowNet::new(g);
    let mut value = Rational::zero();
    while let Some(parent) = net.bfs(u, v) {
        // bottleneck along the path
        let mut bottleneck: Option<Rational> = None;
        let mut x = v;
        while x != u {
            let a = parent[x].expect("path arc");
            let r = &net.residual[a];
            bottleneck = Some(match bottleneck {
                Some(b) if b <= *r => b,
                _ => r.clone(),
            });
            x = net.arc_tail(a);
        }
        let delta = bottleneck.expect("nonempty path");
        let mut x = v;
        while x != u {
            let a = parent[x].expect("path arc");
            net.residual[a] -= &delta;
            let back = &mut net.residual[a ^ 1];
            *back += &delta;
            x = net.arc_tail(a);
        }
        value += delta;
    }
    Ok(MaxFlowResult {
        value,
        source_reach: net.reachable_from(u),
        sink_coreach: net.coreachable_to(v),
    })
}

/// Minimum cut value between `u` and `v`.
pub fn lambda(g: &WeightedGraph, u: usize, v: usize) -> Result<Rational> {
    Ok(max_flow(g, u, v)?.value)
}

/// The inclusion-smallest optimal `u-v` cut `X_{u,v}`.
pub fn smallest_optimal_cut(g: &WeightedGraph, u: usize, v: usize) -> Result<Cut> {
    Ok(max_flow(g, u, v)?.source_reach)
}

/// The inclusion-largest optimal `u-v` cut `Y_{u,v}`, the complement of the
/// smallest optimal `v-u` cut.
pub fn largest_optimal_cut(g: &WeightedGraph, u: usize, v: usize) -> Result<Cut> {
    Ok(max_flow(g, u, v)?.sink_coreach.complement())
}

/// Lambda with both canonical cuts from a single flow computation.
pub fn cut_pair(g: &WeightedGraph, u: usize, v: usize) -> Result<CutPairResult> {
    let r = max_flow(g, u, v)?;
    Ok(CutPairResult {
        lambda: r.value,
        smallest: r.source_reach,
        largest: r.sink_coreach.complement(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::generate_truncation;
    use crate::rational::rat;

    fn path_2_3() -> WeightedGraph {
        WeightedGraph::new(3, vec![(0, 1, rat(2)), (1, 2, rat(3))]).unwrap()
    }

    #[test]
    fn single_edge_flow() {
        let g = WeightedGraph::new(2, vec![(0, 1, rat(5))]).unwrap();
        let r = cut_pair(&g, 0, 1).unwrap();
        assert_eq!(r.lambda, rat(5));
        assert_eq!(r.smallest, Cut::singleton(2, 0));
        assert_eq!(r.largest, Cut::singleton(2, 0));
    }

    #[test]
    fn path_bottleneck() {
        let g = path_2_3();
        assert_eq!(lambda(&g, 0, 2).unwrap(), rat(2));
        // {0} is the unique optimal cut, so both canonical cuts equal it
        assert_eq!(smallest_optimal_cut(&g, 0, 2).unwrap(), Cut::singleton(3, 0));
        assert_eq!(largest_optimal_cut(&g, 0, 2).unwrap(), Cut::singleton(3, 0));
        // equal-weight path: now {0} and {0,1} are both optimal
        let g = WeightedGraph::new(3, vec![(0, 1, rat(2)), (1, 2, rat(2))]).unwrap();
        assert_eq!(smallest_optimal_cut(&g, 0, 2).unwrap(), Cut::singleton(3, 0));
        assert_eq!(
            largest_optimal_cut(&g, 0, 2).unwrap(),
            Cut::from_indices(3, &[0, 1])
        );
    }

    #[test]
    fn triangle_lambda() {
        let g = WeightedGraph::new(
            3,
            vec![(0, 1, rat(1)), (1, 2, rat(1)), (0, 2, rat(1))],
        )
        .unwrap();
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    assert_eq!(lambda(&g, u, v).unwrap(), rat(2));
                }
            }
        }
    }

    #[test]
    fn star_leaf_pair() {
        let g = WeightedGraph::new(
            4,
            vec![(0, 1, rat(1)), (0, 2, rat(1)), (0, 3, rat(1))],
        )
        .unwrap();
        assert_eq!(lambda(&g, 1, 2).unwrap(), rat(1));
    }

    #[test]
    fn truncation_values() {
        let g = generate_truncation(5).unwrap();
        assert_eq!(lambda(&g, 0, 2).unwrap(), rat(3));
        // V_1 is the unique optimal v_1-v_3 cut
        assert_eq!(
            smallest_optimal_cut(&g, 1, 3).unwrap(),
            Cut::from_indices(g.n(), &[0, 1])
        );
        assert_eq!(
            largest_optimal_cut(&g, 1, 3).unwrap(),
            Cut::from_indices(g.n(), &[0, 1])
        );
    }

    #[test]
    fn rejects_equal_endpoints() {
        assert!(max_flow(&path_2_3(), 1, 1).is_err());
        assert!(max_flow(&path_2_3(), 0, 9).is_err());
    }

    #[test]
    fn fractional_capacities_stay_exact() {
        use crate::rational::rat_frac;
        let g = WeightedGraph::new(
            3,
            vec![
                (0, 1, rat_frac(1, 3)),
                (1, 2, rat_frac(1, 2)),
                (0, 2, rat_frac(1, 7)),
            ],
        )
        .unwrap();
        assert_eq!(lambda(&g, 0, 2).unwrap(), rat_frac(1, 3) + rat_frac(1, 7));
    }
}
