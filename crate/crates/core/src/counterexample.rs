//! Finite truncations of the infinite counterexample graph: a one-way
//! infinite path v_0, v_1, ... with growing edge weights, plus a hub vertex
//! v_inf joined to every path vertex by a unit edge. On the infinite graph
//! the smallest optimal v_n - v_m cuts form an infinite strictly nested
//! chain V_0 ⊂ V_1 ⊂ ..., which rules out a Gomory-Hu tree; every finite
//! truncation still has one, and `analyze_chain` shows how the nested chain
//! grows with the truncation while each fixed pair's behaviour eventually
//! stabilizes.

use std::fmt;

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{format_rational, rat, Rational};
use crate::verify::{BruteForce, HARD_ENUM_CAP};

/// Weight of the path edge e_n between v_n and v_{n+1}:
/// c(e_0) = 2 and c(e_n) = c(e_{n-1}) + n + 1, i.e. (n^2 + 3n + 4) / 2.
pub fn edge_weight(n: usize) -> Rational {
    let n = n as i64;
    rat((n * n + 3 * n + 4) / 2)
}

/// Truncation at depth `n_trunc >= 1`: vertices v_0..v_N indexed 0..=N and
/// the hub v_inf at index N+1, with path edges e_0..e_{N-1} and a unit star
/// edge from every path vertex to the hub.
pub fn generate_truncation(n_trunc: usize) -> Result<WeightedGraph> {
    if n_trunc == 0 {
        return Err(Error::input("truncation depth must be at least 1"));
    }
    let hub = n_trunc + 1;
    let mut edges = Vec::with_capacity(2 * n_trunc + 1);
    for i in 0..n_trunc {
        edges.push((i, i + 1, edge_weight(i)));
    }
    for i in 0..=n_trunc {
        edges.push((i, hub, rat(1)));
    }
    let mut labels: Vec<String> = (0..=n_trunc).map(|i| format!("v{i}")).collect();
    labels.push("vinf".to_string());
    WeightedGraph::new(hub + 1, edges)?.with_labels(labels)
}

/// Behaviour of one pair (v_n, v_m), n < m, in a truncation.
#[derive(Clone, Debug)]
pub struct PairAnalysis {
    pub n: usize,
    pub m: usize,
    pub lambda: Rational,
    pub minimizers: Vec<Cut>,
    /// true when V_n = {v_0..v_n} is the unique optimal cut for the pair
    pub unique_vn: bool,
}

#[derive(Clone, Debug)]
pub struct ChainAnalysis {
    pub trunc: usize,
    pub pairs: Vec<PairAnalysis>,
    /// pairs (n, m) whose unique optimal cut is V_n in this truncation
    pub surviving: Vec<(usize, usize)>,
    /// length of the maximal chain V_0 ⊂ V_1 ⊂ ... realized by consecutive
    /// prefixes that are unique optimal cuts for some pair
    pub chain_len: usize,
}

impl fmt::Display for ChainAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "truncation N = {}", self.trunc)?;
        for p in &self.pairs {
            writeln!(
                f,
                "v{} v{}: lambda = {}, {} optimal cut(s), unique V_{}: {}",
                p.n,
                p.m,
                format_rational(&p.lambda),
                p.minimizers.len(),
                p.n,
                if p.unique_vn { "yes" } else { "no" }
            )?;
        }
        writeln!(
            f,
            "nested chain of unique prefix cuts: length {} (V_0 .. V_{})",
            self.chain_len,
            self.chain_len.saturating_sub(1)
        )?;
        writeln!(
            f,
            "the truncation is finite, so a Gomory-Hu tree exists; only the \
             infinite graph has none"
        )
    }
}

/// Brute-force analysis of all path pairs (v_n, v_m), n < m <= N, in the
/// truncation at depth `n_trunc` (at most 16, i.e. 18 vertices).
pub fn analyze_chain(n_trunc: usize) -> Result<ChainAnalysis> {
    if n_trunc > 16 {
        return Err(Error::input(format!(
            "truncation depth {n_trunc} exceeds the brute-force limit of 16"
        )));
    }
    let g = generate_truncation(n_trunc)?;
    let brute = BruteForce::from_graph(&g, HARD_ENUM_CAP)?;
    let nv = g.n();
    let mut pairs = Vec::new();
    let mut surviving: Vec<(usize, usize)> = Vec::new();
    for n in 0..n_trunc {
        for m in (n + 1)..=n_trunc {
            let (value, minimizers) = brute.optimal_cuts(n, m)?;
            let lambda = value.into_finite()?;
            let vn = Cut::from_indices(nv, &(0..=n).collect::<Vec<_>>());
            let unique_vn = minimizers.len() == 1 && minimizers[0] == vn;
            if unique_vn {
                surviving.push((n, m));
            }
            pairs.push(PairAnalysis {
                n,
                m,
                lambda,
                minimizers,
                unique_vn,
            });
        }
    }
    let chain_len = (0..n_trunc)
        .take_while(|&n| surviving.iter().any(|&(a, _)| a == n))
        .count();
    Ok(ChainAnalysis {
        trunc: n_trunc,
        pairs,
        surviving,
        chain_len,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn weight_sequence() {
        let want = [2i64, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(edge_weight(n), rat(*w));
        }
    }

    #[test]
    fn truncation_shape() {
        assert!(generate_truncation(0).is_err());
        let g = generate_truncation(3).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().len(), 7);
        assert_eq!(g.label(4), "vinf");
        // prefix cut values: d(V_n) = (n+1) star edges + e_n
        assert_eq!(g.cut_value(&Cut::from_indices(5, &[0])).unwrap(), rat(3));
        assert_eq!(g.cut_value(&Cut::from_indices(5, &[0, 1])).unwrap(), rat(6));
        assert_eq!(
            g.cut_value(&Cut::from_indices(5, &[0, 1, 2])).unwrap(),
            rat(10)
        );
    }

    #[test]
    fn prefix_cut_formula() {
        let n_trunc = 6;
        let g = generate_truncation(n_trunc).unwrap();
        for n in 0..n_trunc {
            let vn = Cut::from_indices(g.n(), &(0..=n).collect::<Vec<_>>());
            assert_eq!(
                g.cut_value(&vn).unwrap(),
                rat(n as i64 + 1) + edge_weight(n)
            );
        }
    }

    #[test]
    fn chain_analysis_at_depth_six() {
        let a = analyze_chain(6).unwrap();
        // adjacent pair (v0, v1): unique optimal cut V_0 with value 3
        let p01 = a.pairs.iter().find(|p| p.n == 0 && p.m == 1).unwrap();
        assert_eq!(p01.lambda, rat(3));
        assert!(p01.unique_vn);
        assert_eq!(p01.minimizers.len(), 1);
        // (v1, v3): unique optimal cut V_1 with value 6
        let p13 = a.pairs.iter().find(|p| p.n == 1 && p.m == 3).unwrap();
        assert_eq!(p13.lambda, rat(6));
        assert!(p13.unique_vn);
        // the realized nested chain is V_0 ⊂ V_1 ⊂ V_2 at this depth
        assert_eq!(a.chain_len, 3);
        assert!(a.surviving.contains(&(2, 3)));
    }

    #[test]
    fn chain_grows_with_truncation() {
        assert_eq!(analyze_chain(4).unwrap().chain_len, 2);
        assert_eq!(analyze_chain(8).unwrap().chain_len, 4);
    }

    #[test]
    fn depth_limit() {
        assert!(analyze_chain(17).is_err());
    }
}
