//! Brute-force oracles and validity checks.
//!
//! Every construction in this crate is accepted only if this module agrees:
//! lambdas and canonical cuts are recomputed by exhaustive enumeration, trees
//! are checked edge by edge (and optionally all-pairs), and laminar families
//! are checked pairwise. Reports are stable-ordered lists of findings.

use std::fmt;

use num::Zero;

use crate::construct::{GomoryHuTree, LaminarFamily};
use crate::cut::Cut;
use crate::engine::CutEngine;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::oracle::{SetFunctionOracle, Value};
use crate::rational::{format_rational, Rational};

/// Default exhaustive-enumeration cap; raising it is an explicit opt-in.
pub const DEFAULT_ENUM_CAP: usize = 12;
/// Desk-scale ceiling: 2^20 evaluations. Never exceeded.
pub const HARD_ENUM_CAP: usize = 20;

pub fn check_enum_cap(n: usize, cap: usize) -> Result<()> {
    let effective = cap.min(HARD_ENUM_CAP);
    if n > effective {
        return Err(Error::EnumerationCap { n, cap: effective });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    fn push(&mut self, check: &str, detail: String) {
        self.findings.push(Finding {
            check: check.to_string(),
            detail,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            writeln!(f, "ok")
        } else {
            for finding in &self.findings {
                writeln!(f, "{}: {}", finding.check, finding.detail)?;
            }
            Ok(())
        }
    }
}

/// Table of `b(X)` for every subset of a small ground set.
///
/// For graphs the table is filled in Gray-code order so that consecutive
/// subsets differ in one vertex and the cut value is updated incrementally.
pub struct BruteForce {
    n: usize,
    table: Vec<Value>,
}

impl BruteForce {
    pub fn from_graph(g: &WeightedGraph, cap: usize) -> Result<Self> {
        let n = g.n();
        check_enum_cap(n, cap)?;
        let mut adj: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
        for (u, v, w) in g.edges() {
            adj[*u].push((*v, w.clone()));
            adj[*v].push((*u, w.clone()));
        }
        let size = 1usize << n;
        let mut table = vec![Value::zero(); size];
        let mut current = Rational::zero();
        let mut members = vec![false; n];
        for m in 1..size as u64 {
            let bit = m.trailing_zeros() as usize;
            let entering = !members[bit];
            for (y, w) in &adj[bit] {
                let crossing_now = members[*y] == entering;
                if crossing_now {
                    current -= w;
                } else {
                    current += w;
                }
            }
            members[bit] = entering;
            let gray = (m ^ (m >> 1)) as usize;
            table[gray] = Value::Finite(current.clone());
        }
        Ok(BruteForce { n, table })
    }

    pub fn from_oracle(b: &dyn SetFunctionOracle, cap: usize) -> Result<Self> {
        let n = b.ground_size();
        check_enum_cap(n, cap)?;
        let table = (0u64..(1u64 << n))
            .map(|m| b.evaluate(&Cut::from_mask(n, m)))
            .collect();
        Ok(BruteForce { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value_of(&self, x: &Cut) -> &Value {
        &self.table[x.to_mask() as usize]
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::input(format!("bad vertex pair ({u},{v})")));
        }
        Ok(())
    }

    /// Exact minimum over all `u-v` cuts plus the complete minimizer list.
    pub fn optimal_cuts(&self, u: usize, v: usize) -> Result<(Value, Vec<Cut>)> {
        self.check_pair(u, v)?;
        let mut best: Option<&Value> = None;
        let mut mins: Vec<u64> = Vec::new();
        for mask in 0u64..(1u64 << self.n) {
            if mask >> u & 1 == 0 || mask >> v & 1 == 1 {
                continue;
            }
            let val = &self.table[mask as usize];
            match best {
                Some(cur) if cur < val => {}
                Some(cur) if cur == val => mins.push(mask),
                _ => {
                    best = Some(val);
                    mins = vec![mask];
                }
            }
        }
        Ok((
            best.expect("pair has at least one cut").clone(),
            mins.into_iter()
                .map(|m| Cut::from_mask(self.n, m))
                .collect(),
        ))
    }

    pub fn lambda(&self, u: usize, v: usize) -> Result<Value> {
        Ok(self.optimal_cuts(u, v)?.0)
    }

    /// Intersection of all minimizers.
    pub fn smallest(&self, u: usize, v: usize) -> Result<Cut> {
        let (_, mins) = self.optimal_cuts(u, v)?;
        let mut acc = mins[0].clone();
        for m in &mins[1..] {
            acc = acc.intersection(m);
        }
        Ok(acc)
    }

    /// Union of all minimizers.
    pub fn largest(&self, u: usize, v: usize) -> Result<Cut> {
        let (_, mins) = self.optimal_cuts(u, v)?;
        let mut acc = mins[0].clone();
        for m in &mins[1..] {
            acc = acc.union(m);
        }
        Ok(acc)
    }
}

/// One-shot convenience wrapper over [`BruteForce`].
pub fn brute_force_optimal_cuts(
    b: &dyn SetFunctionOracle,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<(Value, Vec<Cut>)> {
    BruteForce::from_oracle(b, cap)?.optimal_cuts(u, v)
}

/// Checks a Gomory-Hu tree. Edge mode verifies, per tree edge `uv`, that the
/// fundamental cut's value equals `lambda(u, v)` and the stored edge lambda —
/// sufficient for full validity. All-pairs mode additionally compares every
/// pair's tree-path minimum against an independent lambda query.
pub fn verify_gh_tree(
    engine: &dyn CutEngine,
    tree: &GomoryHuTree,
    all_pairs: bool,
) -> Result<Report> {
    let n = engine.ground_size();
    tree.check_spanning(n)?;
    let mut report = Report::default();
    for (i, (u, v, lam)) in tree.edges().iter().enumerate() {
        let x = tree.fundamental_cut(i);
        let cost = engine.cut_cost(&x)?;
        let lambda = engine.lambda(*u, *v)?;
        if cost != *lam || lambda != *lam {
            report.push(
                "tree-edge",
                format!(
                    "edge {u}-{v}: stored lambda {}, fundamental cut {x} has value {}, \
                     lambda({u},{v}) = {}",
                    format_rational(lam),
                    format_rational(&cost),
                    format_rational(&lambda)
                ),
            );
        }
    }
    if all_pairs {
        for u in 0..n {
            for v in (u + 1)..n {
                let path_min = tree.path_min_lambda(u, v)?;
                let lambda = engine.lambda(u, v)?;
                if path_min != lambda {
                    report.push(
                        "all-pairs",
                        format!(
                            "pair ({u},{v}): tree-path minimum {}, lambda {}",
                            format_rational(&path_min),
                            format_rational(&lambda)
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Pairwise laminarity check: any two members disjoint or nested.
pub fn verify_laminar(family: &LaminarFamily) -> Report {
    let mut report = Report::default();
    let cuts = family.cuts();
    for i in 0..cuts.len() {
        for j in (i + 1)..cuts.len() {
            if !cuts[i].cut.laminar_with(&cuts[j].cut) {
                report.push(
                    "laminar",
                    format!("members {} and {} cross", cuts[i].cut, cuts[j].cut),
                );
            }
        }
    }
    report
}

/// Every requested pair must be separated by some member whose recomputed
/// value equals `lambda` for the pair.
pub fn verify_separation(
    engine: &dyn CutEngine,
    family: &LaminarFamily,
    pairs: Option<&[(usize, usize)]>,
) -> Result<Report> {
    let n = engine.ground_size();
    let all: Vec<(usize, usize)>;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            all = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            &all
        }
    };
    let mut report = Report::default();
    for &(u, v) in pairs {
        let lambda = engine.lambda(u, v)?;
        let mut separated = false;
        for member in family.cuts() {
            if member.cut.contains(u) != member.cut.contains(v)
                && engine.cut_cost(&member.cut)? == lambda
            {
                separated = true;
                break;
            }
        }
        if !separated {
            report.push(
                "separation",
                format!(
                    "pair ({u},{v}) with lambda {} is not optimally separated",
                    format_rational(&lambda)
                ),
            );
        }
    }
    Ok(report)
}

/// Sorted distinct lambda values over all pairs; at most `n - 1` of them.
pub fn lambda_spectrum(engine: &dyn CutEngine) -> Result<Vec<Rational>> {
    let n = engine.ground_size();
    let mut values: Vec<Rational> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            values.push(engine.lambda(u, v)?);
        }
    }
    values.sort();
    values.dedup();
    if n >= 1 && values.len() > n - 1 {
        return Err(Error::internal(format!(
            "lambda spectrum has {} distinct values on {n} vertices",
            values.len()
        )));
    }
    Ok(values)
}
