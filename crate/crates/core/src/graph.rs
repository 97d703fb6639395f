//! Finite simple weighted graphs with strictly positive exact-rational
//! weights, and cut values over them.
//!
//! Ingestion normalizes input: loops and zero-weight edges are dropped
//! (they have no effect on cut values), parallel edges are merged by weight
//! sum, and negative weights are rejected. Construction requires a connected
//! graph by default; tooling that builds trees per component uses
//! [`WeightedGraph::new_allow_disconnected`] and [`WeightedGraph::components`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{Signed, Zero};

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, Rational)>,
    labels: Option<Vec<String>>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let g = Self::new_allow_disconnected(n, edges)?;
        if !g.is_connected() {
            return Err(Error::input(
                "graph is disconnected (use per-component handling to split it)",
            ));
        }
        Ok(g)
    }

    pub fn new_allow_disconnected(
        n: usize,
        edges: Vec<(usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut merged: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if w.is_negative() {
                return Err(Error::input(format!(
                    "negative weight {} on edge ({u},{v})",
                    format_rational(&w)
                )));
            }
            if u == v || w.is_zero() {
                continue;
            }
            let key = (u.min(v), u.max(v));
            *merged.entry(key).or_insert_with(Rational::zero) += w;
        }
        Ok(WeightedGraph {
            n,
            edges: merged.into_iter().map(|((u, v), w)| (u, v, w)).collect(),
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::input("label table length mismatch"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).count() == self.n
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            adj[u].push(i);
            adj[v].push(i);
        }
        adj
    }

    fn component_of(&self, start: usize) -> Cut {
        let adj = self.adjacency();
        let mut seen = Cut::singleton(self.n, start);
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for &i in &adj[x] {
                let (u, v, _) = &self.edges[i];
                let y = if *u == x { *v } else { *u };
                if !seen.contains(y) {
                    seen.insert(y);
                    queue.push(y);
                }
            }
        }
        seen
    }

    /// Connected components with their induced subgraphs. The mapping lists
    /// original vertex indices in the order of the subgraph's indices.
    pub fn components(&self) -> Vec<(Vec<usize>, WeightedGraph)> {
        let mut remaining = Cut::full(self.n);
        let mut out = Vec::new();
        while let Some(start) = remaining.indices().first().copied() {
            let comp = self.component_of(start);
            let verts = comp.indices();
            let index_of: BTreeMap<usize, usize> =
                verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let sub_edges = self
                .edges
                .iter()
                .filter(|(u, v, _)| comp.contains(*u) && comp.contains(*v))
                .map(|(u, v, w)| (index_of[u], index_of[v], w.clone()))
                .collect();
            let sub = WeightedGraph::new_allow_disconnected(verts.len(), sub_edges)
                .expect("induced subgraph is well-formed");
            remaining = remaining.difference(&comp);
            out.push((verts, sub));
        }
        out
    }

    fn check_len(&self, x: &Cut) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::input(format!(
                "cut over {} vertices applied to graph with {}",
                x.len(),
                self.n
            )));
        }
        Ok(())
    }

    /// Total weight of the edges with exactly one end in `x`.
    pub fn cut_value(&self, x: &Cut) -> Result<Rational> {
        self.check_len(x)?;
        let mut total = Rational::zero();
        for (u, v, w) in &self.edges {
            if x.contains(*u) != x.contains(*v) {
                total += w;
            }
        }
        Ok(total)
    }

    /// The edges crossing `x`, in the graph's canonical edge order.
    pub fn out_edges(&self, x: &Cut) -> Result<Vec<(usize, usize, Rational)>> {
        self.check_len(x)?;
        Ok(self
            .edges
            .iter()
            .filter(|(u, v, _)| x.contains(*u) != x.contains(*v))
            .cloned()
            .collect())
    }

    /// Parses the text format: first non-comment line `n m`, then `m` lines
    /// `u v w` with 0-based indices; `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::input("empty graph file"))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::input("bad header: expected `n m`"))?;
        let m: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::input("bad header: expected `n m`"))?;
        if parts.next().is_some() {
            return Err(Error::input("bad header: expected exactly `n m`"));
        }
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::input("fewer edge lines than header declares"))?;
            let mut it = line.split_whitespace();
            let (u, v, w) = match (it.next(), it.next(), it.next(), it.next()) {
                (Some(u), Some(v), Some(w), None) => (u, v, w),
                _ => return Err(Error::input(format!("bad edge line `{line}`"))),
            };
            let u: usize = u
                .parse()
                .map_err(|_| Error::input(format!("bad vertex `{u}`")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::input(format!("bad vertex `{v}`")))?;
            edges.push((u, v, parse_rational(w)?));
        }
        if lines.next().is_some() {
            return Err(Error::input("more edge lines than header declares"));
        }
        Self::new_allow_disconnected(n, edges)
    }

    /// Canonical text form; rationals round-trip bit-exact.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for (u, v, w) in &self.edges {
            let _ = writeln!(out, "{u} {v} {}", format_rational(w));
        }
        out
    }
}
