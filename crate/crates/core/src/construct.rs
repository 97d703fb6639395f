//! Constructions on optimal cuts: uncrossing, the `prec` order, minimal
//! vertices, the recursive partition into smallest optimal cuts, two
//! Gomory-Hu tree builders, and the incremental laminar-family builder.
//!
//! Every step that is justified by submodularity carries a runtime
//! optimality assertion; a failure surfaces as [`Error::Internal`] and means
//! a bug or a non-submodular oracle, never a silently wrong tree.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::cut::Cut;
use crate::engine::CutEngine;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::maxflow;
use crate::rational::{format_rational, parse_rational, Rational};

/// Spanning tree on `0..n` with one lambda per edge. The root fixes which
/// side of each edge counts as the fundamental cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GomoryHuTree {
    n: usize,
    root: usize,
    edges: Vec<(usize, usize, Rational)>,
}

impl GomoryHuTree {
    pub fn new(n: usize, root: usize, edges: Vec<(usize, usize, Rational)>) -> Self {
        GomoryHuTree { n, root, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, (u, v, _)) in self.edges.iter().enumerate() {
            adj[*u].push((*v, i));
            adj[*v].push((*u, i));
        }
        adj
    }

    /// Errors unless the edges form a spanning tree on `n` vertices.
    pub fn check_spanning(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::input(format!(
                "tree on {} vertices checked against ground set of {n}",
                self.n
            )));
        }
        if n == 0 {
            return Ok(());
        }
        if self.edges.len() != n - 1 {
            return Err(Error::input(format!(
                "{} edges cannot span {n} vertices",
                self.edges.len()
            )));
        }
        if self.edges.iter().any(|(u, v, _)| *u >= n || *v >= n) || self.root >= n {
            return Err(Error::input("tree vertex out of range"));
        }
        let adj = self.adjacency();
        let mut seen = Cut::singleton(n, 0);
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &(y, _) in &adj[x] {
                if !seen.contains(y) {
                    seen.insert(y);
                    queue.push(y);
                }
            }
        }
        if !seen.is_full() {
            return Err(Error::input("tree edges do not connect all vertices"));
        }
        Ok(())
    }

    /// Vertex set of the component of `T - e` not containing the root.
    pub fn fundamental_cut(&self, edge_idx: usize) -> Cut {
        let adj = self.adjacency();
        let mut seen = Cut::singleton(self.n, self.root);
        let mut queue = vec![self.root];
        while let Some(x) = queue.pop() {
            for &(y, i) in &adj[x] {
                if i != edge_idx && !seen.contains(y) {
                    seen.insert(y);
                    queue.push(y);
                }
            }
        }
        seen.complement()
    }

    /// Minimum lambda along the unique tree path between `u` and `v`.
    pub fn path_min_lambda(&self, u: usize, v: usize) -> Result<Rational> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::input(format!("bad tree path pair ({u},{v})")));
        }
        let adj = self.adjacency();
        let mut best: Vec<Option<Rational>> = vec![None; self.n];
        let mut queue = VecDeque::from([u]);
        let mut visited = Cut::singleton(self.n, u);
        while let Some(x) = queue.pop_front() {
            for &(y, i) in &adj[x] {
                if !visited.contains(y) {
                    visited.insert(y);
                    let lam = &self.edges[i].2;
                    best[y] = Some(match &best[x] {
                        Some(b) if b < lam => b.clone(),
                        _ => lam.clone(),
                    });
                    queue.push_back(y);
                }
            }
        }
        best[v]
            .clone()
            .ok_or_else(|| Error::input(format!("no tree path between {u} and {v}")))
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut degree = vec![0usize; self.n];
        for (u, v, _) in &self.edges {
            degree[*u] += 1;
            degree[*v] += 1;
        }
        (0..self.n).filter(|&x| degree[x] == 1).collect()
    }

    /// Lines `u v lambda`, rationals as `p/q` or bare integers.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (u, v, lam) in &self.edges {
            let _ = writeln!(out, "{u} {v} {}", format_rational(lam));
        }
        out
    }

    pub fn from_text(text: &str, n: usize, root: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v, lam) = match (it.next(), it.next(), it.next(), it.next()) {
                (Some(u), Some(v), Some(l), None) => (u, v, l),
                _ => return Err(Error::input(format!("bad tree line `{line}`"))),
            };
            let u = u
                .parse()
                .map_err(|_| Error::input(format!("bad vertex `{u}`")))?;
            let v = v
                .parse()
                .map_err(|_| Error::input(format!("bad vertex `{v}`")))?;
            edges.push((u, v, parse_rational(lam)?));
        }
        Ok(GomoryHuTree { n, root, edges })
    }
}

/// A laminar family of optimal cuts, each with the witness pair it
/// separates optimally.
#[derive(Clone, Debug)]
pub struct LaminarCut {
    pub cut: Cut,
    pub witness: (usize, usize),
    pub value: Rational,
}

#[derive(Clone, Debug)]
pub struct LaminarFamily {
    n: usize,
    cuts: Vec<LaminarCut>,
}

impl LaminarFamily {
    pub fn from_parts(n: usize, parts: Vec<(Cut, (usize, usize), Rational)>) -> Self {
        LaminarFamily {
            n,
            cuts: parts
                .into_iter()
                .map(|(cut, witness, value)| LaminarCut {
                    cut,
                    witness,
                    value,
                })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[LaminarCut] {
        &self.cuts
    }

    /// Lines `value s t {sorted member list}`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cuts {
            let _ = writeln!(
                out,
                "{} {} {} {}",
                format_rational(&c.value),
                c.witness.0,
                c.witness.1,
                c.cut
            );
        }
        out
    }
}

/// Replaces the optimal `u-v` cut `y` by an optimal `u-v` cut that does not
/// cross `x`, by the four-case analysis on how the witnesses of `x` sit
/// relative to `y`.
pub fn uncross(
    engine: &dyn CutEngine,
    x: &Cut,
    x_witness: (usize, usize),
    y: &Cut,
    y_witness: (usize, usize),
) -> Result<Cut> {
    let (s, t) = x_witness;
    let (u, v) = y_witness;
    if !x.contains(s) || x.contains(t) {
        return Err(Error::input(format!("x is not an {s}-{t} cut")));
    }
    if !y.contains(u) || y.contains(v) {
        return Err(Error::input(format!("y is not a {u}-{v} cut")));
    }
    let z = match (x.contains(u), x.contains(v)) {
        // x itself is a u-v cut
        (true, false) => {
            if !y.contains(t) {
                y.intersection(x)
            } else {
                y.union(x)
            }
        }
        // x is a v-u cut
        (false, true) => {
            if !y.contains(s) {
                y.difference(x)
            } else {
                y.union(&x.complement())
            }
        }
        // u and v both inside x
        (true, true) => {
            if !y.contains(t) {
                y.intersection(x)
            } else {
                y.union(&x.complement())
            }
        }
        // u and v both outside x
        (false, false) => {
            if !y.contains(s) {
                y.difference(x)
            } else {
                y.union(x)
            }
        }
    };
    let lambda = engine.lambda(u, v)?;
    if !z.contains(u) || z.contains(v) || engine.cut_cost(&z)? != lambda {
        return Err(Error::internal(format!(
            "uncrossing produced a non-optimal {u}-{v} cut {z} (expected value {})",
            format_rational(&lambda)
        )));
    }
    if z.crosses(x) {
        return Err(Error::internal(format!(
            "uncrossing output {z} still crosses {x}"
        )));
    }
    Ok(z)
}

/// The strict order on an optimal cut `x`: `u` precedes `v` when the
/// smallest optimal `u-v` cut escapes `x`.
pub fn prec(engine: &dyn CutEngine, x: &Cut, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::input(format!("prec needs distinct vertices, got {u}")));
    }
    if !x.contains(u) || !x.contains(v) {
        return Err(Error::input(format!(
            "prec({u},{v}) requires both vertices inside {x}"
        )));
    }
    Ok(!engine.smallest_cut(u, v)?.is_subset_of(x))
}

/// A `prec`-minimal element of `x`, lowest index among candidates.
///
/// For the full vertex set the order is trivial and the configured root is
/// returned. When `x` is an optimal `s-t` cut and `witness_t` is given, the
/// returned vertex `s'` is checked to satisfy `lambda(s', t) = value(x)`,
/// i.e. `x` is an optimal `s'-t` cut as well.
pub fn minimal_vertex(
    engine: &dyn CutEngine,
    x: &Cut,
    root: usize,
    witness_t: Option<usize>,
) -> Result<usize> {
    if x.is_empty() {
        return Err(Error::input("minimal_vertex of an empty set"));
    }
    if x.is_full() {
        return Ok(root);
    }
    let members = x.indices();
    for &s in &members {
        let mut minimal = true;
        for &u in &members {
            if u != s && !engine.smallest_cut(u, s)?.is_subset_of(x) {
                minimal = false;
                break;
            }
        }
        if minimal {
            if let Some(t) = witness_t {
                if engine.lambda(s, t)? != engine.cut_cost(x)? {
                    return Err(Error::internal(format!(
                        "minimal element {s} of {x} does not realize the cut value \
                         against witness {t}"
                    )));
                }
            }
            return Ok(s);
        }
    }
    Err(Error::internal(format!(
        "no prec-minimal element in {x}; oracle is not submodular"
    )))
}

/// Maximal elements of `{X_{u,s} : u in X \ {s}}`. When `s` is
/// `prec`-minimal in `x` these are pairwise disjoint and cover `x \ {s}`.
pub fn partition_family(engine: &dyn CutEngine, s: usize, x: &Cut) -> Result<Vec<Cut>> {
    if !x.contains(s) {
        return Err(Error::input(format!("pivot {s} is not in {x}")));
    }
    let mut rest = x.clone();
    rest.remove(s);
    if rest.is_empty() {
        return Ok(Vec::new());
    }
    let mut cuts: Vec<Cut> = Vec::new();
    for u in rest.iter() {
        let c = engine.smallest_cut(u, s)?;
        if !c.is_subset_of(&rest) {
            return Err(Error::input(format!(
                "smallest optimal {u}-{s} cut {c} escapes {x}: {s} is not prec-minimal"
            )));
        }
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    for i in 0..cuts.len() {
        for j in (i + 1)..cuts.len() {
            if !cuts[i].laminar_with(&cuts[j]) {
                return Err(Error::internal(format!(
                    "family of smallest cuts toward {s} is not laminar: {} vs {}",
                    cuts[i], cuts[j]
                )));
            }
        }
    }
    let mut maximal: Vec<Cut> = cuts
        .iter()
        .filter(|c| !cuts.iter().any(|d| *c != d && c.is_subset_of(d)))
        .cloned()
        .collect();
    maximal.sort_by_key(|c| c.iter().next());
    let mut union = Cut::empty(x.len());
    for (i, c) in maximal.iter().enumerate() {
        for d in &maximal[(i + 1)..] {
            if !c.is_disjoint_from(d) {
                return Err(Error::internal(format!(
                    "maximal cuts toward {s} overlap: {c} vs {d}"
                )));
            }
        }
        union = union.union(c);
    }
    if union != rest {
        return Err(Error::internal(format!(
            "maximal cuts toward {s} cover {union}, expected {rest}"
        )));
    }
    Ok(maximal)
}

/// One node of the recursive construction: pivot `s`, the cut it was chosen
/// in, and the partition classes recursed into.
#[derive(Clone, Debug)]
pub struct TraceNode {
    pub pivot: usize,
    pub set: Cut,
    pub children: Vec<Cut>,
}

/// Recursive Gomory-Hu tree construction via minimal vertices and the
/// partition into maximal smallest cuts. Depth-first with an explicit stack;
/// nested chains make the recursion depth linear in `n`.
pub fn build_tree_paper(engine: &dyn CutEngine, root: usize) -> Result<GomoryHuTree> {
    Ok(build_tree_paper_with_trace(engine, root)?.0)
}

pub fn build_tree_paper_with_trace(
    engine: &dyn CutEngine,
    root: usize,
) -> Result<(GomoryHuTree, Vec<TraceNode>)> {
    let n = engine.ground_size();
    if root >= n {
        return Err(Error::input(format!("root {root} out of range for {n} vertices")));
    }
    let mut edges = Vec::new();
    let mut trace = Vec::new();
    let mut stack = vec![(root, Cut::full(n))];
    while let Some((s, x)) = stack.pop() {
        let children = partition_family(engine, s, &x)?;
        for child in &children {
            let pivot = minimal_vertex(engine, child, root, Some(s))?;
            edges.push((s, pivot, engine.cut_cost(child)?));
            stack.push((pivot, child.clone()));
        }
        trace.push(TraceNode {
            pivot: s,
            set: x,
            children,
        });
    }
    if n > 0 && edges.len() != n - 1 {
        return Err(Error::internal(format!(
            "construction produced {} edges on {n} vertices",
            edges.len()
        )));
    }
    Ok((GomoryHuTree::new(n, root, edges), trace))
}

/// Classical contraction-based Gomory-Hu construction, kept as an
/// independent implementation for cross-checking. The two builders need not
/// agree edge-for-edge, only on all tree-path minima.
pub fn build_tree_classical(g: &WeightedGraph, root: usize) -> Result<GomoryHuTree> {
    let n = g.n();
    if n > 0 && root >= n {
        return Err(Error::input(format!("root {root} out of range for {n} vertices")));
    }
    if n == 0 {
        return Ok(GomoryHuTree::new(0, 0, Vec::new()));
    }
    // supernode tree: nodes are vertex sets, edges carry flow values
    let mut nodes: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut tree_edges: Vec<(usize, usize, Rational)> = Vec::new();
    while let Some(i) = nodes.iter().position(|s| s.len() > 1) {
        let m = nodes.len();
        let mut nadj = vec![Vec::new(); m];
        for (a, b, _) in &tree_edges {
            nadj[*a].push(*b);
            nadj[*b].push(*a);
        }
        // hanging components of the supernode tree after removing node i
        let mut comp = vec![usize::MAX; m];
        let mut ncomp = 0;
        for start in 0..m {
            if start == i || comp[start] != usize::MAX {
                continue;
            }
            comp[start] = ncomp;
            let mut queue = vec![start];
            while let Some(a) = queue.pop() {
                for &b in &nadj[a] {
                    if b != i && comp[b] == usize::MAX {
                        comp[b] = ncomp;
                        queue.push(b);
                    }
                }
            }
            ncomp += 1;
        }
        // contract each hanging component to a single vertex
        let k = nodes[i].len();
        let mut vmap = vec![usize::MAX; n];
        for (local, &v) in nodes[i].iter().enumerate() {
            vmap[v] = local;
        }
        for (node, members) in nodes.iter().enumerate() {
            if node != i {
                for &v in members {
                    vmap[v] = k + comp[node];
                }
            }
        }
        let contracted_edges = g
            .edges()
            .iter()
            .filter(|(a, b, _)| vmap[*a] != vmap[*b])
            .map(|(a, b, w)| (vmap[*a], vmap[*b], w.clone()))
            .collect();
        let contracted = WeightedGraph::new_allow_disconnected(k + ncomp, contracted_edges)?;
        let flow = maxflow::max_flow(&contracted, 0, 1)?;
        let side = flow.source_reach;
        // split node i along the cut
        let (s1, s2): (Vec<usize>, Vec<usize>) = nodes[i]
            .iter()
            .partition(|&&v| side.contains(vmap[v]));
        let j = nodes.len();
        nodes[i] = s1;
        nodes.push(s2);
        for (a, b, _) in tree_edges.iter_mut() {
            let other = if *a == i {
                *b
            } else if *b == i {
                *a
            } else {
                continue;
            };
            if !side.contains(k + comp[other]) {
                if *a == i {
                    *a = j;
                } else {
                    *b = j;
                }
            }
        }
        tree_edges.push((i, j, flow.value));
    }
    let vertex_of: Vec<usize> = nodes.iter().map(|s| s[0]).collect();
    let edges = tree_edges
        .into_iter()
        .map(|(a, b, w)| (vertex_of[a], vertex_of[b], w))
        .collect();
    Ok(GomoryHuTree::new(n, root, edges))
}

/// Grows a laminar family that separates every requested pair optimally.
///
/// Pairs are processed in the given order (all pairs lexicographically by
/// default); a pair already separated optimally is skipped. For a new pair
/// the smallest optimal cut for one of its two orientations is made laminar
/// with the family by absorbing crossing members through uncrossing unions,
/// then inserted. Members are never removed.
pub fn build_laminar_family(
    engine: &dyn CutEngine,
    pairs: Option<&[(usize, usize)]>,
) -> Result<LaminarFamily> {
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
    let mut family: Vec<LaminarCut> = Vec::new();
    for &(u, v) in pairs {
        if u == v || u >= n || v >= n {
            return Err(Error::input(format!("bad pair ({u},{v})")));
        }
        let lambda = engine.lambda(u, v)?;
        let separated = family.iter().any(|m| {
            m.cut.contains(u) != m.cut.contains(v) && m.value == lambda
        });
        if separated {
            continue;
        }

        // pick the orientation whose smallest cut is laminar with every
        // member on the excluded vertex's side; one of the two always is
        let mut oriented: Option<(Cut, (usize, usize))> = None;
        for (a, b) in [(u, v), (v, u)] {
            let base = engine.smallest_cut(a, b)?;
            let compatible = family
                .iter()
                .filter(|m| m.cut.contains(b))
                .all(|m| base.laminar_with(&m.cut));
            if compatible {
                oriented = Some((base, (a, b)));
                break;
            }
        }
        let (base, (a, b)) = oriented.ok_or_else(|| {
            Error::internal(format!(
                "neither orientation of pair ({u},{v}) yields a compatible smallest cut"
            ))
        })?;

        // absorb crossing a-side members, then crossing outside members
        let mut grown = base;
        for m in family.iter() {
            if m.cut.contains(a) && !m.cut.contains(b) && !grown.laminar_with(&m.cut) {
                grown = grown.union(&m.cut);
            }
        }
        if engine.cut_cost(&grown)? != lambda {
            return Err(Error::internal(format!(
                "union with crossing {a}-side members broke optimality for ({a},{b})"
            )));
        }
        for m in family.iter() {
            if !m.cut.contains(a) && !m.cut.contains(b) && !grown.laminar_with(&m.cut) {
                grown = grown.union(&m.cut);
            }
        }
        if engine.cut_cost(&grown)? != lambda || !grown.contains(a) || grown.contains(b) {
            return Err(Error::internal(format!(
                "absorbing crossing members broke optimality for ({a},{b})"
            )));
        }
        for m in family.iter() {
            if !grown.laminar_with(&m.cut) {
                return Err(Error::internal(format!(
                    "inserted cut {grown} still crosses member {}",
                    m.cut
                )));
            }
        }
        family.push(LaminarCut {
            cut: grown,
            witness: (a, b),
            value: lambda,
        });
    }
    Ok(LaminarFamily { n, cuts: family })
}
