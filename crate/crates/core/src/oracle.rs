//! Abstract symmetric submodular set functions over a finite ground set,
//! with exhaustive lambda machinery and property checkers.
//!
//! An oracle evaluates subsets to nonnegative rationals or an explicit
//! infinity. The checkers test the hypotheses under which the constructions
//! in [`crate::construct`] are guaranteed to work: zero set, symmetry,
//! submodularity, posimodularity and finite separability. The
//! monotone-continuity hypotheses are about infinite nested sequences and
//! hold vacuously on finite ground sets; the report says so instead of
//! silently passing.

use std::fmt;
use std::ops::Add;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{format_rational, Rational};
use crate::verify::check_enum_cap;

/// Oracle value: a nonnegative rational or an explicit infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Value {
    Finite(Rational),
    Infinite,
}

impl Value {
    pub fn zero() -> Self {
        Value::Finite(Rational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Value::Finite(r) => Some(r),
            Value::Infinite => None,
        }
    }

    pub fn into_finite(self) -> Result<Rational> {
        match self {
            Value::Finite(r) => Ok(r),
            Value::Infinite => Err(Error::PropertyViolation(
                "infinite value where a finite one is required (oracle is not finitely separable)"
                    .into(),
            )),
        }
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Finite(r)
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinite,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(r) => write!(f, "{}", format_rational(r)),
            Value::Infinite => write!(f, "inf"),
        }
    }
}

/// Deterministic evaluator `X -> b(X)` over ground set `0..ground_size()`.
pub trait SetFunctionOracle {
    fn ground_size(&self) -> usize;
    fn evaluate(&self, x: &Cut) -> Value;
}

/// The cut function of a weighted graph; never infinite.
pub struct GraphCutOracle<'a> {
    g: &'a WeightedGraph,
}

pub fn graph_cut_oracle(g: &WeightedGraph) -> GraphCutOracle<'_> {
    GraphCutOracle { g }
}

impl SetFunctionOracle for GraphCutOracle<'_> {
    fn ground_size(&self) -> usize {
        self.g.n()
    }

    fn evaluate(&self, x: &Cut) -> Value {
        Value::Finite(self.g.cut_value(x).expect("cut length matches graph"))
    }
}

/// `b(X) = |X| * |V \ X|`: the cut function of the unit-weight complete
/// graph, a standard symmetric submodular example.
pub struct PairsOracle {
    pub n: usize,
}

impl SetFunctionOracle for PairsOracle {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn evaluate(&self, x: &Cut) -> Value {
        let k = x.count();
        Value::Finite(crate::rational::rat((k * (self.n - k)) as i64))
    }
}

/// Explicit value table over all `2^n` subsets, indexed by bitmask.
pub struct TableOracle {
    n: usize,
    values: Vec<Value>,
}

impl TableOracle {
    pub fn new(n: usize, values: Vec<Value>) -> Result<Self> {
        if values.len() != 1usize << n {
            return Err(Error::input(format!(
                "table oracle over {n} elements needs {} values, got {}",
                1usize << n,
                values.len()
            )));
        }
        Ok(TableOracle { n, values })
    }

    /// One `subset-bitmask value` pair per line; `inf` is the explicit
    /// infinity. All `2^n` masks must appear exactly once.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (mask, value) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::input(format!("bad table line `{line}`")))?;
            let mask: usize = mask
                .parse()
                .map_err(|_| Error::input(format!("bad subset bitmask `{mask}`")))?;
            let value = match value.trim() {
                "inf" | "INF" | "infinity" => Value::Infinite,
                v => Value::Finite(crate::rational::parse_rational(v)?),
            };
            entries.push((mask, value));
        }
        let len = entries.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::input(format!(
                "table must list all 2^n subsets; got {len} lines"
            )));
        }
        let n = len.trailing_zeros() as usize;
        let mut values = vec![None; len];
        for (mask, value) in entries {
            if mask >= len {
                return Err(Error::input(format!("bitmask {mask} out of range")));
            }
            if values[mask].replace(value).is_some() {
                return Err(Error::input(format!("duplicate bitmask {mask}")));
            }
        }
        TableOracle::new(n, values.into_iter().map(|v| v.unwrap()).collect())
    }
}

impl SetFunctionOracle for TableOracle {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn evaluate(&self, x: &Cut) -> Value {
        self.values[x.to_mask() as usize].clone()
    }
}

/// Exact minimum of `b` over `u-v` cuts, by exhaustive enumeration.
pub fn lambda_b(b: &dyn SetFunctionOracle, u: usize, v: usize, cap: usize) -> Result<Value> {
    Ok(minimizers_b(b, u, v, cap)?.0)
}

/// Exhaustive minimum plus the complete list of minimizing `u-v` cuts,
/// in increasing bitmask order.
pub fn minimizers_b(
    b: &dyn SetFunctionOracle,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<(Value, Vec<Cut>)> {
    let n = b.ground_size();
    check_enum_cap(n, cap)?;
    if u == v || u >= n || v >= n {
        return Err(Error::input(format!("bad vertex pair ({u},{v})")));
    }
    let mut best: Option<Value> = None;
    let mut mins: Vec<Cut> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask >> u & 1 == 0 || mask >> v & 1 == 1 {
            continue;
        }
        let x = Cut::from_mask(n, mask);
        let val = b.evaluate(&x);
        match &best {
            Some(cur) if *cur < val => {}
            Some(cur) if *cur == val => mins.push(x),
            _ => {
                best = Some(val);
                mins = vec![x];
            }
        }
    }
    Ok((best.expect("at least one u-v cut exists"), mins))
}

/// Intersection of all minimizers, asserted to be a minimizer itself.
pub fn smallest_optimal_cut_b(
    b: &dyn SetFunctionOracle,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<Cut> {
    let (value, mins) = minimizers_b(b, u, v, cap)?;
    if !value.is_finite() {
        return Err(Error::PropertyViolation(format!(
            "lambda_b({u},{v}) is infinite; oracle is not finitely separable"
        )));
    }
    let mut inter = mins[0].clone();
    for m in &mins[1..] {
        inter = inter.intersection(m);
    }
    if b.evaluate(&inter) != value {
        return Err(Error::PropertyViolation(format!(
            "intersection of optimal {u}-{v} cuts is not optimal; oracle is not submodular"
        )));
    }
    Ok(inter)
}

/// Union of all minimizers, asserted to be a minimizer itself.
pub fn largest_optimal_cut_b(
    b: &dyn SetFunctionOracle,
    u: usize,
    v: usize,
    cap: usize,
) -> Result<Cut> {
    let (value, mins) = minimizers_b(b, u, v, cap)?;
    if !value.is_finite() {
        return Err(Error::PropertyViolation(format!(
            "lambda_b({u},{v}) is infinite; oracle is not finitely separable"
        )));
    }
    let mut uni = mins[0].clone();
    for m in &mins[1..] {
        uni = uni.union(m);
    }
    if b.evaluate(&uni) != value {
        return Err(Error::PropertyViolation(format!(
            "union of optimal {u}-{v} cuts is not optimal; oracle is not submodular"
        )));
    }
    Ok(uni)
}

#[derive(Clone, Debug)]
pub enum PropertyStatus {
    Pass,
    Fail { witness: Vec<Cut>, detail: String },
    Vacuous { note: String },
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub entries: Vec<(String, PropertyStatus)>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        !self
            .entries
            .iter()
            .any(|(_, s)| matches!(s, PropertyStatus::Fail { .. }))
    }

    pub fn status(&self, name: &str) -> Option<&PropertyStatus> {
        self.entries
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, s)| s)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, status) in &self.entries {
            match status {
                PropertyStatus::Pass => writeln!(f, "{name}: pass")?,
                PropertyStatus::Fail { witness, detail } => {
                    let w: Vec<String> = witness.iter().map(|c| c.to_string()).collect();
                    writeln!(f, "{name}: FAIL ({detail}; witness {})", w.join(", "))?
                }
                PropertyStatus::Vacuous { note } => writeln!(f, "{name}: vacuous ({note})")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub enum CheckMode {
    /// All subsets and subset pairs; requires `ground_size <= cap`.
    Exhaustive,
    /// Fixed-seed random subsets and pairs.
    Sampled { samples: usize, seed: u64 },
}

fn random_cut(rng: &mut ChaCha8Rng, n: usize) -> Cut {
    let mut c = Cut::empty(n);
    for i in 0..n {
        if rng.gen_bool(0.5) {
            c.insert(i);
        }
    }
    c
}

/// Checks properties 0 (zero set), 1 (symmetry), 2 (submodularity),
/// posimodularity and 4 (finite separability); monotone-continuity is
/// reported as vacuous on finite ground sets. Failures are report content,
/// not errors.
pub fn check_properties(
    b: &dyn SetFunctionOracle,
    mode: CheckMode,
    cap: usize,
) -> Result<PropertyReport> {
    let n = b.ground_size();
    let subsets: Vec<Cut> = match mode {
        CheckMode::Exhaustive => {
            check_enum_cap(n, cap)?;
            (0u64..(1u64 << n)).map(|m| Cut::from_mask(n, m)).collect()
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v = vec![Cut::empty(n), Cut::full(n)];
            v.extend((0..samples).map(|_| random_cut(&mut rng, n)));
            v
        }
    };
    let values: Vec<Value> = subsets.iter().map(|x| b.evaluate(x)).collect();

    let mut entries = Vec::new();

    // 0: b(X) = 0 iff X in {empty, V}
    let mut zero_status = PropertyStatus::Pass;
    for (x, val) in subsets.iter().zip(&values) {
        let trivial = x.is_empty() || x.is_full();
        let is_zero = *val == Value::zero();
        if trivial != is_zero {
            zero_status = PropertyStatus::Fail {
                witness: vec![x.clone()],
                detail: format!("b(X) = {val}"),
            };
            break;
        }
    }
    entries.push(("0: zero set".to_string(), zero_status));

    // 1: symmetry
    let mut sym_status = PropertyStatus::Pass;
    for x in &subsets {
        if b.evaluate(x) != b.evaluate(&x.complement()) {
            sym_status = PropertyStatus::Fail {
                witness: vec![x.clone()],
                detail: "b(X) != b(V \\ X)".to_string(),
            };
            break;
        }
    }
    entries.push(("1: symmetry".to_string(), sym_status));

    // 2: submodularity, and posimodularity
    let pair_list: Vec<(usize, usize)> = match mode {
        CheckMode::Exhaustive => {
            let m = subsets.len();
            (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect()
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
            let m = subsets.len();
            (0..samples)
                .map(|_| (rng.gen_range(0..m), rng.gen_range(0..m)))
                .collect()
        }
    };
    let mut sub_status = PropertyStatus::Pass;
    let mut posi_status = PropertyStatus::Pass;
    for &(i, j) in &pair_list {
        let (x, y) = (&subsets[i], &subsets[j]);
        let lhs = values[i].clone() + values[j].clone();
        if matches!(sub_status, PropertyStatus::Pass) {
            let rhs = b.evaluate(&x.union(y)) + b.evaluate(&x.intersection(y));
            if lhs < rhs {
                sub_status = PropertyStatus::Fail {
                    witness: vec![x.clone(), y.clone()],
                    detail: "b(X)+b(Y) < b(X∪Y)+b(X∩Y)".to_string(),
                };
            }
        }
        if matches!(posi_status, PropertyStatus::Pass) {
            let rhs = b.evaluate(&x.difference(y)) + b.evaluate(&y.difference(x));
            if lhs < rhs {
                posi_status = PropertyStatus::Fail {
                    witness: vec![x.clone(), y.clone()],
                    detail: "b(X)+b(Y) < b(X∖Y)+b(Y∖X)".to_string(),
                };
            }
        }
    }
    entries.push(("2: submodularity".to_string(), sub_status));
    entries.push(("posimodularity".to_string(), posi_status));

    entries.push((
        "3/3': monotone continuity".to_string(),
        PropertyStatus::Vacuous {
            note: "nested sequences over a finite ground set stabilize, so the hypothesis \
                   holds vacuously and cannot be tested here"
                .to_string(),
        },
    ));

    // 4: finite separability
    let mut sep_status = PropertyStatus::Pass;
    'pairs: for u in 0..n {
        for v in (u + 1)..n {
            let found_finite = match mode {
                CheckMode::Exhaustive => subsets
                    .iter()
                    .zip(&values)
                    .any(|(x, val)| x.contains(u) && !x.contains(v) && val.is_finite()),
                CheckMode::Sampled { .. } => {
                    subsets
                        .iter()
                        .any(|x| x.contains(u) && !x.contains(v) && b.evaluate(x).is_finite())
                        || b.evaluate(&Cut::singleton(n, u)).is_finite()
                }
            };
            if !found_finite {
                sep_status = PropertyStatus::Fail {
                    witness: vec![Cut::singleton(n, u), Cut::singleton(n, v)],
                    detail: format!("no finite-valued {u}-{v} cut found"),
                };
                break 'pairs;
            }
        }
    }
    entries.push(("4: finite separability".to_string(), sep_status));

    Ok(PropertyReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::generate_truncation;
    use crate::rational::rat;

    const CAP: usize = 12;

    #[test]
    fn graph_oracle_matches_cut_value() {
        let g = WeightedGraph::new(2, vec![(0, 1, rat(5))]).unwrap();
        let b = graph_cut_oracle(&g);
        assert_eq!(b.evaluate(&Cut::singleton(2, 0)), Value::Finite(rat(5)));
        assert_eq!(b.evaluate(&Cut::empty(2)), Value::zero());
    }

    #[test]
    fn truncation_oracle_value() {
        let g = generate_truncation(3).unwrap();
        let b = graph_cut_oracle(&g);
        assert_eq!(
            b.evaluate(&Cut::from_indices(g.n(), &[0, 1])),
            Value::Finite(rat(6))
        );
    }

    #[test]
    fn graph_oracles_pass_all_properties() {
        let g = generate_truncation(3).unwrap();
        let report =
            check_properties(&graph_cut_oracle(&g), CheckMode::Exhaustive, CAP).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn pairs_oracle_passes() {
        let report =
            check_properties(&PairsOracle { n: 4 }, CheckMode::Exhaustive, CAP).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn parity_oracle_fails_zero_set() {
        // b(X) = |X ∩ {0,1}| mod 2 on n=3: symmetric, but b({0,1}) = 0
        struct Parity;
        impl SetFunctionOracle for Parity {
            fn ground_size(&self) -> usize {
                3
            }
            fn evaluate(&self, x: &Cut) -> Value {
                let k = [0, 1].iter().filter(|&&i| x.contains(i)).count();
                Value::Finite(rat((k % 2) as i64))
            }
        }
        let report = check_properties(&Parity, CheckMode::Exhaustive, CAP).unwrap();
        assert!(!report.passed());
        assert!(matches!(
            report.status("0: zero set"),
            Some(PropertyStatus::Fail { .. })
        ));
    }

    #[test]
    fn non_submodular_table_is_caught_with_witness() {
        // symmetric, zero only on trivial sets, but 1 + 1 < 0 + 3
        let text = "0 0\n1 1\n2 1\n3 3\n4 3\n5 1\n6 1\n7 0\n";
        let t = TableOracle::from_text(text).unwrap();
        let report = check_properties(&t, CheckMode::Exhaustive, CAP).unwrap();
        match report.status("2: submodularity") {
            Some(PropertyStatus::Fail { witness, .. }) => {
                assert_eq!(witness.len(), 2);
                let lhs = t.evaluate(&witness[0]) + t.evaluate(&witness[1]);
                let rhs = t.evaluate(&witness[0].union(&witness[1]))
                    + t.evaluate(&witness[0].intersection(&witness[1]));
                assert!(lhs < rhs);
            }
            other => panic!("expected submodularity failure, got {other:?}"),
        }
    }

    #[test]
    fn infinite_oracle_fails_separability() {
        // b = inf off the trivial sets
        let text = "0 0\n1 inf\n2 inf\n3 inf\n4 inf\n5 inf\n6 inf\n7 0\n";
        let t = TableOracle::from_text(text).unwrap();
        assert_eq!(lambda_b(&t, 0, 1, CAP).unwrap(), Value::Infinite);
        let report = check_properties(&t, CheckMode::Exhaustive, CAP).unwrap();
        assert!(matches!(
            report.status("4: finite separability"),
            Some(PropertyStatus::Fail { .. })
        ));
        assert!(smallest_optimal_cut_b(&t, 0, 1, CAP).is_err());
    }

    #[test]
    fn pairs_oracle_smallest_is_singleton() {
        let b = PairsOracle { n: 4 };
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(
                        smallest_optimal_cut_b(&b, u, v, CAP).unwrap(),
                        Cut::singleton(4, u)
                    );
                }
            }
        }
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let g = generate_truncation(4).unwrap();
        let b = graph_cut_oracle(&g);
        let mode = CheckMode::Sampled {
            samples: 64,
            seed: 7,
        };
        let r1 = check_properties(&b, mode, CAP).unwrap();
        let r2 = check_properties(&b, mode, CAP).unwrap();
        assert_eq!(format!("{r1}"), format!("{r2}"));
        assert!(r1.passed());
    }

    #[test]
    fn table_parse_errors() {
        assert!(TableOracle::from_text("").is_err());
        assert!(TableOracle::from_text("0 1\n1 2\n2 3\n").is_err()); // not 2^n
        assert!(TableOracle::from_text("0 1\n0 2\n").is_err()); // duplicate
        assert!(TableOracle::from_text("0 1\n5 2\n").is_err()); // out of range
    }

    #[test]
    fn enumeration_cap_enforced() {
        let b = PairsOracle { n: 15 };
        assert!(matches!(
            lambda_b(&b, 0, 1, 12),
            Err(Error::EnumerationCap { .. })
        ));
        assert!(lambda_b(&b, 0, 1, 16).is_ok());
        // hard ceiling at 20 regardless of requested cap
        let big = PairsOracle { n: 21 };
        assert!(matches!(
            lambda_b(&big, 0, 1, 25),
            Err(Error::EnumerationCap { .. })
        ));
    }
}
