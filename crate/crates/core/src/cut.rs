//! Vertex subsets as fixed-length bit vectors.
//!
//! A `Cut` is just a subset of the vertex set `0..n`; it is a `u-v` cut when
//! it contains `u` and not `v`. Unused high bits of the last word are kept
//! zero so that equality and ordering are structural.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    len: usize,
    words: Vec<u64>,
}

impl Cut {
    pub fn empty(len: usize) -> Self {
        Cut {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut c = Cut::empty(len);
        for i in 0..len {
            c.insert(i);
        }
        c
    }

    pub fn singleton(len: usize, v: usize) -> Self {
        let mut c = Cut::empty(len);
        c.insert(v);
        c
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut c = Cut::empty(len);
        for &i in indices {
            c.insert(i);
        }
        c
    }

    /// Subset from the low `len` bits of a mask; only for ground sets that
    /// fit in one word, which is where exhaustive enumeration lives.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD);
        let mut c = Cut::empty(len);
        if len > 0 {
            c.words[0] = mask & Self::tail_mask(len);
        }
        c
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= WORD);
        self.words.first().copied().unwrap_or(0)
    }

    fn tail_mask(len: usize) -> u64 {
        if len.is_multiple_of(WORD) {
            !0
        } else {
            (1u64 << (len % WORD)) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.len);
        self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.len);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.len);
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn toggle(&mut self, v: usize) {
        assert!(v < self.len);
        self.words[v / WORD] ^= 1 << (v % WORD);
    }

    fn zip(&self, other: &Cut, f: impl Fn(u64, u64) -> u64) -> Cut {
        assert_eq!(self.len, other.len, "cut length mismatch");
        Cut {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Cut) -> Cut {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Cut) -> Cut {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Cut) -> Cut {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Cut {
        let mut words: Vec<u64> = self.words.iter().map(|&w| !w).collect();
        if let Some(last) = words.last_mut() {
            *last &= Self::tail_mask(self.len);
        }
        Cut {
            len: self.len,
            words,
        }
    }

    pub fn is_subset_of(&self, other: &Cut) -> bool {
        assert_eq!(self.len, other.len, "cut length mismatch");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Cut) -> bool {
        assert_eq!(self.len, other.len, "cut length mismatch");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    /// Laminar pair: disjoint or nested either way.
    pub fn laminar_with(&self, other: &Cut) -> bool {
        self.is_disjoint_from(other)
            || self.is_subset_of(other)
            || other.is_subset_of(self)
    }

    /// Proper crossing: all four corner sets `X∩Y`, `X∖Y`, `Y∖X`,
    /// `V∖(X∪Y)` are nonempty.
    pub fn crosses(&self, other: &Cut) -> bool {
        !self.intersection(other).is_empty()
            && !self.difference(other).is_empty()
            && !other.difference(self).is_empty()
            && !self.union(other).is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cut({self}/{})", self.len)
    }
}
