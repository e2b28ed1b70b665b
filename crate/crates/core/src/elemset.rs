//! Small bitsets over element indices.
//!
//! Rings and modules in this crate index their elements by `0..order`,
//! so ideals and submodules are bitsets. Orders are capped at a few
//! hundred, hence a couple of `u64` words per set.

use serde::Serialize;

/// A set of element indices drawn from a fixed universe `0..capacity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ElemSet {
    capacity: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(capacity: usize) -> Self {
        let n = capacity.div_ceil(64).max(1);
        ElemSet {
            capacity,
            words: vec![0; n],
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut s = Self::empty(capacity);
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn full(capacity: usize) -> Self {
        Self::from_iter(capacity, 0..capacity)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.capacity);
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let new = *w & bit == 0;
        *w |= bit;
        new
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.capacity);
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when the set is exactly `{0}`.
    pub fn is_zero_only(&self) -> bool {
        self.words[0] == 1 && self.words[1..].iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.capacity, other.capacity);
        ElemSet {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.capacity, other.capacity);
        ElemSet {
            capacity: self.capacity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }
}

/// Orders by cardinality first, then by word content; gives the
/// deterministic listing order used for ideal and submodule lattices.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.words.cmp(&other.words))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
