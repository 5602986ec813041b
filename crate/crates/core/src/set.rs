//! Canonical finite subsets of a ring's element codes.

use std::cmp::Ordering;
use std::fmt;

use crate::ring::Elem;

/// A subset of `{0, .., universe-1}` stored as a bitset.
///
/// The total order is the canonical one used for every deterministic
/// listing in the crate: first by cardinality, then lexicographically by the
/// ascending list of member codes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    words: Vec<u64>,
    universe: usize,
    len: usize,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet { words: vec![0; universe.div_ceil(64)], universe, len: 0 }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for i in 0..universe {
            set.insert(Elem(i as u16));
        }
        set
    }

    pub fn from_elems(universe: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut set = Self::empty(universe);
        for e in elems {
            set.insert(e);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Returns true if the element was newly inserted.
    pub fn insert(&mut self, e: Elem) -> bool {
        let i = e.index();
        assert!(i < self.universe, "element {i} outside universe {}", self.universe);
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn contains(&self, e: Elem) -> bool {
        let i = e.index();
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(Elem((w * 64 + b) as u16))
            })
        })
    }

    pub fn first(&self) -> Option<Elem> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len == self.universe
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        self.zip_words(other, |a, b| a & b)
    }

    fn zip_words(&self, other: &ElemSet, f: impl Fn(u64, u64) -> u64) -> ElemSet {
        assert_eq!(self.universe, other.universe, "sets over different universes");
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet { words, universe: self.universe, len }
    }

    /// Member codes in ascending order.
    pub fn codes(&self) -> Vec<u16> {
        self.iter().map(|e| e.0).collect()
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}
