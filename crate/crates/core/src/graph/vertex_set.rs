use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// A subset of the vertex ids `0..universe` of one graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::ForeignVertex(v));
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Low `universe` bits of `mask`; only meaningful for universes up to 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64);
        let mut set = Self::empty(universe);
        if universe > 0 {
            set.words[0] = mask;
        }
        set
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.universe <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "vertex sets over different graphs");
        VertexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// Tie-break order for witnesses: smaller sets first, then the sorted
    /// member lists compared lexicographically.
    pub fn witness_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}
