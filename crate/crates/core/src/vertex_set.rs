use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `0..universe`, stored as a little-endian bitmask.
///
/// Sets over the same universe are ordered by the numeric value of their
/// bitmask, which is the canonical order used for witnesses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::IndexOutOfRange { vertex: v, n: universe });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Builds a set over a universe of at most 64 vertices from a raw mask.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut set = Self::empty(universe);
        if universe > 0 {
            let keep = if universe >= WORD {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            set.words[0] = mask & keep;
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The raw mask, when the universe fits in a single word.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        Self {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
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

    /// `(A ∪ B) \ (A ∩ B)`.
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        for i in (0..len).rev() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.universe.cmp(&other.universe)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the sorted array of member vertices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert_eq!(s.to_vec(), vec![0, 129]);
        assert_eq!(s.len(), 2);
        assert!(s.remove(0));
        assert!(!s.contains(0));
        assert_eq!(s.complement().len(), 129);
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            VertexSet::from_vertices(3, [0, 3]),
            Err(Error::IndexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn order_is_numeric() {
        let a = VertexSet::from_vertices(70, [0, 1]).unwrap();
        let b = VertexSet::from_vertices(70, [2]).unwrap();
        let c = VertexSet::from_vertices(70, [65]).unwrap();
        assert!(a < b && b < c);
    }

    proptest! {
        #[test]
        fn set_algebra(a in any::<u64>(), b in any::<u64>()) {
            let sa = VertexSet::from_mask(64, a);
            let sb = VertexSet::from_mask(64, b);
            prop_assert_eq!(sa.symmetric_difference(&sb).as_mask(), Some(a ^ b));
            prop_assert_eq!(sa.union(&sb).as_mask(), Some(a | b));
            prop_assert_eq!(sa.intersection(&sb).as_mask(), Some(a & b));
            prop_assert_eq!(sa.cmp(&sb), a.cmp(&b));
            prop_assert_eq!(sa.len(), a.count_ones() as usize);
        }
    }
}
