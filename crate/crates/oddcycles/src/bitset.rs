//! Fixed-width bitsets over vertex indices.
//!
//! Adjacency rows and all per-vertex working sets are arrays of machine
//! words, so set intersection, difference and cardinality are a handful of
//! word operations. This is the main speed lever for the enumeration and
//! proof-checking inner loops.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

/// Hard cap on graph order. All workloads here are small-n but
/// combinatorially deep, so a fixed width keeps every row operation
/// allocation-free.
pub const MAX_VERTICES: usize = 512;

pub(crate) const WORDS: usize = MAX_VERTICES / 64;

/// A set of vertex indices below [`MAX_VERTICES`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    #[inline]
    pub fn empty() -> Self {
        Self::EMPTY
    }

    /// Set containing exactly `v`.
    #[inline]
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// Set containing `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut s = Self::EMPTY;
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.words[w] = u64::MAX;
            } else if n > lo {
                s.words[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    /// Set containing every index strictly greater than `v`.
    pub fn above(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        let mut s = Self::EMPTY;
        let word = v / 64;
        let bit = v % 64;
        if bit == 63 {
            s.words[word] = 0;
        } else {
            s.words[word] = !((1u64 << (bit + 1)) - 1);
        }
        for w in word + 1..WORDS {
            s.words[w] = u64::MAX;
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Difference `self \ other`.
    #[inline]
    pub fn minus(mut self, other: VertexSet) -> VertexSet {
        for w in 0..WORDS {
            self.words[w] &= !other.words[w];
        }
        self
    }

    pub fn first(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter {
        Iter {
            set: *self,
            word: 0,
        }
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        for w in 0..WORDS {
            self.words[w] &= rhs.words[w];
        }
        self
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        for w in 0..WORDS {
            self.words[w] &= rhs.words[w];
        }
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        for w in 0..WORDS {
            self.words[w] |= rhs.words[w];
        }
        self
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        for w in 0..WORDS {
            self.words[w] |= rhs.words[w];
        }
    }
}

pub struct Iter {
    set: VertexSet,
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.set.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.set.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
