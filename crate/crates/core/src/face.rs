//! Faces as fixed-width vertex bitmasks.
//!
//! Vertex `i` (0-based) is bit `i`. Externally, vertex `i` carries the label
//! `i + 1`; that mapping is only applied when a face is printed, parsed or
//! serialized.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest supported number of vertices.
pub const MAX_VERTICES: usize = 64;

/// A finite set of vertices.
///
/// Ordering is lexicographic on the ascending vertex sequence, so `{1,2,6}`
/// sorts before `{1,3,4}` and `{1,2}` before `{1,2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Face on the first `n` vertices.
    pub fn full(n: usize) -> Result<Face> {
        check_capacity(n)?;
        Ok(if n == 64 { Face(u64::MAX) } else { Face((1u64 << n) - 1) })
    }

    pub fn singleton(v: usize) -> Face {
        debug_assert!(v < MAX_VERTICES);
        Face(1u64 << v)
    }

    /// Builds a face from 0-based vertex indices. Duplicates are rejected.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Face> {
        let mut bits = 0u64;
        for v in indices {
            if v >= MAX_VERTICES {
                return Err(Error::CapacityExceeded(v + 1));
            }
            if bits & (1 << v) != 0 {
                return Err(Error::DuplicateVertex(v + 1));
            }
            bits |= 1 << v;
        }
        Ok(Face(bits))
    }

    /// Builds a face from 1-based labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Face> {
        let mut idx = Vec::new();
        for l in labels {
            if l == 0 {
                return Err(Error::InvalidLabel(0));
            }
            idx.push(l - 1);
        }
        Face::from_indices(idx)
    }

    /// Shorthand used for small fixtures: `Face::digits("125")` is `{1,2,5}`.
    /// Each character is a single 1-based label in `1..=9`.
    pub fn digits(s: &str) -> Face {
        Face::from_labels(s.chars().map(|c| c.to_digit(10).expect("digit label") as usize)).expect("valid digit face")
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Face) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Smallest vertex, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in ascending order (0-based).
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// Ascending 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// All subsets of `self`, including `self` and the empty face.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }

    /// All subsets of `self` with exactly `k` vertices, in lexicographic order.
    pub fn k_subsets(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }

    /// Faces obtained by dropping one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.iter().map(move |v| self.without(v))
    }
}

pub(crate) fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::CapacityExceeded(n))
    } else {
        Ok(())
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        // Both sequences agree below `low`; the one holding `low` is smaller
        // unless the other one has already run out of vertices.
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let labels = self.labels();
        if labels.iter().all(|&l| l <= 9) {
            for l in labels {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({self})")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for l in self.labels() {
            seq.serialize_element(&l)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Face, D::Error> {
        struct FaceVisitor;
        impl<'de> Visitor<'de> for FaceVisitor {
            type Value = Face;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of distinct 1-based vertex labels")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Face, A::Error> {
                let mut labels = Vec::new();
                while let Some(l) = seq.next_element::<usize>()? {
                    labels.push(l);
                }
                Face::from_labels(labels).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(FaceVisitor)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Enumerates the subsets of a mask (Gosper-free submask walk, ascending by value).
pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Face;
    fn next(&mut self) -> Option<Face> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(Face(out))
    }
}

/// Lexicographic enumeration of the `k`-subsets of a face.
pub struct KSubsets {
    verts: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl KSubsets {
    fn new(face: Face, k: usize) -> KSubsets {
        let verts: Vec<usize> = face.iter().collect();
        let done = k > verts.len();
        KSubsets { idx: (0..k).collect(), verts, done }
    }
}

impl Iterator for KSubsets {
    type Item = Face;
    fn next(&mut self) -> Option<Face> {
        if self.done {
            return None;
        }
        let out = Face(self.idx.iter().fold(0u64, |acc, &i| acc | 1 << self.verts[i]));
        let k = self.idx.len();
        let n = self.verts.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// `n choose k` without overflow for the sizes used here.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic_order() {
        assert!(Face::digits("126") < Face::digits("134"));
        assert!(Face::digits("12") < Face::digits("123"));
        assert!(Face::digits("123") < Face::digits("13"));
        assert!(Face::EMPTY < Face::digits("1"));
        let mut v = vec![Face::digits("234"), Face::digits("1236"), Face::digits("124")];
        v.sort();
        assert_eq!(v, vec![Face::digits("1236"), Face::digits("124"), Face::digits("234")]);
    }

    #[test]
    fn display_and_labels() {
        assert_eq!(Face::digits("125").to_string(), "125");
        assert_eq!(Face::EMPTY.to_string(), "{}");
        assert_eq!(Face::from_labels([1, 12]).unwrap().to_string(), "{1,12}");
        assert_eq!(Face::digits("35").dim(), 1);
        assert_eq!(Face::EMPTY.dim(), -1);
    }

    #[test]
    fn rejects_duplicates_and_capacity() {
        assert!(matches!(Face::from_labels([1, 1]), Err(Error::DuplicateVertex(1))));
        assert!(matches!(Face::from_labels([65]), Err(Error::CapacityExceeded(65))));
        assert!(Face::full(65).is_err());
        assert_eq!(Face::full(64).unwrap().len(), 64);
    }

    #[test]
    fn k_subsets_are_lexicographic() {
        let got: Vec<String> = Face::digits("1234").k_subsets(2).map(|f| f.to_string()).collect();
        assert_eq!(got, ["12", "13", "14", "23", "24", "34"]);
        assert_eq!(Face::digits("12").k_subsets(3).count(), 0);
        assert_eq!(Face::digits("12").k_subsets(0).collect::<Vec<_>>(), vec![Face::EMPTY]);
    }

    #[test]
    fn serde_uses_labels() {
        let f = Face::digits("245");
        assert_eq!(serde_json::to_string(&f).unwrap(), "[2,4,5]");
        let back: Face = serde_json::from_str("[5,2,4]").unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Face>("[0]").is_err());
    }

    proptest! {
        #[test]
        fn order_matches_label_sequences(a in any::<u16>(), b in any::<u16>()) {
            let fa = Face::from_bits(a as u64);
            let fb = Face::from_bits(b as u64);
            prop_assert_eq!(fa.cmp(&fb), fa.labels().cmp(&fb.labels()));
        }

        #[test]
        fn subset_counts(mask in any::<u16>(), k in 0usize..6) {
            let f = Face::from_bits(mask as u64);
            prop_assert_eq!(f.subsets().count(), 1usize << f.len());
            prop_assert_eq!(f.k_subsets(k).count() as u64, binomial(f.len(), k));
            prop_assert!(f.k_subsets(k).all(|s| s.len() == k && s.is_subset(f)));
        }
    }
}
