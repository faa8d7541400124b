//! Uniform and general clutters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::face::{binomial, check_capacity, Face};
use crate::{Error, Result};

/// A `d`-dimensional uniform clutter: a set of `(d+1)`-subsets (circuits) of
/// a vertex set. Vertices in no circuit are kept until
/// [`Clutter::normalize_support`] is called.
///
/// Circuits are stored sorted, so derived `Eq`/`Hash` are canonical.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClutter")]
pub struct Clutter {
    vertices: Face,
    d: usize,
    circuits: Vec<Face>,
}

#[derive(Deserialize)]
struct RawClutter {
    vertices: Face,
    d: usize,
    circuits: Vec<Face>,
}

impl TryFrom<RawClutter> for Clutter {
    type Error = Error;

    fn try_from(raw: RawClutter) -> Result<Clutter> {
        Clutter::new(raw.vertices, raw.d, raw.circuits)
    }
}

impl Clutter {
    pub fn new<I: IntoIterator<Item = Face>>(vertices: Face, d: usize, circuits: I) -> Result<Clutter> {
        let mut circuits: Vec<Face> = circuits.into_iter().collect();
        for &c in &circuits {
            if c.len() != d + 1 {
                return Err(Error::DimensionMismatch { face: c, expected: d as isize, actual: c.dim() });
            }
            if !c.is_subset(vertices) {
                return Err(Error::OutsideVertexSet { face: c });
            }
        }
        circuits.sort_unstable();
        circuits.dedup();
        Ok(Clutter { vertices, d, circuits })
    }

    /// Clutter on the vertex set `[n]`.
    pub fn on_n<I: IntoIterator<Item = Face>>(n: usize, d: usize, circuits: I) -> Result<Clutter> {
        check_capacity(n)?;
        Clutter::new(Face::full(n)?, d, circuits)
    }

    /// Fixture shorthand: `Clutter::from_digits(5, 2, &["125", "235"])`.
    pub fn from_digits(n: usize, d: usize, circuits: &[&str]) -> Clutter {
        Clutter::on_n(n, d, circuits.iter().map(|s| Face::digits(s))).expect("valid fixture")
    }

    /// All `(d+1)`-subsets of `vertices`.
    pub fn complete(vertices: Face, d: usize) -> Clutter {
        Clutter { vertices, d, circuits: vertices.k_subsets(d + 1).collect::<Vec<_>>().tap_sort() }
    }

    pub(crate) fn from_sorted_unchecked(vertices: Face, d: usize, circuits: Vec<Face>) -> Clutter {
        debug_assert!(circuits.windows(2).all(|w| w[0] < w[1]));
        Clutter { vertices, d, circuits }
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn circuits(&self) -> &[Face] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.circuits.binary_search(&f).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.circuits.len() as u64 == binomial(self.n(), self.d + 1)
    }

    /// Vertices lying in at least one circuit.
    pub fn support(&self) -> Face {
        self.circuits.iter().fold(Face::EMPTY, |acc, &c| acc.union(c))
    }

    /// All `d`-faces of the vertex set that are not circuits.
    pub fn complement(&self) -> Clutter {
        let circuits = self.vertices.k_subsets(self.d + 1).filter(|f| !self.contains(*f)).collect::<Vec<_>>();
        Clutter { vertices: self.vertices, d: self.d, circuits: circuits.tap_sort() }
    }

    /// True iff every `(d+1)`-subset of `a` is a circuit. Sets with at most
    /// `d` vertices are cliques.
    pub fn is_clique(&self, a: Face) -> bool {
        if a.len() <= self.d {
            return a.is_subset(self.vertices);
        }
        let inside = self.circuits.iter().filter(|c| c.is_subset(a)).count() as u64;
        inside == binomial(a.len(), self.d + 1)
    }

    /// The induced clutter on `a`: circuits contained in `a`, vertex set `a`.
    pub fn induced(&self, a: Face) -> Result<Clutter> {
        if !a.is_subset(self.vertices) {
            return Err(Error::OutsideVertexSet { face: a });
        }
        let circuits = self.circuits.iter().copied().filter(|c| c.is_subset(a)).collect();
        Ok(Clutter { vertices: a, d: self.d, circuits })
    }

    /// `C - v`: drops `v` from the vertex set and every circuit through it.
    pub fn delete_vertex(&self, v: usize) -> Result<Clutter> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownVertex(v + 1));
        }
        let circuits = self.circuits.iter().copied().filter(|c| !c.contains(v)).collect();
        Ok(Clutter { vertices: self.vertices.without(v), d: self.d, circuits })
    }

    /// `C - F` for a circuit-sized face `F`: removes that single circuit and
    /// keeps the vertex set.
    pub fn remove_circuit(&self, f: Face) -> Result<Clutter> {
        if f.len() != self.d + 1 {
            return Err(Error::DimensionMismatch { face: f, expected: self.d as isize, actual: f.dim() });
        }
        let circuits = self.circuits.iter().copied().filter(|&c| c != f).collect();
        Ok(Clutter { vertices: self.vertices, d: self.d, circuits })
    }

    /// Adds one circuit-sized face.
    pub fn add_circuit(&self, f: Face) -> Result<Clutter> {
        Clutter::new(self.vertices, self.d, self.circuits.iter().copied().chain([f]))
    }

    /// Removes every vertex that lies in no circuit.
    pub fn normalize_support(&self) -> Clutter {
        Clutter { vertices: self.support(), d: self.d, circuits: self.circuits.clone() }
    }

    /// Same circuits over a different (larger or equal) vertex set.
    pub fn with_vertices(&self, vertices: Face) -> Result<Clutter> {
        Clutter::new(vertices, self.d, self.circuits.iter().copied())
    }

    /// `C∨ = { V \ F : F ∈ C̄ }`.
    pub fn dual_clutter(&self) -> GeneralClutter {
        let edges = self.complement().circuits.iter().map(|&f| self.vertices.difference(f)).collect::<Vec<_>>();
        GeneralClutter { vertices: self.vertices, edges: edges.tap_sort() }
    }

    pub fn to_general(&self) -> GeneralClutter {
        GeneralClutter { vertices: self.vertices, edges: self.circuits.clone() }
    }

    /// Circuits containing `e`.
    pub fn circuits_containing(&self, e: Face) -> impl Iterator<Item = Face> + '_ {
        self.circuits.iter().copied().filter(move |c| e.is_subset(*c))
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter(d={}, V={}, {:?})", self.d, self.vertices, self.circuits)
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.circuits.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A possibly non-uniform clutter (antichain of edges).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralClutter {
    vertices: Face,
    edges: Vec<Face>,
}

impl GeneralClutter {
    /// Validates the antichain condition.
    pub fn new<I: IntoIterator<Item = Face>>(vertices: Face, edges: I) -> Result<GeneralClutter> {
        let mut edges: Vec<Face> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        for &e in &edges {
            if !e.is_subset(vertices) {
                return Err(Error::OutsideVertexSet { face: e });
            }
        }
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.is_subset(b) {
                    return Err(Error::NotAntichain(a, b));
                }
                if b.is_subset(a) {
                    return Err(Error::NotAntichain(b, a));
                }
            }
        }
        Ok(GeneralClutter { vertices, edges })
    }

    pub fn on_n<I: IntoIterator<Item = Face>>(n: usize, edges: I) -> Result<GeneralClutter> {
        GeneralClutter::new(Face::full(n)?, edges)
    }

    pub fn from_digits(n: usize, edges: &[&str]) -> GeneralClutter {
        GeneralClutter::on_n(n, edges.iter().map(|s| Face::digits(s))).expect("valid fixture")
    }

    /// The inclusion-minimal members of an arbitrary family.
    pub fn minimal_sets<I: IntoIterator<Item = Face>>(vertices: Face, family: I) -> GeneralClutter {
        let mut fam: Vec<Face> = family.into_iter().collect();
        fam.sort_unstable_by_key(|f| (f.len(), *f));
        fam.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for f in fam {
            if !kept.iter().any(|k| k.is_subset(f)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        GeneralClutter { vertices, edges: kept }
    }

    /// The inclusion-maximal members of an arbitrary family.
    pub fn maximal_sets<I: IntoIterator<Item = Face>>(vertices: Face, family: I) -> GeneralClutter {
        let mut fam: Vec<Face> = family.into_iter().collect();
        fam.sort_unstable_by_key(|f| (std::cmp::Reverse(f.len()), *f));
        fam.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for f in fam {
            if !kept.iter().any(|k| f.is_subset(*k)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        GeneralClutter { vertices, edges: kept }
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn edges(&self) -> &[Face] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Uniform view when all edges share one size (`None` for mixed sizes, or
    /// when the only edge is the empty set).
    pub fn as_uniform(&self) -> Option<Clutter> {
        let size = self.edges.first().map_or(1, |e| e.len());
        if size == 0 || self.edges.iter().any(|e| e.len() != size) {
            return None;
        }
        Some(Clutter { vertices: self.vertices, d: size - 1, circuits: self.edges.clone() })
    }

    /// The edges of minimum cardinality, as a uniform clutter.
    pub fn min_layer(&self) -> Option<Clutter> {
        let size = self.edges.iter().map(|e| e.len()).min()?;
        if size == 0 {
            return None;
        }
        let circuits = self.edges.iter().copied().filter(|e| e.len() == size).collect();
        Some(Clutter { vertices: self.vertices, d: size - 1, circuits })
    }
}

impl fmt::Debug for GeneralClutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneralClutter(V={}, {:?})", self.vertices, self.edges)
    }
}

trait TapSort {
    fn tap_sort(self) -> Self;
}

impl TapSort for Vec<Face> {
    fn tap_sort(mut self) -> Self {
        self.sort_unstable();
        self
    }
}
