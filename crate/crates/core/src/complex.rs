//! Simplicial complexes stored by their facets.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clutter::{Clutter, GeneralClutter};
use crate::face::Face;
use crate::{Error, Result};

/// A simplicial complex on a ground vertex set, stored as its facet antichain.
///
/// An empty facet list is the void complex (no faces at all); the facet list
/// `[∅]` is the complex `{∅}`. The two are different values.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertices: Face,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// `⟨D⟩`: the complex generated by a family of faces.
    pub fn generated<I: IntoIterator<Item = Face>>(vertices: Face, family: I) -> Result<SimplicialComplex> {
        let facets = GeneralClutter::maximal_sets(vertices, family);
        for &f in facets.edges() {
            if !f.is_subset(vertices) {
                return Err(Error::OutsideVertexSet { face: f });
            }
        }
        Ok(SimplicialComplex { vertices, facets: facets.edges().to_vec() })
    }

    fn from_family(vertices: Face, family: impl IntoIterator<Item = Face>) -> SimplicialComplex {
        let facets = GeneralClutter::maximal_sets(vertices, family);
        SimplicialComplex { vertices, facets: facets.edges().to_vec() }
    }

    /// `⟨C⟩` for a clutter.
    pub fn from_clutter(c: &Clutter) -> SimplicialComplex {
        SimplicialComplex { vertices: c.vertices(), facets: c.circuits().to_vec() }
    }

    pub fn from_general(c: &GeneralClutter) -> SimplicialComplex {
        SimplicialComplex { vertices: c.vertices(), facets: c.edges().to_vec() }
    }

    pub fn from_digits(n: usize, facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::generated(Face::full(n).expect("n <= 64"), facets.iter().map(|s| Face::digits(s)))
            .expect("valid fixture")
    }

    /// The complex with no faces.
    pub fn void(vertices: Face) -> SimplicialComplex {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face_only(vertices: Face) -> SimplicialComplex {
        SimplicialComplex { vertices, facets: vec![Face::EMPTY] }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Face) -> SimplicialComplex {
        SimplicialComplex { vertices, facets: vec![vertices] }
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_clutter(&self) -> GeneralClutter {
        GeneralClutter::new(self.vertices, self.facets.iter().copied()).expect("facets form an antichain")
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Vertices `v` with `{v}` a face.
    pub fn used_vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    /// Every face, sorted.
    pub fn faces(&self) -> Vec<Face> {
        let mut all = HashSet::new();
        for &f in &self.facets {
            all.extend(f.subsets());
        }
        let mut out: Vec<Face> = all.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Faces of dimension `k` (size `k + 1`), sorted.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        if k < -1 {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut out: Vec<Face> = self.facets.iter().flat_map(|f| f.k_subsets(size)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `Δ_W`: faces contained in `w`, on the vertex set `w`.
    pub fn restrict(&self, w: Face) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void(w);
        }
        SimplicialComplex::from_family(w, self.facets.iter().map(|f| f.intersection(w)))
    }

    /// `link_Δ F`.
    pub fn link(&self, f: Face) -> Result<SimplicialComplex> {
        if !self.contains(f) {
            return Err(Error::NotAFace { face: f });
        }
        let family = self.facets.iter().filter(|g| f.is_subset(**g)).map(|g| g.difference(f));
        Ok(SimplicialComplex::from_family(self.vertices.difference(f), family))
    }

    /// `Δ - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<SimplicialComplex> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownVertex(v + 1));
        }
        let vertices = self.vertices.without(v);
        if self.is_void() {
            return Ok(SimplicialComplex::void(vertices));
        }
        Ok(SimplicialComplex::from_family(vertices, self.facets.iter().map(|g| g.without(v))))
    }

    /// Pure `i`-skeleton: the complex generated by the `i`-faces.
    pub fn pure_skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        let max = self.dim().ok_or(Error::VoidComplex)?;
        if i < -1 || i > max {
            return Err(Error::OutOfRange { index: i, min: -1, max });
        }
        Ok(SimplicialComplex { vertices: self.vertices, facets: self.faces_of_dim(i) })
    }

    /// Minimal non-faces over the ground vertex set, sorted. The void
    /// complex has the single minimal non-face `∅`.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        let mut out = HashSet::new();
        for f in self.faces() {
            for v in self.vertices.difference(f).iter() {
                let cand = f.with(v);
                if !self.contains(cand) && cand.iter().all(|u| self.contains(cand.without(u))) {
                    out.insert(cand);
                }
            }
        }
        let mut out: Vec<Face> = out.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Supports of the minimal generators of the Stanley-Reisner ideal.
    pub fn stanley_reisner_generators(&self) -> Vec<Face> {
        self.minimal_nonfaces()
    }

    /// `Δ∨ = { V \ F : F ⊆ V, F ∉ Δ }`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let facets: Vec<Face> = self.minimal_nonfaces().into_iter().map(|n| self.vertices.difference(n)).collect();
        SimplicialComplex::from_family(self.vertices, facets)
    }
}

/// `Δ(C)`: the complex of all cliques of `C`.
pub fn clique_complex(c: &Clutter) -> SimplicialComplex {
    let v = c.vertices();
    let d = c.d();
    if v.len() <= d {
        return SimplicialComplex::simplex(v);
    }
    let mut facets: Vec<Face> = v.k_subsets(d).filter(|e| !c.circuits().iter().any(|f| e.is_subset(*f))).collect();
    let mut level: Vec<Face> = c.circuits().to_vec();
    while !level.is_empty() {
        let members: HashSet<Face> = level.iter().copied().collect();
        let mut next = Vec::new();
        let mut extended = HashSet::new();
        for &k in &level {
            let top = 63 - k.bits().leading_zeros() as usize;
            for w in v.difference(k).iter().filter(|&w| w > top) {
                let cand = k.with(w);
                if cand.facets_of_boundary().all(|s| members.contains(&s)) {
                    next.push(cand);
                    extended.extend(cand.facets_of_boundary());
                }
            }
        }
        facets.extend(level.iter().copied().filter(|k| !extended.contains(k)));
        level = next;
    }
    facets.sort_unstable();
    SimplicialComplex { vertices: v, facets }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "Void(V={})", self.vertices);
        }
        write!(f, "⟨{:?}⟩ on {}", self.facets, self.vertices)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        let parts: Vec<String> = self.facets.iter().map(|c| c.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}
