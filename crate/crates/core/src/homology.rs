//! Reduced simplicial homology, the subset-homology linear-resolution test
//! and graded Betti numbers of Stanley-Reisner ideals.
//!
//! Only two coefficient fields are available, GF(2) and ℚ. Claims that hold
//! "over every field" are checked over both.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::complex::{clique_complex, SimplicialComplex};
use crate::face::Face;
use crate::linalg::{gf2_rank, BitVec, IntMatrix};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Gf2,
    Rational,
}

impl FieldTag {
    pub const ALL: [FieldTag; 2] = [FieldTag::Gf2, FieldTag::Rational];
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Gf2 => write!(f, "GF(2)"),
            FieldTag::Rational => write!(f, "Q"),
        }
    }
}

/// `∂_i : C̃_i → C̃_{i-1}` with rows indexed by `(i-1)`-faces and columns by
/// `i`-faces, both sorted. Over GF(2) entries are reduced mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: isize,
    pub field: FieldTag,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    pub matrix: IntMatrix,
}

impl BoundaryMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank(self.field)
    }
}

/// Sign of `F \ {v}` in `∂F`: `(-1)^i` where `v` is the `i`-th smallest vertex.
fn boundary_sign(face: Face, v: usize) -> i64 {
    let below = (face.bits() & ((1u64 << v) - 1)).count_ones();
    if below.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn boundary_matrix(d: &SimplicialComplex, i: isize, field: FieldTag) -> Result<BoundaryMatrix> {
    let max = d.dim().ok_or(Error::VoidComplex)?;
    if i < -1 || i > max {
        return Err(Error::OutOfRange { index: i, min: -1, max });
    }
    let rows = d.faces_of_dim(i - 1);
    let cols = d.faces_of_dim(i);
    let mut matrix = IntMatrix::zeros(rows.len(), cols.len());
    for (c, &f) in cols.iter().enumerate() {
        for v in f.iter() {
            let r = rows.binary_search(&f.without(v)).expect("boundary face present");
            let s = boundary_sign(f, v);
            matrix.set(r, c, if field == FieldTag::Gf2 { s.rem_euclid(2) } else { s });
        }
    }
    Ok(BoundaryMatrix { degree: i, field, rows, cols, matrix })
}

/// Rank of `∂_i` given the sorted `(i-1)`- and `i`-faces.
fn boundary_rank(lower: &[Face], upper: &[Face], field: FieldTag) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    match field {
        FieldTag::Gf2 => {
            // rank of the transpose: one bit row per upper face
            let rows: Vec<BitVec> = upper
                .iter()
                .map(|f| {
                    let mut b = BitVec::zeros(lower.len());
                    for v in f.iter() {
                        b.set(lower.binary_search(&f.without(v)).expect("boundary face present"), true);
                    }
                    b
                })
                .collect();
            gf2_rank(&rows)
        }
        FieldTag::Rational => {
            let mut m = IntMatrix::zeros(upper.len(), lower.len());
            for (r, f) in upper.iter().enumerate() {
                for v in f.iter() {
                    let c = lower.binary_search(&f.without(v)).expect("boundary face present");
                    m.set(r, c, boundary_sign(*f, v));
                }
            }
            m.rank(FieldTag::Rational)
        }
    }
}

/// `dim H̃_i(Δ; K)` for `-1 ≤ i ≤ dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: FieldTag,
    pub dims: BTreeMap<isize, usize>,
}

impl HomologyProfile {
    pub fn get(&self, i: isize) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&h| h == 0)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|(i, h)| format!("H~{i}={h}")).collect();
        write!(f, "over {}: {}", self.field, parts.join(" "))
    }
}

/// Reduced homology in degrees `min_degree..=dim Δ`. The void complex has
/// `H̃_{-1} = 0`; `{∅}` has `H̃_{-1} = 1`.
pub fn reduced_homology_from(d: &SimplicialComplex, field: FieldTag, min_degree: isize) -> HomologyProfile {
    let mut dims = BTreeMap::new();
    let Some(top) = d.dim() else {
        if min_degree <= -1 {
            dims.insert(-1, 0);
        }
        return HomologyProfile { field, dims };
    };
    let lo = min_degree.max(-1);
    if lo > top {
        return HomologyProfile { field, dims };
    }
    // faces[k] holds faces of dimension lo - 1 + k
    let faces: Vec<Vec<Face>> = (lo - 1..=top + 1).map(|k| d.faces_of_dim(k)).collect();
    let ranks: Vec<usize> = (1..faces.len()).map(|k| boundary_rank(&faces[k - 1], &faces[k], field)).collect();
    for i in lo..=top {
        let k = (i - lo + 1) as usize;
        let h = faces[k].len() - ranks[k - 1] - ranks[k];
        dims.insert(i, h);
    }
    HomologyProfile { field, dims }
}

pub fn reduced_homology(d: &SimplicialComplex, field: FieldTag) -> HomologyProfile {
    reduced_homology_from(d, field, -1)
}

/// Outcome of the subset-homology linear-resolution test for `I(C̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LinearResolution {
    /// `C` is complete, so `I(C̄)` is the zero ideal.
    TriviallyLinear,
    Linear,
    /// `H̃_degree(Δ(C)_W) ≠ 0` with `degree ≥ d`.
    NotLinear {
        w: Face,
        degree: isize,
        rank: usize,
    },
}

impl LinearResolution {
    /// True for both linear outcomes.
    pub fn holds(&self) -> bool {
        !matches!(self, LinearResolution::NotLinear { .. })
    }
}

/// All subsets of `v` ordered by size, then lexicographically.
pub(crate) fn subsets_by_size(v: Face) -> Vec<Face> {
    let mut all: Vec<Face> = v.subsets().collect();
    all.sort_unstable_by_key(|w| (w.len(), *w));
    all
}

/// First `(W, i)` with `H̃_i(Δ(C)_W; K) ≠ 0` and `i ≥ min_degree`, in the
/// canonical order (by `|W|`, then lexicographic `W`, then `i`).
pub fn first_nonvanishing(c: &Clutter, field: FieldTag, min_degree: isize) -> Option<(Face, isize, usize)> {
    let full = clique_complex(c);
    subsets_by_size(c.vertices()).par_iter().find_map_first(|&w| {
        let sub = full.restrict(w);
        let h = reduced_homology_from(&sub, field, min_degree);
        h.dims.iter().find(|(_, &r)| r > 0).map(|(&i, &r)| (w, i, r))
    })
}

/// `I(C̄)` has a linear resolution over `field` iff `H̃_i(Δ(C)_W) = 0` for
/// every `W ⊆ V` and every `i ≥ d`.
pub fn has_linear_resolution(c: &Clutter, field: FieldTag) -> LinearResolution {
    if c.is_complete() {
        return LinearResolution::TriviallyLinear;
    }
    match first_nonvanishing(c, field, c.d() as isize) {
        None => LinearResolution::Linear,
        Some((w, degree, rank)) => LinearResolution::NotLinear { w, degree, rank },
    }
}

/// Graded Betti numbers `β_{i,j}` of a squarefree monomial ideal, `i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: FieldTag,
    /// `entries[i][j] = β_{i,j}`; only nonzero values are stored.
    pub entries: BTreeMap<usize, BTreeMap<usize, u64>>,
}

impl BettiTable {
    pub fn new(field: FieldTag) -> BettiTable {
        BettiTable { field, entries: BTreeMap::new() }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&i).and_then(|r| r.get(&j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry(i).or_default().entry(j).or_insert(0) += value;
        }
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.get(&i).map_or(0, |r| r.values().sum())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `i` with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// True iff `β_{i,j} = 0` whenever `j ≠ i + degree`.
    pub fn is_linear(&self, degree: usize) -> bool {
        self.entries.iter().all(|(&i, row)| row.keys().all(|&j| j == i + degree))
    }

    fn merge(mut self, other: BettiTable) -> BettiTable {
        for (i, row) in other.entries {
            for (j, v) in row {
                self.add(i, j, v);
            }
        }
        self
    }
}

impl fmt::Display for BettiTable {
    /// Rows are indexed by `j - i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(len) = self.length() else {
            return writeln!(f, "zero ideal (over {})", self.field);
        };
        let mut shifts: Vec<usize> = self.entries.iter().flat_map(|(&i, r)| r.keys().map(move |&j| j - i)).collect();
        shifts.sort_unstable();
        shifts.dedup();
        let width = self
            .entries
            .values()
            .flat_map(|r| r.values())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(len.to_string().len());
        write!(f, "{:>6}", "")?;
        for i in 0..=len {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=len {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for s in shifts {
            write!(f, "{:>6}", format!("{s}:"))?;
            for i in 0..=len {
                let v = self.get(i, i + s);
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Graded Betti numbers of the Stanley-Reisner ideal `I_Δ` via
/// `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-2}(Δ_W; K)`.
pub fn graded_betti(d: &SimplicialComplex, field: FieldTag) -> BettiTable {
    let subsets: Vec<Face> = d.vertices().subsets().filter(|w| !w.is_empty()).collect();
    subsets
        .par_iter()
        .map(|&w| {
            let mut t = BettiTable::new(field);
            let h = reduced_homology(&d.restrict(w), field);
            let j = w.len();
            for (&k, &dim) in &h.dims {
                let i = j as isize - k - 2;
                if i >= 0 && dim > 0 {
                    t.add(i as usize, j, dim as u64);
                }
            }
            t
        })
        .reduce(|| BettiTable::new(field), BettiTable::merge)
}

/// Betti table of `I(C̄) = I_{Δ(C)}`.
pub fn clutter_betti(c: &Clutter, field: FieldTag) -> BettiTable {
    graded_betti(&clique_complex(c), field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::from_digits(4, &["123", "124", "134", "234"])
    }

    #[test]
    fn boundary_signs() {
        let edge = SimplicialComplex::from_digits(2, &["12"]);
        let b1 = boundary_matrix(&edge, 1, FieldTag::Rational).unwrap();
        assert_eq!(b1.rows, vec![Face::digits("1"), Face::digits("2")]);
        assert_eq!(b1.matrix, IntMatrix::from_rows(&[vec![-1], vec![1]]));

        let tri = SimplicialComplex::from_digits(3, &["123"]);
        let b2 = boundary_matrix(&tri, 2, FieldTag::Rational).unwrap();
        assert_eq!(b2.rows, ["12", "13", "23"].map(Face::digits));
        assert_eq!(b2.matrix, IntMatrix::from_rows(&[vec![1], vec![-1], vec![1]]));

        let b0 = boundary_matrix(&tetra_boundary(), 0, FieldTag::Rational).unwrap();
        assert_eq!(b0.rows, vec![Face::EMPTY]);
        assert_eq!(b0.matrix, IntMatrix::from_rows(&[vec![1, 1, 1, 1]]));

        let bm1 = boundary_matrix(&tri, -1, FieldTag::Gf2).unwrap();
        assert_eq!((bm1.matrix.rows(), bm1.matrix.cols()), (0, 1));
        assert!(boundary_matrix(&tri, 3, FieldTag::Gf2).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let d = tetra_boundary();
        for i in 0..2 {
            let a = boundary_matrix(&d, i, FieldTag::Rational).unwrap();
            let b = boundary_matrix(&d, i + 1, FieldTag::Rational).unwrap();
            assert!(a.matrix.mul(&b.matrix).is_zero());
        }
        assert_eq!(boundary_matrix(&d, 2, FieldTag::Rational).unwrap().rank(), 3);
    }

    #[test]
    fn standard_profiles() {
        for field in FieldTag::ALL {
            let simplex = SimplicialComplex::simplex(Face::full(4).unwrap());
            assert!(reduced_homology(&simplex, field).is_acyclic());
            let sphere = reduced_homology(&tetra_boundary(), field);
            assert_eq!(sphere.dims, BTreeMap::from([(-1, 0), (0, 0), (1, 0), (2, 1)]));
            let two_points = SimplicialComplex::from_digits(2, &["1", "2"]);
            assert_eq!(reduced_homology(&two_points, field).dims, BTreeMap::from([(-1, 0), (0, 1)]));
            let v = Face::full(3).unwrap();
            assert_eq!(reduced_homology(&SimplicialComplex::empty_face_only(v), field).get(-1), 1);
            assert_eq!(reduced_homology(&SimplicialComplex::void(v), field).dims, BTreeMap::from([(-1, 0)]));
        }
    }

    #[test]
    fn torsion_separates_fields() {
        // 6-vertex real projective plane
        let rp2 =
            SimplicialComplex::from_digits(6, &["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]);
        assert_eq!(reduced_homology(&rp2, FieldTag::Gf2).get(2), 1);
        assert_eq!(reduced_homology(&rp2, FieldTag::Gf2).get(1), 1);
        assert!(reduced_homology(&rp2, FieldTag::Rational).is_acyclic());
    }

    #[test]
    fn dunce_hat_is_acyclic_above_zero() {
        let c = fixtures::dunce_hat();
        let gamma = SimplicialComplex::from_clutter(&c);
        for field in FieldTag::ALL {
            let h = reduced_homology(&gamma, field);
            assert!(h.is_acyclic(), "{h}");
            // the four non-edges of the triangulation are edges of Δ(C)
            let h = reduced_homology(&clique_complex(&c), field);
            assert_eq!(h.get(1), 4);
            assert!(h.dims.iter().filter(|(&i, _)| i >= 2).all(|(_, &r)| r == 0));
        }
    }

    #[test]
    fn linear_resolution_examples() {
        let four_cycle = Clutter::from_digits(4, 1, &["12", "23", "34", "14"]);
        for field in FieldTag::ALL {
            assert_eq!(
                has_linear_resolution(&four_cycle, field),
                LinearResolution::NotLinear { w: Face::full(4).unwrap(), degree: 1, rank: 1 }
            );
            assert_eq!(has_linear_resolution(&fixtures::dunce_hat(), field), LinearResolution::Linear);
            assert_eq!(has_linear_resolution(&fixtures::octahedron(), field), LinearResolution::Linear);
            let complete = Clutter::complete(Face::full(4).unwrap(), 1);
            assert_eq!(has_linear_resolution(&complete, field), LinearResolution::TriviallyLinear);
        }
    }

    #[test]
    fn betti_examples() {
        let v = Face::full(4).unwrap();
        assert!(graded_betti(&SimplicialComplex::simplex(v), FieldTag::Gf2).is_zero());
        // C̄ = {12}: principal ideal
        let c = Clutter::complete(v, 1).remove_circuit(Face::digits("12")).unwrap();
        let t = clutter_betti(&c, FieldTag::Rational);
        assert_eq!(t.entries, BTreeMap::from([(0, BTreeMap::from([(2, 1)]))]));
        // four-cycle complement: (x1x3, x2x4), a complete intersection
        let cyc = Clutter::from_digits(4, 1, &["12", "23", "34", "14"]);
        let t = clutter_betti(&cyc, FieldTag::Gf2);
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 4), 1);
        assert!(!t.is_linear(2));
    }

    #[test]
    fn linear_resolution_agrees_with_betti_table() {
        for (_, c) in fixtures::all() {
            for field in FieldTag::ALL {
                let lin = has_linear_resolution(&c, field).holds();
                assert_eq!(lin, clutter_betti(&c, field).is_linear(c.d() + 1), "{c:?}");
            }
        }
    }
}
