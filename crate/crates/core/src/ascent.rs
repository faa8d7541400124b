//! Ascents, `d`-cycles, `d`-chordedness and the structural checks built on
//! them.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::chordality::{is_chordal, simplicial_maximal_subcircuits, EliminationCertificate};
use crate::clutter::Clutter;
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::homology::{has_linear_resolution, FieldTag};
use crate::linalg::{gf2_kernel, BitVec, Gf2Basis};
use crate::{Error, Result};

/// Largest cycle-space dimension [`is_d_chorded`] enumerates.
pub const MAX_CYCLE_SPACE_DIM: usize = 20;

/// `C⁺`: the `(d+2)`-cliques of `C`, as a `(d+1)`-clutter on the same
/// vertex set.
pub fn ascent(c: &Clutter) -> Clutter {
    let v = c.vertices();
    let mut out = Vec::new();
    for &f in c.circuits() {
        // every clique is produced once, from the circuit missing its top vertex
        let top = 63 - f.bits().leading_zeros() as usize;
        for w in v.difference(f).iter().filter(|&w| w > top) {
            let k = f.with(w);
            if k.facets_of_boundary().all(|g| c.contains(g)) {
                out.push(k);
            }
        }
    }
    out.sort_unstable();
    Clutter::new(v, c.d() + 1, out).expect("cliques are (d+2)-subsets of V")
}

/// `C, C⁺, C⁺⁺, …` up to and including the first empty ascent.
pub fn iterated_ascents(c: &Clutter) -> Vec<Clutter> {
    let mut out = vec![c.clone()];
    while let Some(last) = out.last().filter(|l| !l.is_empty()) {
        let next = ascent(last);
        out.push(next);
    }
    out
}

fn pure_facets(d: &SimplicialComplex) -> Result<&[Face]> {
    if !d.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(d.facets())
}

/// Facets with at least one of them, connected through shared
/// codimension-one faces.
fn facets_connected(facets: &[Face]) -> bool {
    let Some(&first) = facets.first() else {
        return true;
    };
    let k = first.len();
    let mut seen = HashSet::from([first]);
    let mut stack = vec![first];
    while let Some(f) = stack.pop() {
        for &g in facets {
            if !seen.contains(&g) && f.intersection(g).len() + 1 == k {
                seen.insert(g);
                stack.push(g);
            }
        }
    }
    seen.len() == facets.len()
}

pub fn is_d_path_connected(d: &SimplicialComplex) -> Result<bool> {
    Ok(facets_connected(pure_facets(d)?))
}

fn even_boundary(facets: &[Face]) -> bool {
    let mut count: HashMap<Face, usize> = HashMap::new();
    for f in facets {
        for g in f.facets_of_boundary() {
            *count.entry(g).or_default() += 1;
        }
    }
    count.values().all(|c| c % 2 == 0)
}

/// Pure, `d`-path connected, every `(d-1)`-face in an even number of facets.
/// Complexes of dimension below 0 are not cycles.
pub fn is_d_cycle(d: &SimplicialComplex) -> Result<bool> {
    let facets = pure_facets(d)?;
    if d.dim().is_none_or(|k| k < 0) {
        return Ok(false);
    }
    Ok(facets_connected(facets) && even_boundary(facets))
}

/// GF(2) boundary columns of `faces`, indexed by their codimension-one faces.
fn boundary_columns(faces: &[Face]) -> Vec<BitVec> {
    let mut index: HashMap<Face, usize> = HashMap::new();
    for f in faces {
        for g in f.facets_of_boundary() {
            let next = index.len();
            index.entry(g).or_insert(next);
        }
    }
    faces
        .iter()
        .map(|f| {
            let mut b = BitVec::zeros(index.len());
            for g in f.facets_of_boundary() {
                b.set(index[&g], true);
            }
            b
        })
        .collect()
}

fn cycle_space_dim(faces: &[Face]) -> usize {
    gf2_kernel(&boundary_columns(faces)).len()
}

/// A face-minimal cycle is exactly a facet set whose boundary map has a
/// one-dimensional kernel spanned by the all-ones vector.
pub fn is_face_minimal_cycle(facets: &[Face]) -> bool {
    let kernel = gf2_kernel(&boundary_columns(facets));
    kernel.len() == 1 && kernel[0].count_ones() == facets.len()
}

/// Splits the facets of a `d`-cycle into disjoint face-minimal `d`-cycles,
/// in a deterministic order. Disconnected inputs are accepted as long as
/// every `(d-1)`-face lies in an even number of facets.
pub fn decompose_into_face_minimal_cycles(d: &SimplicialComplex) -> Result<Vec<Vec<Face>>> {
    let facets = pure_facets(d)?;
    if d.dim().is_none_or(|k| k < 0) || !even_boundary(facets) {
        return Err(Error::NotACycle);
    }
    let mut rest: Vec<Face> = d.facets().to_vec();
    let mut out = Vec::new();
    while !rest.is_empty() {
        // shrink to an inclusion-minimal set with a nonzero cycle
        let mut t = rest.clone();
        let mut i = 0;
        while i < t.len() {
            let mut smaller = t.clone();
            smaller.remove(i);
            if cycle_space_dim(&smaller) > 0 {
                t = smaller;
            } else {
                i += 1;
            }
        }
        rest.retain(|f| !t.contains(f));
        out.push(t);
    }
    out.sort_unstable();
    Ok(out)
}

/// Outcome of the `d`-chordedness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Chordedness {
    Chorded,
    /// Support of the least cycle not spanned by clique boundaries on its
    /// own vertices.
    NotChorded {
        witness: Vec<Face>,
    },
}

impl Chordedness {
    pub fn holds(&self) -> bool {
        matches!(self, Chordedness::Chorded)
    }
}

fn support(v: &BitVec, faces: &[Face]) -> Vec<Face> {
    v.ones().map(|i| faces[i]).collect()
}

/// Decides whether `⟨C⟩` is `d`-chorded: every vector of the GF(2) cycle
/// space of `∂_d` on the circuits must be a sum of boundaries of
/// `(d+2)`-cliques of `C` lying inside the vertices it touches. The cycle
/// space is enumerated in Gray-code order; above [`MAX_CYCLE_SPACE_DIM`]
/// the answer is [`Error::BudgetExhausted`].
pub fn is_d_chorded(c: &Clutter) -> Result<Chordedness> {
    let faces = c.circuits();
    let kernel = gf2_kernel(&boundary_columns(faces));
    let k = kernel.len();
    if k > MAX_CYCLE_SPACE_DIM {
        return Err(Error::BudgetExhausted(1u64 << k));
    }
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let cliques = ascent(c);
    let clique_vectors: Vec<(Face, BitVec)> = cliques
        .circuits()
        .iter()
        .map(|&q| {
            let mut b = BitVec::zeros(faces.len());
            for g in q.facets_of_boundary() {
                b.set(index[&g], true);
            }
            (q, b)
        })
        .collect();
    let mut spans: HashMap<Face, Gf2Basis> = HashMap::new();
    let mut witness: Option<Vec<Face>> = None;
    let mut z = BitVec::zeros(faces.len());
    for step in 1u64..(1u64 << k) {
        z.xor_assign(&kernel[step.trailing_zeros() as usize]);
        let w = z.ones().fold(Face::EMPTY, |acc, i| acc.union(faces[i]));
        let span = spans.entry(w).or_insert_with(|| {
            let mut b = Gf2Basis::new();
            for (q, v) in &clique_vectors {
                if q.is_subset(w) {
                    b.insert(v.clone());
                }
            }
            b
        });
        if !span.contains(&z) {
            let s = support(&z, faces);
            if witness.as_ref().is_none_or(|best| s.cmp(best) == Ordering::Less) {
                witness = Some(s);
            }
        }
    }
    Ok(match witness {
        None => Chordedness::Chorded,
        Some(witness) => Chordedness::NotChorded { witness },
    })
}

/// `d`-chorded at every level of the iterated ascent; the empty clutter is
/// CF-chordal.
pub fn is_cf_chordal(c: &Clutter) -> Result<bool> {
    let mut cur = c.clone();
    while !cur.is_empty() {
        if !is_d_chorded(&cur)?.holds() {
            return Ok(false);
        }
        cur = ascent(&cur);
    }
    Ok(true)
}

/// `⟨C⟩` has no `d`-cycles.
pub fn is_cf_tree(c: &Clutter) -> bool {
    cycle_space_dim(c.circuits()) == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordalAscentReport {
    pub certificate: EliminationCertificate,
    pub ascent: Clutter,
    pub ascent_certificate: Option<EliminationCertificate>,
}

impl ChordalAscentReport {
    pub fn holds(&self) -> bool {
        self.ascent_certificate.is_some()
    }
}

/// For chordal `C`, decides whether `C⁺` is chordal too.
pub fn chordal_implies_ascent_chordal_check(c: &Clutter, budget: &Budget) -> Result<ChordalAscentReport> {
    let certificate = is_chordal(c, budget)?.ok_or_else(|| Error::Precondition("clutter is not chordal".into()))?;
    let plus = ascent(c);
    let ascent_certificate = is_chordal(&plus, budget)?;
    Ok(ChordalAscentReport { certificate, ascent: plus, ascent_certificate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordedDeletionReport {
    pub face: Face,
    pub result: Chordedness,
}

impl ChordedDeletionReport {
    pub fn holds(&self) -> bool {
        self.result.holds()
    }
}

/// For `d`-chorded `⟨C⟩` and `F ∈ SMS(C⁺)`, decides whether `⟨C - F⟩` is
/// `d`-chorded (`C - F` drops the single circuit `F`).
pub fn sms_deletion_chorded_check(c: &Clutter, f: Face) -> Result<ChordedDeletionReport> {
    let mut failed = Vec::new();
    if !is_d_chorded(c)?.holds() {
        failed.push("⟨C⟩ is not d-chorded".to_string());
    }
    if !simplicial_maximal_subcircuits(&ascent(c)).contains(&f) {
        failed.push(format!("{f} is not a simplicial maximal subcircuit of the ascent"));
    }
    if !failed.is_empty() {
        return Err(Error::Precondition(failed.join("; ")));
    }
    Ok(ChordedDeletionReport { face: f, result: is_d_chorded(&c.remove_circuit(f)?)? })
}

/// Edge order of a graph: the first `simplicial_prefix` edges are simplicial
/// edges (members of `SMS(C⁺)`) of the current chordal graph, the rest are
/// leaf edges of the remaining forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOrder {
    pub edges: Vec<Face>,
    pub simplicial_prefix: usize,
}

fn is_leaf_edge(c: &Clutter, e: Face) -> bool {
    c.contains(e) && e.iter().any(|v| c.circuits().iter().filter(|f| f.contains(v)).count() == 1)
}

impl EdgeOrder {
    /// Replays the order against the graph `c`.
    pub fn verify(&self, c: &Clutter, budget: &Budget) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        if c.d() != 1 {
            return bad("edge orders are defined for graphs".into());
        }
        if self.simplicial_prefix > self.edges.len() {
            return bad("simplicial prefix longer than the order".into());
        }
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        if sorted != c.circuits() {
            return bad("order does not list every edge exactly once".into());
        }
        let mut cur = c.clone();
        for (i, &e) in self.edges.iter().enumerate() {
            if i < self.simplicial_prefix {
                if !simplicial_maximal_subcircuits(&ascent(&cur)).contains(&e) {
                    return bad(format!("edge {} ({e}) is not a simplicial edge", i + 1));
                }
                if is_chordal(&cur, budget)?.is_none() {
                    return bad(format!("graph before edge {} is not chordal", i + 1));
                }
            } else {
                if !is_cf_tree(&cur) {
                    return bad(format!("graph before edge {} is not a forest", i + 1));
                }
                if !is_leaf_edge(&cur, e) {
                    return bad(format!("edge {} ({e}) is not a leaf edge", i + 1));
                }
            }
            cur = cur.remove_circuit(e)?;
        }
        Ok(())
    }
}

/// Deletes simplicial edges while the ascent is nonempty, then leaf edges.
pub fn chordal_edge_order(c: &Clutter, budget: &Budget) -> Result<EdgeOrder> {
    if c.d() != 1 {
        return Err(Error::Precondition("edge orders are defined for graphs".into()));
    }
    if is_chordal(c, budget)?.is_none() {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    let mut cur = c.clone();
    let mut edges = Vec::new();
    loop {
        let plus = ascent(&cur);
        if plus.is_empty() {
            break;
        }
        let Some(&e) = simplicial_maximal_subcircuits(&plus).first() else {
            return Err(Error::Precondition(format!("chordal graph with empty SMS of its ascent: {cur}")));
        };
        edges.push(e);
        cur = cur.remove_circuit(e)?;
    }
    let simplicial_prefix = edges.len();
    while let Some(&e) = cur.circuits().iter().find(|&&e| is_leaf_edge(&cur, e)) {
        edges.push(e);
        cur = cur.remove_circuit(e)?;
    }
    if !cur.is_empty() {
        return Err(Error::Precondition(format!("triangle-free remainder is not a forest: {cur}")));
    }
    Ok(EdgeOrder { edges, simplicial_prefix })
}

/// The three statements relating SMS deletions to linear resolutions,
/// evaluated directly over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinResSmsReport {
    pub field: FieldTag,
    pub sms_nonempty: bool,
    /// Some `F ∈ MS(C⁺)` with `C - F` linear, plus `C⁺` and all `C - v` linear.
    pub statement1: bool,
    /// `C` linear.
    pub statement2: bool,
    /// Every `F ∈ SMS(C⁺)` with `C - F` linear, plus `C⁺` and all `C - v` linear.
    pub statement3: bool,
}

impl LinResSmsReport {
    /// The proven implications: 1 ⇒ 2 ⇒ 3, and 3 ⇒ 1 when `SMS(C⁺) ≠ ∅`.
    pub fn holds(&self) -> bool {
        (!self.statement1 || self.statement2)
            && (!self.statement2 || self.statement3)
            && (!self.sms_nonempty || !self.statement3 || self.statement1)
    }
}

pub fn lin_res_sms_check(c: &Clutter, field: FieldTag) -> Result<LinResSmsReport> {
    let plus = ascent(c);
    if plus.is_empty() {
        return Err(Error::Precondition("the ascent is empty".into()));
    }
    let linear = |x: &Clutter| has_linear_resolution(x, field).holds();
    let mut common = linear(&plus);
    if common {
        for v in c.vertices().iter() {
            if !linear(&c.delete_vertex(v)?) {
                common = false;
                break;
            }
        }
    }
    let ms = crate::chordality::maximal_subcircuits(&plus);
    let sms = simplicial_maximal_subcircuits(&plus);
    let mut deletion_linear: HashMap<Face, bool> = HashMap::new();
    let mut check = |f: Face| -> Result<bool> {
        if let Some(&r) = deletion_linear.get(&f) {
            return Ok(r);
        }
        let r = linear(&c.remove_circuit(f)?);
        deletion_linear.insert(f, r);
        Ok(r)
    };
    let mut statement1 = false;
    if common {
        for &f in &ms {
            if check(f)? {
                statement1 = true;
                break;
            }
        }
    }
    let mut statement3 = common;
    if common {
        for &f in &sms {
            if !check(f)? {
                statement3 = false;
                break;
            }
        }
    }
    Ok(LinResSmsReport { field, sms_nonempty: !sms.is_empty(), statement1, statement2: linear(c), statement3 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallCodimReport {
    /// `C⁺ = ∅` and `I(C̄)` linear over both fields.
    pub hypothesis: bool,
    pub chordal: Option<bool>,
    pub cf_tree: Option<bool>,
}

impl SmallCodimReport {
    pub fn holds(&self) -> bool {
        !self.hypothesis || (self.chordal == Some(true) && self.cf_tree == Some(true))
    }
}

/// For `n ≤ d + 3`: empty ascent and linear resolution over both fields
/// should force chordality and the absence of `d`-cycles.
pub fn n_le_d_plus_3_check(c: &Clutter, budget: &Budget) -> Result<SmallCodimReport> {
    if c.n() > c.d() + 3 {
        return Err(Error::Precondition(format!("n = {} exceeds d + 3 = {}", c.n(), c.d() + 3)));
    }
    let hypothesis = ascent(c).is_empty() && FieldTag::ALL.iter().all(|&k| has_linear_resolution(c, k).holds());
    if !hypothesis {
        return Ok(SmallCodimReport { hypothesis, chordal: None, cf_tree: None });
    }
    Ok(SmallCodimReport { hypothesis, chordal: Some(is_chordal(c, budget)?.is_some()), cf_tree: Some(is_cf_tree(c)) })
}
