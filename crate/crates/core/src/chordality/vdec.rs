//! Shedding vertices, vertex decomposability and the vertex-deletion
//! elimination built from a chordal link.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{is_chordal, replay_elimination};
use crate::budget::Budget;
use crate::clutter::Clutter;
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::{Error, Result};

/// True iff no facet of `Δ - v` is a face of `link_Δ v`. A vertex lying in
/// no face of `Δ` is never shedding.
pub fn is_shedding_vertex(d: &SimplicialComplex, v: usize) -> Result<bool> {
    if !d.vertices().contains(v) {
        return Err(Error::UnknownVertex(v + 1));
    }
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    if !d.used_vertices().contains(v) {
        return Ok(false);
    }
    let rest = d.delete_vertex(v)?;
    Ok(rest.facets().iter().all(|g| !d.contains(g.with(v))))
}

/// For pure `Δ` of dimension `k`: `Δ - v` is pure of dimension `k`.
pub fn shedding_pure_criterion(d: &SimplicialComplex, v: usize) -> Result<bool> {
    if !d.vertices().contains(v) {
        return Err(Error::UnknownVertex(v + 1));
    }
    if !d.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = d.dim().ok_or(Error::VoidComplex)?;
    if !d.used_vertices().contains(v) {
        return Ok(false);
    }
    let rest = d.delete_vertex(v)?;
    Ok(rest.is_pure() && rest.dim() == Some(dim))
}

/// A shedding tree: each node names a shedding vertex and certifies its
/// link and its deletion; leaves are simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SheddingCertificate {
    Simplex,
    Shed {
        #[serde(with = "label")]
        vertex: usize,
        link: Box<SheddingCertificate>,
        deletion: Box<SheddingCertificate>,
    },
}

pub(crate) mod label {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(*v as u64 + 1)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        let l = u64::deserialize(d)?;
        if l == 0 || l > 64 {
            return Err(serde::de::Error::custom(format!("invalid vertex label {l}")));
        }
        Ok(l as usize - 1)
    }
}

impl SheddingCertificate {
    /// Replays the tree against `d`.
    pub fn verify(&self, d: &SimplicialComplex) -> Result<()> {
        match self {
            SheddingCertificate::Simplex => {
                if d.is_simplex() {
                    Ok(())
                } else {
                    Err(Error::InvalidCertificate(format!("leaf is not a simplex: {d:?}")))
                }
            }
            SheddingCertificate::Shed { vertex, link, deletion } => {
                let v = *vertex;
                if !d.vertices().contains(v) || !is_shedding_vertex(d, v)? {
                    return Err(Error::InvalidCertificate(format!("{} is not a shedding vertex of {d:?}", v + 1)));
                }
                link.verify(&d.link(Face::singleton(v))?)?;
                deletion.verify(&d.delete_vertex(v)?)
            }
        }
    }

    /// Number of shedding steps in the tree.
    pub fn size(&self) -> usize {
        match self {
            SheddingCertificate::Simplex => 0,
            SheddingCertificate::Shed { link, deletion, .. } => 1 + link.size() + deletion.size(),
        }
    }
}

/// Decides vertex decomposability. `{∅}` is a simplex; the void complex is
/// an error.
pub fn is_vertex_decomposable(d: &SimplicialComplex, budget: &Budget) -> Result<Option<SheddingCertificate>> {
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut memo = HashMap::new();
    decompose(d, &mut memo, budget)
}

fn decompose(
    d: &SimplicialComplex,
    memo: &mut HashMap<Vec<Face>, Option<SheddingCertificate>>,
    budget: &Budget,
) -> Result<Option<SheddingCertificate>> {
    if d.is_simplex() {
        return Ok(Some(SheddingCertificate::Simplex));
    }
    if let Some(hit) = memo.get(d.facets()) {
        return Ok(hit.clone());
    }
    budget.tick()?;
    let mut found = None;
    for v in d.used_vertices().iter() {
        if !is_shedding_vertex(d, v)? {
            continue;
        }
        let Some(link) = decompose(&d.link(Face::singleton(v))?, memo, budget)? else {
            continue;
        };
        let Some(deletion) = decompose(&d.delete_vertex(v)?, memo, budget)? else {
            continue;
        };
        found = Some(SheddingCertificate::Shed { vertex: v, link: Box::new(link), deletion: Box::new(deletion) });
        break;
    }
    memo.insert(d.facets().to_vec(), found.clone());
    Ok(found)
}

/// `Facets(link_⟨C⟩ v)` as a `(d-1)`-clutter on `V \ {v}`.
pub fn link_clutter(c: &Clutter, v: usize) -> Result<Clutter> {
    if !c.vertices().contains(v) {
        return Err(Error::UnknownVertex(v + 1));
    }
    if c.d() == 0 {
        return Err(Error::Precondition("link clutters need d >= 1".into()));
    }
    let circuits = c.circuits().iter().filter(|f| f.contains(v)).map(|f| f.without(v));
    Clutter::new(c.vertices().without(v), c.d() - 1, circuits)
}

/// Builds SMS deletions taking `C` to `C - v` by lifting an elimination of
/// the link clutter of `v`. Requires `v` to be a shedding vertex of `⟨C∨⟩`
/// and the link clutter to be chordal; the error lists each failed
/// requirement.
pub fn eliminate_toward_vertex_deletion(c: &Clutter, v: usize, budget: &Budget) -> Result<Vec<Face>> {
    if !c.vertices().contains(v) {
        return Err(Error::UnknownVertex(v + 1));
    }
    if !c.support().contains(v) {
        return Ok(Vec::new());
    }
    let link = link_clutter(c, v)?;
    let gamma = SimplicialComplex::from_general(&c.dual_clutter());
    let mut failed = Vec::new();
    if gamma.is_void() || !is_shedding_vertex(&gamma, v)? {
        failed.push(format!("{} is not a shedding vertex of the dual complex", v + 1));
    }
    let cert = is_chordal(&link, budget)?;
    if cert.is_none() {
        failed.push(format!("the link clutter of {} is not chordal", v + 1));
    }
    if !failed.is_empty() {
        return Err(Error::Precondition(failed.join("; ")));
    }
    let steps: Vec<Face> = cert.expect("checked").steps.into_iter().map(|e| e.with(v)).collect();
    debug_assert!(
        replay_elimination(c, &steps).is_ok_and(|end| end.circuits() == c.delete_vertex(v).unwrap().circuits())
    );
    Ok(steps)
}
