//! Maximal subcircuits, simplicial maximal subcircuits and chordality.
//!
//! A `d`-clutter is chordal when repeatedly deleting simplicial maximal
//! subcircuits can empty it. Whether the order of deletions matters is not
//! known, so [`is_chordal`] backtracks over every choice (with a memo of
//! failed clutters) rather than trusting a single greedy run.

pub mod vdec;
pub mod wchordal;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::clutter::Clutter;
use crate::face::Face;
use crate::{Error, Result};

pub use vdec::{
    eliminate_toward_vertex_deletion, is_shedding_vertex, is_vertex_decomposable, shedding_pure_criterion,
    SheddingCertificate,
};
pub use wchordal::{contraction, deletion, is_simplicial_vertex, is_w_chordal, SimplicialVertexRule};

/// `(d-1)`-faces contained in some circuit, sorted.
pub fn maximal_subcircuits(c: &Clutter) -> Vec<Face> {
    let mut out: Vec<Face> = c.circuits().iter().flat_map(|f| f.k_subsets(c.d())).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn check_subcircuit_dim(c: &Clutter, e: Face) -> Result<()> {
    if e.len() != c.d() {
        return Err(Error::DimensionMismatch { face: e, expected: c.d() as isize - 1, actual: e.dim() });
    }
    Ok(())
}

/// `N_C[e] = e ∪ { v : e ∪ {v} ∈ C }`.
pub fn closed_neighborhood(c: &Clutter, e: Face) -> Result<Face> {
    check_subcircuit_dim(c, e)?;
    Ok(c.circuits_containing(e).fold(e, |acc, f| acc.union(f)))
}

pub fn is_simplicial_subcircuit(c: &Clutter, e: Face) -> bool {
    match closed_neighborhood(c, e) {
        Ok(n) => n != e && c.is_clique(n),
        Err(_) => false,
    }
}

/// Maximal subcircuits whose closed neighborhood is a clique, sorted.
pub fn simplicial_maximal_subcircuits(c: &Clutter) -> Vec<Face> {
    maximal_subcircuits(c).into_iter().filter(|&e| is_simplicial_subcircuit(c, e)).collect()
}

/// Maximal subcircuits lying in exactly one circuit, sorted.
pub fn free_maximal_subcircuits(c: &Clutter) -> Vec<Face> {
    maximal_subcircuits(c).into_iter().filter(|&e| c.circuits_containing(e).count() == 1).collect()
}

/// `C - e`: drops every circuit containing the `(d-1)`-face `e`; the vertex
/// set is unchanged.
pub fn delete_subcircuit(c: &Clutter, e: Face) -> Result<Clutter> {
    check_subcircuit_dim(c, e)?;
    let circuits = c.circuits().iter().copied().filter(|f| !e.is_subset(*f)).collect();
    Ok(Clutter::from_sorted_unchecked(c.vertices(), c.d(), circuits))
}

/// An elimination sequence `e_1, …, e_t` with `e_i ∈ SMS(C_{i-1})` ending
/// in the clutter with no circuits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationCertificate {
    pub steps: Vec<Face>,
}

impl EliminationCertificate {
    /// Replays the steps from `c`, checking that every step is simplicial
    /// and that nothing is left at the end.
    pub fn verify(&self, c: &Clutter) -> Result<()> {
        let end = replay_elimination(c, &self.steps)?;
        if !end.is_empty() {
            return Err(Error::InvalidCertificate(format!("{} circuits remain after the last step", end.len())));
        }
        Ok(())
    }
}

/// Applies SMS deletions in order, failing on the first non-simplicial step.
pub fn replay_elimination(c: &Clutter, steps: &[Face]) -> Result<Clutter> {
    let mut cur = c.clone();
    for (i, &e) in steps.iter().enumerate() {
        if e.len() != c.d() || !is_simplicial_subcircuit(&cur, e) {
            return Err(Error::InvalidCertificate(format!(
                "step {} ({e}) is not a simplicial maximal subcircuit",
                i + 1
            )));
        }
        cur = delete_subcircuit(&cur, e)?;
    }
    Ok(cur)
}

/// Always deletes the first simplicial maximal subcircuit. Returns the steps
/// taken and the clutter where it stopped.
pub fn greedy_elimination(c: &Clutter) -> (Vec<Face>, Clutter) {
    let mut cur = c.clone();
    let mut steps = Vec::new();
    while let Some(&e) = simplicial_maximal_subcircuits(&cur).first() {
        steps.push(e);
        cur = delete_subcircuit(&cur, e).expect("dimension checked");
    }
    (steps, cur)
}

/// Decides chordality. `Ok(Some(cert))` iff an elimination sequence exists;
/// the certificate is the first one found under ascending canonical order.
pub fn is_chordal(c: &Clutter, budget: &Budget) -> Result<Option<EliminationCertificate>> {
    let mut failed = HashSet::new();
    let mut path = Vec::new();
    if eliminate(c, &mut failed, &mut path, budget)? {
        Ok(Some(EliminationCertificate { steps: path }))
    } else {
        Ok(None)
    }
}

fn eliminate(c: &Clutter, failed: &mut HashSet<Vec<Face>>, path: &mut Vec<Face>, budget: &Budget) -> Result<bool> {
    if c.is_empty() {
        return Ok(true);
    }
    if failed.contains(c.circuits()) {
        return Ok(false);
    }
    budget.tick()?;
    for e in simplicial_maximal_subcircuits(c) {
        let next = delete_subcircuit(c, e)?;
        path.push(e);
        if eliminate(&next, failed, path, budget)? {
            return Ok(true);
        }
        path.pop();
    }
    failed.insert(c.circuits().to_vec());
    Ok(false)
}
