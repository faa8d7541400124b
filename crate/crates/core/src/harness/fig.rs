//! Search for a non-chordal graph that satisfies the conclusions of the
//! ascent and edge-order theorems, showing that their converses fail.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::ascent::{ascent, is_cf_tree, EdgeOrder};
use crate::budget::Budget;
use crate::chordality::{is_chordal, simplicial_maximal_subcircuits};
use crate::clutter::Clutter;
use crate::face::Face;
use crate::quotients::has_linear_quotients;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigWitness {
    pub graph: Clutter,
    /// The vertex whose deletion leaves a 5-cycle.
    #[serde(with = "crate::chordality::vdec::label")]
    pub vertex: usize,
    /// `SMS(C⁺)`.
    pub simplicial_edges: Vec<Face>,
    pub edge_order: EdgeOrder,
}

/// Edge order in the two-phase shape without asking the intermediate
/// graphs to be chordal: simplicial edges (members of `SMS(C_i⁺)`) while
/// the ascent is nonempty, then leaf edges of the remaining forest.
pub fn relaxed_edge_order(c: &Clutter, budget: &Budget) -> Result<Option<EdgeOrder>> {
    let mut failed = HashSet::new();
    let mut prefix = Vec::new();
    if !prefix_search(c, &mut failed, &mut prefix, budget)? {
        return Ok(None);
    }
    let simplicial_prefix = prefix.len();
    let mut cur = c.clone();
    for &e in &prefix {
        cur = cur.remove_circuit(e)?;
    }
    let mut edges = prefix;
    while let Some(&e) = cur.circuits().iter().find(|&&e| is_leaf(&cur, e)) {
        edges.push(e);
        cur = cur.remove_circuit(e)?;
    }
    Ok(Some(EdgeOrder { edges, simplicial_prefix }))
}

fn is_leaf(c: &Clutter, e: Face) -> bool {
    e.iter().any(|v| c.circuits().iter().filter(|f| f.contains(v)).count() == 1)
}

fn prefix_search(c: &Clutter, failed: &mut HashSet<Vec<Face>>, path: &mut Vec<Face>, budget: &Budget) -> Result<bool> {
    let plus = ascent(c);
    if plus.is_empty() {
        return Ok(is_cf_tree(c));
    }
    if failed.contains(c.circuits()) {
        return Ok(false);
    }
    budget.tick()?;
    for f in simplicial_maximal_subcircuits(&plus) {
        path.push(f);
        if prefix_search(&c.remove_circuit(f)?, failed, path, budget)? {
            return Ok(true);
        }
        path.pop();
    }
    failed.insert(c.circuits().to_vec());
    Ok(false)
}

/// `v` such that the edges avoiding `v` form exactly a 5-cycle.
fn five_cycle_vertex(c: &Clutter) -> Option<usize> {
    c.vertices().iter().find(|&v| {
        let rest: Vec<Face> = c.circuits().iter().copied().filter(|e| !e.contains(v)).collect();
        let support = rest.iter().fold(Face::EMPTY, |a, &e| a.union(e));
        if rest.len() != 5 || support.len() != 5 {
            return false;
        }
        if support.iter().any(|u| rest.iter().filter(|e| e.contains(u)).count() != 2) {
            return false;
        }
        // 2-regular on 5 vertices is a 5-cycle unless it splits; 5 vertices
        // cannot split into cycles of length at least 3
        true
    })
}

fn witness(c: &Clutter, budget: &Budget) -> Result<Option<FigWitness>> {
    let Some(vertex) = five_cycle_vertex(c) else { return Ok(None) };
    if is_chordal(c, budget)?.is_some() {
        return Ok(None);
    }
    let plus = ascent(c);
    if is_chordal(&plus, budget)?.is_none() {
        return Ok(None);
    }
    let lq = |x: &Clutter| -> Result<bool> { Ok(has_linear_quotients(x.complement().circuits(), budget)?.is_some()) };
    if !lq(&plus)? {
        return Ok(None);
    }
    let sms = simplicial_maximal_subcircuits(&plus);
    if sms.is_empty() {
        return Ok(None);
    }
    for &f in &sms {
        let minus = c.remove_circuit(f)?;
        if is_chordal(&minus, budget)?.is_none() || !lq(&minus)? {
            return Ok(None);
        }
    }
    let Some(edge_order) = relaxed_edge_order(c, budget)? else { return Ok(None) };
    Ok(Some(FigWitness { graph: c.clone(), vertex, simplicial_edges: sms, edge_order }))
}

/// First graph on `5..=max_n` vertices (by vertex count, then edge bitmask
/// over lexicographically sorted pairs) that is not chordal, has a vertex
/// whose deletion leaves a 5-cycle, has chordal `C⁺` with `I(C̄⁺)` having
/// linear quotients, nonempty `SMS(C⁺)` with `C - F` chordal and `I(C̄ - F)`
/// having linear quotients for every member, and a relaxed edge order.
pub fn find_fig_graph(max_n: usize, budget: &Budget) -> Result<Option<FigWitness>> {
    for n in 5..=max_n.min(7) {
        let pairs: Vec<Face> = Face::full(n)?.k_subsets(2).collect();
        for mask in 0u64..1 << pairs.len() {
            if mask.count_ones() < 6 {
                continue;
            }
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let c = Clutter::on_n(n, 1, edges)?;
            if let Some(w) = witness(&c, budget)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
