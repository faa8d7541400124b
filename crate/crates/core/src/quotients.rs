//! Admissible orders and linear quotients of squarefree ideals, given by the
//! supports of their generators.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::ascent::ascent;
use crate::budget::Budget;
use crate::chordality::{closed_neighborhood, simplicial_maximal_subcircuits};
use crate::clutter::Clutter;
use crate::face::{binomial, Face};
use crate::homology::{clutter_betti, has_linear_resolution, BettiTable, FieldTag};
use crate::{Error, Result};

fn check_generators(faces: &[Face]) -> Result<()> {
    if let Some(first) = faces.first() {
        if faces.iter().any(|f| f.len() != first.len()) {
            return Err(Error::MixedDimensions);
        }
    }
    let mut seen = HashSet::new();
    for &f in faces {
        if !seen.insert(f) {
            return Err(Error::RepeatedGenerator(f));
        }
    }
    Ok(())
}

/// Whether `g` may follow the generators `before`: for every earlier `F_j`
/// some `l ∈ F_j \ g` has `F_k \ g = {l}` for an earlier `F_k`. Returns the
/// first `j` that fails.
fn first_blocking(before: &[Face], g: Face) -> Option<usize> {
    let singles = before.iter().map(|f| f.difference(g)).filter(|d| d.len() == 1).fold(Face::EMPTY, Face::union);
    before.iter().position(|f| f.difference(g).intersection(singles).is_empty())
}

/// First violation `(i, j)` of the admissibility criterion (0-based
/// positions, smallest `i`, then smallest `j`), or `None` if admissible.
pub fn admissibility_violation(order: &[Face]) -> Result<Option<(usize, usize)>> {
    check_generators(order)?;
    Ok((1..order.len()).find_map(|i| first_blocking(&order[..i], order[i]).map(|j| (i, j))))
}

pub fn is_admissible_order(order: &[Face]) -> Result<bool> {
    Ok(admissibility_violation(order)?.is_none())
}

/// `Ok(())` for an admissible order, otherwise [`Error::InadmissibleOrder`].
pub fn check_admissible(order: &[Face]) -> Result<()> {
    match admissibility_violation(order)? {
        None => Ok(()),
        Some((position, earlier)) => Err(Error::InadmissibleOrder { position, earlier }),
    }
}

/// An admissible order checked against its generator set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleOrder {
    pub order: Vec<Face>,
}

impl AdmissibleOrder {
    /// Checks that the order is admissible and lists exactly `generators`.
    pub fn verify(&self, generators: &[Face]) -> Result<()> {
        check_admissible(&self.order)?;
        same_set(&self.order, generators)
    }
}

fn same_set(order: &[Face], generators: &[Face]) -> Result<()> {
    let mut a = order.to_vec();
    let mut b = generators.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        let missing = b.iter().filter(|f| !a.contains(f)).count();
        let extra = a.iter().filter(|f| !b.contains(f)).count();
        return Err(Error::WrongGenerators(format!("{missing} generators missing, {extra} unexpected")));
    }
    Ok(())
}

/// Searches for an admissible order of `generators`. Prefixes are extended
/// in canonical order and failed prefix sets are memoized, which is sound
/// because extendability depends only on the set of earlier generators.
pub fn has_linear_quotients(generators: &[Face], budget: &Budget) -> Result<Option<AdmissibleOrder>> {
    check_generators(generators)?;
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    let words = gens.len().div_ceil(64);
    let mut search = Search { gens: &gens, failed: HashSet::new(), budget };
    let mut used = vec![0u64; words];
    let mut order = Vec::with_capacity(gens.len());
    if search.extend(&mut used, &mut order)? {
        Ok(Some(AdmissibleOrder { order }))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    gens: &'a [Face],
    failed: HashSet<Vec<u64>>,
    budget: &'a Budget,
}

impl Search<'_> {
    fn extend(&mut self, used: &mut Vec<u64>, order: &mut Vec<Face>) -> Result<bool> {
        if order.len() == self.gens.len() {
            return Ok(true);
        }
        if self.failed.contains(used) {
            return Ok(false);
        }
        self.budget.tick()?;
        for (idx, &g) in self.gens.iter().enumerate() {
            if used[idx / 64] >> (idx % 64) & 1 == 1 || first_blocking(order, g).is_some() {
                continue;
            }
            used[idx / 64] |= 1 << (idx % 64);
            order.push(g);
            if self.extend(used, order)? {
                return Ok(true);
            }
            order.pop();
            used[idx / 64] &= !(1 << (idx % 64));
        }
        self.failed.insert(used.clone());
        Ok(false)
    }
}

/// From an admissible order `F_1, …, F_t` of `I(C̄)`, the order of `I(C̄⁺)`
/// made of the blocks `{F_i ∪ {v}} \ (earlier blocks)`, each sorted.
pub fn ascent_order(c: &Clutter, order: &[Face]) -> Result<Vec<Face>> {
    AdmissibleOrder { order: order.to_vec() }.verify(c.complement().circuits())?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &f in order {
        let mut block: Vec<Face> =
            c.vertices().difference(f).iter().map(|v| f.with(v)).filter(|g| !seen.contains(g)).collect();
        block.sort_unstable();
        seen.extend(block.iter().copied());
        out.extend(block);
    }
    Ok(out)
}

/// `order ++ [F]`, an admissible order for `I(complement(C - F))` when
/// `F ∈ SMS(C⁺)`.
pub fn append_sms_generator(c: &Clutter, order: &[Face], f: Face) -> Result<Vec<Face>> {
    AdmissibleOrder { order: order.to_vec() }.verify(c.complement().circuits())?;
    let plus = ascent(c);
    if f.len() != c.d() + 1 || !simplicial_maximal_subcircuits(&plus).contains(&f) {
        return Err(Error::Precondition(format!("{f} is not a simplicial maximal subcircuit of the ascent")));
    }
    let mut out = order.to_vec();
    out.push(f);
    Ok(out)
}

/// The generators avoiding `v`, in order.
pub fn restrict_order_by_vertex(order: &[Face], v: usize) -> Vec<Face> {
    order.iter().copied().filter(|f| !f.contains(v)).collect()
}

/// Both Betti tables of the SMS-deletion identity
/// `β_i(J) = β_i(I) + C(t, i)` with `I = I(C̄)`, `J = I(complement(C - F))`
/// and `t = n - |N_{C⁺}[F]|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSmsReport {
    pub face: Face,
    pub t: usize,
    pub before: BettiTable,
    pub after: BettiTable,
    /// First `i` where the identity fails.
    pub mismatch: Option<usize>,
}

impl BettiSmsReport {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn betti_after_sms_deletion(c: &Clutter, f: Face, field: FieldTag) -> Result<BettiSmsReport> {
    let mut failed = Vec::new();
    if !has_linear_resolution(c, field).holds() {
        failed.push(format!("I(C̄) has no linear resolution over {field}"));
    }
    let plus = ascent(c);
    if f.len() != c.d() + 1 || !simplicial_maximal_subcircuits(&plus).contains(&f) {
        failed.push(format!("{f} is not a simplicial maximal subcircuit of the ascent"));
    }
    if !failed.is_empty() {
        return Err(Error::Precondition(failed.join("; ")));
    }
    let t = c.n() - closed_neighborhood(&plus, f)?.len();
    let before = clutter_betti(c, field);
    let after = clutter_betti(&c.remove_circuit(f)?, field);
    let top = before.length().unwrap_or(0).max(after.length().unwrap_or(0)).max(t);
    let mismatch = (0..=top).find(|&i| after.total(i) != before.total(i) + binomial(t, i));
    Ok(BettiSmsReport { face: f, t, before, after, mismatch })
}
