//! Deletion, contraction, simplicial vertices and W-chordality of general
//! clutters.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::clutter::GeneralClutter;
use crate::{Error, Result};

/// Which pairs of edges through `v` the simplicial-vertex test ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimplicialVertexRule {
    /// Only distinct pairs `e1 ≠ e2`; a vertex in one edge is simplicial.
    #[default]
    Distinct,
    /// Also `e1 = e2`, which no edge through `v` can satisfy in an antichain.
    Strict,
}

fn check_vertex(d: &GeneralClutter, v: usize) -> Result<()> {
    if d.vertices().contains(v) {
        Ok(())
    } else {
        Err(Error::UnknownVertex(v + 1))
    }
}

/// `D \ v`: edges avoiding `v`, on `V \ {v}`.
pub fn deletion(d: &GeneralClutter, v: usize) -> Result<GeneralClutter> {
    check_vertex(d, v)?;
    Ok(GeneralClutter::minimal_sets(d.vertices().without(v), d.edges().iter().copied().filter(|e| !e.contains(v))))
}

/// `D / v`: minimal sets of `{ e \ {v} : e ∈ D }`, on `V \ {v}`.
pub fn contraction(d: &GeneralClutter, v: usize) -> Result<GeneralClutter> {
    check_vertex(d, v)?;
    Ok(GeneralClutter::minimal_sets(d.vertices().without(v), d.edges().iter().map(|e| e.without(v))))
}

pub fn is_simplicial_vertex(d: &GeneralClutter, v: usize, rule: SimplicialVertexRule) -> Result<bool> {
    check_vertex(d, v)?;
    let through: Vec<_> = d.edges().iter().copied().filter(|e| e.contains(v)).collect();
    for (i, &e1) in through.iter().enumerate() {
        let start = if rule == SimplicialVertexRule::Strict { i } else { i + 1 };
        for &e2 in &through[start..] {
            let target = e1.union(e2).without(v);
            if !d.edges().iter().any(|e3| e3.is_subset(target)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every clutter reachable by deletions and contractions (including `D`)
/// has a simplicial vertex. Clutters on no vertices count as W-chordal.
pub fn is_w_chordal(d: &GeneralClutter, rule: SimplicialVertexRule, budget: &Budget) -> Result<bool> {
    let mut memo = HashMap::new();
    w_chordal(d, rule, &mut memo, budget)
}

fn w_chordal(
    d: &GeneralClutter,
    rule: SimplicialVertexRule,
    memo: &mut HashMap<GeneralClutter, bool>,
    budget: &Budget,
) -> Result<bool> {
    if d.vertices().is_empty() {
        return Ok(true);
    }
    if let Some(&hit) = memo.get(d) {
        return Ok(hit);
    }
    budget.tick()?;
    let mut ok = false;
    for v in d.vertices().iter() {
        if is_simplicial_vertex(d, v, rule)? {
            ok = true;
            break;
        }
    }
    if ok {
        for v in d.vertices().iter() {
            if !w_chordal(&deletion(d, v)?, rule, memo, budget)? || !w_chordal(&contraction(d, v)?, rule, memo, budget)?
            {
                ok = false;
                break;
            }
        }
    }
    memo.insert(d.clone(), ok);
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::Face;

    #[test]
    fn contraction_examples() {
        let d = GeneralClutter::from_digits(4, &["12", "13", "234"]);
        let c = contraction(&d, 1).unwrap();
        assert_eq!(c.edges(), &[Face::digits("1"), Face::digits("34")]);
        assert_eq!(c.vertices(), Face::digits("134"));
        let one = GeneralClutter::from_digits(3, &["123"]);
        assert_eq!(contraction(&one, 0).unwrap().edges(), &[Face::digits("23")]);
        let d = GeneralClutter::from_digits(4, &["12", "23"]);
        assert_eq!(contraction(&d, 3).unwrap().edges(), d.edges());
        assert_eq!(contraction(&d, 9), Err(Error::UnknownVertex(10)));
    }

    #[test]
    fn simplicial_vertex_examples() {
        let r = SimplicialVertexRule::Distinct;
        let tri = GeneralClutter::from_digits(3, &["12", "13", "23"]);
        assert!(is_simplicial_vertex(&tri, 0, r).unwrap());
        let c4 = GeneralClutter::from_digits(4, &["12", "23", "34", "14"]);
        assert!(!is_simplicial_vertex(&c4, 0, r).unwrap());
        let d = GeneralClutter::from_digits(4, &["12"]);
        assert!(is_simplicial_vertex(&d, 3, r).unwrap());
        assert!(is_simplicial_vertex(&d, 0, r).unwrap());
        assert!(!is_simplicial_vertex(&d, 0, SimplicialVertexRule::Strict).unwrap());
        assert!(is_simplicial_vertex(&d, 3, SimplicialVertexRule::Strict).unwrap());
    }

    #[test]
    fn w_chordality_examples() {
        let b = Budget::default();
        let r = SimplicialVertexRule::Distinct;
        let tree = GeneralClutter::from_digits(5, &["12", "23", "24", "45"]);
        assert!(is_w_chordal(&tree, r, &b).unwrap());
        let c4 = GeneralClutter::from_digits(4, &["12", "23", "34", "14"]);
        assert!(!is_w_chordal(&c4, r, &b).unwrap());
        let two = GeneralClutter::from_digits(4, &["123", "234"]);
        assert!(is_w_chordal(&two, r, &b).unwrap());
        assert!(is_w_chordal(&GeneralClutter::on_n(0, []).unwrap(), r, &b).unwrap());
        assert!(is_w_chordal(&GeneralClutter::on_n(3, []).unwrap(), r, &b).unwrap());
    }

    #[test]
    fn strict_rule_rejects_any_edge() {
        let b = Budget::default();
        let d = GeneralClutter::from_digits(2, &["12"]);
        assert!(!is_w_chordal(&d, SimplicialVertexRule::Strict, &b).unwrap());
    }
}
