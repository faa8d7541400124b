//! Proven statements as executable checks, and the open statements the
//! sweeps hunt for counterexamples to.

use serde::{Deserialize, Serialize};

use crate::ascent::{
    ascent, chordal_edge_order, is_cf_chordal, is_d_chorded, lin_res_sms_check, n_le_d_plus_3_check, LinResSmsReport,
};
use crate::budget::Budget;
use crate::certificate::dual_complex;
use crate::chordality::vdec::link_clutter;
use crate::chordality::{
    delete_subcircuit, eliminate_toward_vertex_deletion, free_maximal_subcircuits, greedy_elimination, is_chordal,
    is_shedding_vertex, is_simplicial_subcircuit, is_vertex_decomposable, is_w_chordal, maximal_subcircuits,
    replay_elimination, shedding_pure_criterion, simplicial_maximal_subcircuits, SimplicialVertexRule,
};
use crate::clutter::{Clutter, GeneralClutter};
use crate::complex::{clique_complex, SimplicialComplex};
use crate::homology::{has_linear_resolution, reduced_homology_from, subsets_by_size, FieldTag};
use crate::quotients::{
    append_sms_generator, ascent_order, betti_after_sms_deletion, has_linear_quotients, restrict_order_by_vertex,
    AdmissibleOrder,
};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Must never fail.
    Proven,
    /// Outcomes are logged; a hit is a candidate counterexample.
    Open,
}

/// Result of one check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// Hypothesis not met.
    Skip(String),
    /// A proven statement failed, or an open one has a candidate
    /// counterexample.
    Fail(String),
}

pub type Check = fn(&Clutter, &Budget) -> Result<Verdict>;

#[derive(Clone, Copy, Debug)]
pub struct Theorem {
    pub id: &'static str,
    pub status: Status,
    pub statement: &'static str,
    pub check: Check,
}

pub const REGISTRY: &[Theorem] = &[
    Theorem {
        id: "transition",
        status: Status::Proven,
        statement: "I(C̄) = I_Δ(C) and ⟨C∨⟩ = Δ(C)∨",
        check: transition,
    },
    Theorem {
        id: "shedding-pure",
        status: Status::Proven,
        statement: "on pure Γ = ⟨C∨⟩, v is shedding iff Γ - v is pure of the same dimension",
        check: shedding_pure,
    },
    Theorem {
        id: "dual-of-link",
        status: Status::Proven,
        statement: "for shedding v of Γ: link v = pure skeleton of (Γ - v)∨, ⟨D∨⟩ = Γ - v, e ∈ SMS(D) iff ev ∈ SMS(C)",
        check: dual_of_link,
    },
    Theorem {
        id: "shedding-stable",
        status: Status::Proven,
        statement: "v shedding and v ∈ e ∈ MS(C) ⇒ v shedding for C - e, with link facets D - e'",
        check: shedding_stable,
    },
    Theorem {
        id: "ver-del",
        status: Status::Proven,
        statement: "v shedding with chordal link ⇒ SMS deletions take C to C - v",
        check: ver_del,
    },
    Theorem {
        id: "almost-complete",
        status: Status::Proven,
        statement: "complete minus one circuit is chordal",
        check: almost_complete,
    },
    Theorem {
        id: "vdec-main",
        status: Status::Proven,
        statement: "⟨C∨⟩ vertex decomposable ⇒ C chordal",
        check: vdec_main,
    },
    Theorem {
        id: "w-chordal",
        status: Status::Proven,
        statement: "D W-chordal ⇒ its minimum-size layer is chordal",
        check: w_chordal,
    },
    Theorem {
        id: "froberg",
        status: Status::Proven,
        statement: "a graph is chordal iff I(C̄) has a linear resolution",
        check: froberg,
    },
    Theorem {
        id: "lin-res-plus",
        status: Status::Proven,
        statement: "I(C̄) linear iff I(C̄⁺) linear and H̃_d(Δ(C)_W) = 0 for all W",
        check: lin_res_plus,
    },
    Theorem {
        id: "cf1-main",
        status: Status::Proven,
        statement: "H̃_d(Δ(C)_W; GF(2)) = 0 for all W iff ⟨C⟩ is d-chorded",
        check: cf1_main,
    },
    Theorem {
        id: "cf2-main",
        status: Status::Proven,
        statement: "I(C̄) linear over GF(2) iff C is CF-chordal",
        check: cf2_main,
    },
    Theorem {
        id: "chordal-plus", status: Status::Proven, statement: "C chordal ⇒ C⁺ chordal", check: chordal_plus
    },
    Theorem {
        id: "lin-res-sms",
        status: Status::Proven,
        statement: "(1) ⇒ (2) ⇒ (3), and (3) ⇒ (1) when SMS(C⁺) ≠ ∅",
        check: lin_res_sms,
    },
    Theorem {
        id: "betti-sms",
        status: Status::Proven,
        statement: "β_i(I(C̄ - F)) = β_i(I(C̄)) + C(t, i) for F ∈ SMS(C⁺)",
        check: betti_sms,
    },
    Theorem {
        id: "lin-q-plus",
        status: Status::Proven,
        statement: "I(C̄) linear quotients ⇒ so do I(C̄⁺), I(C̄ - F) for F ∈ SMS(C⁺), and I(C̄ - v)",
        check: lin_q_plus,
    },
    Theorem {
        id: "c-f-chorded",
        status: Status::Proven,
        statement: "⟨C⟩ d-chorded and F ∈ SMS(C⁺) ⇒ ⟨C - F⟩ d-chorded",
        check: c_f_chorded,
    },
    Theorem {
        id: "chordal-edge-order",
        status: Status::Proven,
        statement: "chordal graph minus a simplicial edge is chordal; edge orders exist",
        check: chordal_edge_order_check,
    },
    Theorem {
        id: "n-le-d-plus-3",
        status: Status::Proven,
        statement: "n ≤ d + 3, C⁺ = ∅ and linear over every field ⇒ chordal CF-tree",
        check: n_le_d_plus_3,
    },
    Theorem {
        id: "statement-b",
        status: Status::Open,
        statement: "I(C̄) linear quotients ⇒ C chordal",
        check: statement_b,
    },
    Theorem {
        id: "lin-q-plus-converse",
        status: Status::Open,
        statement:
            "SMS(C⁺) ≠ ∅ and I(C̄⁺), all I(C̄ - F) for F ∈ SMS(C⁺), all I(C̄ - v) linear quotients ⇒ I(C̄) linear quotients",
        check: lin_q_plus_converse,
    },
    Theorem {
        id: "lin-res-sms-equivalence",
        status: Status::Open,
        statement: "(1), (2), (3) equivalent even when SMS(C⁺) = ∅",
        check: lin_res_sms_equivalence,
    },
    Theorem {
        id: "sms-empty-with-3",
        status: Status::Open,
        statement: "no C with C⁺ ≠ ∅, SMS(C⁺) = ∅ and (3)",
        check: sms_empty_with_3,
    },
    Theorem {
        id: "statement-d-prime",
        status: Status::Open,
        statement: "C⁺ = ∅ and I(C̄) linear quotients ⇒ C has a free maximal subcircuit",
        check: statement_d_prime,
    },
    Theorem {
        id: "greedy-elimination",
        status: Status::Open,
        statement: "greedy SMS deletion decides chordality",
        check: greedy_elimination_check,
    },
];

pub fn lookup(id: &str) -> Option<&'static Theorem> {
    REGISTRY.iter().find(|t| t.id == id)
}

fn skip(reason: &str) -> Result<Verdict> {
    Ok(Verdict::Skip(reason.to_string()))
}

fn fail(detail: String) -> Result<Verdict> {
    Ok(Verdict::Fail(detail))
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Result<Verdict> {
    Ok(if ok { Verdict::Pass } else { Verdict::Fail(detail()) })
}

fn linear(c: &Clutter, field: FieldTag) -> bool {
    has_linear_resolution(c, field).holds()
}

/// `H̃_d(Δ(C)_W; K) = 0` for every `W`.
pub fn top_homology_vanishes(c: &Clutter, field: FieldTag) -> bool {
    let full = clique_complex(c);
    let d = c.d() as isize;
    subsets_by_size(c.vertices()).iter().all(|&w| reduced_homology_from(&full.restrict(w), field, d).get(d) == 0)
}

fn transition(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let delta = clique_complex(c);
    let gens = delta.stanley_reisner_generators();
    if gens != c.complement().circuits() {
        return fail(format!("minimal nonfaces of Δ(C) are {gens:?}"));
    }
    let dual = delta.alexander_dual();
    let gamma = dual_complex(c);
    verdict(dual.facets() == gamma.facets(), || format!("Δ(C)∨ = {dual:?} but ⟨C∨⟩ = {gamma:?}"))
}

fn shedding_pure(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let gamma = dual_complex(c);
    if gamma.is_void() || !gamma.is_pure() {
        return skip("⟨C∨⟩ void or impure");
    }
    for v in gamma.vertices().iter() {
        let a = is_shedding_vertex(&gamma, v)?;
        let b = shedding_pure_criterion(&gamma, v)?;
        if a != b {
            return fail(format!("vertex {}: shedding {a}, criterion {b}", v + 1));
        }
    }
    Ok(Verdict::Pass)
}

fn shedding_vertices(c: &Clutter) -> Result<Vec<usize>> {
    let gamma = dual_complex(c);
    if gamma.is_void() || c.d() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for v in gamma.vertices().iter() {
        if is_shedding_vertex(&gamma, v)? {
            out.push(v);
        }
    }
    Ok(out)
}

fn dual_of_link(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let shed = shedding_vertices(c)?;
    if shed.is_empty() {
        return skip("no shedding vertex");
    }
    let gamma = dual_complex(c);
    let delta = SimplicialComplex::from_clutter(c);
    let d = c.d() as isize;
    let support = c.support();
    let shed: Vec<usize> = shed.into_iter().filter(|&v| support.contains(v)).collect();
    if shed.is_empty() {
        return skip("no shedding vertex of ⟨C∨⟩ is a vertex of ⟨C⟩");
    }
    for v in shed {
        let label = v + 1;
        let link = delta.link(crate::face::Face::singleton(v))?;
        let rest = gamma.delete_vertex(v)?;
        let skeleton = rest.alexander_dual().pure_skeleton(d - 1)?;
        if link.facets() != skeleton.facets() {
            return fail(format!("part 1 at {label}: link {link:?}, skeleton {skeleton:?}"));
        }
        let lc = link_clutter(c, v)?;
        let lc_dual = dual_complex(&lc);
        if lc_dual.facets() != rest.facets() {
            return fail(format!("part 2 at {label}: ⟨D∨⟩ = {lc_dual:?}, Γ - v = {rest:?}"));
        }
        let sms = simplicial_maximal_subcircuits(&lc);
        for e in maximal_subcircuits(&lc) {
            if sms.contains(&e) != is_simplicial_subcircuit(c, e.with(v)) {
                return fail(format!("part 3 at {label}: e = {e}"));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn shedding_stable(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let shed = shedding_vertices(c)?;
    if shed.is_empty() {
        return skip("no shedding vertex");
    }
    for v in shed {
        let before = link_clutter(c, v)?;
        for e in maximal_subcircuits(c).into_iter().filter(|e| e.contains(v)) {
            let smaller = delete_subcircuit(c, e)?;
            let gamma = dual_complex(&smaller);
            if gamma.is_void() || !is_shedding_vertex(&gamma, v)? {
                return fail(format!("{} not shedding after deleting {e}", v + 1));
            }
            let expected = delete_subcircuit(&before, e.without(v))?;
            let after = link_clutter(&smaller, v)?;
            if after.circuits() != expected.circuits() {
                return fail(format!("link facets after deleting {e}: {after}, expected {expected}"));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn ver_del(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    let mut any = false;
    for v in shedding_vertices(c)? {
        if is_chordal(&link_clutter(c, v)?, budget)?.is_none() {
            continue;
        }
        any = true;
        let steps = eliminate_toward_vertex_deletion(c, v, budget)?;
        let end = replay_elimination(c, &steps)?;
        let target = c.delete_vertex(v)?;
        if end.circuits() != target.circuits() {
            return fail(format!("vertex {}: replay ends at {end}", v + 1));
        }
    }
    if any {
        Ok(Verdict::Pass)
    } else {
        skip("no shedding vertex with chordal link")
    }
}

fn almost_complete(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if c.complement().len() != 1 {
        return skip("not complete minus one circuit");
    }
    verdict(is_chordal(c, budget)?.is_some(), || "not chordal".into())
}

fn vdec_main(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    let gamma = dual_complex(c);
    if gamma.is_void() || is_vertex_decomposable(&gamma, budget)?.is_none() {
        return skip("⟨C∨⟩ not vertex decomposable");
    }
    verdict(is_chordal(c, budget)?.is_some(), || "⟨C∨⟩ vertex decomposable but C not chordal".into())
}

/// `C` itself, and `C` together with one `(d+2)`-set per non-circuit that
/// avoids every circuit.
fn w_chordal(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    let v = c.vertices();
    let extra = c
        .complement()
        .circuits()
        .iter()
        .filter_map(|&f| v.difference(f).min_vertex().map(|u| f.with(u)))
        .collect::<Vec<_>>();
    let mixed = GeneralClutter::minimal_sets(v, c.circuits().iter().copied().chain(extra));
    let mut any = false;
    for d in [c.to_general(), mixed] {
        if d.is_empty() || !is_w_chordal(&d, SimplicialVertexRule::Distinct, budget)? {
            continue;
        }
        any = true;
        let layer = d.min_layer().expect("nonempty");
        if is_chordal(&layer, budget)?.is_none() {
            return fail(format!("W-chordal {d:?} with non-chordal layer"));
        }
    }
    if any {
        Ok(Verdict::Pass)
    } else {
        skip("not W-chordal")
    }
}

fn froberg(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if c.d() != 1 {
        return skip("not a graph");
    }
    let chordal = is_chordal(c, budget)?.is_some();
    for k in FieldTag::ALL {
        if linear(c, k) != chordal {
            return fail(format!("chordal {chordal}, linear over {k} {}", !chordal));
        }
    }
    Ok(Verdict::Pass)
}

fn lin_res_plus(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let plus = ascent(c);
    for k in FieldTag::ALL {
        let left = linear(c, k);
        let right = linear(&plus, k) && top_homology_vanishes(c, k);
        if left != right {
            return fail(format!("over {k}: C linear {left}, C⁺ linear and H̃_d vanishing {right}"));
        }
    }
    Ok(Verdict::Pass)
}

fn cf1_main(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let left = top_homology_vanishes(c, FieldTag::Gf2);
    let right = is_d_chorded(c)?;
    verdict(left == right.holds(), || format!("H̃_d vanishing {left}, chordedness {right:?}"))
}

fn cf2_main(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let left = linear(c, FieldTag::Gf2);
    let right = is_cf_chordal(c)?;
    verdict(left == right, || format!("linear over GF(2) {left}, CF-chordal {right}"))
}

fn chordal_plus(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if is_chordal(c, budget)?.is_none() {
        return skip("not chordal");
    }
    let plus = ascent(c);
    verdict(is_chordal(&plus, budget)?.is_some(), || format!("C⁺ = {plus} is not chordal"))
}

fn sms_reports(c: &Clutter) -> Result<Option<Vec<LinResSmsReport>>> {
    if ascent(c).is_empty() {
        return Ok(None);
    }
    FieldTag::ALL.iter().map(|&k| lin_res_sms_check(c, k)).collect::<Result<Vec<_>>>().map(Some)
}

fn lin_res_sms(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let Some(reports) = sms_reports(c)? else { return skip("empty ascent") };
    match reports.iter().find(|r| !r.holds()) {
        None => Ok(Verdict::Pass),
        Some(r) => fail(format!("{r:?}")),
    }
}

fn betti_sms(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let sms = simplicial_maximal_subcircuits(&ascent(c));
    if sms.is_empty() {
        return skip("SMS(C⁺) empty");
    }
    let mut any = false;
    for k in FieldTag::ALL {
        if !linear(c, k) {
            continue;
        }
        any = true;
        for &f in &sms {
            let r = betti_after_sms_deletion(c, f, k)?;
            if !r.holds() {
                return fail(format!("over {k}, F = {f}: {r:?}"));
            }
            if !linear(&c.remove_circuit(f)?, k) {
                return fail(format!("over {k}: C - {f} is not linear"));
            }
        }
    }
    if any {
        Ok(Verdict::Pass)
    } else {
        skip("no linear resolution")
    }
}

fn lin_q_plus(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    let Some(found) = has_linear_quotients(c.complement().circuits(), budget)? else {
        return skip("no linear quotients");
    };
    let order = found.order;
    let plus = ascent(c);
    let up = ascent_order(c, &order)?;
    if let Err(e) = (AdmissibleOrder { order: up }).verify(plus.complement().circuits()) {
        return fail(format!("ascent order: {e}"));
    }
    for f in simplicial_maximal_subcircuits(&plus) {
        let longer = append_sms_generator(c, &order, f)?;
        if let Err(e) = (AdmissibleOrder { order: longer }).verify(c.remove_circuit(f)?.complement().circuits()) {
            return fail(format!("appending {f}: {e}"));
        }
    }
    for v in c.vertices().iter() {
        let shorter = restrict_order_by_vertex(&order, v);
        if let Err(e) = (AdmissibleOrder { order: shorter }).verify(c.delete_vertex(v)?.complement().circuits()) {
            return fail(format!("restricting to V - {}: {e}", v + 1));
        }
    }
    Ok(Verdict::Pass)
}

fn c_f_chorded(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let sms = simplicial_maximal_subcircuits(&ascent(c));
    if sms.is_empty() {
        return skip("SMS(C⁺) empty");
    }
    if !is_d_chorded(c)?.holds() {
        return skip("⟨C⟩ not d-chorded");
    }
    for f in sms {
        let r = is_d_chorded(&c.remove_circuit(f)?)?;
        if !r.holds() {
            return fail(format!("⟨C - {f}⟩: {r:?}"));
        }
    }
    Ok(Verdict::Pass)
}

fn chordal_edge_order_check(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if c.d() != 1 {
        return skip("not a graph");
    }
    if is_chordal(c, budget)?.is_none() {
        return skip("not chordal");
    }
    for f in simplicial_maximal_subcircuits(&ascent(c)) {
        if is_chordal(&c.remove_circuit(f)?, budget)?.is_none() {
            return fail(format!("C - {f} is not chordal"));
        }
    }
    let order = chordal_edge_order(c, budget)?;
    match order.verify(c, budget) {
        Ok(()) => Ok(Verdict::Pass),
        Err(e) => fail(format!("edge order {order:?}: {e}")),
    }
}

fn n_le_d_plus_3(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if c.n() > c.d() + 3 {
        return skip("n > d + 3");
    }
    let r = n_le_d_plus_3_check(c, budget)?;
    if !r.hypothesis {
        return skip("hypothesis fails");
    }
    if !r.holds() {
        return fail(format!("{r:?}"));
    }
    if !c.is_empty()
        && has_linear_quotients(c.complement().circuits(), budget)?.is_some()
        && free_maximal_subcircuits(c).is_empty()
    {
        return fail("linear quotients and empty ascent but no free maximal subcircuit".into());
    }
    Ok(Verdict::Pass)
}

fn statement_b(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if has_linear_quotients(c.complement().circuits(), budget)?.is_none() {
        return skip("no linear quotients");
    }
    verdict(is_chordal(c, budget)?.is_some(), || "linear quotients but not chordal".into())
}

fn lin_q_plus_converse(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    let lq = |x: &Clutter| -> Result<bool> { Ok(has_linear_quotients(x.complement().circuits(), budget)?.is_some()) };
    let plus = ascent(c);
    let sms = simplicial_maximal_subcircuits(&plus);
    if sms.is_empty() {
        return skip("SMS(C⁺) empty");
    }
    if !lq(&plus)? {
        return skip("I(C̄⁺) lacks linear quotients");
    }
    for f in sms {
        if !lq(&c.remove_circuit(f)?)? {
            return skip("some I(C̄ - F) lacks linear quotients");
        }
    }
    for v in c.vertices().iter() {
        if !lq(&c.delete_vertex(v)?)? {
            return skip("some I(C̄ - v) lacks linear quotients");
        }
    }
    verdict(lq(c)?, || "hypotheses hold but I(C̄) has no linear quotients".into())
}

fn lin_res_sms_equivalence(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let Some(reports) = sms_reports(c)? else { return skip("empty ascent") };
    if reports[0].sms_nonempty {
        return skip("SMS(C⁺) nonempty");
    }
    match reports.iter().find(|r| r.statement1 != r.statement2 || r.statement2 != r.statement3) {
        None => Ok(Verdict::Pass),
        Some(r) => fail(format!("{r:?}")),
    }
}

fn sms_empty_with_3(c: &Clutter, _: &Budget) -> Result<Verdict> {
    let Some(reports) = sms_reports(c)? else { return skip("empty ascent") };
    if reports[0].sms_nonempty {
        return skip("SMS(C⁺) nonempty");
    }
    match reports.iter().find(|r| r.statement3) {
        None => Ok(Verdict::Pass),
        Some(r) => fail(format!("(3) holds over {}", r.field)),
    }
}

fn statement_d_prime(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if c.is_empty() || !ascent(c).is_empty() {
        return skip("empty clutter or nonempty ascent");
    }
    if has_linear_quotients(c.complement().circuits(), budget)?.is_none() {
        return skip("no linear quotients");
    }
    verdict(!free_maximal_subcircuits(c).is_empty(), || "no free maximal subcircuit".into())
}

fn greedy_elimination_check(c: &Clutter, budget: &Budget) -> Result<Verdict> {
    if is_chordal(c, budget)?.is_none() {
        return skip("not chordal");
    }
    let (steps, end) = greedy_elimination(c);
    verdict(end.is_empty(), || format!("greedy stuck after {} steps at {end}", steps.len()))
}
