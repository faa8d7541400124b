use std::collections::BTreeSet;

use clutterkit::ascent::{ascent, iterated_ascents};
use clutterkit::certificate::dual_complex;
use clutterkit::chordality::{greedy_elimination, is_chordal, simplicial_maximal_subcircuits};
use clutterkit::complex::clique_complex;
use clutterkit::homology::{boundary_matrix, clutter_betti, has_linear_resolution, reduced_homology_from};
use clutterkit::quotients::{
    append_sms_generator, ascent_order, has_linear_quotients, is_admissible_order, restrict_order_by_vertex,
    AdmissibleOrder,
};
use clutterkit::{Budget, Clutter, Error, Face, FieldTag, SimplicialComplex};
use proptest::prelude::*;

/// A `d`-clutter on `[n]` picking `(d+1)`-subsets by the bits of `mask`.
fn clutter(n: usize, d: usize, mask: u64) -> Clutter {
    let all: Vec<Face> = Face::full(n).unwrap().k_subsets(d + 1).collect();
    Clutter::on_n(n, d, all.into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, f)| f)).unwrap()
}

fn clutters() -> impl Strategy<Value = Clutter> {
    (1usize..=2).prop_flat_map(|d| (d + 1..=7, Just(d), any::<u64>())).prop_map(|(n, d, mask)| clutter(n, d, mask))
}

fn complexes() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7, prop::collection::vec(any::<u64>(), 1..6)).prop_map(|(n, raw)| {
        let v = Face::full(n).unwrap();
        SimplicialComplex::generated(v, raw.into_iter().map(|b| Face::from_bits(b & v.bits()))).unwrap()
    })
}

/// `Ok(None)` when the search runs out of budget.
fn lq(c: &Clutter) -> Option<Option<AdmissibleOrder>> {
    match has_linear_quotients(c.complement().circuits(), &Budget::new(200_000)) {
        Ok(r) => Some(r),
        Err(Error::BudgetExhausted(_)) => None,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn complement_is_an_involution(c in clutters()) {
        let comp = c.complement();
        prop_assert_eq!(comp.complement(), c.clone());
        prop_assert_eq!(comp.len() + c.len(), Face::full(c.n()).unwrap().k_subsets(c.d() + 1).count());
        prop_assert!(comp.circuits().iter().all(|f| !c.contains(*f)));
    }

    #[test]
    fn transition_lemma(c in clutters()) {
        let delta = clique_complex(&c);
        let gens: BTreeSet<Face> = delta.stanley_reisner_generators().into_iter().collect();
        let comp: BTreeSet<Face> = c.complement().circuits().iter().copied().collect();
        prop_assert_eq!(gens, comp);
        prop_assert_eq!(dual_complex(&c), delta.alexander_dual());
    }

    #[test]
    fn alexander_dual_is_an_involution(d in complexes()) {
        prop_assert_eq!(d.alexander_dual().alexander_dual(), d);
    }

    #[test]
    fn boundary_squares_to_zero(d in complexes()) {
        let top = d.dim().unwrap();
        for k in FieldTag::ALL {
            for i in 0..top {
                let a = boundary_matrix(&d, i, k).unwrap().matrix;
                let b = boundary_matrix(&d, i + 1, k).unwrap().matrix;
                let p = a.mul(&b);
                let modulus = if k == FieldTag::Gf2 { 2 } else { i64::MAX };
                prop_assert!((0..p.rows()).all(|r| p.row(r).iter().all(|x| x % modulus == 0)));
            }
        }
    }

    #[test]
    fn low_homology_of_induced_clique_complexes_vanishes(c in clutters(), w in any::<u64>()) {
        let w = Face::from_bits(w & c.vertices().bits());
        prop_assume!(!w.is_empty());
        let sub = clique_complex(&c).restrict(w);
        let h = reduced_homology_from(&sub, FieldTag::Rational, -1);
        for (i, r) in h.dims {
            if i < c.d() as isize - 1 {
                prop_assert_eq!(r, 0, "H~_{} of Δ(C)_W for W = {}", i, w);
            }
        }
    }

    #[test]
    fn ascent_matches_brute_force(c in clutters()) {
        let plus = ascent(&c);
        let brute: Vec<Face> = Face::full(c.n())
            .unwrap()
            .k_subsets(c.d() + 2)
            .filter(|q| q.k_subsets(c.d() + 1).all(|f| c.contains(f)))
            .collect();
        prop_assert_eq!(plus.circuits(), &brute[..]);
        prop_assert!(iterated_ascents(&c).last().unwrap().is_empty());
    }

    #[test]
    fn chordality_certificates_replay(c in clutters()) {
        let (steps, rest) = greedy_elimination(&c);
        match is_chordal(&c, &Budget::default()).unwrap() {
            Some(cert) => cert.verify(&c).unwrap(),
            None => {
                prop_assert!(!rest.is_empty(), "greedy eliminated {:?} but the search failed", steps);
            }
        }
    }

    #[test]
    fn linear_resolution_agrees_with_betti_table(c in clutters()) {
        for k in FieldTag::ALL {
            let linear = has_linear_resolution(&c, k).holds();
            prop_assert_eq!(linear, clutter_betti(&c, k).is_linear(c.d() + 1));
        }
    }

    #[test]
    fn linear_quotients_imply_linear_resolution(c in clutters()) {
        if let Some(Some(o)) = lq(&c) {
            o.verify(c.complement().circuits()).unwrap();
            for k in FieldTag::ALL {
                prop_assert!(has_linear_resolution(&c, k).holds());
            }
        }
    }

    #[test]
    fn admissibility_is_prefix_monotone(c in clutters()) {
        if let Some(Some(o)) = lq(&c) {
            for i in 0..=o.order.len() {
                prop_assert!(is_admissible_order(&o.order[..i]).unwrap());
            }
        }
    }

    #[test]
    fn lin_q_plus_orders_validate(c in clutters()) {
        let Some(Some(o)) = lq(&c) else { return Ok(()) };
        let plus = ascent(&c);
        let up = ascent_order(&c, &o.order).unwrap();
        let underlying: BTreeSet<Face> = up.iter().copied().collect();
        prop_assert_eq!(underlying, plus.complement().circuits().iter().copied().collect::<BTreeSet<Face>>());
        AdmissibleOrder { order: up }.verify(plus.complement().circuits()).unwrap();
        for f in simplicial_maximal_subcircuits(&plus) {
            let out = append_sms_generator(&c, &o.order, f).unwrap();
            AdmissibleOrder { order: out }.verify(c.remove_circuit(f).unwrap().complement().circuits()).unwrap();
        }
        for v in c.vertices().iter() {
            let out = restrict_order_by_vertex(&o.order, v);
            AdmissibleOrder { order: out }.verify(c.delete_vertex(v).unwrap().complement().circuits()).unwrap();
        }
    }
}
