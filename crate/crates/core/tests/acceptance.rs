//! Acceptance suite. Runs every criterion, prints one line per criterion
//! and exits nonzero if any of them fails or overruns its time limit.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clutterkit::ascent::{ascent, is_d_chorded, iterated_ascents};
use clutterkit::certificate::{certify, dual_complex, Certificate, CertificateKind};
use clutterkit::chordality::{
    free_maximal_subcircuits, is_chordal, is_shedding_vertex, simplicial_maximal_subcircuits, EliminationCertificate,
};
use clutterkit::complex::clique_complex;
use clutterkit::harness::{all_clutters, lookup, sweep_instances, Family, GenSpec, SweepConfig};
use clutterkit::homology::{boundary_matrix, has_linear_resolution, reduced_homology, LinearResolution};
use clutterkit::linalg::{gf2_rank, rational_rank, BitVec, IntMatrix};
use clutterkit::quotients::{ascent_order, has_linear_quotients, is_admissible_order, AdmissibleOrder};
use clutterkit::{fixtures, Budget, Clutter, Face, FieldTag, SimplicialComplex};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn faces(list: &[&str]) -> Vec<Face> {
    list.iter().map(|s| Face::digits(s)).collect()
}

fn set(list: &[Face]) -> BTreeSet<Face> {
    list.iter().copied().collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn dual_exam() -> Outcome {
    let c = fixtures::dual_exam();
    let dual = c.dual_clutter();
    ensure(set(dual.edges()) == set(&faces(&["13", "15", "23", "24", "25", "35", "45"])), || format!("C∨ = {dual:?}"))?;
    let generated = SimplicialComplex::from_clutter(&c);
    let alex = generated.alexander_dual();
    ensure(set(alex.facets()) == set(&faces(&["235", "245", "135"])), || format!("⟨C⟩∨ = {alex}"))?;
    let delta = clique_complex(&c);
    let f14 = Face::digits("14");
    ensure(delta.contains(f14) && !generated.contains(f14), || "14 ∈ Δ(C) \\ ⟨C⟩ fails".into())?;
    ensure(set(delta.facets()) == set(&faces(&["125", "235", "345", "13", "14", "24"])), || format!("Δ(C) = {delta}"))?;
    // transition: I(C̄) = I_Δ(C) and ⟨C∨⟩ = Δ(C)∨
    ensure(set(&delta.stanley_reisner_generators()) == set(c.complement().circuits()), || "I(C̄) ≠ I_Δ(C)".into())?;
    ensure(dual_complex(&c) == delta.alexander_dual(), || "⟨C∨⟩ ≠ Δ(C)∨".into())?;
    Ok("C∨, ⟨C⟩∨, 14 ∈ Δ(C) \\ ⟨C⟩ and the transition equalities match".into())
}

fn vdec_ex() -> Outcome {
    let c = fixtures::vdec_ex();
    let gamma = dual_complex(&c);
    let listed = faces(&["136", "146", "236", "246", "346", "135", "235", "145", "245", "123", "124", "134", "234"]);
    ensure(gamma.facets().len() == 13 && set(gamma.facets()) == set(&listed), || format!("Γ = {gamma}"))?;
    ensure(is_shedding_vertex(&gamma, 5).map_err(|e| e.to_string())?, || "6 is not shedding".into())?;
    let link = SimplicialComplex::from_clutter(&c).link(Face::singleton(5)).map_err(|e| e.to_string())?;
    ensure(set(link.facets()) == set(&faces(&["12", "34"])), || format!("link 6 = {link}"))?;
    let with6: Vec<Face> = simplicial_maximal_subcircuits(&c).into_iter().filter(|e| e.contains(5)).collect();
    ensure(with6 == faces(&["16", "26", "36", "46"]), || format!("SMS ∋ 6: {with6:?}"))?;
    EliminationCertificate { steps: faces(&["26", "46", "12", "13", "23", "35"]) }
        .verify(&c)
        .map_err(|e| e.to_string())?;
    Ok("13 facets of Γ, shedding vertex 6, link {12,34}, SMS ∋ 6 and 26,46,12,13,23,35 replay".into())
}

fn chorded_octa() -> Outcome {
    let c = fixtures::octahedron();
    let listed_order = fixtures::octahedron_complement_order();
    // reconstruction checks
    ensure(c.len() == 12, || format!("{} circuits", c.len()))?;
    let plus = ascent(&c);
    ensure(plus.circuits() == faces(&["1235", "1345", "2356", "3456"]), || format!("C⁺ = {plus}"))?;
    ensure(set(c.complement().circuits()) == set(&listed_order), || "complement differs from the 8-term order".into())?;
    let steps = faces(&["12", "14", "46", "26", "13", "23", "36", "34"]);
    EliminationCertificate { steps }.verify(&c).map_err(|e| e.to_string())?;
    ensure(is_admissible_order(&listed_order).map_err(|e| e.to_string())?, || "8-term order rejected".into())?;
    let up = ascent_order(&c, &listed_order).map_err(|e| e.to_string())?;
    // the known 11-term order with each block sorted
    let expected = faces(&["1236", "1246", "1256", "1346", "1356", "1456", "1234", "1245", "2346", "2456", "2345"]);
    ensure(up == expected, || format!("ascent order {up:?}"))?;
    AdmissibleOrder { order: up }.verify(plus.complement().circuits()).map_err(|e| e.to_string())?;
    let minus = c.remove_circuit(Face::digits("135")).map_err(|e| e.to_string())?;
    let chorded = is_d_chorded(&minus).map_err(|e| e.to_string())?;
    ensure(!chorded.holds(), || "⟨C − 135⟩ is chorded".into())?;
    Ok("elimination replays, C⁺ matches, both orders validate, ⟨C − 135⟩ is not 2-chorded".into())
}

fn dunce_hat() -> Outcome {
    let c = fixtures::dunce_hat();
    let b = Budget::default();
    // fixture validation
    ensure(c.n() == 8 && c.d() == 2, || "not an 8-vertex 2-clutter".into())?;
    for w in c.vertices().subsets().filter(|&w| w != c.vertices()) {
        let sub = c.induced(w).map_err(|e| e.to_string())?;
        ensure(sub.is_empty() || !free_maximal_subcircuits(&sub).is_empty(), || format!("no free subcircuit on {w}"))?;
    }
    let generated = SimplicialComplex::from_clutter(&c);
    let delta = clique_complex(&c);
    let mut h1 = Vec::new();
    for k in FieldTag::ALL {
        let h = reduced_homology(&generated, k);
        ensure(h.is_acyclic(), || format!("⟨C⟩ {h}"))?;
        let hd = reduced_homology(&delta, k);
        ensure(hd.dims.iter().all(|(&i, &r)| i < 2 || r == 0), || format!("Δ(C) {hd}"))?;
        h1.push(hd.get(1));
    }
    // properties
    ensure(simplicial_maximal_subcircuits(&c).is_empty(), || "SMS(C) ≠ ∅".into())?;
    ensure(is_chordal(&c, &b).map_err(|e| e.to_string())?.is_none(), || "chordal".into())?;
    for k in FieldTag::ALL {
        ensure(has_linear_resolution(&c, k) == LinearResolution::Linear, || format!("not linear over {k}"))?;
    }
    ensure(ascent(&c).is_empty(), || "C⁺ ≠ ∅".into())?;
    let edges: BTreeSet<Face> = c.circuits().iter().flat_map(|f| f.k_subsets(2)).collect();
    let graph = Clutter::new(c.vertices(), 1, edges).map_err(|e| e.to_string())?;
    let chain = iterated_ascents(&graph);
    ensure(chain.len() == 5 && !chain[3].is_empty() && chain[4].is_empty(), || format!("{} levels", chain.len()))?;
    // recorded as data: the outcome of the linear-quotients search
    let lq = match has_linear_quotients(c.complement().circuits(), &b).map_err(|e| e.to_string())? {
        Some(o) => {
            ensure(is_admissible_order(&o.order).map_err(|e| e.to_string())?, || "order rejected".into())?;
            format!("admissible order of length {} found", o.order.len())
        }
        None => "no admissible order".into(),
    };
    Ok(format!("SMS = ∅, linear over GF(2) and Q, C⁺ = ∅, D⁺⁺⁺⁺ = ∅; H̃_1(Δ(C)) = {h1:?}; linear quotients: {lq}"))
}

fn dunce_hat_plus() -> Outcome {
    let d = fixtures::dunce_hat_plus();
    let plus = ascent(&d);
    ensure(plus.circuits() == faces(&["1278"]), || format!("D⁺ = {plus}"))?;
    ensure(simplicial_maximal_subcircuits(&plus).contains(&Face::digits("278")), || "278 ∉ SMS(D⁺)".into())?;
    for k in FieldTag::ALL {
        ensure(has_linear_resolution(&d, k).holds(), || format!("not linear over {k}"))?;
    }
    Ok("D⁺ = {1278}, 278 ∈ SMS(D⁺), linear over GF(2) and Q".into())
}

fn froberg() -> Outcome {
    let mut total = 0;
    for n in 2..=6 {
        let graphs = all_clutters(n, 1).map_err(|e| e.to_string())?;
        total += graphs.len();
        let bad = graphs.par_iter().find_any(|g| {
            let chordal = is_chordal(g, &Budget::default()).expect("small graphs fit the budget").is_some();
            FieldTag::ALL.iter().any(|&k| has_linear_resolution(g, k).holds() != chordal)
        });
        if let Some(g) = bad {
            return Err(format!("discrepancy on {g}"));
        }
    }
    Ok(format!("{total} graphs on 2..=6 vertices, zero discrepancies"))
}

fn sweeps() -> Outcome {
    let config = SweepConfig::default();
    let ids = [
        "vdec-main",
        "chordal-plus",
        "lin-q-plus",
        "lin-res-sms",
        "cf2-main",
        "cf1-main",
        "c-f-chorded",
        "betti-sms",
        "almost-complete",
    ];
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for id in ids {
        let t = lookup(id).expect("registered");
        let (mut checked, mut instances, mut over) = (0, 0, 0);
        for d in 1..=2 {
            let families: &[(Family, usize)] = if id == "almost-complete" {
                &[(Family::CompleteMinusK, 1)]
            } else {
                &[(Family::UniformRandom, 1), (Family::NearChordal, 1)]
            };
            for &(family, k) in families {
                let spec = GenSpec { k, ..GenSpec::new(family, 7, d, 0.5, 2024 + d as u64, 500) };
                let report = sweep_instances(t, &spec.generate().map_err(|e| e.to_string())?, &config);
                instances += report.instances;
                checked += report.checked();
                over += report.budget_log.len();
                for x in &report.counterexamples {
                    failures.push(format!(
                        "{id} d={d} #{}: {} ({})",
                        x.index,
                        x.shrunk.as_ref().unwrap_or(&x.clutter),
                        x.detail
                    ));
                }
            }
        }
        lines.push(format!("{id} {checked}/{instances} ({over} over budget)"));
    }
    for (n, d) in [(4, 1), (5, 2)] {
        let t = lookup("n-le-d-plus-3").expect("registered");
        let all = all_clutters(n, d).map_err(|e| e.to_string())?;
        let report = sweep_instances(t, &all, &config);
        for x in &report.counterexamples {
            failures.push(format!("n-le-d-plus-3 ({d},{n}): {} ({})", x.clutter, x.detail));
        }
        lines.push(format!("n-le-d-plus-3 ({d},{n}) {}/{}", report.checked(), report.instances));
    }
    if failures.is_empty() {
        Ok(format!("zero failures; checked/instances: {}", lines.join(", ")))
    } else {
        Err(failures.join("; "))
    }
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(1..=7);
    let v = Face::full(n).expect("small");
    let facets: Vec<Face> = (0..rng.gen_range(1..=6)).map(|_| Face::from_bits(rng.gen_range(0..1u64 << n))).collect();
    SimplicialComplex::generated(v, facets).expect("subsets of v")
}

/// Dense Gaussian elimination over GF(2) on bytes.
fn naive_gf2_rank(mut m: Vec<Vec<u8>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] == 1) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] == 1 {
                for j in 0..cols {
                    m[i][j] ^= m[rank][j];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense Gaussian elimination over ℚ with big rationals.
fn naive_rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        for i in rank + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() * inv.clone();
            for j in c..cols {
                let x = a[rank][j].clone() * f.clone();
                a[i][j] -= x;
            }
        }
        rank += 1;
    }
    rank
}

fn kernels() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let d = random_complex(&mut rng);
        let top = d.dim().expect("nonvoid");
        for k in FieldTag::ALL {
            for i in 0..top {
                let lower = boundary_matrix(&d, i, k).map_err(|e| e.to_string())?;
                let upper = boundary_matrix(&d, i + 1, k).map_err(|e| e.to_string())?;
                let prod = lower.matrix.mul(&upper.matrix);
                let zero = match k {
                    FieldTag::Gf2 => (0..prod.rows()).all(|r| prod.row(r).iter().all(|x| x % 2 == 0)),
                    FieldTag::Rational => prod.is_zero(),
                };
                ensure(zero, || format!("∂∂ ≠ 0 on {d} in degree {i} over {k}"))?;
            }
        }
    }
    let v4 = Face::full(4).expect("small");
    let sphere = SimplicialComplex::generated(v4, v4.facets_of_boundary()).expect("boundary");
    let simplex = SimplicialComplex::simplex(v4);
    let two_points = SimplicialComplex::from_digits(2, &["1", "2"]);
    for k in FieldTag::ALL {
        let dims = |d: &SimplicialComplex| reduced_homology(d, k).dims.into_iter().collect::<Vec<_>>();
        ensure(dims(&sphere) == vec![(-1, 0), (0, 0), (1, 0), (2, 1)], || format!("sphere {:?}", dims(&sphere)))?;
        ensure(reduced_homology(&simplex, k).is_acyclic(), || "simplex".into())?;
        ensure(dims(&two_points) == vec![(-1, 0), (0, 1)], || format!("two points {:?}", dims(&two_points)))?;
    }
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..=50), rng.gen_range(1..=50));
        let p = rng.gen_range(0.05..0.6);
        let m: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_bool(p) as i64).collect()).collect();
        let bits: Vec<BitVec> = m
            .iter()
            .map(|row| {
                let mut b = BitVec::zeros(c);
                for (j, &x) in row.iter().enumerate() {
                    b.set(j, x == 1);
                }
                b
            })
            .collect();
        let bytes: Vec<Vec<u8>> = m.iter().map(|row| row.iter().map(|&x| x as u8).collect()).collect();
        ensure(gf2_rank(&bits) == naive_gf2_rank(bytes), || format!("GF(2) rank differs on a {r}x{c} matrix"))?;
        ensure(rational_rank(&IntMatrix::from_rows(&m)) == naive_rational_rank(&m), || {
            format!("rational rank differs on a {r}x{c} matrix")
        })?;
    }
    Ok("∂∂ = 0 on 1000 complexes, sphere/simplex/two-point profiles, 200 random ranks agree with the oracles".into())
}

fn certificates() -> Outcome {
    let mut pool: Vec<Clutter> = fixtures::all().into_iter().map(|(_, c)| c).collect();
    for d in 1..=2 {
        pool.extend(GenSpec::new(Family::NearChordal, 7, d, 0.3, 99, 100).generate().map_err(|e| e.to_string())?);
        pool.extend(GenSpec::new(Family::UniformRandom, 6, d, 0.5, 99, 50).generate().map_err(|e| e.to_string())?);
    }
    let mut emitted = [0usize; 4];
    for c in &pool {
        for (slot, kind) in CertificateKind::ALL.into_iter().enumerate() {
            // edge orders are for graphs; ⟨C∨⟩ is void when C is complete
            if (kind == CertificateKind::EdgeOrder && c.d() != 1)
                || (kind == CertificateKind::Shedding && c.is_complete())
            {
                continue;
            }
            let b = Budget::default();
            let Some(cert) = certify(c, kind, &b).map_err(|e| format!("{c}: {e}"))? else { continue };
            let back = Certificate::from_json(&cert.to_json()).map_err(|e| e.to_string())?;
            ensure(back == cert, || format!("{} JSON round trip on {c}", kind.name()))?;
            back.verify(c, &Budget::default()).map_err(|e| format!("{} on {c}: {e}", kind.name()))?;
            emitted[slot] += 1;
        }
    }
    let names = CertificateKind::ALL.map(|k| k.name());
    let counts: Vec<String> = names.iter().zip(emitted).map(|(n, k)| format!("{n} {k}")).collect();
    ensure(emitted.iter().all(|&k| k > 0), || format!("some kind never emitted: {counts:?}"))?;
    Ok(format!("all emitted certificates verify ({})", counts.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dual-exam", 1, dual_exam),
        ("vdec-ex family", 1, vdec_ex),
        ("chorded octahedron", 5, chorded_octa),
        ("dunce hat", 60, dunce_hat),
        ("dunce hat plus 278", 60, dunce_hat_plus),
        ("Froberg graphs", 600, froberg),
        ("theorem sweeps", 1800, sweeps),
        ("homology kernels", 60, kernels),
        ("certificate round trip", 60, certificates),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed < Duration::from_secs(limit);
        let (status, detail) = match (&outcome, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over the {limit}s limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {} [{status}] {name} ({:.2?}): {detail}", i + 1, elapsed);
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
