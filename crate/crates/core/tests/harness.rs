use clutterkit::ascent::ascent;
use clutterkit::chordality::simplicial_maximal_subcircuits;
use clutterkit::harness::{
    lookup, sweep_instances, sweep_with, Family, GenSpec, Status, SweepConfig, Verdict, REGISTRY,
};
use clutterkit::{fixtures, Budget, Clutter};

/// The octahedron graph: every pair except the antipodal ones 16, 24, 35.
fn octahedron_graph() -> Clutter {
    Clutter::from_digits(6, 1, &["12", "13", "14", "15", "23", "25", "26", "34", "36", "45", "46", "56"])
}

#[test]
fn octahedron_graph_reaches_the_empty_sms_hunts() {
    let c = octahedron_graph();
    let plus = ascent(&c);
    assert!(!plus.is_empty());
    assert!(simplicial_maximal_subcircuits(&plus).is_empty());
    let b = Budget::default();
    for id in ["lin-res-sms-equivalence", "sms-empty-with-3"] {
        let t = lookup(id).unwrap();
        assert_eq!(t.status, Status::Open);
        let v = (t.check)(&c, &b).unwrap();
        println!("{id} on the octahedron graph: {v:?}");
    }
}

#[test]
fn every_statement_runs_on_every_fixture() {
    let b = Budget::default();
    for t in REGISTRY {
        for (name, c) in fixtures::all() {
            match (t.check)(&c, &b) {
                Ok(Verdict::Fail(detail)) if t.status == Status::Proven => panic!("{} fails on {name}: {detail}", t.id),
                Ok(_) => {}
                Err(e) => panic!("{} errors on {name}: {e}", t.id),
            }
        }
    }
}

#[test]
fn open_hunts_never_fail_a_sweep_and_write_their_hits() {
    let dir = tempfile::tempdir().unwrap();
    let config = SweepConfig { corpus: Some(dir.path().to_path_buf()), ..SweepConfig::default() };
    let spec = GenSpec::new(Family::UniformRandom, 6, 2, 0.6, 17, 60);
    for t in REGISTRY.iter().filter(|t| t.status == Status::Open) {
        let r = sweep_with(t.id, &spec, &config).unwrap();
        assert!(r.holds());
        assert_eq!(r.instances, 60);
        println!("{}: {} hits, {} checked", t.id, r.fail, r.checked());
    }
    // the dunce hat is a hit of statement B
    let t = lookup("statement-b").unwrap();
    let r = sweep_instances(t, &[fixtures::dunce_hat()], &config);
    assert_eq!(r.fail, 1);
}

#[test]
fn reports_serialize() {
    let spec = GenSpec::new(Family::NearChordal, 6, 1, 0.5, 3, 20);
    let r = sweep_with("vdec-main", &spec, &SweepConfig::default()).unwrap();
    let back = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(r, back);
}
