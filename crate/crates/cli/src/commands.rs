use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clutterkit::ascent::{ascent, is_cf_chordal, is_cf_tree, is_d_chorded, iterated_ascents, Chordedness};
use clutterkit::budget::DEFAULT_NODE_CAP;
use clutterkit::certificate::{certify, dual_complex, Certificate, CertificateKind};
use clutterkit::chordality::{
    greedy_elimination, is_chordal, is_shedding_vertex, is_w_chordal, simplicial_maximal_subcircuits,
    SimplicialVertexRule,
};
use clutterkit::complex::clique_complex;
use clutterkit::harness::{sweep_instances, write_corpus, GenSpec, Status, SweepConfig, SweepReport, REGISTRY};
use clutterkit::homology::{clutter_betti, has_linear_resolution, reduced_homology, LinearResolution};
use clutterkit::io::{read_clutter, write_clutter, write_text};
use clutterkit::quotients::{
    admissibility_violation, append_sms_generator, ascent_order, has_linear_quotients, restrict_order_by_vertex,
    AdmissibleOrder,
};
use clutterkit::{Budget, Clutter, Error, Face, SimplicialComplex};
use serde_json::{json, Value};

use crate::{Cli, Command, ComplexArg, KindArg, Property, QuotientsAction};

pub struct Report {
    pub holds: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(holds: bool, text: String, json: Value) -> Report {
        Report { holds, text, json }
    }
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = if matches!(e, Error::BudgetExhausted(_)) { 3 } else { 2 };
        CliError { code, message: e.to_string() }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

fn in_file(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    }
}

fn load(path: &Path) -> Result<Clutter> {
    read_clutter(path).map_err(in_file(path))
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: line {}: {e}", path.display(), e.line())))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// An order file is a JSON array of faces, or an object with an `order`
/// field (as in an admissible-order certificate).
fn load_order(path: &Path) -> Result<Vec<Face>> {
    let value = read_json(path)?;
    let list = match value {
        Value::Object(mut m) => {
            m.remove("order").ok_or_else(|| usage(format!("{}: no `order` field", path.display())))?
        }
        other => other,
    };
    serde_json::from_value(list).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_face(s: &str) -> Result<Face> {
    let labels: std::result::Result<Vec<usize>, _> = if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<usize>()).collect()
    } else {
        s.chars().map(|ch| ch.to_string().parse::<usize>()).collect()
    };
    let labels = labels.map_err(|_| usage(format!("bad face {s:?}")))?;
    Ok(Face::from_labels(labels)?)
}

fn vertex_index(c: &Clutter, label: usize) -> Result<usize> {
    if label == 0 || label > 64 || !c.vertices().contains(label - 1) {
        return Err(usage(format!("vertex {label} is not in the vertex set")));
    }
    Ok(label - 1)
}

fn faces_text(faces: &[Face]) -> String {
    faces.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
}

fn faces_json(faces: &[Face]) -> Value {
    serde_json::to_value(faces).expect("faces serialize")
}

fn clutter_json(c: &Clutter) -> Value {
    json!({ "n": c.n(), "d": c.d(), "circuits": faces_json(c.circuits()) })
}

pub fn run(cli: &Cli) -> Result<Report> {
    let budget = Budget::new(cli.budget.unwrap_or(DEFAULT_NODE_CAP));
    match &cli.command {
        Command::Check { property, file } => check(cli, *property, &load(file)?, &budget),
        Command::Dual { file } => dual(&load(file)?),
        Command::Ascent { file, iterate, output } => ascent_cmd(&load(file)?, *iterate, output.as_deref()),
        Command::Homology { file, complex } => homology(cli, &load(file)?, *complex),
        Command::Betti { file } => betti(cli, &load(file)?),
        Command::Quotients { action } => quotients(action, &budget),
        Command::Certify { kind, file, output } => certify_cmd(*kind, &load(file)?, output.as_deref(), &budget),
        Command::Verify { certificate, file } => verify(certificate, &load(file)?, &budget),
        Command::Sweep { spec, theorems, corpus, no_shrink, list } => {
            if *list {
                return Ok(list_theorems());
            }
            let spec = spec.as_deref().expect("clap requires a spec without --list");
            let config = SweepConfig {
                budget: cli.budget.unwrap_or(SweepConfig::default().budget),
                shrink: !no_shrink,
                corpus: corpus.clone(),
            };
            sweep(spec, theorems, &config)
        }
    }
}

fn check(cli: &Cli, property: Property, c: &Clutter, budget: &Budget) -> Result<Report> {
    let verdict = |name: &str, holds: bool| if holds { name.to_string() } else { format!("not {name}") };
    Ok(match property {
        Property::Chordal => match is_chordal(c, budget)? {
            Some(cert) => Report::new(
                true,
                format!("chordal\nelimination: {}\n", faces_text(&cert.steps)),
                json!({ "property": "chordal", "holds": true, "elimination": faces_json(&cert.steps) }),
            ),
            None => {
                let (reason, residue) = if simplicial_maximal_subcircuits(c).is_empty() {
                    ("SMS empty at root".to_string(), None)
                } else {
                    let (_, rest) = greedy_elimination(c);
                    (format!("every elimination branch dead-ends; greedy elimination stops at {rest}"), Some(rest))
                };
                Report::new(
                    false,
                    format!("not chordal: {reason}\n"),
                    json!({ "property": "chordal", "holds": false, "reason": reason,
                            "residue": residue.as_ref().map(clutter_json) }),
                )
            }
        },
        Property::Vdec => {
            let gamma = dual_complex(c);
            match certify(c, CertificateKind::Shedding, budget)? {
                Some(cert) => Report::new(
                    true,
                    format!("⟨C∨⟩ is vertex decomposable\ncertificate: {}\n", cert.to_json()),
                    json!({ "property": "vdec", "holds": true, "certificate": cert }),
                ),
                None => {
                    let mut shedding = Vec::new();
                    for v in gamma.vertices().iter() {
                        if is_shedding_vertex(&gamma, v)? {
                            shedding.push(v + 1);
                        }
                    }
                    let reason = if shedding.is_empty() {
                        "no shedding vertex at root".to_string()
                    } else {
                        format!("no shedding sequence from shedding vertices {shedding:?}")
                    };
                    Report::new(
                        false,
                        format!("⟨C∨⟩ is not vertex decomposable: {reason}\n"),
                        json!({ "property": "vdec", "holds": false, "reason": reason }),
                    )
                }
            }
        }
        Property::WChordal => {
            let holds = is_w_chordal(&c.to_general(), SimplicialVertexRule::Distinct, budget)?;
            Report::new(
                holds,
                format!("{}\n", verdict("W-chordal", holds)),
                json!({ "property": "w-chordal", "holds": holds }),
            )
        }
        Property::LinRes => {
            let mut text = String::new();
            let mut fields = Vec::new();
            let mut holds = true;
            for field in cli.field.fields() {
                let r = has_linear_resolution(c, field);
                holds &= r.holds();
                let line = match &r {
                    LinearResolution::TriviallyLinear => "trivially linear (zero ideal)".to_string(),
                    LinearResolution::Linear => "linear resolution".to_string(),
                    LinearResolution::NotLinear { w, degree, rank } => {
                        format!("no linear resolution: H~_{degree}(Δ(C)_W) has rank {rank} for W = {w}")
                    }
                };
                let _ = writeln!(text, "over {field}: {line}");
                let mut v = serde_json::to_value(&r).expect("outcomes serialize");
                v["field"] = json!(field);
                fields.push(v);
            }
            Report::new(holds, text, json!({ "property": "lin-res", "holds": holds, "fields": fields }))
        }
        Property::LinQuotients => match has_linear_quotients(c.complement().circuits(), budget)? {
            Some(o) => Report::new(
                true,
                format!("linear quotients\norder: {}\n", faces_text(&o.order)),
                json!({ "property": "lin-quotients", "holds": true, "order": faces_json(&o.order) }),
            ),
            None => Report::new(
                false,
                "no admissible order of I(C̄)\n".into(),
                json!({ "property": "lin-quotients", "holds": false }),
            ),
        },
        Property::Chorded => match is_d_chorded(c)? {
            Chordedness::Chorded => {
                Report::new(true, "d-chorded\n".into(), json!({ "property": "chorded", "holds": true }))
            }
            Chordedness::NotChorded { witness } => Report::new(
                false,
                format!("not d-chorded: cycle {} is not spanned by clique boundaries\n", faces_text(&witness)),
                json!({ "property": "chorded", "holds": false, "cycle": faces_json(&witness) }),
            ),
        },
        Property::CfChordal => {
            let holds = is_cf_chordal(c)?;
            let mut level = None;
            if !holds {
                for (k, x) in iterated_ascents(c).iter().enumerate() {
                    if !is_d_chorded(x)?.holds() {
                        level = Some(k);
                        break;
                    }
                }
            }
            let text = match level {
                Some(k) => format!("not CF-chordal: ascent level {k} is not chorded\n"),
                None => format!("{}\n", verdict("CF-chordal", holds)),
            };
            Report::new(holds, text, json!({ "property": "cf-chordal", "holds": holds, "level": level }))
        }
        Property::CfTree => {
            let holds = is_cf_tree(c);
            let text =
                if holds { "CF-tree\n".to_string() } else { "not a CF-tree: ⟨C⟩ contains a d-cycle\n".to_string() };
            Report::new(holds, text, json!({ "property": "cf-tree", "holds": holds }))
        }
    })
}

fn dual(c: &Clutter) -> Result<Report> {
    let dual = c.dual_clutter();
    let alexander = SimplicialComplex::from_clutter(c).alexander_dual();
    let text = format!(
        "dual clutter: {{{}}}\nAlexander dual of ⟨C⟩: {alexander}\n",
        dual.edges().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
    );
    let json = json!({
        "dual_clutter": faces_json(dual.edges()),
        "alexander_dual": if alexander.is_void() { Value::Null } else { faces_json(alexander.facets()) },
    });
    Ok(Report::new(true, text, json))
}

fn ascent_cmd(c: &Clutter, iterate: bool, output: Option<&Path>) -> Result<Report> {
    let levels = if iterate { iterated_ascents(c).split_off(1) } else { vec![ascent(c)] };
    let mut text = String::new();
    for (k, x) in levels.iter().enumerate() {
        let _ = writeln!(text, "C{} = {x}", "+".repeat(k + 1));
    }
    if let Some(path) = output {
        write_clutter(path, &levels[0]).map_err(in_file(path))?;
    }
    let json = json!({ "ascents": levels.iter().map(clutter_json).collect::<Vec<_>>() });
    Ok(Report::new(true, text, json))
}

fn homology(cli: &Cli, c: &Clutter, which: ComplexArg) -> Result<Report> {
    let (name, complex) = match which {
        ComplexArg::Clique => ("Δ(C)", clique_complex(c)),
        ComplexArg::Generated => ("⟨C⟩", SimplicialComplex::from_clutter(c)),
        ComplexArg::Dual => ("⟨C∨⟩", dual_complex(c)),
    };
    let profiles: Vec<_> = cli.field.fields().into_iter().map(|k| reduced_homology(&complex, k)).collect();
    let mut text = format!("{name} = {complex}\n");
    for p in &profiles {
        let _ = writeln!(text, "{p}");
    }
    let facets = if complex.is_void() { Value::Null } else { faces_json(complex.facets()) };
    Ok(Report::new(true, text, json!({ "complex": name, "facets": facets, "homology": profiles })))
}

fn betti(cli: &Cli, c: &Clutter) -> Result<Report> {
    let tables: Vec<_> = cli.field.fields().into_iter().map(|k| clutter_betti(c, k)).collect();
    let mut text = String::new();
    for t in &tables {
        let _ = writeln!(text, "over {}:\n{t}", t.field);
    }
    Ok(Report::new(true, text, json!({ "tables": tables })))
}

fn order_report(label: &str, order: Vec<Face>, generators: &Clutter, output: Option<&Path>) -> Result<Report> {
    let valid = AdmissibleOrder { order: order.clone() }.verify(generators.circuits());
    let json_order = faces_json(&order);
    if let Some(path) = output {
        write_file(path, &serde_json::to_string(&json_order).expect("faces serialize"))?;
    }
    let (holds, status) = match &valid {
        Ok(()) => (true, "admissible".to_string()),
        Err(e) => (false, format!("rejected: {e}")),
    };
    Ok(Report::new(
        holds,
        format!("{label}: {}\n{status}\n", faces_text(&order)),
        json!({ "order": json_order, "admissible": holds, "detail": status }),
    ))
}

fn quotients(action: &QuotientsAction, budget: &Budget) -> Result<Report> {
    match action {
        QuotientsAction::Find { file, output } => {
            let c = load(file)?;
            match has_linear_quotients(c.complement().circuits(), budget)? {
                Some(o) => order_report("order", o.order, &c.complement(), output.as_deref()),
                None => Ok(Report::new(
                    false,
                    "no admissible order of I(C̄)\n".into(),
                    json!({ "order": null, "admissible": false }),
                )),
            }
        }
        QuotientsAction::Verify { order, file } => {
            let c = load(file)?;
            let order = load_order(order)?;
            let result = AdmissibleOrder { order: order.clone() }.verify(c.complement().circuits());
            Ok(match result {
                Ok(()) => Report::new(true, "admissible\n".into(), json!({ "admissible": true })),
                Err(e @ (Error::InadmissibleOrder { .. } | Error::WrongGenerators(_))) => {
                    let at = admissibility_violation(&order).ok().flatten();
                    let text = match at {
                        Some((i, j)) => {
                            format!("rejected: {e}\n{} after {} has no singleton witness\n", order[i], order[j])
                        }
                        None => format!("rejected: {e}\n"),
                    };
                    Report::new(false, text, json!({ "admissible": false, "detail": e.to_string() }))
                }
                Err(e) => return Err(e.into()),
            })
        }
        QuotientsAction::Ascend { order, file, output } => {
            let c = load(file)?;
            let up = ascent_order(&c, &load_order(order)?)?;
            order_report("ascent order", up, &ascent(&c).complement(), output.as_deref())
        }
        QuotientsAction::Append { order, file, face, output } => {
            let c = load(file)?;
            let f = parse_face(face)?;
            let out = append_sms_generator(&c, &load_order(order)?, f)?;
            order_report("order", out, &c.remove_circuit(f)?.complement(), output.as_deref())
        }
        QuotientsAction::Restrict { order, file, vertex, output } => {
            let c = load(file)?;
            let v = vertex_index(&c, *vertex)?;
            let out = restrict_order_by_vertex(&load_order(order)?, v);
            order_report("order", out, &c.delete_vertex(v)?.complement(), output.as_deref())
        }
    }
}

fn kind(k: KindArg) -> CertificateKind {
    match k {
        KindArg::Elimination => CertificateKind::Elimination,
        KindArg::Shedding => CertificateKind::Shedding,
        KindArg::AdmissibleOrder => CertificateKind::AdmissibleOrder,
        KindArg::EdgeOrder => CertificateKind::EdgeOrder,
    }
}

fn certify_cmd(k: KindArg, c: &Clutter, output: Option<&Path>, budget: &Budget) -> Result<Report> {
    let k = kind(k);
    match certify(c, k, budget)? {
        Some(cert) => {
            let body = cert.to_json();
            let text = match output {
                Some(path) => {
                    write_file(path, &body)?;
                    format!("{} certificate written to {}\n", k.name(), path.display())
                }
                None => format!("{body}\n"),
            };
            Ok(Report::new(true, text, serde_json::to_value(&cert).expect("certificates serialize")))
        }
        None => Ok(Report::new(
            false,
            format!("no {} certificate: the property fails\n", k.name()),
            json!({ "kind": k.name(), "certificate": null }),
        )),
    }
}

fn verify(path: &Path, c: &Clutter, budget: &Budget) -> Result<Report> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let cert = Certificate::from_json(&text).map_err(in_file(path))?;
    let name = cert.kind().name();
    Ok(match cert.verify(c, budget) {
        Ok(()) => Report::new(true, format!("{name} certificate valid\n"), json!({ "kind": name, "valid": true })),
        Err(e @ (Error::BudgetExhausted(_) | Error::Io(_))) => return Err(e.into()),
        Err(e) => {
            let detail = match e {
                Error::InvalidCertificate(m) => m,
                other => other.to_string(),
            };
            Report::new(
                false,
                format!("{name} certificate rejected: {detail}\n"),
                json!({ "kind": name, "valid": false, "detail": detail }),
            )
        }
    })
}

fn list_theorems() -> Report {
    let mut text = String::new();
    for t in REGISTRY {
        let status = if t.status == Status::Proven { "proven" } else { "open" };
        let _ = writeln!(text, "{:<24} {status:<6} {}", t.id, t.statement);
    }
    let json = REGISTRY.iter().map(|t| json!({ "id": t.id, "status": t.status, "statement": t.statement })).collect();
    Report::new(true, text, Value::Array(json))
}

fn sweep(spec_path: &Path, ids: &[String], config: &SweepConfig) -> Result<Report> {
    let spec: GenSpec =
        serde_json::from_value(read_json(spec_path)?).map_err(|e| usage(format!("{}: {e}", spec_path.display())))?;
    let theorems: Vec<_> = if ids.is_empty() {
        REGISTRY.iter().collect()
    } else {
        ids.iter()
            .map(|id| REGISTRY.iter().find(|t| t.id == id).ok_or_else(|| usage(format!("unknown theorem {id}"))))
            .collect::<Result<_>>()?
    };
    let instances = spec.generate()?;
    let mut reports: Vec<SweepReport> = Vec::new();
    let mut text = String::new();
    for t in theorems {
        let r = sweep_instances(t, &instances, config);
        if let (Some(dir), Status::Open) = (&config.corpus, t.status) {
            write_corpus(dir, t, &spec, &r)?;
        }
        let status = if t.status == Status::Proven { "proven" } else { "open" };
        let _ = writeln!(
            text,
            "{:<24} {status:<6} {} instances: {} pass, {} fail, {} skip, {} over budget",
            t.id,
            r.instances,
            r.pass,
            r.fail,
            r.skip,
            r.budget_log.len()
        );
        for x in &r.counterexamples {
            let _ = writeln!(text, "  #{} {}: {}", x.index, x.clutter, x.detail);
            if let Some(s) = &x.shrunk {
                let _ = writeln!(text, "    shrunk to {s}\n{}", indent(&write_text(s)));
            }
        }
        reports.push(r);
    }
    let holds = reports.iter().all(SweepReport::holds);
    Ok(Report::new(holds, text, serde_json::to_value(&reports).expect("reports serialize")))
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("      {l}\n")).collect::<String>().trim_end().to_string()
}
