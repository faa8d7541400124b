//! Seeded instance generation and theorem sweeps.
//!
//! A sweep runs one registered check over a stream of clutters. Proven
//! statements must never fail; their counterexamples are shrunk by greedy
//! circuit removal. Open statements only log their hits, which can be
//! written to a corpus directory as clutter files with a JSON annotation.

mod fig;
mod generate;
mod theorems;

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::clutter::Clutter;
use crate::face::{binomial, Face};
use crate::io::write_text;
use crate::{Error, Result};

pub use fig::{find_fig_graph, relaxed_edge_order, FigWitness};
pub use generate::{Family, GenSpec};
pub use theorems::{lookup, top_homology_vanishes, Check, Status, Theorem, Verdict, REGISTRY};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Node cap for each instance.
    pub budget: u64,
    /// Shrink counterexamples to proven statements.
    pub shrink: bool,
    /// Where hits of open statements are written.
    pub corpus: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig { budget: 2_000_000, shrink: true, corpus: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub clutter: Clutter,
    pub detail: String,
    /// Minimal reproducer for proven statements.
    pub shrunk: Option<Clutter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetEvent {
    pub index: usize,
    pub cap: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub theorem: String,
    pub status: Status,
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub counterexamples: Vec<Counterexample>,
    pub budget_log: Vec<BudgetEvent>,
}

impl SweepReport {
    fn empty(t: &Theorem) -> SweepReport {
        SweepReport {
            theorem: t.id.to_string(),
            status: t.status,
            instances: 0,
            pass: 0,
            fail: 0,
            skip: 0,
            counterexamples: Vec::new(),
            budget_log: Vec::new(),
        }
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.instances += other.instances;
        self.pass += other.pass;
        self.fail += other.fail;
        self.skip += other.skip;
        self.counterexamples.extend(other.counterexamples);
        self.budget_log.extend(other.budget_log);
        self
    }

    /// Open statements always hold; proven ones need zero failures.
    pub fn holds(&self) -> bool {
        self.status == Status::Open || self.fail == 0
    }

    /// Instances where the hypothesis was met and the check ran.
    pub fn checked(&self) -> usize {
        self.pass + self.fail
    }
}

/// Runs the check once with a fresh budget. Budget exhaustion is `None`;
/// any other error counts as a failure.
fn run_one(t: &Theorem, c: &Clutter, cap: u64) -> Option<Verdict> {
    match (t.check)(c, &Budget::new(cap)) {
        Ok(v) => Some(v),
        Err(Error::BudgetExhausted(_)) => None,
        Err(e) => Some(Verdict::Fail(format!("error: {e}"))),
    }
}

/// Removes circuits one at a time while the check keeps failing.
pub fn shrink(t: &Theorem, c: &Clutter, cap: u64) -> Clutter {
    let mut cur = c.clone();
    loop {
        let smaller = cur.circuits().iter().find_map(|&f| {
            let cand = cur.remove_circuit(f).expect("circuit-sized");
            matches!(run_one(t, &cand, cap), Some(Verdict::Fail(_))).then_some(cand)
        });
        match smaller {
            Some(s) => cur = s,
            None => return cur,
        }
    }
}

/// Sweeps a theorem over explicit instances. The report is independent of
/// scheduling: counterexamples and budget events are sorted by index.
pub fn sweep_instances(t: &Theorem, instances: &[Clutter], config: &SweepConfig) -> SweepReport {
    let mut report = instances
        .par_iter()
        .enumerate()
        .map(|(index, c)| {
            let mut r = SweepReport::empty(t);
            r.instances = 1;
            match run_one(t, c, config.budget) {
                None => {
                    r.skip = 1;
                    r.budget_log.push(BudgetEvent { index, cap: config.budget });
                }
                Some(Verdict::Pass) => r.pass = 1,
                Some(Verdict::Skip(_)) => r.skip = 1,
                Some(Verdict::Fail(detail)) => {
                    r.fail = 1;
                    r.counterexamples.push(Counterexample { index, clutter: c.clone(), detail, shrunk: None });
                }
            }
            r
        })
        .reduce(|| SweepReport::empty(t), SweepReport::merge);
    report.counterexamples.sort_by_key(|x| x.index);
    report.budget_log.sort_by_key(|x| x.index);
    if t.status == Status::Proven && config.shrink {
        for x in report.counterexamples.iter_mut().take(5) {
            x.shrunk = Some(shrink(t, &x.clutter, config.budget));
        }
    }
    report
}

/// Sweeps a registered theorem over the instances of `spec`, writing any
/// hits of an open statement to the configured corpus.
pub fn sweep_with(theorem_id: &str, spec: &GenSpec, config: &SweepConfig) -> Result<SweepReport> {
    let t = lookup(theorem_id).ok_or_else(|| Error::InvalidSpec(format!("unknown theorem {theorem_id}")))?;
    let instances = spec.generate()?;
    let report = sweep_instances(t, &instances, config);
    if let (Some(dir), Status::Open) = (&config.corpus, t.status) {
        write_corpus(dir, t, spec, &report)?;
    }
    Ok(report)
}

pub fn sweep(theorem_id: &str, spec: &GenSpec) -> Result<SweepReport> {
    sweep_with(theorem_id, spec, &SweepConfig::default())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusAnnotation {
    pub hunt: String,
    pub statement: String,
    pub spec: GenSpec,
    pub index: usize,
    pub detail: String,
}

/// Writes `<hunt>-<seed>-<index>.clutter` and a matching `.json`
/// annotation per hit. Returns the clutter paths.
pub fn write_corpus(dir: &Path, t: &Theorem, spec: &GenSpec, report: &SweepReport) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut paths = Vec::new();
    for x in &report.counterexamples {
        let stem = format!("{}-{}-{}", t.id, spec.seed, x.index);
        let path = dir.join(format!("{stem}.clutter"));
        fs::write(&path, write_text(&x.clutter)).map_err(io)?;
        let note = CorpusAnnotation {
            hunt: t.id.to_string(),
            statement: t.statement.to_string(),
            spec: spec.clone(),
            index: x.index,
            detail: x.detail.clone(),
        };
        let json = serde_json::to_string_pretty(&note).expect("annotation serializes");
        fs::write(dir.join(format!("{stem}.json")), json).map_err(io)?;
        paths.push(path);
    }
    Ok(paths)
}

/// Every `d`-clutter on `[n]`, in order of the bitmask over the
/// lexicographically sorted `(d+1)`-subsets.
pub fn all_clutters(n: usize, d: usize) -> Result<Vec<Clutter>> {
    let subsets: Vec<Face> = Face::full(n)?.k_subsets(d + 1).collect();
    let m = binomial(n, d + 1);
    if m > 20 {
        return Err(Error::InvalidSpec(format!("2^{m} clutters is too many to enumerate")));
    }
    (0..1u64 << m)
        .map(|mask| {
            Clutter::on_n(n, d, subsets.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &f)| f))
        })
        .collect()
}
