//! Every certificate the crate emits, under one JSON schema with a `kind`
//! tag, and a single replay entry point.
//!
//! ```json
//! {"kind":"elimination","steps":[[1,2],[1,4]]}
//! {"kind":"shedding","tree":{"shed":{"vertex":6,"link":"simplex","deletion":"simplex"}}}
//! {"kind":"admissible-order","order":[[1,2,6],[1,3,6]]}
//! {"kind":"edge-order","edges":[[1,2]],"simplicial_prefix":0}
//! ```

use serde::{Deserialize, Serialize};

use crate::ascent::{chordal_edge_order, EdgeOrder};
use crate::budget::Budget;
use crate::chordality::{is_chordal, is_vertex_decomposable, EliminationCertificate, SheddingCertificate};
use crate::clutter::Clutter;
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::quotients::{has_linear_quotients, AdmissibleOrder};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `C` is chordal.
    Elimination { steps: Vec<Face> },
    /// `⟨C∨⟩` is vertex decomposable.
    Shedding { tree: SheddingCertificate },
    /// `I(C̄)` has linear quotients.
    AdmissibleOrder { order: Vec<Face> },
    /// Edge order of a chordal graph.
    EdgeOrder { edges: Vec<Face>, simplicial_prefix: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Elimination,
    Shedding,
    AdmissibleOrder,
    EdgeOrder,
}

impl CertificateKind {
    pub const ALL: [CertificateKind; 4] = [
        CertificateKind::Elimination,
        CertificateKind::Shedding,
        CertificateKind::AdmissibleOrder,
        CertificateKind::EdgeOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::Elimination => "elimination",
            CertificateKind::Shedding => "shedding",
            CertificateKind::AdmissibleOrder => "admissible-order",
            CertificateKind::EdgeOrder => "edge-order",
        }
    }
}

/// `⟨C∨⟩`, the complex a shedding certificate of `C` describes.
pub fn dual_complex(c: &Clutter) -> SimplicialComplex {
    SimplicialComplex::from_general(&c.dual_clutter())
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::Elimination { .. } => CertificateKind::Elimination,
            Certificate::Shedding { .. } => CertificateKind::Shedding,
            Certificate::AdmissibleOrder { .. } => CertificateKind::AdmissibleOrder,
            Certificate::EdgeOrder { .. } => CertificateKind::EdgeOrder,
        }
    }

    /// Replays the certificate against `c`. The budget is only used by edge
    /// orders, which re-check chordality along the way.
    pub fn verify(&self, c: &Clutter, budget: &Budget) -> Result<()> {
        match self {
            Certificate::Elimination { steps } => EliminationCertificate { steps: steps.clone() }.verify(c),
            Certificate::Shedding { tree } => tree.verify(&dual_complex(c)),
            Certificate::AdmissibleOrder { order } => {
                AdmissibleOrder { order: order.clone() }.verify(c.complement().circuits()).map_err(|e| match e {
                    Error::InvalidCertificate(_) => e,
                    other => Error::InvalidCertificate(other.to_string()),
                })
            }
            Certificate::EdgeOrder { edges, simplicial_prefix } => {
                EdgeOrder { edges: edges.clone(), simplicial_prefix: *simplicial_prefix }.verify(c, budget)
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }
}

/// Searches for a certificate of the given kind. `Ok(None)` means the
/// property fails; edge orders of non-graphs are a precondition error.
pub fn certify(c: &Clutter, kind: CertificateKind, budget: &Budget) -> Result<Option<Certificate>> {
    Ok(match kind {
        CertificateKind::Elimination => {
            is_chordal(c, budget)?.map(|cert| Certificate::Elimination { steps: cert.steps })
        }
        CertificateKind::Shedding => {
            is_vertex_decomposable(&dual_complex(c), budget)?.map(|tree| Certificate::Shedding { tree })
        }
        CertificateKind::AdmissibleOrder => has_linear_quotients(c.complement().circuits(), budget)?
            .map(|o| Certificate::AdmissibleOrder { order: o.order }),
        CertificateKind::EdgeOrder => {
            if c.d() != 1 {
                return Err(Error::Precondition("edge orders are defined for graphs".into()));
            }
            if is_chordal(c, budget)?.is_none() {
                None
            } else {
                let o = chordal_edge_order(c, budget)?;
                Some(Certificate::EdgeOrder { edges: o.edges, simplicial_prefix: o.simplicial_prefix })
            }
        }
    })
}
