//! Bundled reference models and the published figures quoted for them.
//!
//! Three graphs ship with the crate: a five-vertex worked example, a
//! seven-vertex graph showing that subgraph connectivity is not transitive,
//! and a coronary heart disease (CHD) risk model. Each carries the values
//! published for it, so reports can show where a recomputation disagrees.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::connectivity::{conn_subgraphs, conn_vertex_to_subgraph, path_strength, ConnSemantics};
use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, FuzzySubgraph, VertexId};
use crate::io::document::{GraphDocument, Role};
use crate::membership::Membership;
use crate::structural::strength_summary;

pub const EXAMPLE_FSC: &str = include_str!("../../data/worked_example.fsc");
pub const NON_TRANSITIVE_FSC: &str = include_str!("../../data/nontransitive.fsc");
pub const CHD_FSC: &str = include_str!("../../data/chd.fsc");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundledModel {
    Example,
    NonTransitive,
    Chd,
}

/// The CHD graph with its three-way role partition.
#[derive(Debug, Clone)]
pub struct ChdModel {
    pub graph: FuzzyGraph,
    pub roles: BTreeMap<VertexId, Role>,
}

/// What a published figure measures.
#[derive(Debug, Clone, Copy)]
pub enum Quantity {
    VertexToSubgraph(&'static str, &'static [&'static str]),
    Subgraphs(&'static [&'static str], &'static [&'static str]),
    MinEdge,
    MaxEdge,
    Kappa,
    PathStrength(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy)]
pub struct PublishedClaim {
    pub label: &'static str,
    pub quantity: Quantity,
    pub published: &'static str,
    /// Explanation shown when the recomputed value differs.
    pub note: &'static str,
}

/// A published figure next to its recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub published: String,
    pub computed: String,
    pub agrees: bool,
    pub note: String,
}

const EXAMPLE_CLAIMS: &[PublishedClaim] = &[
    PublishedClaim {
        label: "CONN(a,H), H = <{b,c,d}>",
        quantity: Quantity::VertexToSubgraph("a", &["b", "c", "d"]),
        published: "0.9",
        note: "",
    },
    PublishedClaim {
        label: "CONN(e,H), H = <{b,c,d}>",
        quantity: Quantity::VertexToSubgraph("e", &["b", "c", "d"]),
        published: "0.4",
        note: "every path from e starts with edge e-d of membership 0.3",
    },
    PublishedClaim {
        label: "CONN(H1,H2), H1 = <{a,d}>, H2 = <{b,c}>",
        quantity: Quantity::Subgraphs(&["a", "d"], &["b", "c"]),
        published: "0.4",
        note: "",
    },
];

const NON_TRANSITIVE_CLAIMS: &[PublishedClaim] = &[
    PublishedClaim {
        label: "CONN(H1,H2), H1 = <{a,b}>, H2 = <{d,e}>",
        quantity: Quantity::Subgraphs(&["a", "b"], &["d", "e"]),
        published: "0.25",
        note: "",
    },
    PublishedClaim {
        label: "CONN(H2,H3), H2 = <{d,e}>, H3 = <{f,g}>",
        quantity: Quantity::Subgraphs(&["d", "e"], &["f", "g"]),
        published: "0.25",
        note: "",
    },
    PublishedClaim {
        label: "CONN(H1,H3), H1 = <{a,b}>, H3 = <{f,g}>",
        quantity: Quantity::Subgraphs(&["a", "b"], &["f", "g"]),
        published: "0.8",
        note: "",
    },
];

const CHD_CLAIMS: &[PublishedClaim] = &[
    PublishedClaim {
        label: "CONN(a2,H_D)",
        quantity: Quantity::VertexToSubgraph("a2", &["d1", "d2", "d3", "d4"]),
        published: "0.55",
        note: "",
    },
    PublishedClaim {
        label: "CONN(H_A,H_D) [path]",
        quantity: Quantity::Subgraphs(&["a1", "a2", "a3"], &["d1", "d2", "d3", "d4"]),
        published: "0.6",
        note:
            "the quoted route a1-c2-d1 needs an edge c2-d1, which the edge table does not contain",
    },
    PublishedClaim {
        label: "r(G)",
        quantity: Quantity::MinEdge,
        published: "0.3",
        note: "",
    },
    PublishedClaim {
        label: "d(G)",
        quantity: Quantity::MaxEdge,
        published: "0.9",
        note: "",
    },
    PublishedClaim {
        label: "kappa(G)",
        quantity: Quantity::Kappa,
        published: "0.9",
        note: "",
    },
    PublishedClaim {
        label: "strength of route a1 c2 d1",
        quantity: Quantity::PathStrength(&["a1", "c2", "d1"]),
        published: "0.6",
        note: "the edge table has c1-d1 (0.8) but no c2-d1",
    },
];

impl BundledModel {
    pub const ALL: [BundledModel; 3] = [
        BundledModel::Example,
        BundledModel::NonTransitive,
        BundledModel::Chd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BundledModel::Example => "example",
            BundledModel::NonTransitive => "non-transitive",
            BundledModel::Chd => "chd",
        }
    }

    pub fn source(self) -> &'static str {
        match self {
            BundledModel::Example => EXAMPLE_FSC,
            BundledModel::NonTransitive => NON_TRANSITIVE_FSC,
            BundledModel::Chd => CHD_FSC,
        }
    }

    pub fn document(self) -> GraphDocument {
        GraphDocument::parse(self.source()).expect("bundled documents are valid")
    }

    pub fn claims(self) -> &'static [PublishedClaim] {
        match self {
            BundledModel::Example => EXAMPLE_CLAIMS,
            BundledModel::NonTransitive => NON_TRANSITIVE_CLAIMS,
            BundledModel::Chd => CHD_CLAIMS,
        }
    }

    /// The bundled model whose graph equals `g` exactly, if any.
    pub fn identify(g: &FuzzyGraph) -> Option<BundledModel> {
        BundledModel::ALL
            .into_iter()
            .find(|m| &m.document().graph == g)
    }
}

pub fn example_document() -> GraphDocument {
    BundledModel::Example.document()
}

pub fn example_graph() -> FuzzyGraph {
    example_document().graph
}

pub fn non_transitive_document() -> GraphDocument {
    BundledModel::NonTransitive.document()
}

pub fn non_transitive_graph() -> FuzzyGraph {
    non_transitive_document().graph
}

pub fn chd_document() -> GraphDocument {
    BundledModel::Chd.document()
}

pub fn chd_model() -> ChdModel {
    let doc = chd_document();
    ChdModel {
        graph: doc.graph,
        roles: doc.roles,
    }
}

fn compute(g: &FuzzyGraph, quantity: Quantity) -> Result<Membership> {
    match quantity {
        Quantity::VertexToSubgraph(x, set) => {
            let h = FuzzySubgraph::induced(g, set)?;
            Ok(conn_vertex_to_subgraph(g, x, &h)?.value)
        }
        Quantity::Subgraphs(a, b) => {
            let (h1, h2) = crate::graph::disjoint_pair(g, a, b)?;
            Ok(conn_subgraphs(g, &h1, &h2, ConnSemantics::PathMaxMin)?.value)
        }
        Quantity::MinEdge => Ok(strength_summary(g)?.r_g),
        Quantity::MaxEdge => Ok(strength_summary(g)?.d_g),
        Quantity::Kappa => Ok(strength_summary(g)?.kappa_g),
        Quantity::PathStrength(path) => path_strength(g, path),
    }
}

/// Recomputes one published figure on `g`.
pub fn evaluate_claim(g: &FuzzyGraph, claim: &PublishedClaim) -> ClaimOutcome {
    let published: Membership = claim.published.parse().expect("published values parse");
    let (computed, agrees) = match compute(g, claim.quantity) {
        Ok(value) => (value.to_string(), value == published),
        Err(Error::NotAPath(why)) => (format!("not a path ({why})"), false),
        Err(e) => (format!("error ({e})"), false),
    };
    ClaimOutcome {
        claim: claim.label.to_string(),
        published: published.to_string(),
        computed,
        agrees,
        note: if agrees {
            String::new()
        } else {
            claim.note.to_string()
        },
    }
}

/// Every published figure for the bundled model matching `g`; empty when
/// `g` is not a bundled model.
pub fn evaluate_claims(g: &FuzzyGraph) -> Vec<ClaimOutcome> {
    BundledModel::identify(g)
        .map(|model| {
            model
                .claims()
                .iter()
                .map(|c| evaluate_claim(g, c))
                .collect()
        })
        .unwrap_or_default()
}
