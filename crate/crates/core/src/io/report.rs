use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::connectivity::{
    conn_subgraphs, conn_vertex_to_subgraph, ConnSemantics, ConnValue, PathWitness,
};
use crate::error::{Error, Result};
use crate::graph::{ensure_disjoint, VertexId};
use crate::io::bundled::{evaluate_claims, ClaimOutcome};
use crate::io::document::{GraphDocument, Role};
use crate::membership::Membership;
use crate::structural::{fuzzy_bridges, strength_summary, strongest_path, BridgeReport};
use crate::theorems::{check_theorems, TheoremCheck};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportOptions {
    /// Subgraph names to pair up; `None` means every declared subgraph.
    pub subgraphs: Option<Vec<String>>,
    pub semantics: ConnSemantics,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            subgraphs: None,
            semantics: ConnSemantics::PathMaxMin,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoleSummary {
    pub uncontrollable: Vec<VertexId>,
    pub indicator: Vec<VertexId>,
    pub controllable: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub vertices: usize,
    pub edges: usize,
    pub r_g: Option<Membership>,
    pub d_g: Option<Membership>,
    pub kappa_g: Option<Membership>,
    pub roles: RoleSummary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    Vertex,
    Subgraph,
}

/// One connectivity reading. `from` is a vertex name for vertex rows and
/// a subgraph name otherwise; `to` is always a subgraph name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub kind: RowKind,
    pub from: String,
    pub to: String,
    pub semantics: ConnSemantics,
    /// `None` when the semantics is undefined for the pair (no crossing
    /// edge under `xmin`).
    pub value: Option<Membership>,
    pub witness: Option<Vec<VertexId>>,
}

impl PairRow {
    fn new(
        kind: RowKind,
        from: &str,
        to: &str,
        semantics: ConnSemantics,
        conn: Option<ConnValue>,
    ) -> Self {
        PairRow {
            kind,
            from: from.to_string(),
            to: to.to_string(),
            semantics,
            value: conn.as_ref().map(|c| c.value),
            witness: conn.and_then(|c| c.witness).map(|w| w.vertices),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub pair: (String, String),
    #[serde(flatten)]
    pub check: TheoremCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub summary: ReportSummary,
    pub pairs: Vec<PairRow>,
    pub bridges: Vec<BridgeReport>,
    pub strongest_path: Option<PathWitness>,
    pub checks: Vec<PairCheck>,
    /// Published figures that the recomputation contradicts.
    pub discrepancies: Vec<ClaimOutcome>,
    /// Every published figure for a bundled model, agreeing or not.
    #[serde(skip)]
    pub published: Vec<ClaimOutcome>,
}

pub fn generate_report(doc: &GraphDocument, options: &ReportOptions) -> Result<ConnectivityReport> {
    let g = &doc.graph;
    let summary_stats = match strength_summary(g) {
        Ok(s) => Some(s),
        Err(Error::EdgelessGraph) => None,
        Err(e) => return Err(e),
    };
    let role_list = |r| doc.vertices_with_role(r).into_iter().cloned().collect();
    let summary = ReportSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        r_g: summary_stats.map(|s| s.r_g),
        d_g: summary_stats.map(|s| s.d_g),
        kappa_g: summary_stats.map(|s| s.kappa_g),
        roles: RoleSummary {
            uncontrollable: role_list(Role::Uncontrollable),
            indicator: role_list(Role::Indicator),
            controllable: role_list(Role::Controllable),
        },
    };

    let explicit = options.subgraphs.is_some();
    let names: Vec<String> = match &options.subgraphs {
        Some(list) => list.clone(),
        None => doc.subgraphs.iter().map(|d| d.name.clone()).collect(),
    };
    let subgraphs = names
        .iter()
        .map(|n| doc.subgraph(n))
        .collect::<Result<Vec<_>>>()?;
    let mut pair_indices = Vec::new();
    for i in 0..subgraphs.len() {
        for j in i + 1..subgraphs.len() {
            match ensure_disjoint(&subgraphs[i], &subgraphs[j]) {
                Ok(()) => pair_indices.push((i, j)),
                Err(e) if explicit => return Err(e),
                Err(_) => {}
            }
        }
    }

    let semantics = options.semantics;
    let mut vertex_rows = Vec::new();
    let mut seen = BTreeSet::new();
    let mut pair_rows = Vec::new();
    let mut checks = Vec::new();
    for &(i, j) in &pair_indices {
        let (h1, h2) = (&subgraphs[i], &subgraphs[j]);
        if semantics == ConnSemantics::PathMaxMin {
            for x in h1.vertices() {
                if seen.insert((x.clone(), j)) {
                    let conn = conn_vertex_to_subgraph(g, x, h2)?;
                    vertex_rows.push(PairRow::new(
                        RowKind::Vertex,
                        x,
                        &names[j],
                        semantics,
                        Some(conn),
                    ));
                }
            }
        }
        let conn = match conn_subgraphs(g, h1, h2, semantics) {
            Ok(c) => Some(c),
            Err(Error::NoCrossingEdge) => None,
            Err(e) => return Err(e),
        };
        pair_rows.push(PairRow::new(
            RowKind::Subgraph,
            &names[i],
            &names[j],
            semantics,
            conn,
        ));
        for check in check_theorems(g, h1, h2)? {
            checks.push(PairCheck {
                pair: (names[i].clone(), names[j].clone()),
                check,
            });
        }
    }
    vertex_rows.extend(pair_rows);

    let published = evaluate_claims(g);
    let discrepancies = published.iter().filter(|c| !c.agrees).cloned().collect();
    Ok(ConnectivityReport {
        summary,
        pairs: vertex_rows,
        bridges: fuzzy_bridges(g)?,
        strongest_path: summary_stats.map(|_| strongest_path(g)).transpose()?,
        checks,
        discrepancies,
        published,
    })
}

fn or_none(v: Option<Membership>) -> String {
    v.map_or_else(|| "none".to_string(), |m| m.to_string())
}

impl ConnectivityReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Plain-text rendering: summary, vertex-to-subgraph rows, subgraph
    /// pairs, bridges, strongest path, checks, then published figures.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        writeln!(
            out,
            "fuzzy graph: {} vertices, {} edges",
            s.vertices, s.edges
        )
        .unwrap();
        writeln!(
            out,
            "r(G) = {}, d(G) = {}, kappa(G) = {}",
            or_none(s.r_g),
            or_none(s.d_g),
            or_none(s.kappa_g)
        )
        .unwrap();
        for (label, list) in [
            ("uncontrollable", &s.roles.uncontrollable),
            ("indicator", &s.roles.indicator),
            ("controllable", &s.roles.controllable),
        ] {
            if !list.is_empty() {
                let names: Vec<&str> = list.iter().map(|v| v.as_str()).collect();
                writeln!(out, "{label}: {}", names.join(" ")).unwrap();
            }
        }

        for (kind, title) in [
            (RowKind::Vertex, "vertex-to-subgraph connectivity"),
            (RowKind::Subgraph, "subgraph connectivity"),
        ] {
            let rows: Vec<_> = self.pairs.iter().filter(|r| r.kind == kind).collect();
            if rows.is_empty() {
                continue;
            }
            writeln!(out, "\n{title}:").unwrap();
            for row in rows {
                write!(
                    out,
                    "  CONN({},{}) [{}] = {}",
                    row.from,
                    row.to,
                    row.semantics,
                    or_none(row.value)
                )
                .unwrap();
                if let Some(w) = &row.witness {
                    let names: Vec<&str> = w.iter().map(|v| v.as_str()).collect();
                    write!(out, "  via {}", names.join(" ")).unwrap();
                }
                out.push('\n');
            }
        }

        writeln!(out, "\nfuzzy bridges:").unwrap();
        if self.bridges.is_empty() {
            writeln!(out, "  none").unwrap();
        }
        for b in &self.bridges {
            let pairs: Vec<String> = b
                .weakened_pairs
                .iter()
                .map(|p| format!("{}-{} {} -> {}", p.u, p.v, p.before, p.after))
                .collect();
            writeln!(
                out,
                "  {}-{} ({}): {}",
                b.edge.0,
                b.edge.1,
                b.membership,
                pairs.join(", ")
            )
            .unwrap();
        }

        match &self.strongest_path {
            Some(p) => writeln!(out, "\nstrongest path: {} ({})", p, p.strength).unwrap(),
            None => writeln!(out, "\nstrongest path: none").unwrap(),
        }

        if !self.checks.is_empty() {
            writeln!(out, "\nchecks:").unwrap();
            for c in &self.checks {
                let details: Vec<String> = c
                    .check
                    .details
                    .iter()
                    .map(|(k, v)| format!("{k} = {v}"))
                    .collect();
                writeln!(
                    out,
                    "  [{}] {} ({},{}): {}",
                    if c.check.holds { "holds" } else { "FAILS" },
                    c.check.name,
                    c.pair.0,
                    c.pair.1,
                    details.join(", ")
                )
                .unwrap();
            }
        }

        if !self.published.is_empty() {
            writeln!(out, "\npublished vs computed:").unwrap();
            for c in &self.published {
                writeln!(
                    out,
                    "  [{}] {}: published {}, computed {}",
                    if c.agrees { "ok" } else { "DIFFERS" },
                    c.claim,
                    c.published,
                    c.computed
                )
                .unwrap();
            }
        }
        for d in &self.discrepancies {
            write!(
                out,
                "discrepancy: {}: published value {}, computed {}",
                d.claim, d.published, d.computed
            )
            .unwrap();
            if !d.note.is_empty() {
                write!(out, " ({})", d.note).unwrap();
            }
            out.push('\n');
        }
        out
    }
}
