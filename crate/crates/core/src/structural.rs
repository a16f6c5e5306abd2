//! Graph-level structure: edge-strength statistics, fuzzy bridges,
//! strongest paths, fuzzy trees, complete fuzzy graphs and eccentric
//! vertices.

use std::collections::VecDeque;

use serde::Serialize;

use crate::connectivity::{all_pairs_conn, canonical_path, widest_from, PathWitness};
use crate::error::{Error, Result};
use crate::graph::{ensure_disjoint, FuzzyGraph, FuzzySubgraph, VertexId};
use crate::membership::Membership;

/// Minimum and maximum edge membership.
///
/// `kappa_g` is the maximum edge strength under another name; it always
/// equals `d_g`. It is *not* vertex connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrengthSummary {
    pub r_g: Membership,
    pub d_g: Membership,
    pub kappa_g: Membership,
}

pub fn strength_summary(g: &FuzzyGraph) -> Result<StrengthSummary> {
    let mut memberships = g.edges().map(|(_, _, mu)| mu);
    let first = memberships.next().ok_or(Error::EdgelessGraph)?;
    let (r_g, d_g) = memberships.fold((first, first), |(lo, hi), mu| (lo.min(mu), hi.max(mu)));
    Ok(StrengthSummary {
        r_g,
        d_g,
        kappa_g: d_g,
    })
}

/// A vertex pair whose connectivity drops when an edge is deleted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakenedPair {
    pub u: VertexId,
    pub v: VertexId,
    pub before: Membership,
    pub after: Membership,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub edge: (VertexId, VertexId),
    pub membership: Membership,
    /// Every pair `u < v` weakened by the deletion, in name order.
    pub weakened_pairs: Vec<WeakenedPair>,
}

/// Connectivity between the endpoints of `(a, b)` once that edge is gone.
fn endpoint_conn_without(g: &FuzzyGraph, a: usize, b: usize) -> Result<Membership> {
    let reduced = g.without_edge(g.name(a), g.name(b))?;
    Ok(widest_from(&reduced, &[a])[b])
}

/// Whether deleting `u–v` lowers the connectivity of some vertex pair.
///
/// Uses the local test `CONN(G - uv)(u, v) < μ(u, v)`.
pub fn is_fuzzy_bridge(g: &FuzzyGraph, u: &str, v: &str) -> Result<bool> {
    let (a, b) = (g.index_of(u)?, g.index_of(v)?);
    let mu = g
        .mu_at(a, b)
        .ok_or_else(|| Error::UnknownEdge(u.to_string(), v.to_string()))?;
    Ok(endpoint_conn_without(g, a, b)? < mu)
}

/// All fuzzy bridges in edge order, each with the full list of pairs it
/// weakens.
pub fn fuzzy_bridges(g: &FuzzyGraph) -> Result<Vec<BridgeReport>> {
    let before = all_pairs_conn(g);
    let mut reports = Vec::new();
    for ((a, b), mu) in g.edge_indices() {
        if endpoint_conn_without(g, a, b)? >= mu {
            continue;
        }
        let reduced = g.without_edge(g.name(a), g.name(b))?;
        let after = all_pairs_conn(&reduced);
        let weakened_pairs: Vec<WeakenedPair> = before
            .pairs()
            .zip(after.pairs())
            .filter(|((_, _, x), (_, _, y))| y < x)
            .map(|((u, v, x), (_, _, y))| WeakenedPair {
                u: u.clone(),
                v: v.clone(),
                before: x,
                after: y,
            })
            .collect();
        // The endpoints themselves are always among the weakened pairs.
        debug_assert!(!weakened_pairs.is_empty());
        reports.push(BridgeReport {
            edge: (g.name(a).clone(), g.name(b).clone()),
            membership: mu,
            weakened_pairs,
        });
    }
    Ok(reports)
}

/// Singleton subgraphs `⟨{u}⟩`, `⟨{v}⟩` on the endpoints of a bridge.
/// Their path connectivity equals `μ(u, v)`.
pub fn bridge_realizing_subgraphs<'g>(
    g: &'g FuzzyGraph,
    u: &str,
    v: &str,
) -> Result<(FuzzySubgraph<'g>, FuzzySubgraph<'g>)> {
    if !is_fuzzy_bridge(g, u, v)? {
        return Err(Error::NotABridge(u.to_string(), v.to_string()));
    }
    let (first, second) = if u <= v { (u, v) } else { (v, u) };
    Ok((
        FuzzySubgraph::induced(g, [first])?,
        FuzzySubgraph::induced(g, [second])?,
    ))
}

/// A path of globally maximal strength. Under min-aggregation a single
/// edge of maximum membership always attains it; the lexicographically
/// first such edge is returned.
pub fn strongest_path(g: &FuzzyGraph) -> Result<PathWitness> {
    let summary = strength_summary(g)?;
    let ((a, b), _) = g
        .edge_indices()
        .find(|&(_, mu)| mu == summary.d_g)
        .expect("d(G) is an edge membership");
    let mut sources = vec![false; g.vertex_count()];
    let mut targets = vec![false; g.vertex_count()];
    sources[a] = true;
    targets[b] = true;
    let path = canonical_path(g, &sources, &targets, summary.d_g).expect("edge is a path");
    Ok(PathWitness::from_indices(g, &path))
}

fn crisp_hops(g: &FuzzyGraph, from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &(n, _) in g.neighbors(v) {
            if dist[n].is_none() {
                dist[n] = Some(d + 1);
                queue.push_back(n);
            }
        }
    }
    dist
}

/// Whether the underlying crisp graph is a tree (connected and acyclic).
pub fn is_fuzzy_tree(g: &FuzzyGraph) -> bool {
    g.edge_count() + 1 == g.vertex_count() && crisp_hops(g, 0).iter().all(Option::is_some)
}

/// Whether every vertex pair carries `μ(u,v) = min(σ(u), σ(v))`, with a
/// missing edge counting as zero.
pub fn is_complete_fuzzy_graph(g: &FuzzyGraph) -> bool {
    let n = g.vertex_count();
    (0..n).all(|a| {
        (a + 1..n)
            .all(|b| g.mu_at(a, b).unwrap_or(Membership::ZERO) == g.sigma_at(a).min(g.sigma_at(b)))
    })
}

/// The vertex of `h2` farthest from `u` (by hop count in the crisp tree),
/// ties going to the smallest name.
pub fn eccentric_vertex<'g>(
    g: &'g FuzzyGraph,
    u: &str,
    h1: &FuzzySubgraph<'_>,
    h2: &FuzzySubgraph<'_>,
) -> Result<&'g VertexId> {
    if !std::ptr::eq(g, h1.host()) {
        return Err(Error::ForeignSubgraph);
    }
    ensure_disjoint(h1, h2)?;
    if !is_fuzzy_tree(g) {
        return Err(Error::NotAFuzzyTree);
    }
    let a = g.index_of(u)?;
    if !h1.mask()[a] {
        return Err(Error::VertexNotInSubgraph(u.to_string()));
    }
    Ok(g.name(eccentric_index(g, a, h2.members())))
}

pub(crate) fn eccentric_index(g: &FuzzyGraph, from: usize, candidates: &[usize]) -> usize {
    let dist = crisp_hops(g, from);
    let mut best = candidates[0];
    for &c in &candidates[1..] {
        // Strictly greater keeps the earliest (smallest-name) candidate on ties.
        if dist[c] > dist[best] {
            best = c;
        }
    }
    best
}
