//! Measured checks of the standard claims about subgraph connectivity.
//!
//! Nothing here assumes a claim holds. Each check computes both sides and
//! reports them. Claims whose own proofs measure connectivity by crossing
//! edges are evaluated that way, with the path value listed next to them.

use serde::{Serialize, Serializer};

use crate::connectivity::{conn_subgraphs, crossing_edges, path_strength, ConnSemantics};
use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, FuzzySubgraph};
use crate::membership::Membership;
use crate::structural::{
    eccentric_index, is_complete_fuzzy_graph, is_fuzzy_tree, strength_summary,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub name: String,
    pub holds: bool,
    #[serde(serialize_with = "ordered_map")]
    pub details: Vec<(String, String)>,
}

fn ordered_map<S: Serializer>(
    entries: &[(String, String)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(entries.iter().map(|(k, v)| (k, v)))
}

impl TheoremCheck {
    fn new(name: impl Into<String>, holds: bool, details: &[(&str, String)]) -> TheoremCheck {
        TheoremCheck {
            name: name.into(),
            holds,
            details: details
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }
}

/// Evaluates every claim that applies to `(h1, h2)` in `g`.
///
/// * `symmetry[s]`: value under `s` is the same in both directions.
/// * `bounds[s]`: `r(G) <= CONN <= d(G)`, when the pair is connected
///   (path) or has a crossing edge (xmax).
/// * `kappa-bound[s]`: `CONN <= κ(G)`.
/// * `tree-max-edge[xmax]`: on fuzzy trees, `CONN = κ(G)` iff a maximum
///   strength edge crosses the pair.
/// * `tree-eccentric[xmax]`: on fuzzy trees with a mutually eccentric pair
///   `u ∈ H1`, `v ∈ H2`, `CONN` equals the strength of the `u`–`v` path.
/// * `complete-min-sigma[xmin]`: on complete fuzzy graphs, `CONN` equals
///   the least vertex membership in `H1 ∪ H2`.
pub fn check_theorems(
    g: &FuzzyGraph,
    h1: &FuzzySubgraph<'_>,
    h2: &FuzzySubgraph<'_>,
) -> Result<Vec<TheoremCheck>> {
    let path = conn_subgraphs(g, h1, h2, ConnSemantics::PathMaxMin)?.value;
    let path_back = conn_subgraphs(g, h2, h1, ConnSemantics::PathMaxMin)?.value;
    let xmax = conn_subgraphs(g, h1, h2, ConnSemantics::CrossEdgeMax)?.value;
    let xmax_back = conn_subgraphs(g, h2, h1, ConnSemantics::CrossEdgeMax)?.value;
    let has_crossing = crossing_edges(g, h1, h2).next().is_some();

    let mut checks = Vec::new();
    let symmetry = |name: &str, a: Membership, b: Membership| {
        TheoremCheck::new(
            name,
            a == b,
            &[("forward", a.to_string()), ("backward", b.to_string())],
        )
    };
    checks.push(symmetry("symmetry[path]", path, path_back));
    checks.push(symmetry("symmetry[xmax]", xmax, xmax_back));
    if has_crossing {
        let xmin = conn_subgraphs(g, h1, h2, ConnSemantics::CrossEdgeMin)?.value;
        let xmin_back = conn_subgraphs(g, h2, h1, ConnSemantics::CrossEdgeMin)?.value;
        checks.push(symmetry("symmetry[xmin]", xmin, xmin_back));
    }

    let summary = match strength_summary(g) {
        Ok(s) => s,
        Err(Error::EdgelessGraph) => return Ok(checks),
        Err(e) => return Err(e),
    };
    let bounds = |name: &str, value: Membership| {
        TheoremCheck::new(
            name,
            summary.r_g <= value && value <= summary.d_g,
            &[
                ("r(G)", summary.r_g.to_string()),
                ("conn", value.to_string()),
                ("d(G)", summary.d_g.to_string()),
            ],
        )
    };
    if !path.is_zero() {
        checks.push(bounds("bounds[path]", path));
    }
    if has_crossing {
        checks.push(bounds("bounds[xmax]", xmax));
    }
    for (name, value) in [("kappa-bound[path]", path), ("kappa-bound[xmax]", xmax)] {
        checks.push(TheoremCheck::new(
            name,
            value <= summary.kappa_g,
            &[
                ("conn", value.to_string()),
                ("kappa(G)", summary.kappa_g.to_string()),
            ],
        ));
    }

    if is_fuzzy_tree(g) {
        let max_edge_crosses = crossing_edges(g, h1, h2).any(|(_, _, mu)| mu == summary.kappa_g);
        checks.push(TheoremCheck::new(
            "tree-max-edge[xmax]",
            (xmax == summary.kappa_g) == max_edge_crosses,
            &[
                ("conn", xmax.to_string()),
                ("kappa(G)", summary.kappa_g.to_string()),
                ("max edge crosses", max_edge_crosses.to_string()),
                ("path conn", path.to_string()),
            ],
        ));
        if let Some((u, v)) = mutually_eccentric_pair(g, h1, h2) {
            let tree_path = tree_path(g, u, v);
            let names: Vec<&str> = tree_path.iter().map(|&i| g.name(i).as_str()).collect();
            let strength = path_strength(g, &names)?;
            checks.push(TheoremCheck::new(
                "tree-eccentric[xmax]",
                xmax == strength,
                &[
                    ("u", g.name(u).to_string()),
                    ("v", g.name(v).to_string()),
                    ("u-v path", names.join(" ")),
                    ("path strength", strength.to_string()),
                    ("conn", xmax.to_string()),
                    ("path conn", path.to_string()),
                ],
            ));
        }
    }

    if is_complete_fuzzy_graph(g) && has_crossing {
        let xmin = conn_subgraphs(g, h1, h2, ConnSemantics::CrossEdgeMin)?.value;
        let min_sigma = h1
            .members()
            .iter()
            .chain(h2.members())
            .map(|&i| g.sigma_at(i))
            .min()
            .expect("subgraphs are non-empty");
        checks.push(TheoremCheck::new(
            "complete-min-sigma[xmin]",
            xmin == min_sigma,
            &[
                ("conn", xmin.to_string()),
                ("min sigma", min_sigma.to_string()),
                ("path conn", path.to_string()),
            ],
        ));
    }
    Ok(checks)
}

/// First `u ∈ H1` (by name) whose eccentric vertex `v ∈ H2` has `u` as its
/// own eccentric vertex in `H1`.
fn mutually_eccentric_pair(
    g: &FuzzyGraph,
    h1: &FuzzySubgraph<'_>,
    h2: &FuzzySubgraph<'_>,
) -> Option<(usize, usize)> {
    h1.members().iter().find_map(|&u| {
        let v = eccentric_index(g, u, h2.members());
        (eccentric_index(g, v, h1.members()) == u).then_some((u, v))
    })
}

/// The unique path between two vertices of a tree.
fn tree_path(g: &FuzzyGraph, from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for &(n, _) in g.neighbors(v) {
            if parent[n] == usize::MAX {
                parent[n] = v;
                stack.push(n);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}
