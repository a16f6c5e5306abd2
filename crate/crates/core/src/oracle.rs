//! Brute-force reference answers by exhaustive simple-path enumeration.
//!
//! Exponential by nature; every entry point is guarded by an
//! [`OracleBudget`]. The code deliberately shares nothing with the
//! widest-path machinery it is used to check: it walks the graph through
//! its public name-based accessors only.

use std::collections::BTreeMap;

use crate::connectivity::{ConnValue, PathWitness};
use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::membership::Membership;
use crate::structural::{BridgeReport, WeakenedPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Upper bound on simple paths enumerated by a single call.
    pub max_paths: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 10,
            max_paths: 1_000_000,
        }
    }
}

/// Name-keyed adjacency built from the public edge list.
struct Adjacency<'g> {
    names: Vec<&'g VertexId>,
    neighbors: Vec<Vec<(usize, Membership)>>,
}

impl<'g> Adjacency<'g> {
    fn new(g: &'g FuzzyGraph, budget: OracleBudget) -> Result<Self> {
        if g.vertex_count() > budget.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{} vertices, limit {}",
                g.vertex_count(),
                budget.max_vertices
            )));
        }
        let names: Vec<&VertexId> = g.vertices().map(|(n, _)| n).collect();
        let position: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut neighbors = vec![Vec::new(); names.len()];
        for (u, v, mu) in g.edges() {
            let (a, b) = (position[u.as_str()], position[v.as_str()]);
            neighbors[a].push((b, mu));
            neighbors[b].push((a, mu));
        }
        Ok(Adjacency { names, neighbors })
    }

    fn position(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n.as_str() == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }
}

/// Best path seen so far for one target: strongest, then fewest hops, then
/// lexicographically smallest by vertex name.
#[derive(Clone)]
struct Best {
    strength: Membership,
    path: Vec<usize>,
}

fn beats(adj: &Adjacency<'_>, strength: Membership, path: &[usize], best: &Option<Best>) -> bool {
    let Some(best) = best else { return true };
    if strength != best.strength {
        return strength > best.strength;
    }
    if path.len() != best.path.len() {
        return path.len() < best.path.len();
    }
    let names = |p: &[usize]| p.iter().map(|&i| adj.names[i].as_str()).collect::<Vec<_>>();
    names(path) < names(&best.path)
}

/// Enumerates every simple path starting at `source`, keeping the best
/// path to each vertex.
fn enumerate_from(
    adj: &Adjacency<'_>,
    source: usize,
    budget: OracleBudget,
) -> Result<Vec<Option<Best>>> {
    let n = adj.names.len();
    let mut best: Vec<Option<Best>> = vec![None; n];
    let mut on_path = vec![false; n];
    let mut path = vec![source];
    let mut strengths = vec![Membership::ONE];
    let mut count: u64 = 0;
    // Explicit DFS stack of (vertex, next neighbour cursor).
    let mut stack = vec![(source, 0usize)];
    on_path[source] = true;
    best[source] = Some(Best {
        strength: Membership::ONE,
        path: path.clone(),
    });
    count += 1;
    while let Some(top) = stack.last_mut() {
        let (v, cursor) = *top;
        if cursor == adj.neighbors[v].len() {
            stack.pop();
            on_path[v] = false;
            path.pop();
            strengths.pop();
            continue;
        }
        top.1 += 1;
        let (next, mu) = adj.neighbors[v][cursor];
        if on_path[next] {
            continue;
        }
        count += 1;
        if count > budget.max_paths {
            return Err(Error::BudgetExceeded(format!(
                "more than {} paths",
                budget.max_paths
            )));
        }
        let strength = strengths.last().copied().unwrap_or(Membership::ONE).min(mu);
        path.push(next);
        strengths.push(strength);
        on_path[next] = true;
        if beats(adj, strength, &path, &best[next]) {
            best[next] = Some(Best {
                strength,
                path: path.clone(),
            });
        }
        stack.push((next, 0));
    }
    Ok(best)
}

fn to_conn(adj: &Adjacency<'_>, best: Option<Best>) -> ConnValue {
    match best {
        None => ConnValue {
            value: Membership::ZERO,
            witness: None,
        },
        Some(b) => ConnValue {
            value: b.strength,
            witness: Some(PathWitness {
                vertices: b.path.iter().map(|&i| adj.names[i].clone()).collect(),
                strength: b.strength,
            }),
        },
    }
}

/// `CONN_G(u, v)` by enumerating every simple `u`–`v` path.
pub fn oracle_conn(g: &FuzzyGraph, u: &str, v: &str, budget: OracleBudget) -> Result<ConnValue> {
    let adj = Adjacency::new(g, budget)?;
    let (a, b) = (adj.position(u)?, adj.position(v)?);
    let mut best = enumerate_from(&adj, a, budget)?;
    Ok(to_conn(&adj, best[b].take()))
}

/// Every pair `u < v` (by name) with its enumerated connectivity value.
fn oracle_all_pairs(
    g: &FuzzyGraph,
    budget: OracleBudget,
) -> Result<BTreeMap<(VertexId, VertexId), Membership>> {
    let adj = Adjacency::new(g, budget)?;
    let mut out = BTreeMap::new();
    for a in 0..adj.names.len() {
        let best = enumerate_from(&adj, a, budget)?;
        for (b, entry) in best.into_iter().enumerate() {
            if adj.names[a] < adj.names[b] {
                let value = entry.map_or(Membership::ZERO, |e| e.strength);
                out.insert((adj.names[a].clone(), adj.names[b].clone()), value);
            }
        }
    }
    Ok(out)
}

/// Fuzzy bridges found by deleting each edge in turn and recomputing every
/// pair's connectivity from scratch.
pub fn oracle_bridges(g: &FuzzyGraph, budget: OracleBudget) -> Result<Vec<BridgeReport>> {
    let before = oracle_all_pairs(g, budget)?;
    let mut reports = Vec::new();
    for (u, v, mu) in g.edges() {
        let reduced = g.without_edge(u, v)?;
        let after = oracle_all_pairs(&reduced, budget)?;
        let weakened_pairs: Vec<WeakenedPair> = before
            .iter()
            .filter_map(|((x, y), &was)| {
                let now = after[&(x.clone(), y.clone())];
                (now < was).then(|| WeakenedPair {
                    u: x.clone(),
                    v: y.clone(),
                    before: was,
                    after: now,
                })
            })
            .collect();
        if !weakened_pairs.is_empty() {
            reports.push(BridgeReport {
                edge: (u.clone(), v.clone()),
                membership: mu,
                weakened_pairs,
            });
        }
    }
    Ok(reports)
}

/// Number of simple paths between `u` and `v`, counting the trivial path
/// when `u == v`.
pub fn count_simple_paths(g: &FuzzyGraph, u: &str, v: &str, budget: OracleBudget) -> Result<u64> {
    let adj = Adjacency::new(g, budget)?;
    let (a, b) = (adj.position(u)?, adj.position(v)?);
    fn walk(
        adj: &Adjacency<'_>,
        at: usize,
        target: usize,
        on_path: &mut [bool],
        count: &mut u64,
        budget: OracleBudget,
    ) -> Result<()> {
        if at == target {
            *count += 1;
            if *count > budget.max_paths {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} paths",
                    budget.max_paths
                )));
            }
            return Ok(());
        }
        for &(n, _) in &adj.neighbors[at] {
            if !on_path[n] {
                on_path[n] = true;
                walk(adj, n, target, on_path, count, budget)?;
                on_path[n] = false;
            }
        }
        Ok(())
    }
    let mut on_path = vec![false; adj.names.len()];
    on_path[a] = true;
    let mut count = 0;
    walk(&adj, a, b, &mut on_path, &mut count, budget)?;
    Ok(count)
}
