use std::collections::{BinaryHeap, VecDeque};

use crate::graph::FuzzyGraph;
use crate::membership::Membership;

/// Max-min bottleneck value from the nearest of `sources` to every vertex.
///
/// Sources score `ONE`; unreachable vertices score `ZERO`, which cannot be
/// confused with a real path because zero-membership edges do not exist.
pub(crate) fn widest_from(g: &FuzzyGraph, sources: &[usize]) -> Vec<Membership> {
    let mut best = vec![Membership::ZERO; g.vertex_count()];
    let mut done = vec![false; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    for &s in sources {
        best[s] = Membership::ONE;
        heap.push((Membership::ONE, s));
    }
    while let Some((width, v)) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for &(n, mu) in g.neighbors(v) {
            let through = width.min(mu);
            if !done[n] && through > best[n] {
                best[n] = through;
                heap.push((through, n));
            }
        }
    }
    best
}

/// Hop distance to the nearest vertex of `targets` using only edges with
/// membership `>= threshold`.
fn hops_to(g: &FuzzyGraph, targets: &[bool], threshold: Membership) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for (v, &t) in targets.iter().enumerate() {
        if t {
            dist[v] = Some(0);
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &(n, mu) in g.neighbors(v) {
            if mu >= threshold && dist[n].is_none() {
                dist[n] = Some(d + 1);
                queue.push_back(n);
            }
        }
    }
    dist
}

/// The canonical witness for a connectivity value `threshold`.
///
/// Among all paths from a source to a target whose edges are all at least
/// `threshold`, returns the one with the fewest hops, breaking ties by the
/// lexicographically smallest vertex sequence. When `threshold` is the
/// true maximum bottleneck between the two sets, this is a strongest path.
pub(crate) fn canonical_path(
    g: &FuzzyGraph,
    sources: &[bool],
    targets: &[bool],
    threshold: Membership,
) -> Option<Vec<usize>> {
    let dist = hops_to(g, targets, threshold);
    let start = (0..g.vertex_count())
        .filter(|&v| sources[v])
        .filter_map(|v| dist[v].map(|d| (d, v)))
        .min()?
        .1;
    let mut path = vec![start];
    let mut current = start;
    while let Some(d) = dist[current].filter(|&d| d > 0) {
        // Neighbour lists are sorted by index, i.e. by name.
        let next = g
            .neighbors(current)
            .iter()
            .find(|&&(n, mu)| mu >= threshold && dist[n] == Some(d - 1))
            .map(|&(n, _)| n)
            .expect("BFS layer has a predecessor");
        path.push(next);
        current = next;
    }
    Some(path)
}

/// Max-min transitive closure by the Floyd–Warshall recurrence
/// `c[i][j] = max(c[i][j], min(c[i][k], c[k][j]))`.
pub(crate) fn max_min_closure(g: &FuzzyGraph) -> Vec<Membership> {
    let n = g.vertex_count();
    let mut c = vec![Membership::ZERO; n * n];
    for i in 0..n {
        c[i * n + i] = Membership::ONE;
    }
    for ((a, b), mu) in g.edge_indices() {
        c[a * n + b] = mu;
        c[b * n + a] = mu;
    }
    for k in 0..n {
        for i in 0..n {
            let ik = c[i * n + k];
            if ik.is_zero() {
                continue;
            }
            for j in 0..n {
                let through = ik.min(c[k * n + j]);
                if through > c[i * n + j] {
                    c[i * n + j] = through;
                }
            }
        }
    }
    c
}
