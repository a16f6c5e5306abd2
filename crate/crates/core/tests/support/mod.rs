//! Random fuzzy graph strategies shared by the integration tests.
#![allow(dead_code)]

use fsc_core::{FuzzyGraph, Membership, VertexId};
use proptest::prelude::*;

/// Memberships are drawn from multiples of 0.05 so ties are common.
pub fn level(k: u64) -> Membership {
    Membership::from_decimal(k * 5, 2).unwrap()
}

pub fn name(i: usize) -> String {
    format!("v{i:02}")
}

/// Raw description of a graph: vertex levels and, per unordered pair, an
/// optional edge level expressed as a fraction of the endpoint cap.
#[derive(Debug, Clone)]
pub struct Spec {
    pub sigma: Vec<u64>,
    pub edges: Vec<(usize, usize, u64)>,
}

impl Spec {
    pub fn build(&self) -> FuzzyGraph {
        let vs = self
            .sigma
            .iter()
            .enumerate()
            .map(|(i, &k)| (VertexId::new(name(i)).unwrap(), level(k)));
        let es = self.edges.iter().map(|&(a, b, k)| {
            (
                VertexId::new(name(a)).unwrap(),
                VertexId::new(name(b)).unwrap(),
                level(k),
            )
        });
        FuzzyGraph::build(vs, es).unwrap()
    }
}

/// Graphs with `min..=max` vertices, each pair joined with probability
/// roughly `density`.
pub fn spec(min: usize, max: usize, density: f64) -> impl Strategy<Value = Spec> {
    (min..=max).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(1u64..=20, n),
            prop::collection::vec((prop::bool::weighted(density), 1u64..=20), pairs),
        )
            .prop_map(move |(sigma, picks)| {
                let mut edges = Vec::new();
                let mut it = picks.into_iter();
                for a in 0..n {
                    for b in a + 1..n {
                        let (keep, k) = it.next().unwrap();
                        let cap = sigma[a].min(sigma[b]);
                        if keep {
                            edges.push((a, b, k.min(cap)));
                        }
                    }
                }
                Spec { sigma, edges }
            })
    })
}

pub fn graph(min: usize, max: usize, density: f64) -> impl Strategy<Value = FuzzyGraph> {
    spec(min, max, density).prop_map(|s| s.build())
}

/// A random tree: vertex `i > 0` hangs off a uniformly chosen earlier
/// vertex.
pub fn tree(min: usize, max: usize) -> impl Strategy<Value = FuzzyGraph> {
    (min..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(1u64..=20, n),
            prop::collection::vec((any::<prop::sample::Index>(), 1u64..=20), n - 1),
        )
            .prop_map(move |(sigma, links)| {
                let edges = links
                    .into_iter()
                    .enumerate()
                    .map(|(i, (parent, k))| {
                        let child = i + 1;
                        let p = parent.index(child);
                        (p, child, k.min(sigma[p].min(sigma[child])))
                    })
                    .collect();
                Spec { sigma, edges }.build()
            })
    })
}

/// A complete fuzzy graph: every pair carries `min(σ(u), σ(v))`.
pub fn complete(min: usize, max: usize) -> impl Strategy<Value = FuzzyGraph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(1u64..=20, n).prop_map(move |sigma| {
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    edges.push((a, b, sigma[a].min(sigma[b])));
                }
            }
            Spec { sigma, edges }.build()
        })
    })
}

/// Splits vertex names into two disjoint non-empty proper parts, leaving
/// the rest out. `labels[i]` is 0 (outside), 1 or 2.
pub fn split(g: &FuzzyGraph, labels: &[u8]) -> Option<(Vec<String>, Vec<String>)> {
    let names: Vec<String> = g.vertices().map(|(n, _)| n.to_string()).collect();
    let pick = |want: u8| -> Vec<String> {
        names
            .iter()
            .zip(labels.iter().cycle())
            .filter(|(_, &l)| l == want)
            .map(|(n, _)| n.clone())
            .collect()
    };
    let (a, b) = (pick(1), pick(2));
    (!a.is_empty() && !b.is_empty()).then_some((a, b))
}

pub fn labels() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 1..12)
}
