//! Strength of connectedness under max-min semantics.
//!
//! A path's strength is the minimum membership along its edges, and the
//! connectivity between two vertices is the strongest path joining them.
//! Vertex–subgraph and subgraph–subgraph connectivity maximise that over the
//! subgraph members. Paths are always taken in the whole host graph.
//!
//! Witness paths are canonical: among strongest paths, the one with the
//! fewest hops, then the lexicographically smallest vertex sequence.

mod widest;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ensure_disjoint, FuzzyGraph, FuzzySubgraph, VertexId};
use crate::membership::Membership;

pub(crate) use widest::{canonical_path, widest_from};

/// A simple path together with its strength.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<VertexId>,
    pub strength: Membership,
}

impl PathWitness {
    pub(crate) fn from_indices(g: &FuzzyGraph, path: &[usize]) -> PathWitness {
        let strength = path
            .windows(2)
            .map(|w| g.mu_at(w[0], w[1]).expect("witness follows graph edges"))
            .min()
            .unwrap_or(Membership::ONE);
        PathWitness {
            vertices: g.names_of(path),
            strength,
        }
    }

    pub fn hops(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn reversed(&self) -> PathWitness {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PathWitness {
            vertices,
            strength: self.strength,
        }
    }
}

impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(v)?;
        }
        Ok(())
    }
}

/// A connectivity value and, unless it is zero, a path attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnValue {
    pub value: Membership,
    pub witness: Option<PathWitness>,
}

impl ConnValue {
    fn none() -> ConnValue {
        ConnValue {
            value: Membership::ZERO,
            witness: None,
        }
    }

    fn from_path(g: &FuzzyGraph, value: Membership, path: Option<Vec<usize>>) -> ConnValue {
        let witness = path.map(|p| PathWitness::from_indices(g, &p));
        debug_assert!(witness.as_ref().is_none_or(|w| w.strength == value));
        ConnValue { value, witness }
    }
}

/// How connectivity between two subgraphs is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnSemantics {
    /// Strongest path between any member of one subgraph and any member of
    /// the other.
    PathMaxMin,
    /// Strongest single edge with one endpoint in each subgraph.
    CrossEdgeMax,
    /// Weakest single edge with one endpoint in each subgraph.
    CrossEdgeMin,
}

impl ConnSemantics {
    pub const ALL: [ConnSemantics; 3] = [
        ConnSemantics::PathMaxMin,
        ConnSemantics::CrossEdgeMax,
        ConnSemantics::CrossEdgeMin,
    ];

    /// Short name used on the command line and in reports.
    pub fn short_name(self) -> &'static str {
        match self {
            ConnSemantics::PathMaxMin => "path",
            ConnSemantics::CrossEdgeMax => "xmax",
            ConnSemantics::CrossEdgeMin => "xmin",
        }
    }

    pub fn from_short_name(name: &str) -> Option<ConnSemantics> {
        ConnSemantics::ALL
            .into_iter()
            .find(|s| s.short_name() == name)
    }
}

impl fmt::Display for ConnSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl Serialize for ConnSemantics {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.short_name())
    }
}

fn ensure_host(g: &FuzzyGraph, h: &FuzzySubgraph<'_>) -> Result<()> {
    if std::ptr::eq(g, h.host()) {
        Ok(())
    } else {
        Err(Error::ForeignSubgraph)
    }
}

/// Strength of a simple path given as a vertex sequence. A single vertex
/// has strength `1.0`.
pub fn path_strength<S: AsRef<str>>(g: &FuzzyGraph, vertices: &[S]) -> Result<Membership> {
    if vertices.is_empty() {
        return Err(Error::NotAPath("empty sequence".into()));
    }
    let indices = vertices
        .iter()
        .map(|v| g.index_of(v.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = vec![false; g.vertex_count()];
    for (&i, v) in indices.iter().zip(vertices) {
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAPath(format!("{} repeats", v.as_ref())));
        }
    }
    let mut strength = Membership::ONE;
    for (w, names) in indices.windows(2).zip(vertices.windows(2)) {
        let mu = g.mu_at(w[0], w[1]).ok_or_else(|| {
            Error::NotAPath(format!(
                "no edge {}-{}",
                names[0].as_ref(),
                names[1].as_ref()
            ))
        })?;
        strength = strength.min(mu);
    }
    Ok(strength)
}

/// `CONN_G(u, v)`: the strength of the strongest `u`–`v` path.
pub fn conn_vertex(g: &FuzzyGraph, u: &str, v: &str) -> Result<ConnValue> {
    let (a, b) = (g.index_of(u)?, g.index_of(v)?);
    let value = widest_from(g, &[a])[b];
    if value.is_zero() {
        return Ok(ConnValue::none());
    }
    let mut sources = vec![false; g.vertex_count()];
    let mut targets = vec![false; g.vertex_count()];
    sources[a] = true;
    targets[b] = true;
    let path = canonical_path(g, &sources, &targets, value);
    Ok(ConnValue::from_path(g, value, path))
}

/// `CONN_G(x, H)`: the best connectivity from `x` to any member of `h`.
pub fn conn_vertex_to_subgraph(
    g: &FuzzyGraph,
    x: &str,
    h: &FuzzySubgraph<'_>,
) -> Result<ConnValue> {
    ensure_host(g, h)?;
    let a = g.index_of(x)?;
    if h.mask()[a] {
        return Err(Error::VertexInsideSubgraph(x.to_string()));
    }
    let widths = widest_from(g, &[a]);
    let value = h
        .members()
        .iter()
        .map(|&m| widths[m])
        .max()
        .unwrap_or(Membership::ZERO);
    if value.is_zero() {
        return Ok(ConnValue::none());
    }
    let mut sources = vec![false; g.vertex_count()];
    sources[a] = true;
    let path = canonical_path(g, &sources, h.mask(), value);
    Ok(ConnValue::from_path(g, value, path))
}

/// `CONN_G(H1, H2)` under the chosen semantics. Witnesses run from `h1`
/// to `h2`.
pub fn conn_subgraphs(
    g: &FuzzyGraph,
    h1: &FuzzySubgraph<'_>,
    h2: &FuzzySubgraph<'_>,
    semantics: ConnSemantics,
) -> Result<ConnValue> {
    ensure_host(g, h1)?;
    ensure_disjoint(h1, h2)?;
    match semantics {
        ConnSemantics::PathMaxMin => {
            let widths = widest_from(g, h1.members());
            let value = h2
                .members()
                .iter()
                .map(|&m| widths[m])
                .max()
                .unwrap_or(Membership::ZERO);
            if value.is_zero() {
                return Ok(ConnValue::none());
            }
            let path = canonical_path(g, h1.mask(), h2.mask(), value);
            Ok(ConnValue::from_path(g, value, path))
        }
        ConnSemantics::CrossEdgeMax | ConnSemantics::CrossEdgeMin => {
            let want_max = semantics == ConnSemantics::CrossEdgeMax;
            let mut best: Option<(Membership, usize, usize)> = None;
            for (x, y, mu) in crossing_edges(g, h1, h2) {
                let better = match best {
                    None => true,
                    Some((bm, bx, by)) => {
                        if mu != bm {
                            (mu > bm) == want_max
                        } else {
                            (x, y) < (bx, by)
                        }
                    }
                };
                if better {
                    best = Some((mu, x, y));
                }
            }
            match best {
                Some((mu, x, y)) => Ok(ConnValue::from_path(g, mu, Some(vec![x, y]))),
                None if want_max => Ok(ConnValue::none()),
                None => Err(Error::NoCrossingEdge),
            }
        }
    }
}

/// Edges with one endpoint in each subgraph, oriented `(in h1, in h2, μ)`.
pub(crate) fn crossing_edges<'a>(
    g: &'a FuzzyGraph,
    h1: &'a FuzzySubgraph<'_>,
    h2: &'a FuzzySubgraph<'_>,
) -> impl Iterator<Item = (usize, usize, Membership)> + 'a {
    let (m1, m2) = (h1.mask(), h2.mask());
    g.edge_indices().filter_map(move |((a, b), mu)| {
        if m1[a] && m2[b] {
            Some((a, b, mu))
        } else if m1[b] && m2[a] {
            Some((b, a, mu))
        } else {
            None
        }
    })
}

/// All-pairs connectivity, computed as the max-min transitive closure of
/// the membership matrix.
#[derive(Clone)]
pub struct ConnMatrix<'g> {
    graph: &'g FuzzyGraph,
    values: Vec<Membership>,
}

impl<'g> ConnMatrix<'g> {
    pub fn get(&self, u: &str, v: &str) -> Result<Membership> {
        Ok(self.at(self.graph.index_of(u)?, self.graph.index_of(v)?))
    }

    pub(crate) fn at(&self, a: usize, b: usize) -> Membership {
        self.values[a * self.graph.vertex_count() + b]
    }

    /// Every unordered pair `u < v` with its value, in name order.
    pub fn pairs(&self) -> impl Iterator<Item = (&'g VertexId, &'g VertexId, Membership)> + '_ {
        let n = self.graph.vertex_count();
        (0..n).flat_map(move |a| {
            (a + 1..n).map(move |b| (self.graph.name(a), self.graph.name(b), self.at(a, b)))
        })
    }
}

impl fmt::Debug for ConnMatrix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.pairs()).finish()
    }
}

pub fn all_pairs_conn(g: &FuzzyGraph) -> ConnMatrix<'_> {
    ConnMatrix {
        graph: g,
        values: widest::max_min_closure(g),
    }
}

/// Whether the pair is `t`-fuzzy-subgraph connected, i.e. its path
/// connectivity equals `t` exactly.
pub fn is_t_connected(
    g: &FuzzyGraph,
    h1: &FuzzySubgraph<'_>,
    h2: &FuzzySubgraph<'_>,
    t: Membership,
) -> Result<bool> {
    is_t_connected_within(g, h1, h2, t, 0.0)
}

/// [`is_t_connected`] with an absolute tolerance for hand-entered values.
pub fn is_t_connected_within(
    g: &FuzzyGraph,
    h1: &FuzzySubgraph<'_>,
    h2: &FuzzySubgraph<'_>,
    t: Membership,
    tolerance: f64,
) -> Result<bool> {
    let value = conn_subgraphs(g, h1, h2, ConnSemantics::PathMaxMin)?.value;
    Ok(value.approx_eq(t, tolerance))
}

/// A triple where `first R middle` and `middle R last` hold but
/// `first R last` does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransitivityViolation {
    pub first: usize,
    pub middle: usize,
    pub last: usize,
}

/// The partition induced by "connectivity equals `t`" on a family of
/// disjoint subgraphs. Indices refer to positions in the input family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TPartition {
    /// Pairwise path connectivity, `(i, j, value)` for `i < j`.
    pub values: Vec<(usize, usize, Membership)>,
    /// Pairs `i < j` directly related.
    pub related: Vec<(usize, usize)>,
    /// Classes of the reflexive-symmetric-transitive closure, each sorted,
    /// ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Places where the raw relation fails transitivity.
    pub violations: Vec<TransitivityViolation>,
}

impl TPartition {
    pub fn is_transitive(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn t_equivalence_classes(
    g: &FuzzyGraph,
    family: &[FuzzySubgraph<'_>],
    t: Membership,
) -> Result<TPartition> {
    t_equivalence_classes_within(g, family, t, 0.0)
}

pub fn t_equivalence_classes_within(
    g: &FuzzyGraph,
    family: &[FuzzySubgraph<'_>],
    t: Membership,
    tolerance: f64,
) -> Result<TPartition> {
    let k = family.len();
    for h in family {
        ensure_host(g, h)?;
    }
    let mut relation = vec![false; k * k];
    let mut values = Vec::new();
    let mut related = Vec::new();
    for i in 0..k {
        relation[i * k + i] = true;
        for j in i + 1..k {
            let value = conn_subgraphs(g, &family[i], &family[j], ConnSemantics::PathMaxMin)?.value;
            values.push((i, j, value));
            if value.approx_eq(t, tolerance) {
                relation[i * k + j] = true;
                relation[j * k + i] = true;
                related.push((i, j));
            }
        }
    }

    let mut class_of = vec![usize::MAX; k];
    let mut classes = Vec::new();
    for start in 0..k {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_of[start] = id;
        let mut cursor = 0;
        while cursor < members.len() {
            let v = members[cursor];
            cursor += 1;
            for w in 0..k {
                if relation[v * k + w] && class_of[w] == usize::MAX {
                    class_of[w] = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    let mut violations = Vec::new();
    for first in 0..k {
        for last in first + 1..k {
            if relation[first * k + last] {
                continue;
            }
            for middle in 0..k {
                if middle != first
                    && middle != last
                    && relation[first * k + middle]
                    && relation[middle * k + last]
                {
                    violations.push(TransitivityViolation {
                        first,
                        middle,
                        last,
                    });
                }
            }
        }
    }

    Ok(TPartition {
        values,
        related,
        classes,
        violations,
    })
}
