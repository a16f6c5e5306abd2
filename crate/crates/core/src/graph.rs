//! Fuzzy graphs `G = (σ, μ)` and their induced subgraphs.
//!
//! Vertices are stored sorted by name, so the internal index order is the
//! lexicographic name order. Every deterministic tie-break in the crate
//! relies on that.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::membership::Membership;

/// A vertex name: a non-empty token without whitespace.
///
/// Names may not contain `#` (the document comment marker) or start with
/// `@` (the command-line subgraph marker).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty()
            || name
                .chars()
                .any(|c| c.is_whitespace() || c.is_control() || c == '#')
            || name.starts_with('@')
        {
            return Err(Error::InvalidVertexName(name));
        }
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::ops::Deref for VertexId {
    type Target = str;
    fn deref(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl PartialEq<str> for VertexId {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for VertexId {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

impl std::borrow::Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// An immutable, validated fuzzy graph.
#[derive(Clone)]
pub struct FuzzyGraph {
    names: Vec<VertexId>,
    sigma: Vec<Membership>,
    index: HashMap<VertexId, usize>,
    /// Neighbour lists sorted by neighbour index.
    adjacency: Vec<Vec<(usize, Membership)>>,
    /// Keyed by `(low, high)` vertex index.
    edges: BTreeMap<(usize, usize), Membership>,
}

impl FuzzyGraph {
    /// Validates and builds a graph.
    ///
    /// Every edge must join two distinct declared vertices, carry a non-zero
    /// membership and satisfy `μ(u,v) ≤ min(σ(u), σ(v))` exactly.
    pub fn build<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (VertexId, Membership)>,
        E: IntoIterator<Item = (VertexId, VertexId, Membership)>,
    {
        let mut builder = GraphBuilder::default();
        for (name, sigma) in vertices {
            builder.vertex(name, sigma)?;
        }
        for (u, v, mu) in edges {
            builder.edge(u, v, mu)?;
        }
        builder.finish()
    }

    /// Convenience constructor from string literals; all values go through
    /// the same validation as [`FuzzyGraph::build`].
    pub fn from_strs(vertices: &[(&str, &str)], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|(n, s)| Ok((VertexId::new(*n)?, s.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|(u, v, m)| Ok((VertexId::new(*u)?, VertexId::new(*v)?, m.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::build(vs, es)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in name order.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, Membership)> + '_ {
        self.names.iter().zip(self.sigma.iter().copied())
    }

    /// Edges as `(u, v, μ)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, Membership)> + '_ {
        self.edges
            .iter()
            .map(|(&(u, v), &mu)| (&self.names[u], &self.names[v], mu))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn sigma(&self, name: &str) -> Result<Membership> {
        Ok(self.sigma[self.index_of(name)?])
    }

    /// `μ(u,v)`, or `None` when no edge joins them.
    pub fn mu(&self, u: &str, v: &str) -> Result<Option<Membership>> {
        let (a, b) = (self.index_of(u)?, self.index_of(v)?);
        Ok(self.mu_at(a, b))
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, index: usize) -> &VertexId {
        &self.names[index]
    }

    pub(crate) fn sigma_at(&self, index: usize) -> Membership {
        self.sigma[index]
    }

    pub(crate) fn mu_at(&self, a: usize, b: usize) -> Option<Membership> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    pub(crate) fn neighbors(&self, index: usize) -> &[(usize, Membership)] {
        &self.adjacency[index]
    }

    pub(crate) fn edge_indices(&self) -> impl Iterator<Item = ((usize, usize), Membership)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    /// A copy of this graph with the edge `u–v` removed.
    pub fn without_edge(&self, u: &str, v: &str) -> Result<FuzzyGraph> {
        let (a, b) = (self.index_of(u)?, self.index_of(v)?);
        let key = (a.min(b), a.max(b));
        if !self.edges.contains_key(&key) {
            return Err(Error::UnknownEdge(u.to_string(), v.to_string()));
        }
        let mut g = self.clone();
        g.edges.remove(&key);
        g.adjacency[a].retain(|&(n, _)| n != b);
        g.adjacency[b].retain(|&(n, _)| n != a);
        Ok(g)
    }

    pub(crate) fn names_of(&self, indices: &[usize]) -> Vec<VertexId> {
        indices.iter().map(|&i| self.names[i].clone()).collect()
    }
}

impl PartialEq for FuzzyGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.sigma == other.sigma && self.edges == other.edges
    }
}

impl Eq for FuzzyGraph {}

impl fmt::Debug for FuzzyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyGraph")
            .field("vertices", &self.vertices().collect::<Vec<_>>())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental validation used by [`FuzzyGraph::build`] and the document
/// reader (which needs per-item errors to attach line numbers).
#[derive(Default)]
pub struct GraphBuilder {
    vertices: BTreeMap<VertexId, Membership>,
    edges: Vec<(VertexId, VertexId, Membership)>,
    seen_edges: BTreeSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn vertex(&mut self, name: VertexId, sigma: Membership) -> Result<()> {
        if self.vertices.contains_key(&name) {
            return Err(Error::DuplicateVertex(name.0));
        }
        self.vertices.insert(name, sigma);
        Ok(())
    }

    /// Validates an edge against the vertices declared so far.
    pub fn edge(&mut self, u: VertexId, v: VertexId, mu: Membership) -> Result<()> {
        for end in [&u, &v] {
            if !self.vertices.contains_key(end) {
                return Err(Error::UnknownEndpoint(
                    u.0.clone(),
                    v.0.clone(),
                    end.0.clone(),
                ));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u.0));
        }
        if mu.is_zero() {
            return Err(Error::ZeroEdge { u: u.0, v: v.0 });
        }
        let cap = self.vertices[&u].min(self.vertices[&v]);
        if mu > cap {
            return Err(Error::EdgeExceedsVertexCap {
                u: u.0,
                v: v.0,
                mu,
                cap,
            });
        }
        let key = if u < v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        if !self.seen_edges.insert(key) {
            return Err(Error::DuplicateEdge(u.0, v.0));
        }
        self.edges.push((u, v, mu));
        Ok(())
    }

    pub fn finish(self) -> Result<FuzzyGraph> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let (names, sigma): (Vec<_>, Vec<_>) = self.vertices.into_iter().unzip();
        let index: HashMap<VertexId, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adjacency = vec![Vec::new(); names.len()];
        let mut edges = BTreeMap::new();
        for (u, v, mu) in self.edges {
            let (a, b) = (index[&u], index[&v]);
            adjacency[a].push((b, mu));
            adjacency[b].push((a, mu));
            edges.insert((a.min(b), a.max(b)), mu);
        }
        for list in &mut adjacency {
            list.sort_unstable_by_key(|&(n, _)| n);
        }
        Ok(FuzzyGraph {
            names,
            sigma,
            index,
            adjacency,
            edges,
        })
    }
}

/// A proper induced fuzzy subgraph `⟨vs⟩` of a host graph.
///
/// Only the vertex set is stored; the edge set is always derived from the
/// host.
#[derive(Clone)]
pub struct FuzzySubgraph<'g> {
    host: &'g FuzzyGraph,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl<'g> FuzzySubgraph<'g> {
    /// The subgraph induced by `vertices`, which must be a non-empty proper
    /// subset of the host's vertices. Repeated names are collapsed.
    pub fn induced<I, S>(host: &'g FuzzyGraph, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = vec![false; host.vertex_count()];
        for name in vertices {
            mask[host.index_of(name.as_ref())?] = true;
        }
        let members: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
        if members.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if members.len() == host.vertex_count() {
            return Err(Error::NotProper);
        }
        Ok(FuzzySubgraph {
            host,
            members,
            mask,
        })
    }

    pub fn host(&self) -> &'g FuzzyGraph {
        self.host
    }

    /// Member vertices in name order.
    pub fn vertices(&self) -> impl Iterator<Item = &'g VertexId> + '_ {
        let host = self.host;
        self.members.iter().map(move |&i| host.name(i))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.host
            .index_of(name)
            .map(|i| self.mask[i])
            .unwrap_or(false)
    }

    /// Host edges with both endpoints inside the subgraph.
    pub fn edges(&self) -> impl Iterator<Item = (&'g VertexId, &'g VertexId, Membership)> + '_ {
        let host = self.host;
        host.edge_indices()
            .filter(move |&((a, b), _)| self.mask[a] && self.mask[b])
            .map(move |((a, b), mu)| (host.name(a), host.name(b), mu))
    }

    pub(crate) fn members(&self) -> &[usize] {
        &self.members
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub(crate) fn first_shared(&self, other: &FuzzySubgraph<'_>) -> Option<usize> {
        self.members.iter().copied().find(|&i| other.mask[i])
    }

    pub(crate) fn same_host(&self, other: &FuzzySubgraph<'_>) -> bool {
        std::ptr::eq(self.host, other.host)
    }
}

impl fmt::Debug for FuzzySubgraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl PartialEq for FuzzySubgraph<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_host(other) && self.members == other.members
    }
}

/// Checks that two subgraphs come from the same host and share no vertex.
pub(crate) fn ensure_disjoint(a: &FuzzySubgraph<'_>, b: &FuzzySubgraph<'_>) -> Result<()> {
    if !a.same_host(b) {
        return Err(Error::ForeignSubgraph);
    }
    if let Some(shared) = a.first_shared(b) {
        return Err(Error::NotDisjoint(a.host.name(shared).to_string()));
    }
    Ok(())
}

/// Two disjoint proper induced subgraphs of `g`.
pub fn disjoint_pair<'g, I1, I2, S1, S2>(
    g: &'g FuzzyGraph,
    first: I1,
    second: I2,
) -> Result<(FuzzySubgraph<'g>, FuzzySubgraph<'g>)>
where
    I1: IntoIterator<Item = S1>,
    I2: IntoIterator<Item = S2>,
    S1: AsRef<str>,
    S2: AsRef<str>,
{
    let h1 = FuzzySubgraph::induced(g, first)?;
    let h2 = FuzzySubgraph::induced(g, second)?;
    ensure_disjoint(&h1, &h2)?;
    Ok((h1, h2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> FuzzyGraph {
        FuzzyGraph::from_strs(
            &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1"), ("e", "1")],
            &[
                ("a", "b", "0.4"),
                ("b", "c", "0.15"),
                ("b", "d", "0.1"),
                ("c", "d", "0.1"),
                ("a", "d", "0.9"),
                ("e", "d", "0.3"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn builds_example_graph() {
        let g = example();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.mu("a", "b").unwrap(), Some("0.4".parse().unwrap()));
        assert_eq!(g.mu("d", "e").unwrap(), Some("0.3".parse().unwrap()));
        assert_eq!(g.mu("a", "e").unwrap(), None);
    }

    #[test]
    fn single_vertex_graph_is_valid() {
        let g = FuzzyGraph::from_strs(&[("a", "0.5")], &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_errors() {
        let err = |vs: &[(&str, &str)], es: &[(&str, &str, &str)]| {
            FuzzyGraph::from_strs(vs, es).unwrap_err()
        };
        assert!(matches!(
            err(&[("a", "0.3"), ("b", "0.3")], &[("a", "b", "0.5")]),
            Error::EdgeExceedsVertexCap { .. }
        ));
        assert!(matches!(
            err(&[("a", "1"), ("a", "1")], &[]),
            Error::DuplicateVertex(_)
        ));
        assert!(matches!(
            err(&[("a", "1")], &[("a", "z", "0.1")]),
            Error::UnknownEndpoint(..)
        ));
        assert!(matches!(
            err(&[("a", "1")], &[("a", "a", "0.1")]),
            Error::SelfLoop(_)
        ));
        assert!(matches!(
            err(&[("a", "1"), ("b", "1")], &[("a", "b", "0")]),
            Error::ZeroEdge { .. }
        ));
        assert!(matches!(
            err(
                &[("a", "1"), ("b", "1")],
                &[("a", "b", "0.2"), ("b", "a", "0.3")]
            ),
            Error::DuplicateEdge(..)
        ));
        assert!(matches!(
            err(&[("a", "1.5")], &[]),
            Error::MembershipOutOfRange(_)
        ));
        assert!(matches!(err(&[], &[]), Error::EmptyGraph));
        assert!(matches!(
            err(&[("a b", "1")], &[]),
            Error::InvalidVertexName(_)
        ));
        assert!(matches!(
            err(&[("@a", "1")], &[]),
            Error::InvalidVertexName(_)
        ));
    }

    #[test]
    fn edge_cap_uses_exact_comparison() {
        // 0.3 == min(0.3, 0.3) exactly; no epsilon needed or allowed.
        assert!(FuzzyGraph::from_strs(&[("a", "0.3"), ("b", "0.3")], &[("a", "b", "0.3")]).is_ok());
        assert!(FuzzyGraph::from_strs(
            &[("a", "0.3"), ("b", "0.3")],
            &[("a", "b", "0.300000000000000001")]
        )
        .is_err());
    }

    #[test]
    fn induced_subgraph_edges() {
        let g = example();
        let h = FuzzySubgraph::induced(&g, ["b", "c", "d"]).unwrap();
        let edges: Vec<_> = h
            .edges()
            .map(|(u, v, m)| (u.to_string(), v.to_string(), m.to_string()))
            .collect();
        assert_eq!(
            edges,
            vec![
                ("b".into(), "c".into(), "0.15".into()),
                ("b".into(), "d".into(), "0.1".into()),
                ("c".into(), "d".into(), "0.1".into()),
            ]
        );
        let single = FuzzySubgraph::induced(&g, ["a"]).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.edges().count(), 0);
    }

    #[test]
    fn induced_subgraph_errors() {
        let g = example();
        assert_eq!(
            FuzzySubgraph::induced(&g, ["a", "b", "c", "d", "e"]).unwrap_err(),
            Error::NotProper
        );
        assert_eq!(
            FuzzySubgraph::induced(&g, Vec::<&str>::new()).unwrap_err(),
            Error::EmptyVertexSet
        );
        assert_eq!(
            FuzzySubgraph::induced(&g, ["q"]).unwrap_err(),
            Error::UnknownVertex("q".into())
        );
    }

    #[test]
    fn disjoint_pairs() {
        let g = example();
        let (h1, h2) = disjoint_pair(&g, ["a", "d"], ["b", "c"]).unwrap();
        assert_eq!(h1.edges().count(), 1);
        assert_eq!(h2.edges().count(), 1);
        assert!(disjoint_pair(&g, ["a"], ["b"]).is_ok());
        assert_eq!(
            disjoint_pair(&g, ["a", "d"], ["d", "e"]).unwrap_err(),
            Error::NotDisjoint("d".into())
        );
    }

    #[test]
    fn without_edge_removes_both_directions() {
        let g = example();
        let h = g.without_edge("d", "a").unwrap();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.mu("a", "d").unwrap(), None);
        assert!(h
            .neighbors(h.index_of("a").unwrap())
            .iter()
            .all(|&(n, _)| h.name(n).as_str() != "d"));
        assert!(matches!(
            h.without_edge("a", "d"),
            Err(Error::UnknownEdge(..))
        ));
    }
}
