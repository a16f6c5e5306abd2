//! The `.fsc` text format.
//!
//! ```text
//! fsc 1
//! # comment
//! v <name> [<sigma>]          sigma defaults to 1.0
//! e <u> <v> <mu>
//! s <SubgraphName> <v1> <v2> ...
//! p <name> uncontrollable|indicator|controllable
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment anywhere on a
//! line. Directives may appear in any order after the header.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, FuzzySubgraph, GraphBuilder, VertexId};
use crate::membership::Membership;

pub const HEADER: &str = "fsc 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Uncontrollable,
    Indicator,
    Controllable,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::Uncontrollable, Role::Indicator, Role::Controllable];

    pub fn as_str(self) -> &'static str {
        match self {
            Role::Uncontrollable => "uncontrollable",
            Role::Indicator => "indicator",
            Role::Controllable => "controllable",
        }
    }
}

impl FromStr for Role {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        Role::ALL.into_iter().find(|r| r.as_str() == s).ok_or(())
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named vertex set, validated as a proper induced subgraph of the
/// document's graph. Vertices are kept in name order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphDecl {
    pub name: String,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: FuzzyGraph,
    pub subgraphs: Vec<SubgraphDecl>,
    pub roles: BTreeMap<VertexId, Role>,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn membership(line: usize, token: &str) -> Result<Membership> {
    match token.parse::<Membership>() {
        Ok(m) => Ok(m),
        Err(e @ Error::MembershipOutOfRange(_)) => Err(e.at(line)),
        Err(_) => Err(syntax(line, format!("malformed membership {token:?}"))),
    }
}

fn vertex_id(line: usize, token: &str) -> Result<VertexId> {
    VertexId::new(token).map_err(|e| e.at(line))
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<GraphDocument> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        });

        let header = lines
            .next()
            .ok_or_else(|| syntax(1, format!("missing `{HEADER}` header")))?;
        match header.tokens.as_slice() {
            ["fsc", "1"] => {}
            ["fsc", version] => {
                return Err(syntax(
                    header.number,
                    format!("unsupported format version {version}"),
                ))
            }
            _ => return Err(syntax(header.number, format!("expected `{HEADER}` header"))),
        }

        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut subgraphs = Vec::new();
        let mut roles = Vec::new();
        for line in lines {
            let n = line.number;
            match line.tokens.as_slice() {
                ["v", name] => vertices.push((n, vertex_id(n, name)?, Membership::ONE)),
                ["v", name, sigma] => {
                    vertices.push((n, vertex_id(n, name)?, membership(n, sigma)?))
                }
                ["v", ..] => return Err(syntax(n, "expected `v <name> [<sigma>]`")),
                ["e", u, v, mu] => {
                    edges.push((n, vertex_id(n, u)?, vertex_id(n, v)?, membership(n, mu)?))
                }
                ["e", ..] => return Err(syntax(n, "expected `e <u> <v> <mu>`")),
                ["s", name, members @ ..] => {
                    VertexId::new(*name)
                        .map_err(|_| syntax(n, format!("invalid subgraph name {name:?}")))?;
                    subgraphs.push((n, name.to_string(), members.to_vec()))
                }
                ["s"] => return Err(syntax(n, "expected `s <name> <vertex>...`")),
                ["p", name, role] => {
                    let role: Role = role
                        .parse()
                        .map_err(|_| syntax(n, format!("unknown role {role:?}")))?;
                    roles.push((n, vertex_id(n, name)?, role))
                }
                ["p", ..] => return Err(syntax(n, "expected `p <name> <role>`")),
                [other, ..] => return Err(syntax(n, format!("unknown directive {other:?}"))),
                [] => unreachable!("blank lines are skipped"),
            }
        }

        let mut builder = GraphBuilder::default();
        for (n, name, sigma) in vertices {
            builder.vertex(name, sigma).map_err(|e| e.at(n))?;
        }
        for (n, u, v, mu) in edges {
            builder.edge(u, v, mu).map_err(|e| e.at(n))?;
        }
        let graph = builder.finish().map_err(|e| e.at(header.number))?;

        let mut decls: Vec<SubgraphDecl> = Vec::new();
        for (n, name, members) in subgraphs {
            if decls.iter().any(|d| d.name == name) {
                return Err(syntax(n, format!("subgraph {name} declared twice")));
            }
            let mut sorted: Vec<&str> = members.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertex(w[0].to_string()).at(n));
            }
            let h = FuzzySubgraph::induced(&graph, &members).map_err(|e| e.at(n))?;
            decls.push(SubgraphDecl {
                name,
                vertices: h.vertices().cloned().collect(),
            });
        }

        let mut role_map = BTreeMap::new();
        for (n, name, role) in roles {
            if !graph.contains(&name) {
                return Err(Error::UnknownVertex(name.to_string()).at(n));
            }
            if role_map.insert(name.clone(), role).is_some() {
                return Err(syntax(n, format!("role for {name} assigned twice")));
            }
        }

        Ok(GraphDocument {
            graph,
            subgraphs: decls,
            roles: role_map,
        })
    }

    /// Canonical text form: header, vertices, edges, subgraphs, roles.
    pub fn to_fsc(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{HEADER}").unwrap();
        for (name, sigma) in self.graph.vertices() {
            writeln!(out, "v {name} {sigma}").unwrap();
        }
        for (u, v, mu) in self.graph.edges() {
            writeln!(out, "e {u} {v} {mu}").unwrap();
        }
        for decl in &self.subgraphs {
            write!(out, "s {}", decl.name).unwrap();
            for v in &decl.vertices {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        for (name, role) in &self.roles {
            writeln!(out, "p {name} {role}").unwrap();
        }
        out
    }

    pub fn subgraph(&self, name: &str) -> Result<FuzzySubgraph<'_>> {
        let decl = self
            .subgraphs
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| Error::UnknownSubgraph(name.to_string()))?;
        FuzzySubgraph::induced(&self.graph, &decl.vertices)
    }

    /// Vertices carrying `role`, in name order.
    pub fn vertices_with_role(&self, role: Role) -> Vec<&VertexId> {
        self.roles
            .iter()
            .filter(|&(_, &r)| r == role)
            .map(|(v, _)| v)
            .collect()
    }
}

impl FromStr for GraphDocument {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GraphDocument::parse(s)
    }
}
