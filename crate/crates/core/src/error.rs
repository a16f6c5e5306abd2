use thiserror::Error;

use crate::membership::Membership;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex name {0:?}")]
    InvalidVertexName(String),
    #[error("malformed membership value {0:?}")]
    MalformedMembership(String),
    #[error("membership {0} is outside [0, 1]")]
    MembershipOutOfRange(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("edge {0}-{1} references unknown vertex {2}")]
    UnknownEndpoint(String, String, String),
    #[error("self-loop on {0}")]
    SelfLoop(String),
    #[error("edge {u}-{v} has zero membership; omit the edge instead")]
    ZeroEdge { u: String, v: String },
    #[error("edge {u}-{v} membership {mu} exceeds min(sigma({u}), sigma({v})) = {cap}")]
    EdgeExceedsVertexCap {
        u: String,
        v: String,
        mu: Membership,
        cap: Membership,
    },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("no edge {0}-{1}")]
    UnknownEdge(String, String),
    #[error("subgraph vertex set is empty")]
    EmptyVertexSet,
    #[error("subgraph must be a proper subset of the host vertices")]
    NotProper,
    #[error("subgraphs share vertex {0}")]
    NotDisjoint(String),
    #[error("subgraphs belong to different host graphs")]
    ForeignSubgraph,
    #[error("vertex sequence is not a simple path: {0}")]
    NotAPath(String),
    #[error("vertex {0} lies inside the subgraph")]
    VertexInsideSubgraph(String),
    #[error("vertex {0} is not in the subgraph")]
    VertexNotInSubgraph(String),
    #[error("no edge crosses between the two subgraphs")]
    NoCrossingEdge,
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("edge {0}-{1} is not a fuzzy bridge")]
    NotABridge(String, String),
    #[error("graph is not a fuzzy tree")]
    NotAFuzzyTree,
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Semantic {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("unknown subgraph {0}")]
    UnknownSubgraph(String),
}

impl Error {
    pub(crate) fn at(self, line: usize) -> Error {
        Error::Semantic {
            line,
            source: Box::new(self),
        }
    }

    /// Line number for errors raised while reading a document.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Syntax { line, .. } | Error::Semantic { line, .. } => Some(*line),
            _ => None,
        }
    }
}
