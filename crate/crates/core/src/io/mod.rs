//! Reading and writing `.fsc` documents, the bundled models, and reports.

pub mod bundled;
pub mod document;
pub mod report;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// A command-line endpoint: a vertex name, or `@Name` for a declared
/// subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    Vertex(VertexId),
    Subgraph(String),
}

impl Endpoint {
    pub fn parse(text: &str) -> Result<Endpoint> {
        match text.strip_prefix('@') {
            Some(name) => {
                VertexId::new(name).map_err(|_| Error::UnknownSubgraph(text.to_string()))?;
                Ok(Endpoint::Subgraph(name.to_string()))
            }
            None => Ok(Endpoint::Vertex(VertexId::new(text)?)),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Vertex(v) => write!(f, "{v}"),
            Endpoint::Subgraph(s) => write!(f, "{s}"),
        }
    }
}
