//! JSON interchange documents.
//!
//! A labeling document names a corona instance and lists every edge with its
//! label, using the canonical vertex numbering of [`crate::graph::corona`]:
//!
//! ```json
//! { "family": "path", "n": 2, "m": 1,
//!   "labels": [ { "u": 0, "v": 1, "label": 2 }, ... ] }
//! ```
//!
//! Producers may attach an optional `metadata` object; readers ignore it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{corona, CoronaGraph, CoronaSpec, Family, Graph, GraphError, VertexId};
use crate::labeling::EdgeLabeling;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(serde_json::Error),
    #[error("invalid instance: {0}")]
    Spec(GraphError),
    #[error("labels[{index}]: ({u}, {v}) is not an edge of {spec}")]
    UnknownEdge {
        index: usize,
        u: VertexId,
        v: VertexId,
        spec: CoronaSpec,
    },
    #[error("labels[{index}]: edge ({u}, {v}) is labeled more than once")]
    RepeatedEdge { index: usize, u: VertexId, v: VertexId },
    #[error("{spec} has {expected} edges, so {expected} labels are required; found {found}")]
    WrongLabelCount {
        spec: CoronaSpec,
        expected: usize,
        found: usize,
    },
}

// Manual conversions: the messages already embed the cause, so it is not
// exposed again as a source.
impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Json(e)
    }
}

impl From<GraphError> for DocumentError {
    fn from(e: GraphError) -> Self {
        DocumentError::Spec(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub label: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DocumentMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_palette_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palette_size: Option<usize>,
    /// `"exact"` or `"upper_bound"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<String>,
    #[serde(default)]
    pub errata_applied: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub labels: Vec<LabeledEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<DocumentMetadata>,
}

impl LabelingDocument {
    /// Panics if `labeling` does not have one label per edge of `corona`.
    pub fn from_labeling(corona: &CoronaGraph, labeling: &EdgeLabeling) -> Self {
        let graph = corona.graph();
        assert_eq!(labeling.len(), graph.edge_count(), "labeling shape");
        let spec = corona.spec();
        LabelingDocument {
            family: spec.family,
            n: spec.n,
            m: spec.m,
            labels: graph
                .edges()
                .iter()
                .zip(labeling.labels())
                .map(|(&(u, v), &label)| LabeledEdge { u, v, label })
                .collect(),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: DocumentMetadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn spec(&self) -> Result<CoronaSpec, GraphError> {
        CoronaSpec::new(self.family, self.n, self.m)
    }

    /// Rebuilds the instance and maps every listed edge onto its canonical index.
    pub fn to_labeling(&self) -> Result<(CoronaGraph, EdgeLabeling), DocumentError> {
        let spec = self.spec()?;
        let corona = corona(spec)?;
        let graph = corona.graph();
        let expected = graph.edge_count();
        if self.labels.len() != expected {
            return Err(DocumentError::WrongLabelCount {
                spec,
                expected,
                found: self.labels.len(),
            });
        }
        let mut labels: Vec<Option<u32>> = vec![None; expected];
        for (index, entry) in self.labels.iter().enumerate() {
            let e = graph
                .find_edge(entry.u, entry.v)
                .ok_or(DocumentError::UnknownEdge {
                    index,
                    u: entry.u,
                    v: entry.v,
                    spec,
                })?;
            if labels[e].replace(entry.label).is_some() {
                return Err(DocumentError::RepeatedEdge {
                    index,
                    u: entry.u,
                    v: entry.v,
                });
            }
        }
        // count matches and no edge repeats, so every slot is filled
        let labels = labels.into_iter().map(|l| l.unwrap()).collect();
        Ok((corona, EdgeLabeling::new(labels)))
    }
}

/// A bare graph for the exact search: `{ "vertex_count": 4, "edges": [[0, 1], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertex_count: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.vertex_count, self.edges.iter().copied())
    }
}
