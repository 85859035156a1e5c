//! Simple undirected graphs, the three base families and the corona product
//! `G ∘ K̄m` in a fixed canonical layout.
//!
//! Layout of a corona product over a base graph on `n` vertices:
//!
//! * vertices `0..n` are the spine (the copy of the base graph, in base order);
//! * leaf `j` of spine vertex `i` is vertex `n + i*m + j`;
//! * edges `0..|E(G)|` are the base edges in base order, followed by the
//!   pendant edges grouped by owner, so pendant `j` of spine `i` is edge
//!   `|E(G)| + i*m + j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{family} requires n >= {min}, got n = {n}")]
    BaseTooSmall { family: Family, n: usize, min: usize },
    #[error("the null graph factor needs m >= 1, got m = {0}")]
    EmptyNullFactor(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange {
        u: VertexId,
        v: VertexId,
        vertex_count: usize,
    },
    #[error("unknown graph family `{0}` (expected path, cycle or complete)")]
    UnknownFamily(String),
}

/// A finite simple undirected graph. Edges are stored once as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incident: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            incident: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut graph = Graph::new(vertex_count);
        for (u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    /// Appends an edge and returns its index.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(GraphError::VertexOutOfRange {
                u,
                v,
                vertex_count: self.vertex_count,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.find_edge(a, b).is_some() {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        let id = self.edges.len();
        self.edges.push((a, b));
        self.incident[a].push(id);
        self.incident[b].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v].len()
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident[v]
            .iter()
            .map(move |&e| self.other_endpoint(e, v))
    }

    /// Index of the edge joining `u` and `v`, in either orientation.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let (short, target) = if self.incident[a].len() <= self.incident[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.incident[short]
            .iter()
            .copied()
            .find(|&e| self.other_endpoint(e, short) == target)
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        (0..self.vertex_count)
            .filter(|&v| self.incident[v].is_empty())
            .collect()
    }

    /// True when some edge has both endpoints of degree one.
    pub fn has_k2_component(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.degree(u) == 1 && self.degree(v) == 1)
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut position = vec![None; self.vertex_count];
        for (new, &old) in vertices.iter().enumerate() {
            position[old] = Some(new);
        }
        let mut sub = Graph::new(vertices.len());
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (position[u], position[v]) {
                sub.add_edge(a, b)
                    .expect("induced edges of a simple graph are simple");
            }
        }
        sub
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Path, Family::Cycle, Family::Complete];

    pub fn min_order(self) -> usize {
        match self {
            Family::Path | Family::Complete => 2,
            Family::Cycle => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }

    /// `|E(G)|` of the base graph on `n` vertices.
    pub fn base_edge_count(self, n: usize) -> usize {
        match self {
            Family::Path => n.saturating_sub(1),
            Family::Cycle => n,
            Family::Complete => n * n.saturating_sub(1) / 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "path" | "p" => Ok(Family::Path),
            "cycle" | "c" => Ok(Family::Cycle),
            "complete" | "k" => Ok(Family::Complete),
            _ => Err(GraphError::UnknownFamily(s.to_string())),
        }
    }
}

/// Identifies the instance `G ∘ K̄m` with `G` one of `Pn`, `Cn`, `Kn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoronaSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
}

impl CoronaSpec {
    pub fn new(family: Family, n: usize, m: usize) -> Result<Self, GraphError> {
        let spec = CoronaSpec { family, n, m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let min = self.family.min_order();
        if self.n < min {
            return Err(GraphError::BaseTooSmall {
                family: self.family,
                n: self.n,
                min,
            });
        }
        if self.m == 0 {
            return Err(GraphError::EmptyNullFactor(self.m));
        }
        Ok(())
    }

    pub fn base_edge_count(&self) -> usize {
        self.family.base_edge_count(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.base_edge_count() + self.m * self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n * (1 + self.m)
    }
}

impl fmt::Display for CoronaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.family {
            Family::Path => "P",
            Family::Cycle => "C",
            Family::Complete => "K",
        };
        if self.m == 1 {
            write!(f, "{}{}∘K1", base, self.n)
        } else {
            write!(f, "{}{}∘K̄{}", base, self.n, self.m)
        }
    }
}

/// `Pn`, `Cn` or `Kn` on vertices `0..n`: path order, cycle order with the
/// closing edge `(0, n-1)` last, complete graph in lexicographic edge order.
pub fn make_base(family: Family, n: usize) -> Result<Graph, GraphError> {
    let min = family.min_order();
    if n < min {
        return Err(GraphError::BaseTooSmall { family, n, min });
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::Path => (0..n - 1).map(|i| (i, i + 1)).collect(),
        Family::Cycle => (0..n - 1)
            .map(|i| (i, i + 1))
            .chain(std::iter::once((0, n - 1)))
            .collect(),
        Family::Complete => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect(),
    };
    Graph::from_edges(n, edges)
}

/// A corona product with its spine/leaf roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaGraph {
    spec: CoronaSpec,
    graph: Graph,
    spine: Vec<VertexId>,
    leaves: Vec<Vec<VertexId>>,
}

impl CoronaGraph {
    pub fn spec(&self) -> CoronaSpec {
        self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spine(&self) -> &[VertexId] {
        &self.spine
    }

    /// Leaves of spine vertex `i`, in pendant order.
    pub fn leaves(&self, i: usize) -> &[VertexId] {
        &self.leaves[i]
    }

    pub fn all_leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.leaves.iter().flatten().copied()
    }

    pub fn base_edge_count(&self) -> usize {
        self.spec.base_edge_count()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        v >= self.spec.n && v < self.graph.vertex_count()
    }

    /// Spine vertex owning leaf `v`.
    pub fn owner(&self, v: VertexId) -> Option<VertexId> {
        self.is_leaf(v).then(|| (v - self.spec.n) / self.spec.m)
    }

    /// The unique edge at a leaf.
    pub fn pendant_edge(&self, leaf: VertexId) -> Option<EdgeId> {
        self.is_leaf(leaf)
            .then(|| self.base_edge_count() + (leaf - self.spec.n))
    }

    /// Edge joining spine vertex `i` to its leaf `j`.
    pub fn pendant_edge_at(&self, i: usize, j: usize) -> EdgeId {
        debug_assert!(i < self.spec.n && j < self.spec.m);
        self.base_edge_count() + i * self.spec.m + j
    }

    pub fn is_pendant_edge(&self, e: EdgeId) -> bool {
        e >= self.base_edge_count() && e < self.graph.edge_count()
    }

    pub fn vertex_name(&self, v: VertexId) -> String {
        if v < self.spec.n {
            format!("s{v}")
        } else {
            let offset = v - self.spec.n;
            format!("l{}_{}", offset / self.spec.m, offset % self.spec.m)
        }
    }
}

/// Builds `spec.family(n) ∘ K̄m` in the canonical layout.
pub fn corona(spec: CoronaSpec) -> Result<CoronaGraph, GraphError> {
    spec.validate()?;
    let CoronaSpec { n, m, .. } = spec;
    let base = make_base(spec.family, n)?;
    let mut graph = Graph::new(spec.vertex_count());
    for &(u, v) in base.edges() {
        graph.add_edge(u, v)?;
    }
    let mut leaves = Vec::with_capacity(n);
    for i in 0..n {
        let mut own = Vec::with_capacity(m);
        for j in 0..m {
            let leaf = n + i * m + j;
            graph.add_edge(i, leaf)?;
            own.push(leaf);
        }
        leaves.push(own);
    }
    Ok(CoronaGraph {
        spec,
        graph,
        spine: (0..n).collect(),
        leaves,
    })
}
