//! Exact local antimagic chromatic numbers of small graphs.
//!
//! Depth-first search over edge-label bijections in a fixed edge order
//! (descending endpoint degree sum). Sound pruning rules, each of which can be
//! switched off for differential testing:
//!
//! * conflict: once both ends of an edge have all their labels, their sums
//!   must differ;
//! * bound: the colors already fixed, plus the pendant edges still to be
//!   labeled whose label cannot coincide with a fixed color, may not exceed
//!   the current limit;
//! * leaf symmetry: pendant edges at the same vertex are interchangeable, so
//!   their labels must increase in search order;
//! * reflection: for a supplied automorphism of order two, one moved edge
//!   (or one pendant block minimum) must carry the smaller label.
//!
//! Only a search that ran to completion (`exhausted`) proves optimality or
//! infeasibility. Running out of node budget never yields a bound.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{CoronaGraph, EdgeId, Family, Graph, VertexId};
use crate::labeling::EdgeLabeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has a K2 component")]
    K2Component,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("{edges} edges exceed the exhaustive limit of {max} (raise max_edges to force)")]
    TooManyEdges { edges: usize, max: usize },
    #[error("node budget of {0} exhausted before the search completed")]
    BudgetExceeded(u64),
    #[error("supplied symmetry is not an involutive automorphism")]
    InvalidSymmetry,
    #[error("no local antimagic labeling exists")]
    NoLabeling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Exhaustive searches refuse graphs with more edges than this.
    pub max_edges: usize,
    pub max_nodes: u64,
    /// 0 tries labels in ascending order; any other value fixes a shuffled order.
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 12,
            max_nodes: 2_000_000_000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub conflict_pruning: bool,
    pub bound_pruning: bool,
    pub leaf_symmetry: bool,
    /// Vertex permutation of order two that preserves adjacency.
    pub reflection: Option<Vec<VertexId>>,
}

impl SearchOptions {
    pub fn pruned() -> Self {
        SearchOptions {
            conflict_pruning: true,
            bound_pruning: true,
            leaf_symmetry: true,
            reflection: None,
        }
    }

    /// Plain enumeration of every bijection.
    pub fn unpruned() -> Self {
        SearchOptions {
            conflict_pruning: false,
            bound_pruning: false,
            leaf_symmetry: false,
            reflection: None,
        }
    }

    pub fn with_reflection(mut self, reflection: Option<Vec<VertexId>>) -> Self {
        self.reflection = reflection;
        self
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions::pruned()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub chi_la: usize,
    pub certificate: EdgeLabeling,
    pub nodes_explored: u64,
    /// True iff the search completed, so `chi_la` is exact rather than an upper bound.
    pub exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FindOutcome {
    Found {
        labeling: EdgeLabeling,
        palette_size: usize,
        nodes_explored: u64,
    },
    NotFound {
        /// True means no labeling within the target exists.
        exhausted: bool,
        nodes_explored: u64,
    },
}

impl FindOutcome {
    pub fn labeling(&self) -> Option<&EdgeLabeling> {
        match self {
            FindOutcome::Found { labeling, .. } => Some(labeling),
            FindOutcome::NotFound { .. } => None,
        }
    }

    pub fn is_proven_infeasible(&self) -> bool {
        matches!(self, FindOutcome::NotFound { exhausted: true, .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OptimalCount {
    pub chi_la: usize,
    pub count: u64,
    pub nodes_explored: u64,
}

/// Minimum palette over all local antimagic labelings of `graph`.
pub fn exact_chi_la(graph: &Graph, budget: &SearchBudget) -> Result<ExactResult, OracleError> {
    exact_chi_la_with(graph, budget, &SearchOptions::pruned())
}

/// [`exact_chi_la`] with the reflection symmetry of the corona layout.
pub fn exact_corona(corona: &CoronaGraph, budget: &SearchBudget) -> Result<ExactResult, OracleError> {
    let options = SearchOptions::pruned().with_reflection(corona_reflection(corona));
    exact_chi_la_with(corona.graph(), budget, &options)
}

pub fn exact_chi_la_with(
    graph: &Graph,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<ExactResult, OracleError> {
    check_input(graph)?;
    check_exhaustive_size(graph, budget)?;
    let mut search = Search::new(graph, budget, options, Mode::Minimize)?;
    search.run();
    let nodes_explored = search.nodes;
    let exhausted = !search.aborted;
    match (search.best_labeling, search.best) {
        (Some(labels), best) => Ok(ExactResult {
            chi_la: best,
            certificate: EdgeLabeling::new(labels),
            nodes_explored,
            exhausted,
        }),
        (None, _) if exhausted => Err(OracleError::NoLabeling),
        (None, _) => Err(OracleError::BudgetExceeded(budget.max_nodes)),
    }
}

/// First labeling, in search order, with at most `target_palette` colors.
pub fn find_labeling(
    graph: &Graph,
    target_palette: usize,
    budget: &SearchBudget,
) -> Result<FindOutcome, OracleError> {
    find_labeling_with(graph, target_palette, budget, &SearchOptions::pruned())
}

pub fn find_labeling_with(
    graph: &Graph,
    target_palette: usize,
    budget: &SearchBudget,
    options: &SearchOptions,
) -> Result<FindOutcome, OracleError> {
    check_input(graph)?;
    let mut search = Search::new(graph, budget, options, Mode::Find(target_palette))?;
    search.run();
    Ok(match search.best_labeling {
        Some(labels) => FindOutcome::Found {
            labeling: EdgeLabeling::new(labels),
            palette_size: search.best,
            nodes_explored: search.nodes,
        },
        None => FindOutcome::NotFound {
            exhausted: !search.aborted,
            nodes_explored: search.nodes,
        },
    })
}

/// Number of bijections (no symmetry reduction) that reach `χ_la`.
pub fn count_optimal_labelings(graph: &Graph, budget: &SearchBudget) -> Result<OptimalCount, OracleError> {
    let exact = exact_chi_la(graph, budget)?;
    if !exact.exhausted {
        return Err(OracleError::BudgetExceeded(budget.max_nodes));
    }
    let options = SearchOptions {
        leaf_symmetry: false,
        reflection: None,
        ..SearchOptions::pruned()
    };
    let mut search = Search::new(graph, budget, &options, Mode::Count(exact.chi_la))?;
    search.run();
    if search.aborted {
        return Err(OracleError::BudgetExceeded(budget.max_nodes));
    }
    Ok(OptimalCount {
        chi_la: exact.chi_la,
        count: search.count,
        nodes_explored: exact.nodes_explored + search.nodes,
    })
}

/// The order-two automorphism of a corona layout used for symmetry breaking:
/// the path reversal, the cycle reflection fixing vertex 0, or the swap of the
/// first two complete-graph vertices, extended to leaves.
pub fn corona_reflection(corona: &CoronaGraph) -> Option<Vec<VertexId>> {
    let spec = corona.spec();
    let n = spec.n;
    let spine_map: Vec<usize> = match spec.family {
        Family::Path => (0..n).map(|i| n - 1 - i).collect(),
        Family::Cycle => (0..n).map(|i| (n - i) % n).collect(),
        Family::Complete => (0..n)
            .map(|i| match i {
                0 => 1,
                1 => 0,
                _ => i,
            })
            .collect(),
    };
    let mut sigma = vec![0; corona.graph().vertex_count()];
    for i in 0..n {
        sigma[i] = spine_map[i];
        for (j, &leaf) in corona.leaves(i).iter().enumerate() {
            sigma[leaf] = corona.leaves(spine_map[i])[j];
        }
    }
    (sigma.iter().enumerate().any(|(v, &s)| v != s)).then_some(sigma)
}

fn check_input(graph: &Graph) -> Result<(), OracleError> {
    if let Some(&v) = graph.isolated_vertices().first() {
        return Err(OracleError::IsolatedVertex(v));
    }
    if graph.has_k2_component() {
        return Err(OracleError::K2Component);
    }
    Ok(())
}

fn check_exhaustive_size(graph: &Graph, budget: &SearchBudget) -> Result<(), OracleError> {
    if graph.edge_count() > budget.max_edges {
        return Err(OracleError::TooManyEdges {
            edges: graph.edge_count(),
            max: budget.max_edges,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Minimize,
    Find(usize),
    Count(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

struct Search<'g> {
    graph: &'g Graph,
    options: SearchOptions,
    mode: Mode,
    max_nodes: u64,
    order: Vec<EdgeId>,
    label_order: Vec<u32>,
    /// For the edge at each order position: the previous pendant edge at the
    /// same vertex, whose label must be smaller.
    sibling_before: Vec<Option<EdgeId>>,
    /// At each order position: `(a, b)` with `label(a) < label(b)` required.
    ordered_pair: Vec<Option<(EdgeId, EdgeId)>>,
    pendant: Vec<bool>,
    trivial_lower: usize,

    labels: Vec<u32>,
    used: Vec<bool>,
    partial: Vec<u64>,
    remaining: Vec<usize>,
    weight_count: Vec<u32>,
    distinct: usize,
    pendants_left: usize,

    nodes: u64,
    aborted: bool,
    best: usize,
    best_labeling: Option<Vec<u32>>,
    count: u64,
}

impl<'g> Search<'g> {
    fn new(
        graph: &'g Graph,
        budget: &SearchBudget,
        options: &SearchOptions,
        mode: Mode,
    ) -> Result<Self, OracleError> {
        let edge_count = graph.edge_count();
        let mut order: Vec<EdgeId> = (0..edge_count).collect();
        order.sort_by_key(|&e| {
            let (u, v) = graph.edge(e);
            (std::cmp::Reverse(graph.degree(u) + graph.degree(v)), e)
        });
        let mut position = vec![0; edge_count];
        for (k, &e) in order.iter().enumerate() {
            position[e] = k;
        }

        let mut label_order: Vec<u32> = (1..=edge_count as u32).collect();
        if budget.seed != 0 {
            label_order.shuffle(&mut ChaCha8Rng::seed_from_u64(budget.seed));
        }

        // pendant edge -> owning (non-leaf) endpoint
        let owner: Vec<Option<VertexId>> = graph
            .edges()
            .iter()
            .map(|&(u, v)| match (graph.degree(u), graph.degree(v)) {
                (1, d) if d > 1 => Some(v),
                (d, 1) if d > 1 => Some(u),
                _ => None,
            })
            .collect();
        let pendant: Vec<bool> = owner.iter().map(Option::is_some).collect();

        let mut sibling_before = vec![None; edge_count];
        let mut first_pendant: Vec<Option<EdgeId>> = vec![None; graph.vertex_count()];
        if options.leaf_symmetry {
            let mut last: Vec<Option<EdgeId>> = vec![None; graph.vertex_count()];
            for (k, &e) in order.iter().enumerate() {
                if let Some(o) = owner[e] {
                    sibling_before[k] = last[o];
                    last[o] = Some(e);
                    first_pendant[o].get_or_insert(e);
                }
            }
        }

        let mut ordered_pair = vec![None; edge_count];
        if let Some(sigma) = &options.reflection {
            let edge_map = edge_permutation(graph, sigma)?;
            let moved = |e: &EdgeId| edge_map[*e] != *e;
            let pair = if options.leaf_symmetry {
                order
                    .iter()
                    .find(|&e| !pendant[*e] && moved(e))
                    .map(|&e| (e, edge_map[e]))
                    .or_else(|| {
                        order.iter().find(|&e| pendant[*e] && moved(e)).and_then(|&e| {
                            let o = owner[e]?;
                            let image = owner[edge_map[e]]?;
                            Some((first_pendant[o]?, first_pendant[image]?))
                        })
                    })
            } else {
                order.iter().find(|&e| moved(e)).map(|&e| (e, edge_map[e]))
            };
            if let Some((a, b)) = pair {
                ordered_pair[position[a].max(position[b])] = Some((a, b));
            }
        }

        let leaf_count = (0..graph.vertex_count())
            .filter(|&v| graph.degree(v) == 1)
            .count();
        let trivial_lower = leaf_count.max(if edge_count > 0 { 2 } else { 0 });
        let max_weight = edge_count * (edge_count + 1) / 2;

        Ok(Search {
            graph,
            options: options.clone(),
            mode,
            max_nodes: budget.max_nodes,
            order,
            label_order,
            sibling_before,
            ordered_pair,
            pendants_left: pendant.iter().filter(|&&p| p).count(),
            pendant,
            trivial_lower,
            labels: vec![0; edge_count],
            used: vec![false; edge_count + 1],
            partial: vec![0; graph.vertex_count()],
            remaining: (0..graph.vertex_count()).map(|v| graph.degree(v)).collect(),
            weight_count: vec![0; max_weight + 1],
            distinct: 0,
            nodes: 0,
            aborted: false,
            best: usize::MAX,
            best_labeling: None,
            count: 0,
        })
    }

    fn run(&mut self) {
        self.descend(0);
    }

    fn limit(&self) -> usize {
        match self.mode {
            Mode::Minimize => self.best.saturating_sub(1),
            Mode::Find(t) | Mode::Count(t) => t,
        }
    }

    /// Colors already fixed plus unavoidable new leaf colors.
    fn lower_bound(&self) -> usize {
        if self.pendants_left == 0 {
            return self.distinct;
        }
        let reusable = self
            .used
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(l, &u)| !u && self.weight_count[l] > 0)
            .count();
        self.distinct + self.pendants_left.saturating_sub(reusable)
    }

    fn descend(&mut self, k: usize) -> Flow {
        if k == self.order.len() {
            return self.complete();
        }
        let e = self.order[k];
        let (a, b) = self.graph.edge(e);
        let floor = self.sibling_before[k].map_or(0, |s| self.labels[s]);
        let pair = self.ordered_pair[k];

        for idx in 0..self.label_order.len() {
            let x = self.label_order[idx];
            if self.used[x as usize] || x <= floor {
                continue;
            }
            if let Some((lo, hi)) = pair {
                let (l, h) = if lo == e {
                    (x, self.labels[hi])
                } else {
                    (self.labels[lo], x)
                };
                if l >= h {
                    continue;
                }
            }
            if self.nodes >= self.max_nodes {
                self.aborted = true;
                return Flow::Stop;
            }
            self.nodes += 1;

            self.labels[e] = x;
            self.used[x as usize] = true;
            if self.pendant[e] {
                self.pendants_left -= 1;
            }
            let mut ok = true;
            for v in [a, b] {
                self.partial[v] += u64::from(x);
                self.remaining[v] -= 1;
                if self.remaining[v] == 0 {
                    self.add_weight(self.partial[v]);
                    if self.options.conflict_pruning && self.conflicts_at(v) {
                        ok = false;
                    }
                }
            }
            if ok && self.options.bound_pruning && self.lower_bound() > self.limit() {
                ok = false;
            }

            let flow = if ok { self.descend(k + 1) } else { Flow::Continue };

            for v in [a, b] {
                if self.remaining[v] == 0 {
                    self.remove_weight(self.partial[v]);
                }
                self.remaining[v] += 1;
                self.partial[v] -= u64::from(x);
            }
            if self.pendant[e] {
                self.pendants_left += 1;
            }
            self.used[x as usize] = false;
            self.labels[e] = 0;

            if flow == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn conflicts_at(&self, v: VertexId) -> bool {
        self.graph
            .neighbors(v)
            .any(|u| self.remaining[u] == 0 && self.partial[u] == self.partial[v])
    }

    fn complete(&mut self) -> Flow {
        if !self.options.conflict_pruning {
            let clash = self
                .graph
                .edges()
                .iter()
                .any(|&(u, v)| self.partial[u] == self.partial[v]);
            if clash {
                return Flow::Continue;
            }
        }
        let palette = self.distinct;
        match self.mode {
            Mode::Minimize => {
                if palette < self.best {
                    self.best = palette;
                    self.best_labeling = Some(self.labels.clone());
                    if self.options.bound_pruning && palette <= self.trivial_lower {
                        return Flow::Stop;
                    }
                }
                Flow::Continue
            }
            Mode::Find(target) => {
                if palette <= target {
                    self.best = palette;
                    self.best_labeling = Some(self.labels.clone());
                    return Flow::Stop;
                }
                Flow::Continue
            }
            Mode::Count(target) => {
                if palette == target {
                    self.count += 1;
                }
                Flow::Continue
            }
        }
    }

    fn add_weight(&mut self, w: u64) {
        let slot = &mut self.weight_count[w as usize];
        if *slot == 0 {
            self.distinct += 1;
        }
        *slot += 1;
    }

    fn remove_weight(&mut self, w: u64) {
        let slot = &mut self.weight_count[w as usize];
        *slot -= 1;
        if *slot == 0 {
            self.distinct -= 1;
        }
    }
}

/// Edge images under a vertex involution that must preserve adjacency.
fn edge_permutation(graph: &Graph, sigma: &[VertexId]) -> Result<Vec<EdgeId>, OracleError> {
    let n = graph.vertex_count();
    if sigma.len() != n || sigma.iter().any(|&s| s >= n) {
        return Err(OracleError::InvalidSymmetry);
    }
    if (0..n).any(|v| sigma[sigma[v]] != v) {
        return Err(OracleError::InvalidSymmetry);
    }
    graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            graph
                .find_edge(sigma[u], sigma[v])
                .ok_or(OracleError::InvalidSymmetry)
        })
        .collect()
}
