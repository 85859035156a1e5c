//! Edge labelings, vertex sums and the local antimagic verifier.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {labels} labels but the graph has {edges} edges")]
    ShapeMismatch { labels: usize, edges: usize },
}

/// One label per edge index. Bijectivity onto `1..=|E|` is checked by
/// [`verify`], never assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeLabeling {
    labels: Vec<u32>,
}

impl EdgeLabeling {
    pub fn new(labels: Vec<u32>) -> Self {
        EdgeLabeling { labels }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> u32 {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.labels
    }

    /// Label values that are out of range, repeated, or absent, sorted.
    pub fn bijection_defects(&self) -> Vec<u32> {
        let n = self.labels.len();
        let mut seen = vec![0usize; n + 1];
        let mut defects = BTreeSet::new();
        for &l in &self.labels {
            match seen.get_mut(l as usize) {
                Some(count) if l > 0 => *count += 1,
                _ => {
                    defects.insert(l);
                }
            }
        }
        for (value, &count) in seen.iter().enumerate().skip(1) {
            if count != 1 {
                defects.insert(value as u32);
            }
        }
        defects.into_iter().collect()
    }

    pub fn is_bijection(&self) -> bool {
        self.bijection_defects().is_empty()
    }
}

impl From<Vec<u32>> for EdgeLabeling {
    fn from(labels: Vec<u32>) -> Self {
        EdgeLabeling::new(labels)
    }
}

/// Vertex sums `w(v)`: the sum of labels on the edges at `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector {
    weights: Vec<u64>,
}

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Self {
        WeightVector { weights }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.weights
    }

    pub fn get(&self, v: VertexId) -> u64 {
        self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }
}

pub fn weights(graph: &Graph, labeling: &EdgeLabeling) -> Result<WeightVector, LabelingError> {
    check_shape(graph, labeling)?;
    let mut w = vec![0u64; graph.vertex_count()];
    for (&(u, v), &label) in graph.edges().iter().zip(labeling.labels()) {
        w[u] += u64::from(label);
        w[v] += u64::from(label);
    }
    Ok(WeightVector::new(w))
}

/// Sorted distinct weights.
pub fn palette_of(weights: &WeightVector) -> Vec<u64> {
    let set: BTreeSet<u64> = weights.as_slice().iter().copied().collect();
    set.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_bijection: bool,
    pub duplicate_or_missing: Vec<u32>,
    pub is_local_antimagic: bool,
    /// Adjacent `(u, v)` with `u < v` and `w(u) == w(v)`, in edge order.
    pub conflicting_pairs: Vec<(VertexId, VertexId)>,
    pub palette: Vec<u64>,
    pub palette_size: usize,
}

/// Checks bijectivity and the adjacent-sums condition and collects the palette.
/// A labeling that is not a bijection is never reported as local antimagic.
pub fn verify(graph: &Graph, labeling: &EdgeLabeling) -> Result<VerificationReport, LabelingError> {
    let w = weights(graph, labeling)?;
    let duplicate_or_missing = labeling.bijection_defects();
    let is_bijection = duplicate_or_missing.is_empty();
    let conflicting_pairs: Vec<_> = graph
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| w.get(u) == w.get(v))
        .collect();
    let palette = palette_of(&w);
    Ok(VerificationReport {
        is_bijection,
        duplicate_or_missing,
        is_local_antimagic: is_bijection && conflicting_pairs.is_empty(),
        conflicting_pairs,
        palette_size: palette.len(),
        palette,
    })
}

fn check_shape(graph: &Graph, labeling: &EdgeLabeling) -> Result<(), LabelingError> {
    if labeling.len() != graph.edge_count() {
        return Err(LabelingError::ShapeMismatch {
            labels: labeling.len(),
            edges: graph.edge_count(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{corona, make_base, CoronaSpec, Family};

    #[test]
    fn single_edge_weights() {
        let p2 = make_base(Family::Path, 2).unwrap();
        let w = weights(&p2, &EdgeLabeling::new(vec![1])).unwrap();
        assert_eq!(w.as_slice(), &[1, 1]);
    }

    #[test]
    fn shape_mismatch() {
        let c3 = make_base(Family::Cycle, 3).unwrap();
        assert_eq!(
            weights(&c3, &EdgeLabeling::new(vec![1, 2])),
            Err(LabelingError::ShapeMismatch { labels: 2, edges: 3 })
        );
    }

    #[test]
    fn duplicate_label_is_not_bijection() {
        let c3 = make_base(Family::Cycle, 3).unwrap();
        let report = verify(&c3, &EdgeLabeling::new(vec![1, 1, 2])).unwrap();
        assert!(!report.is_bijection);
        assert!(!report.is_local_antimagic);
        assert_eq!(report.duplicate_or_missing, vec![1, 3]);
    }

    #[test]
    fn out_of_range_labels_are_reported() {
        let labeling = EdgeLabeling::new(vec![0, 2, 7]);
        assert_eq!(labeling.bijection_defects(), vec![0, 1, 3, 7]);
    }

    #[test]
    fn triangle_and_star_palettes() {
        let c3 = make_base(Family::Cycle, 3).unwrap();
        let ok = verify(&c3, &EdgeLabeling::new(vec![1, 2, 3])).unwrap();
        assert!(ok.is_local_antimagic);
        assert_eq!(ok.palette, vec![3, 4, 5]);

        let k13 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = verify(&k13, &EdgeLabeling::new(vec![1, 2, 3])).unwrap();
        assert_eq!(r.palette, vec![1, 2, 3, 6]);
        assert_eq!(r.palette_size, 4);
    }

    #[test]
    fn conflicts_listed_in_edge_order() {
        // P5 with w = (1, 5, 5, 3, 2): only the pair (1, 2) collides
        let p5 = make_base(Family::Path, 5).unwrap();
        let r = verify(&p5, &EdgeLabeling::new(vec![1, 4, 1, 2])).unwrap();
        assert!(!r.is_bijection);
        assert_eq!(r.conflicting_pairs, vec![(1, 2)]);
    }

    #[test]
    fn conflict_detection() {
        // Paw: triangle 0-1-2 plus pendant 3 at vertex 0.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        // w0 = 4+2+1 = 7, w1 = 4+3 = 7
        let r = verify(&g, &EdgeLabeling::new(vec![4, 3, 2, 1])).unwrap();
        assert!(r.is_bijection);
        assert!(!r.is_local_antimagic);
        assert_eq!(r.conflicting_pairs, vec![(0, 1)]);
    }

    #[test]
    fn palette_examples() {
        assert_eq!(palette_of(&WeightVector::new(vec![5, 5, 7])), vec![5, 7]);
        assert!(palette_of(&WeightVector::new(vec![])).is_empty());
    }

    #[test]
    fn leaf_weight_equals_pendant_label() {
        let g = corona(CoronaSpec::new(Family::Cycle, 3, 2).unwrap()).unwrap();
        let labeling = EdgeLabeling::new((1..=9).collect());
        let w = weights(g.graph(), &labeling).unwrap();
        for leaf in g.all_leaves() {
            let e = g.pendant_edge(leaf).unwrap();
            assert_eq!(w.get(leaf), u64::from(labeling.label(e)));
        }
        assert_eq!(w.total(), 9 * 10);
    }
}
