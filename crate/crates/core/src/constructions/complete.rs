//! Kₙ∘K1 by sorted partial sums, and the cases where any labeling with
//! pairwise distinct spine sums is optimal (Kₙ∘K̄m and C3∘K̄m, m ≥ 2).

use super::{gate, ConstructionCase, ConstructionError, ConstructionResult, Draft, SpineWeights};
use crate::graph::{corona, CoronaSpec, Family};
use crate::labeling::EdgeLabeling;
use crate::oracle::{find_labeling, FindOutcome, SearchBudget};

/// Kₙ∘K1 with 2n − 1 colors. The edges at u_1 get 1..n (pendant first), the
/// rest of Kₙ gets n+1..C(n,2)+1 in lexicographic order, and the top n − 1
/// labels go to the other pendants in increasing order of partial sum, so
/// the remaining spine sums are strictly increasing and exceed every label.
/// w(u_1) = C(n,2) + n is the only spine color shared with a leaf.
pub fn construct_complete_k1(n: usize) -> Result<ConstructionResult, ConstructionError> {
    let spec = CoronaSpec::new(Family::Complete, n, 1)?;
    if n < 3 {
        return Err(ConstructionError::Unsupported {
            spec,
            reason: "needs n ≥ 3".into(),
        });
    }
    let g = corona(spec)?;
    let graph = g.graph();
    let b = spec.base_edge_count();
    let mut labels = vec![0u32; graph.edge_count()];
    // lexicographic order puts the n − 1 edges at u_1 first: 2..n, then n+1..
    for (e, label) in labels.iter_mut().take(b).enumerate() {
        *label = e as u32 + 2;
    }
    labels[g.pendant_edge_at(0, 0)] = 1;

    let mut partial = vec![0u64; n];
    for (e, &(u, v)) in graph.edges()[..b].iter().enumerate() {
        partial[u] += u64::from(labels[e]);
        partial[v] += u64::from(labels[e]);
    }
    let mut rest: Vec<usize> = (1..n).collect();
    rest.sort_by_key(|&v| partial[v]);
    for (rank, &v) in rest.iter().enumerate() {
        labels[g.pendant_edge_at(v, 0)] = (b + 2 + rank) as u32;
    }

    gate(Draft {
        spec,
        case: ConstructionCase::CompleteK1,
        labels,
        claimed: 2 * n - 1,
        errata: Vec::new(),
        expected: SpineWeights::Distinct,
    })
}

/// Base edges take 1..|E(G)|; pendant labels are dealt out in decreasing
/// order starting from the last spine vertex, then pendant swaps repair any
/// equal spine sums. The exhaustive search is the last resort.
pub(super) fn distinct_spine(spec: CoronaSpec, case: ConstructionCase) -> Result<Draft, ConstructionError> {
    let CoronaSpec { n, m, .. } = spec;
    let claimed = match spec.family {
        Family::Complete => m * n + n,
        _ => 3 * m + 3,
    };
    let g = corona(spec)?;
    let b = spec.base_edge_count();
    let total = spec.edge_count();

    let mut labels: Vec<u32> = (1..=b as u32).collect();
    labels.resize(total, 0);
    for k in 0..n * m {
        let i = n - 1 - k % n;
        let j = k / n;
        labels[g.pendant_edge_at(i, j)] = (total - k) as u32;
    }

    if !repair(&g, &mut labels, n, m) {
        let budget = SearchBudget {
            max_nodes: 20_000_000,
            ..SearchBudget::default()
        };
        match find_labeling(g.graph(), claimed, &budget) {
            Ok(FindOutcome::Found { labeling, .. }) => labels = labeling.into_inner(),
            _ => {
                return Err(ConstructionError::Rejected {
                    spec,
                    case,
                    reason: "no labeling with distinct spine sums found".into(),
                })
            }
        }
    }

    Ok(Draft {
        spec,
        case,
        labels,
        claimed,
        errata: Vec::new(),
        expected: SpineWeights::Distinct,
    })
}

/// Spine vertices whose sum equals another spine sum or a label.
fn defects(g: &crate::graph::CoronaGraph, labels: &[u32]) -> usize {
    let spine = super::spine_weights(g, &EdgeLabeling::new(labels.to_vec()));
    let top = labels.len() as u64;
    spine
        .iter()
        .enumerate()
        .filter(|&(i, w)| *w <= top || spine.iter().enumerate().any(|(k, x)| k != i && x == w))
        .count()
}

fn repair(g: &crate::graph::CoronaGraph, labels: &mut [u32], n: usize, m: usize) -> bool {
    let mut current = defects(g, labels);
    for _ in 0..4 * n * m {
        if current == 0 {
            return true;
        }
        let mut improved = false;
        'search: for a in 0..n {
            for c in a + 1..n {
                for ja in 0..m {
                    for jc in 0..m {
                        let (ea, ec) = (g.pendant_edge_at(a, ja), g.pendant_edge_at(c, jc));
                        labels.swap(ea, ec);
                        let d = defects(g, labels);
                        if d < current {
                            current = d;
                            improved = true;
                            break 'search;
                        }
                        labels.swap(ea, ec);
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    current == 0
}
