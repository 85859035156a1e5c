//! Explicit local antimagic labelings of corona products.
//!
//! [`construct`] picks the case for a spec, builds the labeling from its
//! closed form (or a stored/greedy labeling for the few cases without one),
//! and returns it only after the verifier confirms bijectivity, the adjacency
//! condition, the claimed palette size and the expected spine weights.
//!
//! Spine index `i` below is 1-based, as in the formulas: `u_i` is vertex
//! `i - 1`, the spine label `s_i` sits on edge `u_i u_{i+1}` (for a cycle
//! `s_n` is the closing edge `u_n u_1`), and pendant `(i, j)` is the edge to
//! the `j`-th leaf of `u_i`.

mod complete;
mod cycle;
mod path;
mod small;

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::corona_lower_bound;
use crate::graph::{corona, CoronaGraph, CoronaSpec, Family, GraphError};
use crate::interchange::{DocumentMetadata, LabelingDocument};
use crate::labeling::{verify, weights, EdgeLabeling};

pub use complete::construct_complete_k1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Spec(#[from] GraphError),
    #[error("no construction for {spec}: {reason}")]
    Unsupported { spec: CoronaSpec, reason: String },
    #[error("cannot compose layers: {0}")]
    Composition(String),
    #[error("{case} labeling for {spec} failed verification: {reason}")]
    Rejected {
        spec: CoronaSpec,
        case: ConstructionCase,
        reason: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstructionCase {
    #[serde(rename = "P_K1_n0mod4")]
    PathK1N0Mod4,
    #[serde(rename = "P_K1_n2mod4")]
    PathK1N2Mod4,
    #[serde(rename = "P_K1_nodd")]
    PathK1Odd,
    #[serde(rename = "P_K1_small")]
    PathK1Small,
    #[serde(rename = "P_K2_neven")]
    PathK2Even,
    #[serde(rename = "P_K2_nodd")]
    PathK2Odd,
    #[serde(rename = "P_Km_meven")]
    PathKmEvenM,
    #[serde(rename = "P_Km_modd_nodd")]
    PathKmOddMOddN,
    #[serde(rename = "P_Km_modd_neven")]
    PathKmOddMEvenN,
    #[serde(rename = "C_K1_nodd")]
    CycleK1Odd,
    #[serde(rename = "C_K1_neven")]
    CycleK1Even,
    #[serde(rename = "C_K1_small")]
    CycleK1Small,
    #[serde(rename = "C_K2_neven")]
    CycleK2Even,
    #[serde(rename = "C_K2_nodd")]
    CycleK2Odd,
    #[serde(rename = "C_Km_neven_meven")]
    CycleKmEvenNEvenM,
    #[serde(rename = "C_Km_neven_modd")]
    CycleKmEvenNOddM,
    #[serde(rename = "C_Km_nodd_modd")]
    CycleKmOddNOddM,
    #[serde(rename = "C_Km_nodd_meven")]
    CycleKmOddNEvenM,
    #[serde(rename = "C3_Km")]
    TriangleKm,
    #[serde(rename = "K_K1")]
    CompleteK1,
    #[serde(rename = "K_Km")]
    CompleteKm,
}

impl ConstructionCase {
    pub const ALL: [ConstructionCase; 21] = [
        ConstructionCase::PathK1N0Mod4,
        ConstructionCase::PathK1N2Mod4,
        ConstructionCase::PathK1Odd,
        ConstructionCase::PathK1Small,
        ConstructionCase::PathK2Even,
        ConstructionCase::PathK2Odd,
        ConstructionCase::PathKmEvenM,
        ConstructionCase::PathKmOddMOddN,
        ConstructionCase::PathKmOddMEvenN,
        ConstructionCase::CycleK1Odd,
        ConstructionCase::CycleK1Even,
        ConstructionCase::CycleK1Small,
        ConstructionCase::CycleK2Even,
        ConstructionCase::CycleK2Odd,
        ConstructionCase::CycleKmEvenNEvenM,
        ConstructionCase::CycleKmEvenNOddM,
        ConstructionCase::CycleKmOddNOddM,
        ConstructionCase::CycleKmOddNEvenM,
        ConstructionCase::TriangleKm,
        ConstructionCase::CompleteK1,
        ConstructionCase::CompleteKm,
    ];

    pub fn id(self) -> &'static str {
        use ConstructionCase::*;
        match self {
            PathK1N0Mod4 => "P_K1_n0mod4",
            PathK1N2Mod4 => "P_K1_n2mod4",
            PathK1Odd => "P_K1_nodd",
            PathK1Small => "P_K1_small",
            PathK2Even => "P_K2_neven",
            PathK2Odd => "P_K2_nodd",
            PathKmEvenM => "P_Km_meven",
            PathKmOddMOddN => "P_Km_modd_nodd",
            PathKmOddMEvenN => "P_Km_modd_neven",
            CycleK1Odd => "C_K1_nodd",
            CycleK1Even => "C_K1_neven",
            CycleK1Small => "C_K1_small",
            CycleK2Even => "C_K2_neven",
            CycleK2Odd => "C_K2_nodd",
            CycleKmEvenNEvenM => "C_Km_neven_meven",
            CycleKmEvenNOddM => "C_Km_neven_modd",
            CycleKmOddNOddM => "C_Km_nodd_modd",
            CycleKmOddNEvenM => "C_Km_nodd_meven",
            TriangleKm => "C3_Km",
            CompleteK1 => "K_K1",
            CompleteKm => "K_Km",
        }
    }

    /// The unique case covering `spec`.
    pub fn classify(spec: &CoronaSpec) -> Result<Self, ConstructionError> {
        use ConstructionCase::*;
        spec.validate()?;
        let CoronaSpec { family, n, m } = *spec;
        let even = n % 2 == 0;
        Ok(match family {
            Family::Path => match m {
                1 if n <= 3 => PathK1Small,
                1 if n % 4 == 0 => PathK1N0Mod4,
                1 if n % 4 == 2 => PathK1N2Mod4,
                1 => PathK1Odd,
                2 if even => PathK2Even,
                2 => PathK2Odd,
                _ if m % 2 == 0 => PathKmEvenM,
                _ if even => PathKmOddMEvenN,
                _ => PathKmOddMOddN,
            },
            Family::Cycle if n == 3 => match m {
                1 => CycleK1Small,
                _ => TriangleKm,
            },
            Family::Cycle => match m {
                1 if n == 4 => CycleK1Small,
                1 if even => CycleK1Even,
                1 => CycleK1Odd,
                2 if even => CycleK2Even,
                2 => CycleK2Odd,
                _ => match (even, m % 2 == 0) {
                    (true, true) => CycleKmEvenNEvenM,
                    (true, false) => CycleKmEvenNOddM,
                    (false, false) => CycleKmOddNOddM,
                    (false, true) => CycleKmOddNEvenM,
                },
            },
            Family::Complete if n < 3 => {
                return Err(ConstructionError::Unsupported {
                    spec: *spec,
                    reason: "K2 coronas are excluded".into(),
                })
            }
            Family::Complete if m == 1 => CompleteK1,
            Family::Complete => CompleteKm,
        })
    }

    /// How the labeling is obtained.
    pub fn source(self) -> &'static str {
        use ConstructionCase::*;
        match self {
            PathK1Small | CycleK1Small => "stored",
            PathKmEvenM | PathKmOddMOddN | PathKmOddMEvenN | CycleKmEvenNEvenM
            | CycleKmEvenNOddM | CycleKmOddNOddM | CycleKmOddNEvenM => "layered",
            CompleteK1 => "sorted-sums",
            TriangleKm | CompleteKm => "greedy",
            _ => "closed-form",
        }
    }
}

impl fmt::Display for ConstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Corrections to printed formulas that otherwise fail verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Erratum {
    /// C∘K̄2, odd n: the closing cycle edge gets 2, not 1 (1 stays on a pendant).
    E1,
    /// C∘K1, even n: odd spine labels are (n−i+3)/2.
    E2,
    /// P∘K̄2, even n: second pendant at odd i ≥ 3 is 3n/2 + (i−3)/2.
    E3,
    /// P∘K̄3, odd n: first pendant at even i is n + (i−2)/2.
    E4,
}

impl Erratum {
    pub fn id(self) -> &'static str {
        match self {
            Erratum::E1 => "E1",
            Erratum::E2 => "E2",
            Erratum::E3 => "E3",
            Erratum::E4 => "E4",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Erratum::E1 => "C∘K̄2 odd n: label 1 was used twice and 2 never; closing edge u_n u_1 takes 2",
            Erratum::E2 => "C∘K1 even n: odd spine labels (n−i+3)/2 replace the colliding printed form",
            Erratum::E3 => "P∘K̄2 even n: second pendant at odd i ≥ 3 is 3n/2+(i−3)/2, not 3n/2−(i−3)/2",
            Erratum::E4 => "P∘K̄3 odd n: first pendant at even i is n+(i−2)/2 (printed form is not an integer)",
        }
    }
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// The palette size is the known chromatic number.
    Exact,
    /// Only an upper bound: the exact value is open.
    UpperBound,
}

/// What the spine weights `w(u_1), ..., w(u_n)` must be.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpineWeights {
    /// One value for odd `i`, one for even `i`, with listed exceptions `(i, w)`.
    Classes {
        odd: u64,
        even: u64,
        exceptions: Vec<(usize, u64)>,
    },
    Listed(Vec<u64>),
    /// Pairwise distinct, no closed form.
    Distinct,
}

impl SpineWeights {
    fn classes(odd: i64, even: i64, exceptions: &[(usize, i64)]) -> Self {
        SpineWeights::Classes {
            odd: odd as u64,
            even: even as u64,
            exceptions: exceptions.iter().map(|&(i, w)| (i, w as u64)).collect(),
        }
    }

    pub fn expected(&self, i: usize) -> Option<u64> {
        match self {
            SpineWeights::Classes {
                odd,
                even,
                exceptions,
            } => Some(
                exceptions
                    .iter()
                    .find(|&&(k, _)| k == i)
                    .map_or(if i % 2 == 1 { *odd } else { *even }, |&(_, w)| w),
            ),
            SpineWeights::Listed(w) => w.get(i - 1).copied(),
            SpineWeights::Distinct => None,
        }
    }

    pub fn matches(&self, actual: &[u64]) -> bool {
        match self {
            SpineWeights::Distinct => {
                let mut sorted = actual.to_vec();
                sorted.sort_unstable();
                sorted.windows(2).all(|w| w[0] != w[1])
            }
            SpineWeights::Listed(w) => w.as_slice() == actual,
            SpineWeights::Classes { .. } => actual
                .iter()
                .enumerate()
                .all(|(k, &w)| self.expected(k + 1) == Some(w)),
        }
    }

    /// Distinct values taken by the classes, if closed-form.
    pub fn class_values(&self) -> Option<Vec<u64>> {
        let mut values = match self {
            SpineWeights::Classes {
                odd,
                even,
                exceptions,
            } => {
                let mut v = vec![*odd, *even];
                v.extend(exceptions.iter().map(|&(_, w)| w));
                v
            }
            SpineWeights::Listed(w) => w.clone(),
            SpineWeights::Distinct => return None,
        };
        values.sort_unstable();
        values.dedup();
        Some(values)
    }

    fn shifted(&self, by: u64) -> Self {
        match self {
            SpineWeights::Classes {
                odd,
                even,
                exceptions,
            } => SpineWeights::Classes {
                odd: odd + by,
                even: even + by,
                exceptions: exceptions.iter().map(|&(i, w)| (i, w + by)).collect(),
            },
            SpineWeights::Listed(w) => SpineWeights::Listed(w.iter().map(|x| x + by).collect()),
            SpineWeights::Distinct => SpineWeights::Distinct,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub spec: CoronaSpec,
    pub labeling: EdgeLabeling,
    pub claimed_palette_size: usize,
    pub case: ConstructionCase,
    pub errata_applied: Vec<Erratum>,
    pub spine_weights_expected: SpineWeights,
    pub claim: ClaimKind,
}

impl ConstructionResult {
    pub fn metadata(&self) -> DocumentMetadata {
        DocumentMetadata {
            case: Some(self.case.id().to_string()),
            claimed_palette_size: Some(self.claimed_palette_size),
            palette_size: Some(self.claimed_palette_size),
            claim: Some(
                match self.claim {
                    ClaimKind::Exact => "exact",
                    ClaimKind::UpperBound => "upper_bound",
                }
                .to_string(),
            ),
            errata_applied: self.errata_applied.iter().map(|e| e.id().to_string()).collect(),
            source: Some(self.case.source().to_string()),
        }
    }

    pub fn document(&self) -> LabelingDocument {
        let corona = corona(self.spec).expect("result specs are valid");
        LabelingDocument::from_labeling(&corona, &self.labeling).with_metadata(self.metadata())
    }
}

/// Which formula labels the added pendant layers. Each consecutive pair of
/// layers `(j, j+1)` adds the same amount to every spine vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerScheme {
    /// Odd j: `jn − 1 + i`; even j: `(j+1)n − i`. Pair adds `(2j+2)n − 1`.
    PathOddAscending,
    /// Odd j: `(j+1)n − i`; even j: `jn − 1 + i`.
    PathOddDescending,
    /// Odd j: `jn + i`; even j: `(j+1)n + 1 − i`. Pair adds `(2j+2)n + 1`.
    CycleOddAscending,
    /// Odd j: `(j+1)n + 1 − i`; even j: `jn + i`.
    CycleOddDescending,
}

impl LayerScheme {
    pub fn family(self) -> Family {
        match self {
            LayerScheme::PathOddAscending | LayerScheme::PathOddDescending => Family::Path,
            LayerScheme::CycleOddAscending | LayerScheme::CycleOddDescending => Family::Cycle,
        }
    }

    /// Label of pendant `(i, j)`, both 1-based.
    pub fn label(self, n: usize, i: usize, j: usize) -> u32 {
        let odd = j % 2 == 1;
        let (n, i, j) = (n as i64, i as i64, j as i64);
        let value = match (self, odd) {
            (LayerScheme::PathOddAscending, true) | (LayerScheme::PathOddDescending, false) => {
                j * n - 1 + i
            }
            (LayerScheme::PathOddAscending, false) | (LayerScheme::PathOddDescending, true) => {
                (j + 1) * n - i
            }
            (LayerScheme::CycleOddAscending, true) | (LayerScheme::CycleOddDescending, false) => {
                j * n + i
            }
            (LayerScheme::CycleOddAscending, false) | (LayerScheme::CycleOddDescending, true) => {
                (j + 1) * n + 1 - i
            }
        };
        value as u32
    }

    /// Sum added at every spine vertex by layers `j` and `j + 1`.
    pub fn pair_increment(self, n: usize, j: usize) -> u64 {
        let base = (2 * j as u64 + 2) * n as u64;
        match self.family() {
            Family::Path => base - 1,
            _ => base + 1,
        }
    }
}

/// Extends `base` (a labeling of the corona with `m0` leaves per vertex) by
/// the pendant layers `layers`, which must be `m0 + 1 ..= spec.m` and come in
/// pairs. Existing labels are kept; the new layers take the next labels.
pub fn layer_extension(
    base: &ConstructionResult,
    spec: CoronaSpec,
    layers: RangeInclusive<usize>,
    scheme: LayerScheme,
) -> Result<ConstructionResult, ConstructionError> {
    spec.validate()?;
    let m0 = base.spec.m;
    if base.spec.family != spec.family || base.spec.n != spec.n {
        return Err(ConstructionError::Composition(format!(
            "base {} does not match {}",
            base.spec, spec
        )));
    }
    if scheme.family() != spec.family {
        return Err(ConstructionError::Composition(format!(
            "{scheme:?} does not apply to {}",
            spec.family
        )));
    }
    if *layers.start() != m0 + 1 || *layers.end() != spec.m {
        return Err(ConstructionError::Composition(format!(
            "layers {}..={} must run from {} to {}",
            layers.start(),
            layers.end(),
            m0 + 1,
            spec.m
        )));
    }
    let added = spec.m - m0;
    if !added.is_multiple_of(2) {
        return Err(ConstructionError::Composition(format!(
            "{added} layers cannot be paired"
        )));
    }

    let n = spec.n;
    let base_edges = spec.base_edge_count();
    let old = base.labeling.labels();
    let mut labels = old[..base_edges].to_vec();
    for i in 1..=n {
        let offset = base_edges + (i - 1) * m0;
        labels.extend_from_slice(&old[offset..offset + m0]);
        labels.extend((m0 + 1..=spec.m).map(|j| scheme.label(n, i, j)));
    }

    let shift: u64 = (m0 + 1..=spec.m)
        .step_by(2)
        .map(|j| scheme.pair_increment(n, j))
        .sum();
    let expected = base.spine_weights_expected.shifted(shift);
    // Shifted spine sums exceed every label, so each class is a new color.
    let claimed = match expected.class_values() {
        Some(values) if added > 0 => spec.m * n + values.len(),
        _ => base.claimed_palette_size + added * n,
    };
    let case = ConstructionCase::classify(&spec).unwrap_or(base.case);
    gate(Draft {
        spec,
        case,
        labels,
        claimed,
        errata: base.errata_applied.clone(),
        expected,
    })
}

/// Verified labeling for `spec`.
pub fn construct(spec: CoronaSpec) -> Result<ConstructionResult, ConstructionError> {
    use ConstructionCase::*;
    let case = ConstructionCase::classify(&spec)?;
    let CoronaSpec { family, n, m } = spec;
    match case {
        PathK1Small | CycleK1Small => gate(small::stored(spec, case)?),
        PathK1N0Mod4 => gate(path::k1_n0mod4(n)),
        PathK1N2Mod4 => gate(path::k1_n2mod4(n)),
        PathK1Odd => gate(path::k1_odd(n)),
        PathK2Even => gate(path::k2_even(n)),
        PathK2Odd => gate(path::k2_odd(n)),
        PathKmEvenM => {
            let base = construct(CoronaSpec::new(family, n, 2)?)?;
            layer_extension(&base, spec, 3..=m, LayerScheme::PathOddAscending)
        }
        PathKmOddMOddN | PathKmOddMEvenN => {
            let base = gate(if n % 2 == 1 { path::k3_odd(n) } else { path::k3_even(n) })?;
            layer_extension(&base, spec, 4..=m, LayerScheme::PathOddDescending)
        }
        CycleK1Odd => gate(cycle::k1_odd(n)),
        CycleK1Even => gate(cycle::k1_even(n)),
        CycleK2Even => gate(cycle::k2_even(n)),
        CycleK2Odd => gate(cycle::k2_odd(n)),
        CycleKmEvenNEvenM | CycleKmOddNEvenM => {
            let base = construct(CoronaSpec::new(family, n, 2)?)?;
            layer_extension(&base, spec, 3..=m, LayerScheme::CycleOddAscending)
        }
        CycleKmEvenNOddM => {
            let base = gate(cycle::k3_even(n))?;
            layer_extension(&base, spec, 4..=m, LayerScheme::CycleOddDescending)
        }
        CycleKmOddNOddM => {
            let base = construct(CoronaSpec::new(family, n, 1)?)?;
            layer_extension(&base, spec, 2..=m, LayerScheme::CycleOddDescending)
        }
        TriangleKm | CompleteKm => gate(complete::distinct_spine(spec, case)?),
        CompleteK1 => construct_complete_k1(n),
    }
}

/// A labeling before the verifier has seen it.
struct Draft {
    spec: CoronaSpec,
    case: ConstructionCase,
    labels: Vec<u32>,
    claimed: usize,
    errata: Vec<Erratum>,
    expected: SpineWeights,
}

/// Labels addressed by 1-based spine index, in the canonical edge order.
struct LabelGrid {
    spec: CoronaSpec,
    spine: Vec<i64>,
    pendants: Vec<i64>,
}

impl LabelGrid {
    fn new(family: Family, n: usize, m: usize) -> Self {
        let spec = CoronaSpec { family, n, m };
        LabelGrid {
            spec,
            spine: vec![0; spec.base_edge_count()],
            pendants: vec![0; n * m],
        }
    }

    /// Label of spine edge `u_i u_{i+1}`.
    fn s(&mut self, i: usize, label: i64) {
        self.spine[i - 1] = label;
    }

    fn p(&mut self, i: usize, j: usize, label: i64) {
        self.pendants[(i - 1) * self.spec.m + (j - 1)] = label;
    }

    fn draft(self, case: ConstructionCase, claimed: usize, errata: &[Erratum], expected: SpineWeights) -> Draft {
        let labels = self
            .spine
            .iter()
            .chain(&self.pendants)
            .map(|&l| u32::try_from(l).unwrap_or(0))
            .collect();
        Draft {
            spec: self.spec,
            case,
            labels,
            claimed,
            errata: errata.to_vec(),
            expected,
        }
    }
}

/// The verifier gate: nothing is returned unless it checks out.
fn gate(draft: Draft) -> Result<ConstructionResult, ConstructionError> {
    let Draft {
        spec,
        case,
        labels,
        claimed,
        errata,
        expected,
    } = draft;
    let reject = |reason: String| ConstructionError::Rejected { spec, case, reason };
    let corona = corona(spec)?;
    let labeling = EdgeLabeling::new(labels);
    let report = verify(corona.graph(), &labeling).map_err(|e| reject(e.to_string()))?;
    if !report.is_bijection {
        return Err(reject(format!(
            "not a bijection (values {:?})",
            report.duplicate_or_missing
        )));
    }
    if !report.is_local_antimagic {
        return Err(reject(format!(
            "adjacent equal sums at {:?}",
            report.conflicting_pairs
        )));
    }
    if report.palette_size != claimed {
        return Err(reject(format!(
            "{} colors instead of {claimed}",
            report.palette_size
        )));
    }
    let spine = spine_weights(&corona, &labeling);
    if !expected.matches(&spine) {
        return Err(reject(format!("spine weights {spine:?} differ from {expected:?}")));
    }
    let claim = match corona_lower_bound(&spec).ok().and_then(|b| b.exact_claimed) {
        Some(exact) if exact == claimed => ClaimKind::Exact,
        _ => ClaimKind::UpperBound,
    };
    Ok(ConstructionResult {
        spec,
        labeling,
        claimed_palette_size: claimed,
        case,
        errata_applied: errata,
        spine_weights_expected: expected,
        claim,
    })
}

/// `w(u_1), ..., w(u_n)`.
pub fn spine_weights(corona: &CoronaGraph, labeling: &EdgeLabeling) -> Vec<u64> {
    let w = weights(corona.graph(), labeling).expect("labeling matches its corona");
    corona.spine().iter().map(|&v| w.get(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: usize, m: usize) -> CoronaSpec {
        CoronaSpec::new(family, n, m).unwrap()
    }

    #[test]
    fn path_8_k1_matches_worked_example() {
        let r = construct(spec(Family::Path, 8, 1)).unwrap();
        assert_eq!(r.case, ConstructionCase::PathK1N0Mod4);
        let labels = r.labeling.labels();
        assert_eq!(&labels[..7], &[4, 7, 3, 6, 2, 5, 1]);
        assert_eq!(&labels[7..], &[15, 10, 9, 12, 11, 14, 13, 8]);
        let g = corona(r.spec).unwrap();
        let w = spine_weights(&g, &r.labeling);
        assert_eq!(w, vec![19, 21, 19, 21, 19, 21, 19, 9]);
        assert_eq!(r.claimed_palette_size, 10);
        assert_eq!(r.claim, ClaimKind::Exact);
    }

    #[test]
    fn cycle_5_k1() {
        let r = construct(spec(Family::Cycle, 5, 1)).unwrap();
        assert_eq!(r.labeling.labels(), &[5, 2, 4, 1, 3, 8, 7, 10, 9, 6]);
        let g = corona(r.spec).unwrap();
        assert_eq!(spine_weights(&g, &r.labeling), vec![16, 14, 16, 14, 10]);
        assert_eq!(r.claimed_palette_size, 7);
    }

    #[test]
    fn path_4_k2_and_k4() {
        let r = construct(spec(Family::Path, 4, 2)).unwrap();
        let g = corona(r.spec).unwrap();
        assert_eq!(spine_weights(&g, &r.labeling), vec![15, 23, 15, 23]);
        assert_eq!(r.claimed_palette_size, 10);
        assert!(r.errata_applied.is_empty());
        let r6 = construct(spec(Family::Path, 6, 2)).unwrap();
        assert_eq!(r6.errata_applied, vec![Erratum::E3]);

        let r = construct(spec(Family::Path, 4, 4)).unwrap();
        assert_eq!(r.case, ConstructionCase::PathKmEvenM);
        assert_eq!(r.claimed_palette_size, 18);
        // (m²+2m)/2·n − m/2 for odd i
        let g = corona(r.spec).unwrap();
        assert_eq!(spine_weights(&g, &r.labeling)[0], 12 * 4 - 2);
    }

    #[test]
    fn cycle_4_k2_palette() {
        let r = construct(spec(Family::Cycle, 4, 2)).unwrap();
        let g = corona(r.spec).unwrap();
        let report = verify(g.graph(), &r.labeling).unwrap();
        assert_eq!(report.palette_size, 10);
        assert!(report.palette.contains(&18) && report.palette.contains(&26));
    }

    #[test]
    fn erratum_e1_at_n5() {
        let r = construct(spec(Family::Cycle, 5, 2)).unwrap();
        assert_eq!(r.errata_applied, vec![Erratum::E1]);
        let g = corona(r.spec).unwrap();
        assert_eq!(spine_weights(&g, &r.labeling), vec![31, 32, 31, 32, 14]);
    }

    #[test]
    fn erratum_e2_at_n6() {
        let r = construct(spec(Family::Cycle, 6, 1)).unwrap();
        assert_eq!(r.errata_applied, vec![Erratum::E2]);
        assert_eq!(r.labeling.labels(), &[4, 6, 3, 5, 2, 1, 7, 10, 9, 12, 11, 8]);
        let g = corona(r.spec).unwrap();
        assert_eq!(spine_weights(&g, &r.labeling), vec![12, 20, 18, 20, 18, 11]);
    }

    #[test]
    fn odd_cycles_with_layers_are_upper_bounds() {
        let r = construct(spec(Family::Cycle, 5, 3)).unwrap();
        assert_eq!(r.claimed_palette_size, 18);
        assert_eq!(r.claim, ClaimKind::UpperBound);
        // below the threshold, mn+3 is forced
        let r = construct(spec(Family::Cycle, 5, 6)).unwrap();
        assert_eq!((r.claimed_palette_size, r.claim), (33, ClaimKind::Exact));
    }

    #[test]
    fn triangle_and_complete() {
        let r = construct(spec(Family::Cycle, 3, 4)).unwrap();
        assert_eq!(r.claimed_palette_size, 15);
        let r = construct(spec(Family::Complete, 3, 1)).unwrap();
        assert_eq!(r.claimed_palette_size, 5);
        let r = construct(spec(Family::Complete, 4, 3)).unwrap();
        assert_eq!(r.claimed_palette_size, 16);
        assert!(matches!(
            construct(spec(Family::Complete, 2, 2)),
            Err(ConstructionError::Unsupported { .. })
        ));
    }

    #[test]
    fn layer_extension_checks_composition() {
        let base = construct(spec(Family::Path, 4, 2)).unwrap();
        let target = spec(Family::Path, 4, 4);
        let err = layer_extension(&base, target, 4..=4, LayerScheme::PathOddAscending);
        assert!(matches!(err, Err(ConstructionError::Composition(_))));
        let err = layer_extension(&base, spec(Family::Path, 4, 3), 3..=3, LayerScheme::PathOddAscending);
        assert!(matches!(err, Err(ConstructionError::Composition(_))));
        let err = layer_extension(&base, target, 3..=4, LayerScheme::CycleOddAscending);
        assert!(matches!(err, Err(ConstructionError::Composition(_))));
        assert!(layer_extension(&base, target, 3..=4, LayerScheme::PathOddAscending).is_ok());
    }

    #[test]
    fn pair_increments() {
        let n = 7;
        for i in 1..=n {
            let p = LayerScheme::PathOddAscending;
            assert_eq!(u64::from(p.label(n, i, 3) + p.label(n, i, 4)), 8 * n as u64 - 1);
            let c = LayerScheme::CycleOddAscending;
            assert_eq!(u64::from(c.label(n, i, 3) + c.label(n, i, 4)), 8 * n as u64 + 1);
        }
    }

    #[test]
    fn case_ids_round_trip_through_serde() {
        for case in ConstructionCase::ALL {
            let text = serde_json::to_string(&case).unwrap();
            assert_eq!(text, format!("\"{}\"", case.id()));
            let back: ConstructionCase = serde_json::from_str(&text).unwrap();
            assert_eq!(back, case);
        }
    }
}
