//! Optimal labelings of the instances below the general constructions' ranges,
//! each checked against the exhaustive search.

use super::{ConstructionCase, ConstructionError, Draft, SpineWeights};
use crate::graph::{CoronaSpec, Family};

struct Stored {
    family: Family,
    n: usize,
    labels: &'static [u32],
    palette: usize,
    spine: &'static [u64],
}

const STORED: [Stored; 4] = [
    Stored {
        family: Family::Path,
        n: 2,
        labels: &[2, 1, 3],
        palette: 3,
        spine: &[3, 5],
    },
    Stored {
        family: Family::Path,
        n: 3,
        labels: &[3, 1, 2, 5, 4],
        palette: 4,
        spine: &[5, 9, 5],
    },
    Stored {
        family: Family::Cycle,
        n: 3,
        labels: &[1, 2, 4, 5, 3, 6],
        palette: 5,
        spine: &[10, 6, 12],
    },
    Stored {
        family: Family::Cycle,
        n: 4,
        labels: &[1, 2, 3, 5, 6, 4, 7, 8],
        palette: 6,
        spine: &[12, 7, 12, 16],
    },
];

pub(super) fn stored(spec: CoronaSpec, case: ConstructionCase) -> Result<Draft, ConstructionError> {
    let s = STORED
        .iter()
        .find(|s| s.family == spec.family && s.n == spec.n && spec.m == 1)
        .ok_or_else(|| ConstructionError::Unsupported {
            spec,
            reason: "no stored labeling".into(),
        })?;
    Ok(Draft {
        spec,
        case,
        labels: s.labels.to_vec(),
        claimed: s.palette,
        errata: Vec::new(),
        expected: SpineWeights::Listed(s.spine.to_vec()),
    })
}
