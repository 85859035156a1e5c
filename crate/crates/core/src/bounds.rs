//! Closed-form bounds on the local antimagic chromatic number of corona
//! products, and the counting quantities behind them.
//!
//! All comparisons are exact: thresholds are rationals and the counting
//! gaps are evaluated in integers.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CoronaSpec, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("no bound is available for {0}")]
    Unsupported(CoronaSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub rule: &'static str,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact_claimed: Option<usize>,
    pub reasons: Vec<Reason>,
}

impl BoundResult {
    fn new() -> Self {
        BoundResult {
            lower: 0,
            upper: None,
            exact_claimed: None,
            reasons: Vec::new(),
        }
    }

    fn lower(&mut self, value: usize, rule: &'static str, statement: String) {
        self.lower = self.lower.max(value);
        self.reasons.push(Reason { rule, statement });
    }

    fn upper(&mut self, value: usize, rule: &'static str, statement: String) {
        self.upper = Some(self.upper.map_or(value, |u| u.min(value)));
        self.reasons.push(Reason { rule, statement });
    }

    fn exact(&mut self, value: usize, rule: &'static str, statement: String) {
        self.lower = self.lower.max(value);
        self.upper = Some(self.upper.map_or(value, |u| u.min(value)));
        self.exact_claimed = Some(value);
        self.reasons.push(Reason { rule, statement });
    }

    /// True when `value` lies in `[lower, upper]`.
    pub fn admits(&self, value: usize) -> bool {
        self.lower <= value && self.upper.is_none_or(|u| value <= u)
    }
}

/// Any tree with `leaf_count` leaves needs at least `leaf_count + 1` colors.
pub fn leaf_lower_bound(leaf_count: usize) -> usize {
    leaf_count + 1
}

/// Proper-coloring lower bound: `χ(G ∘ K̄m)` equals `χ(G)` (at least 2).
pub fn chromatic_number(spec: &CoronaSpec) -> usize {
    match spec.family {
        Family::Path => 2,
        Family::Cycle if spec.n.is_multiple_of(2) => 2,
        Family::Cycle => 3,
        Family::Complete => spec.n,
    }
}

/// Collects every applicable bound for `spec`.
pub fn corona_lower_bound(spec: &CoronaSpec) -> Result<BoundResult, BoundsError> {
    spec.validate().map_err(|_| BoundsError::Unsupported(*spec))?;
    let CoronaSpec { family, n, m } = *spec;
    let mut r = BoundResult::new();

    r.lower(
        chromatic_number(spec),
        "chromatic",
        format!("χ_la ≥ χ = {}", chromatic_number(spec)),
    );
    r.lower(
        m * n,
        "distinct-leaves",
        format!("the {} leaves carry distinct pendant labels", m * n),
    );

    match (family, m) {
        (Family::Path, _) => {
            r.lower(
                leaf_lower_bound(m * n),
                "tree-leaves",
                format!("a tree with {} leaves needs at least {} colors", m * n, m * n + 1),
            );
            match (m, n) {
                (1, 2) => r.exact(3, "path-small", "P2∘K1 uses exactly 3 colors".into()),
                (1, 3) => r.exact(4, "path-small", "P3∘K1 uses exactly 4 colors".into()),
                (1, _) => {
                    r.lower(
                        n + 2,
                        "path-k1-counting",
                        "k(2n−1) ≥ 1+2+···+(n+k−1) rules out n+1 colors for n ≥ 4".into(),
                    );
                    r.exact(n + 2, "path-k1", format!("χ_la(P{n}∘K1) = n+2 = {}", n + 2));
                }
                _ => {
                    r.lower(
                        m * n + 2,
                        "path-km-counting",
                        "k(n+mn−1) ≥ 1+2+···+(n+mk−1) rules out mn+1 colors".into(),
                    );
                    r.exact(
                        m * n + 2,
                        "path-km",
                        format!("χ_la(P{n}∘K̄{m}) = mn+2 = {}", m * n + 2),
                    );
                }
            }
        }
        (Family::Cycle, 1) if n == 3 => {
            r.exact(5, "cycle-small", "C3∘K1 uses exactly 5 colors".into());
        }
        (Family::Cycle, 1) => {
            r.lower(
                n + 2,
                "cycle-k1-counting",
                "k·2n ≥ 1+2+···+(n+k) forces (n−k)²+n+k ≤ 0".into(),
            );
            r.exact(n + 2, "cycle-k1", format!("χ_la(C{n}∘K1) = n+2 = {}", n + 2));
        }
        (Family::Cycle, _) if n == 3 => {
            r.lower(
                3 * m + 3,
                "triangle-km",
                format!(
                    "a spine sum is at least (m+3)(m+2)/2 = {} > 3m+3",
                    (m + 3) * (m + 2) / 2
                ),
            );
            r.exact(3 * m + 3, "triangle-km", format!("χ_la(C3∘K̄{m}) = 3m+3 = {}", 3 * m + 3));
        }
        (Family::Cycle, _) => {
            r.lower(
                m * n + 2,
                "cycle-km-counting",
                "the path counting argument carries over: at least mn+2".into(),
            );
            if n % 2 == 0 {
                r.exact(
                    m * n + 2,
                    "cycle-km-even",
                    format!("χ_la(C{n}∘K̄{m}) = mn+2 = {}", m * n + 2),
                );
            } else if m == 2 {
                r.exact(2 * n + 2, "cycle-k2", format!("χ_la(C{n}∘K̄2) = 2n+2 = {}", 2 * n + 2));
            } else {
                if below_threshold(n, m) {
                    let (num, den) = threshold_parts(m);
                    r.lower(
                        m * n + 3,
                        "odd-cycle-threshold",
                        format!("n = {n} < {num}/{den} forces a third new spine color"),
                    );
                }
                r.upper(
                    m * n + 3,
                    "odd-cycle-layered",
                    format!("layered labeling uses mn+3 = {} colors", m * n + 3),
                );
                if Some(r.lower) == r.upper {
                    r.exact_claimed = Some(r.lower);
                }
            }
        }
        (Family::Complete, _) if n < 3 => return Err(BoundsError::Unsupported(*spec)),
        (Family::Complete, 1) => {
            r.lower(
                2 * n - 1,
                "complete-k1",
                format!("every spine sum is at least C(n+1,2) = {}", n * (n + 1) / 2),
            );
            r.exact(2 * n - 1, "complete-k1", format!("χ_la(K{n}∘K1) = 2n−1 = {}", 2 * n - 1));
        }
        (Family::Complete, _) => {
            r.exact(
                m * n + n,
                "complete-km",
                "spine sums exceed every label (m(m−1) > 0), so mn+n colors".into(),
            );
        }
    }
    Ok(r)
}

/// `(m+2)(m+3) / (2(m+1))`, reduced.
pub fn odd_cycle_threshold(m: usize) -> Ratio<u64> {
    let (num, den) = threshold_parts(m);
    Ratio::new(num, den)
}

/// Unreduced numerator and denominator of the odd-cycle threshold.
pub fn threshold_parts(m: usize) -> (u64, u64) {
    let m = m as u64;
    ((m + 2) * (m + 3), 2 * (m + 1))
}

/// Strict `n < (m+2)(m+3)/(2(m+1))`.
pub fn below_threshold(n: usize, m: usize) -> bool {
    Ratio::from_integer(n as u64) < odd_cycle_threshold(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub m: usize,
    pub numerator: u64,
    pub denominator: u64,
    pub qualifying_n: Vec<usize>,
}

impl ThresholdRow {
    /// The threshold as printed: an integer when it divides out, otherwise
    /// the unreduced fraction, e.g. `20/6`.
    pub fn threshold_display(&self) -> String {
        if self.numerator.is_multiple_of(self.denominator) {
            (self.numerator / self.denominator).to_string()
        } else {
            format!("{}/{}", self.numerator, self.denominator)
        }
    }

    pub fn bound_expression(&self) -> String {
        if self.qualifying_n.is_empty() {
            String::new()
        } else {
            format!("≥ {}n+3", self.m)
        }
    }
}

/// One row per `m` in `1..=m_max`: the odd `n ≥ 3` below the threshold, for
/// which `C_n ∘ K̄m` needs at least `mn+3` colors.
pub fn odd_cycle_threshold_table(m_max: usize) -> Vec<ThresholdRow> {
    (1..=m_max)
        .map(|m| {
            let (numerator, denominator) = threshold_parts(m);
            let qualifying_n = (3..)
                .step_by(2)
                .take_while(|&n| below_threshold(n, m))
                .collect();
            ThresholdRow {
                m,
                numerator,
                denominator,
                qualifying_n,
            }
        })
        .collect()
}

/// CSV with columns `m,threshold,qualifying_n,bound`; the qualifying list is
/// space separated.
pub fn threshold_table_csv(rows: &[ThresholdRow]) -> String {
    let mut out = String::from("m,threshold,qualifying_n,bound\n");
    for row in rows {
        let ns: Vec<String> = row.qualifying_n.iter().map(|n| n.to_string()).collect();
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.m,
            row.threshold_display(),
            ns.join(" "),
            row.bound_expression()
        ));
    }
    out
}

fn triangular(t: i64) -> i64 {
    t * (t + 1) / 2
}

/// `1+2+···+(n+mk−1) − k(n+mn−1)`: positive means `k` repeated spine colors
/// are impossible in `Pn ∘ K̄m`.
pub fn path_counting_gap(n: i64, m: i64, k: i64) -> i64 {
    triangular(n + m * k - 1) - k * (n + m * n - 1)
}

/// Twice `(n−1−k)² + (mk+k−1)(mk−k−1) − ½`, the lower estimate of twice the gap.
pub fn path_counting_estimate_twice(n: i64, m: i64, k: i64) -> i64 {
    2 * ((n - 1 - k).pow(2) + (m * k + k - 1) * (m * k - k - 1)) - 1
}

/// `1+2+···+(n+k) − 2nk = ((n−k)² + n + k)/2` for `Cn ∘ K1`.
pub fn cycle_k1_counting_gap(n: i64, k: i64) -> i64 {
    triangular(n + k) - 2 * n * k
}

/// `1+2+···+(m+n−1) − (C(n,2)+mn) = m(m−1)/2` for `Kn ∘ K̄m`.
pub fn complete_counting_gap(n: i64, m: i64) -> i64 {
    triangular(m + n - 1) - (n * (n - 1) / 2 + m * n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: usize, m: usize) -> CoronaSpec {
        CoronaSpec::new(family, n, m).unwrap()
    }

    #[test]
    fn leaf_bound() {
        assert_eq!(leaf_lower_bound(4), 5);
        assert_eq!(leaf_lower_bound(0), 1);
        let r = corona_lower_bound(&spec(Family::Path, 5, 3)).unwrap();
        assert!(r.reasons.iter().any(|p| p.rule == "tree-leaves"));
        assert_eq!(r.lower, 17);
    }

    #[test]
    fn named_examples() {
        let r = corona_lower_bound(&spec(Family::Cycle, 3, 2)).unwrap();
        assert_eq!((r.lower, r.exact_claimed), (9, Some(9)));

        let r = corona_lower_bound(&spec(Family::Cycle, 5, 6)).unwrap();
        assert_eq!(r.lower, 33);
        assert_eq!(r.exact_claimed, Some(33));

        let r = corona_lower_bound(&spec(Family::Complete, 4, 3)).unwrap();
        assert_eq!(r.exact_claimed, Some(16));
    }

    #[test]
    fn small_paths_are_special() {
        assert_eq!(corona_lower_bound(&spec(Family::Path, 2, 1)).unwrap().exact_claimed, Some(3));
        assert_eq!(corona_lower_bound(&spec(Family::Path, 3, 1)).unwrap().exact_claimed, Some(4));
        assert_eq!(corona_lower_bound(&spec(Family::Path, 4, 1)).unwrap().exact_claimed, Some(6));
    }

    #[test]
    fn odd_cycles_keep_the_interval_open_above_threshold() {
        let r = corona_lower_bound(&spec(Family::Cycle, 5, 3)).unwrap();
        assert_eq!((r.lower, r.upper, r.exact_claimed), (17, Some(18), None));
        let r = corona_lower_bound(&spec(Family::Cycle, 7, 10)).unwrap();
        assert_eq!(r.exact_claimed, Some(73));
        let r = corona_lower_bound(&spec(Family::Cycle, 9, 10)).unwrap();
        assert_eq!(r.exact_claimed, None);
    }

    #[test]
    fn complete_of_order_two_is_unsupported() {
        assert!(corona_lower_bound(&spec(Family::Complete, 2, 3)).is_err());
    }

    #[test]
    fn table_rows() {
        let rows = odd_cycle_threshold_table(15);
        assert_eq!(rows[0].threshold_display(), "3");
        assert!(rows[0].qualifying_n.is_empty());
        assert_eq!(rows[1].threshold_display(), "20/6");
        assert_eq!(rows[1].qualifying_n, vec![3]);
        assert_eq!(rows[9].qualifying_n, vec![3, 5, 7]);
        assert_eq!(rows[14].threshold_display(), "306/32");
        let csv = threshold_table_csv(&rows[..2]);
        assert_eq!(csv, "m,threshold,qualifying_n,bound\n1,3,,\n2,20/6,3,≥ 2n+3\n");
    }

    #[test]
    fn threshold_is_exact_at_integers() {
        // m = 1: threshold is exactly 3, and 3 < 3 is false
        assert!(!below_threshold(3, 1));
        assert!(below_threshold(2, 1));
    }

    #[test]
    fn counting_gaps_match_closed_forms() {
        for n in 1..30 {
            for k in 0..n {
                assert_eq!(2 * cycle_k1_counting_gap(n, k), (n - k).pow(2) + n + k);
            }
            for m in 1..8 {
                assert_eq!(2 * complete_counting_gap(n, m), m * (m - 1));
                for k in 1..n {
                    let expanded = n * n + m * m * k * k - n - m * k - 2 * k * n + 2 * k;
                    assert_eq!(2 * path_counting_gap(n, m, k), expanded);
                }
            }
        }
    }
}
