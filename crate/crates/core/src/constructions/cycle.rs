//! Closed forms for Cₙ∘K1, Cₙ∘K̄2 and Cₙ∘K̄3 (n ≥ 4).

use super::{ConstructionCase as Case, Draft, Erratum, LabelGrid, SpineWeights};
use crate::graph::Family;

fn odd(i: usize) -> bool {
    i % 2 == 1
}

/// Odd n ≥ 5. Weights (5n+7)/2 (odd i), (5n+3)/2 (even i), w(u_n) = (3n+5)/2.
pub(super) fn k1_odd(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Cycle, n, 1);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn - (k - 1) / 2 } else { (nn + 1) / 2 - k / 2 });
    }
    g.s(n, (nn + 1) / 2);
    for i in 1..n {
        let k = i as i64;
        g.p(i, 1, if odd(i) { nn + k + 2 } else { nn + k });
    }
    g.p(n, 1, nn + 1);
    g.draft(
        Case::CycleK1Odd,
        n + 2,
        &[],
        SpineWeights::classes((5 * nn + 7) / 2, (5 * nn + 3) / 2, &[(n, (3 * nn + 5) / 2)]),
    )
}

/// Even n ≥ 6. Weights (5n+6)/2 (odd i ≥ 3), (5n+10)/2 (even i),
/// w(u_1) = (3n+6)/2, w(u_n) = n + 5.
pub(super) fn k1_even(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Cycle, n, 1);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { (nn - k + 3) / 2 } else { nn - (k - 2) / 2 });
    }
    g.s(n, 1);
    for i in 1..n {
        let k = i as i64;
        g.p(i, 1, if odd(i) { nn + k } else { nn + k + 2 });
    }
    g.p(n, 1, nn + 2);
    g.draft(
        Case::CycleK1Even,
        n + 2,
        &[Erratum::E2],
        SpineWeights::classes(
            (5 * nn + 6) / 2,
            (5 * nn + 10) / 2,
            &[(1, (3 * nn + 6) / 2), (n, nn + 5)],
        ),
    )
}

/// Spine labels shared by the even-n K̄2 and K̄3 cases.
fn even_spine(g: &mut LabelGrid, n: usize) {
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn - (k - 1) / 2 } else { 2 + (k - 2) / 2 });
    }
    g.s(n, 1);
}

/// Even n ≥ 4. Weights 4n + 2 and 6n + 2.
pub(super) fn k2_even(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Cycle, n, 2);
    let nn = n as i64;
    even_spine(&mut g, n);
    for i in 1..=n {
        let k = i as i64;
        let (a, b) = match i {
            _ if odd(i) => (nn + 1 + (k - 1) / 2, 2 * nn - (k - 1) / 2),
            _ if i == n => (3 * nn, 3 * nn - 1 - (k - 2) / 2),
            _ => (2 * nn + 1 + (k - 2) / 2, 3 * nn - 1 - (k - 2) / 2),
        };
        g.p(i, 1, a);
        g.p(i, 2, b);
    }
    g.draft(
        Case::CycleK2Even,
        2 * n + 2,
        &[],
        SpineWeights::classes(4 * nn + 2, 6 * nn + 2, &[]),
    )
}

/// Odd n ≥ 5. Weights 5n + 6 and 5n + 7, w(u_n) = (3n+13)/2.
pub(super) fn k2_odd(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Cycle, n, 2);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn + 1 - (k - 1) / 2 } else { 3 + (k - 2) / 2 });
    }
    g.s(n, 2);
    for i in 1..n {
        let k = i as i64;
        g.p(i, 1, nn + 2 + k);
        g.p(i, 2, 3 * nn + 1 - k);
    }
    g.p(n, 1, 1);
    g.p(n, 2, nn + 2);
    g.draft(
        Case::CycleK2Odd,
        2 * n + 2,
        &[Erratum::E1],
        SpineWeights::classes(5 * nn + 6, 5 * nn + 7, &[(n, (3 * nn + 13) / 2)]),
    )
}

/// Even n ≥ 4, three leaves. Weights 13n/2 + 2 and 21n/2 + 3.
pub(super) fn k3_even(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Cycle, n, 3);
    let nn = n as i64;
    even_spine(&mut g, n);
    for i in 1..=n {
        let k = i as i64;
        let (a, b, c) = if odd(i) {
            (nn + 1 + (k - 1) / 2, (3 * nn + 2) / 2 + (k - 1) / 2, 3 * nn - k)
        } else {
            let c = if i == n { 4 * nn } else { 4 * nn - 1 - (k - 2) / 2 };
            (2 * nn + k, 7 * nn / 2 - (k - 2) / 2, c)
        };
        g.p(i, 1, a);
        g.p(i, 2, b);
        g.p(i, 3, c);
    }
    g.draft(
        Case::CycleKmEvenNOddM,
        3 * n + 2,
        &[],
        SpineWeights::classes(13 * nn / 2 + 2, 21 * nn / 2 + 3, &[]),
    )
}
