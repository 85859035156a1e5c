//! Closed forms for Pₙ∘K1, Pₙ∘K̄2 and Pₙ∘K̄3.

use super::{ConstructionCase as Case, Draft, Erratum, LabelGrid, SpineWeights};
use crate::graph::Family;

fn odd(i: usize) -> bool {
    i % 2 == 1
}

/// n ≡ 0 (mod 4). Weights 5n/2 − 1 (odd i), 5n/2 + 1 (even i), w(u_n) = n + 1,
/// which repeats the leaf label at u_3.
pub(super) fn k1_n0mod4(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 1);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn / 2 - (k - 1) / 2 } else { nn - k / 2 });
    }
    for i in 1..=n {
        let k = i as i64;
        let p = match i {
            1 => 2 * nn - 1,
            _ if i == n => nn,
            _ if odd(i) => nn + k - 2,
            _ => nn + k,
        };
        g.p(i, 1, p);
    }
    let h = 5 * nn / 2;
    g.draft(
        Case::PathK1N0Mod4,
        n + 2,
        &[],
        SpineWeights::classes(h - 1, h + 1, &[(n, nn + 1)]),
    )
}

/// n ≡ 2 (mod 4), n ≥ 6. Weights 5n/2 ∓ 2, w(u_n) = n + 2 (the leaf label at u_5).
pub(super) fn k1_n2mod4(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 1);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn / 2 - (k - 1) / 2 } else { nn - k / 2 });
    }
    for i in 1..=n {
        let k = i as i64;
        let p = match i {
            1 => 2 * nn - 2,
            _ if i == n => nn + 1,
            _ if odd(i) => nn + k - 3,
            _ => nn + k + 1,
        };
        g.p(i, 1, p);
    }
    let h = 5 * nn / 2;
    g.draft(
        Case::PathK1N2Mod4,
        n + 2,
        &[],
        SpineWeights::classes(h - 2, h + 2, &[(n, nn + 2)]),
    )
}

/// Odd n. Interior weights (5n−1)/2 and (5n+3)/2; the ends are leaf colors.
pub(super) fn k1_odd(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 1);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn - (k - 1) / 2 } else { (nn + 1) / 2 - k / 2 });
    }
    for i in 1..=n {
        let k = i as i64;
        let p = match i {
            1 => (nn + 1) / 2,
            _ if odd(i) => nn + k - 2,
            _ => nn + k,
        };
        g.p(i, 1, p);
    }
    g.draft(
        Case::PathK1Odd,
        n + 2,
        &[],
        SpineWeights::classes(
            (5 * nn - 1) / 2,
            (5 * nn + 3) / 2,
            &[(1, (3 * nn + 1) / 2), (n, 2 * nn - 1)],
        ),
    )
}

/// Even n. Weights 4n − 1 and 13n/2 − 3.
pub(super) fn k2_even(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 2);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn + (k - 1) / 2 } else { nn / 2 - k / 2 });
    }
    for i in 1..=n {
        let k = i as i64;
        let (a, b) = match i {
            1 => (nn / 2, 5 * nn / 2 - 1),
            _ if odd(i) => (nn - (k - 1) / 2, 3 * nn / 2 + (k - 3) / 2),
            _ => (3 * nn - k / 2, 2 * nn + (k - 4) / 2),
        };
        g.p(i, 1, a);
        g.p(i, 2, b);
    }
    let errata: &[Erratum] = if n >= 6 { &[Erratum::E3] } else { &[] };
    g.draft(
        Case::PathK2Even,
        2 * n + 2,
        errata,
        SpineWeights::classes(4 * nn - 1, 13 * nn / 2 - 3, &[]),
    )
}

/// Odd n ≥ 3. Weights 4n and (13n − 1)/2.
pub(super) fn k2_odd(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 2);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        let s = match i {
            1 => nn + 1,
            2 => (nn + 3) / 2,
            _ if odd(i) => (3 * nn - k + 2) / 2,
            _ => k / 2,
        };
        g.s(i, s);
    }
    for i in 1..=n {
        let k = i as i64;
        let a = match i {
            1 => (nn + 1) / 2,
            3 => 1,
            _ if odd(i) => (nn + k) / 2,
            _ => (5 * nn - k - 3) / 2,
        };
        let b = match i {
            1 => (5 * nn - 3) / 2,
            2 => (5 * nn - 1) / 2,
            _ if i == n => (5 * nn + 1) / 2,
            _ if odd(i) => 2 * nn - (k + 1) / 2,
            _ => (5 * nn + k - 1) / 2,
        };
        g.p(i, 1, a);
        g.p(i, 2, b);
    }
    g.draft(
        Case::PathK2Odd,
        2 * n + 2,
        &[],
        SpineWeights::classes(4 * nn, (13 * nn - 1) / 2, &[]),
    )
}

/// Odd n ≥ 3, three leaves. Weights 9n − 3 and 8n − 3.
pub(super) fn k3_odd(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 3);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn - 1 - (k - 1) / 2 } else { k / 2 });
    }
    for i in 1..=n {
        let k = i as i64;
        let a = match i {
            _ if i == n => (5 * nn - 3) / 2,
            _ if odd(i) => (3 * nn - 1) / 2 + (k - 1) / 2,
            _ => nn + (k - 2) / 2,
        };
        let b = if odd(i) {
            (5 * nn - 1) / 2 + (k - 1) / 2
        } else {
            2 * nn - 1 + (k - 2) / 2
        };
        g.p(i, 1, a);
        g.p(i, 2, b);
        g.p(i, 3, 4 * nn - k);
    }
    g.draft(
        Case::PathKmOddMOddN,
        3 * n + 2,
        &[Erratum::E4],
        SpineWeights::classes(9 * nn - 3, 8 * nn - 3, &[]),
    )
}

/// Even n ≥ 2, three leaves. Weights 7n − 4 and 10n − 1.
pub(super) fn k3_even(n: usize) -> Draft {
    let mut g = LabelGrid::new(Family::Path, n, 3);
    let nn = n as i64;
    for i in 1..n {
        let k = i as i64;
        g.s(i, if odd(i) { nn - 1 - (k - 1) / 2 } else { k / 2 });
    }
    for i in 1..=n {
        let k = i as i64;
        let (a, b, c) = match i {
            _ if odd(i) => (nn + (k - 1) / 2, 3 * nn / 2 + (k - 1) / 2, 7 * nn / 2 - 2 - k),
            _ if i == n => (5 * nn / 2, 7 * nn / 2 - 1, 7 * nn / 2),
            _ => (2 * nn + (k - 2) / 2, 7 * nn / 2 - k, 7 * nn / 2 + k / 2),
        };
        g.p(i, 1, a);
        g.p(i, 2, b);
        g.p(i, 3, c);
    }
    g.draft(
        Case::PathKmOddMEvenN,
        3 * n + 2,
        &[],
        SpineWeights::classes(7 * nn - 4, 10 * nn - 1, &[]),
    )
}
