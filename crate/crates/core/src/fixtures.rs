//! Small worked instances used by tests, the CLI sample files and the demo.

use crate::model::{AlternativeSet, ApprovalProfile, Outcome, PreferenceRelation, Profile, WeakOrder};

fn relation(names: &[&str], beats: &[(&str, &str)]) -> PreferenceRelation {
    let alts = AlternativeSet::new(names.iter().copied()).expect("valid roster");
    let idx = |n: &str| alts.index_of(n).expect("known label");
    let pairs: Vec<(usize, usize)> = beats.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    PreferenceRelation::from_upper(alts.clone(), |i, j| {
        if pairs.contains(&(i, j)) {
            Outcome::Beat
        } else if pairs.contains(&(j, i)) {
            Outcome::Lose
        } else {
            Outcome::Tie
        }
    })
}

/// Four alternatives where `a` beats everyone and `c ∼ d`.
pub fn tied_four() -> PreferenceRelation {
    relation(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("a", "d"), ("c", "b"), ("b", "d")],
    )
}

/// Three voters over `x, y, z, u` whose majority relation is cyclic.
pub fn three_voter_cycle() -> Profile {
    let alts = AlternativeSet::new(["x", "y", "z", "u"]).expect("valid roster");
    let ballot = |order: [&str; 4]| {
        let tiers: Vec<Vec<&str>> = order.iter().map(|n| vec![*n]).collect();
        (WeakOrder::from_labels(alts.clone(), &tiers).expect("valid ballot"), 1)
    };
    Profile::new(
        alts.clone(),
        vec![
            ballot(["x", "y", "z", "u"]),
            ballot(["y", "z", "u", "x"]),
            ballot(["z", "u", "x", "y"]),
        ],
    )
    .expect("valid profile")
}

/// Six-alternative tournament with three divisible pivots.
pub fn six_tournament_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![0, 1, -1, 1, 1, -1],
        vec![-1, 0, 1, -1, 1, 1],
        vec![1, -1, 0, 1, -1, 1],
        vec![-1, 1, -1, 0, -1, 1],
        vec![-1, -1, 1, 1, 0, -1],
        vec![1, -1, -1, -1, 1, 0],
    ]
}

pub fn six_tournament() -> PreferenceRelation {
    let alts = AlternativeSet::new(["a1", "a2", "a3", "a4", "a5", "a6"]).expect("valid roster");
    PreferenceRelation::from_matrix(alts, &six_tournament_matrix()).expect("valid tournament")
}

/// Eleven approval voters over `a, b, c`.
pub fn eleven_approvals() -> ApprovalProfile {
    let alts = AlternativeSet::new(["a", "b", "c"]).expect("valid roster");
    ApprovalProfile::new(
        alts,
        vec![(vec![0], 4), (vec![1], 2), (vec![1, 2], 1), (vec![2], 4)],
    )
    .expect("valid profile")
}

/// Four-alternative tournament where Copeland picks `{a, b}`.
pub fn four_tournament_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![0, 1, 1, -1],
        vec![-1, 0, 1, 1],
        vec![-1, -1, 0, 1],
        vec![1, -1, -1, 0],
    ]
}

pub fn four_tournament() -> PreferenceRelation {
    let alts = AlternativeSet::new(["a", "b", "c", "d"]).expect("valid roster");
    PreferenceRelation::from_matrix(alts, &four_tournament_matrix()).expect("valid tournament")
}

/// `a ≻ b`, `b ≻ c`, `a ∼ c`: the ranking depends on the tie value.
pub fn tied_triangle() -> PreferenceRelation {
    relation(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
}
