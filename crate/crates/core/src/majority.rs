//! Pairwise tallies and the simple-majority relation.

use crate::model::{AlternativeSet, Outcome, PreferenceRelation, Profile};

/// `wins(i, j)` counts the voters ranking `i` strictly above `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseTally {
    alts: AlternativeSet,
    wins: Vec<u64>,
    voters: u64,
}

impl PairwiseTally {
    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn voters(&self) -> u64 {
        self.voters
    }

    pub fn wins(&self, i: usize, j: usize) -> u64 {
        self.wins[i * self.alts.len() + j]
    }

    /// Voters indifferent between `i` and `j`.
    pub fn ties(&self, i: usize, j: usize) -> u64 {
        if i == j {
            return self.voters;
        }
        self.voters - self.wins(i, j) - self.wins(j, i)
    }

    pub fn to_matrix(&self) -> Vec<Vec<u64>> {
        let m = self.alts.len();
        (0..m).map(|i| (0..m).map(|j| self.wins(i, j)).collect()).collect()
    }

    /// `i ≻ j` iff strictly more voters prefer `i` to `j`; equal counts tie.
    pub fn majority_relation(&self) -> PreferenceRelation {
        PreferenceRelation::from_upper(self.alts.clone(), |i, j| {
            match self.wins(i, j).cmp(&self.wins(j, i)) {
                std::cmp::Ordering::Greater => Outcome::Beat,
                std::cmp::Ordering::Equal => Outcome::Tie,
                std::cmp::Ordering::Less => Outcome::Lose,
            }
        })
    }
}

pub fn tally(profile: &Profile) -> PairwiseTally {
    let alts = profile.alternatives().clone();
    let m = alts.len();
    let mut wins = vec![0u64; m * m];
    for (order, count) in profile.ballots() {
        let pos = order.tier_of();
        for i in 0..m {
            for j in 0..m {
                if pos[i] < pos[j] {
                    wins[i * m + j] += u64::from(*count);
                }
            }
        }
    }
    PairwiseTally {
        alts,
        wins,
        voters: profile.voter_count(),
    }
}

pub fn majority_relation(tally: &PairwiseTally) -> PreferenceRelation {
    tally.majority_relation()
}
