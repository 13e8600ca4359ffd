//! Block-dominance parameters and pivot-specific ordered partitions.
//!
//! For a pivot `z` the roster splits into the alternatives that beat `z`,
//! tie with it, or lose to it. [`seek_partition`] decides whether the roster
//! can be cut around `z` into a relaxed-dominance bipartition or tripartition
//! and returns the first admissible cut in this order:
//!
//! 1. nobody loses to `z` but someone beats it: `⟨above ∪ tied, {z}⟩` (k1);
//! 2. someone loses to `z` and the upper part `above ∪ tied ∪ {z}` either
//!    weakly dominates the losers (k2) or each of its members beats at least
//!    one loser (k3): `⟨above ∪ tied ∪ {z}, below⟩`;
//! 3. someone beats `z`, someone loses to it, and at least one member of
//!    `above ∪ tied` beats every loser: `⟨above ∪ tied, {z}, below⟩` (k4).

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AlternativeSet, PreferenceRelation};
use crate::Rational;

fn check_blocks(a: &[usize], b: &[usize]) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyBlock);
    }
    if a.iter().any(|x| b.contains(x)) {
        return Err(Error::OverlappingBlocks);
    }
    Ok(())
}

/// Members of `a` that beat every member of `b`.
fn full_dominators(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> usize {
    a.iter()
        .filter(|&&x| b.iter().all(|&y| rel.beats(x, y)))
        .count()
}

fn weakly_dominates(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| rel.beats_or_ties(x, y)))
}

fn each_beats_one(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| rel.beats(x, y)))
}

/// Share of `a` whose members beat all of `b`.
pub fn beta(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> Result<Rational> {
    check_blocks(a, b)?;
    Ok(Ratio::new(full_dominators(rel, a, b) as i64, a.len() as i64))
}

/// Smallest share of `b` beaten by a single member of `a`.
pub fn gamma(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> Result<Rational> {
    check_blocks(a, b)?;
    let worst = a
        .iter()
        .map(|&x| b.iter().filter(|&&y| rel.beats(x, y)).count())
        .min()
        .expect("a is non-empty");
    Ok(Ratio::new(worst as i64, b.len() as i64))
}

/// `A ≻ B` when `strict`, otherwise `A ⪰ B`.
pub fn block_dominates(
    rel: &PreferenceRelation,
    a: &[usize],
    b: &[usize],
    strict: bool,
) -> Result<bool> {
    check_blocks(a, b)?;
    Ok(if strict {
        full_dominators(rel, a, b) == a.len()
    } else {
        weakly_dominates(rel, a, b)
    })
}

/// The split of `X \ {z}` by outcome against the pivot `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Neighborhoods {
    pub pivot: usize,
    /// Alternatives beating the pivot.
    pub above: Vec<usize>,
    /// Alternatives beaten by the pivot.
    pub below: Vec<usize>,
    /// Alternatives tied with the pivot, pivot excluded.
    pub tied: Vec<usize>,
}

impl Neighborhoods {
    /// `above ∪ tied`, sorted.
    pub fn above_or_tied(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.above.iter().chain(&self.tied).copied().collect();
        v.sort_unstable();
        v
    }

    /// `above ∪ tied ∪ {pivot}`, sorted.
    pub fn upper(&self) -> Vec<usize> {
        let mut v = self.above_or_tied();
        v.push(self.pivot);
        v.sort_unstable();
        v
    }
}

pub fn neighborhoods(rel: &PreferenceRelation, z: usize) -> Neighborhoods {
    let mut nb = Neighborhoods {
        pivot: z,
        above: Vec::new(),
        below: Vec::new(),
        tied: Vec::new(),
    };
    for x in (0..rel.m()).filter(|&x| x != z) {
        if rel.beats(x, z) {
            nb.above.push(x);
        } else if rel.beats(z, x) {
            nb.below.push(x);
        } else {
            nb.tied.push(x);
        }
    }
    nb
}

/// Which admissibility condition produced a [`SpecificPartition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartitionKind {
    /// `⟨above ∪ tied, {z}⟩`: nobody loses to the pivot.
    #[serde(rename = "k1")]
    PivotAtBottom,
    /// `⟨above ∪ tied ∪ {z}, below⟩` with the upper block weakly dominating.
    #[serde(rename = "k2")]
    WeakDominance,
    /// Same blocks as k2; every upper member beats some lower member.
    #[serde(rename = "k3")]
    EachBeatsOne,
    /// `⟨above ∪ tied, {z}, below⟩`.
    #[serde(rename = "k4")]
    PivotInMiddle,
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionKind::PivotAtBottom => "k1",
            PartitionKind::WeakDominance => "k2",
            PartitionKind::EachBeatsOne => "k3",
            PartitionKind::PivotInMiddle => "k4",
        })
    }
}

/// An ordered bipartition or tripartition of the roster around a pivot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpecificPartition {
    pivot: usize,
    kind: PartitionKind,
    blocks: Vec<Vec<usize>>,
}

impl SpecificPartition {
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    /// Two or three blocks, top first.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn top(&self) -> &[usize] {
        &self.blocks[0]
    }

    pub fn middle(&self) -> Option<&[usize]> {
        (self.blocks.len() == 3).then(|| self.blocks[1].as_slice())
    }

    pub fn bottom(&self) -> &[usize] {
        self.blocks.last().expect("at least two blocks")
    }

    pub fn is_tripartition(&self) -> bool {
        self.blocks.len() == 3
    }

    pub fn in_bottom(&self, x: usize) -> bool {
        self.bottom().contains(&x)
    }

    /// `⟨{y,z}, {x,u}⟩_z` style rendering.
    pub fn render(&self, alts: &AlternativeSet) -> String {
        let blocks: Vec<String> = self.blocks.iter().map(|b| alts.format_set(b)).collect();
        format!("⟨{}⟩_{}", blocks.join(", "), alts.name(self.pivot))
    }
}

/// Every condition check made while looking for the pivot's partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotAnalysis {
    pub neighborhoods: Neighborhoods,
    /// Upper block weakly dominates the losers (k2 test).
    pub upper_weakly_dominates: bool,
    /// Each upper member beats at least one loser (k3 test).
    pub upper_each_beats_one: bool,
    /// Some member of `above ∪ tied` beats all losers (k4 test).
    pub some_dominator: bool,
    /// All admissible partitions in evaluation order.
    pub candidates: Vec<SpecificPartition>,
}

impl PivotAnalysis {
    pub fn bipartition_possible(&self) -> bool {
        self.candidates.iter().any(|p| !p.is_tripartition())
    }

    pub fn tripartition_possible(&self) -> bool {
        self.candidates.iter().any(SpecificPartition::is_tripartition)
    }

    /// The partition used for scoring: the first admissible one.
    pub fn chosen(&self) -> Option<&SpecificPartition> {
        self.candidates.first()
    }
}

pub fn analyse_pivot(rel: &PreferenceRelation, z: usize) -> PivotAnalysis {
    let nb = neighborhoods(rel, z);
    let mut analysis = PivotAnalysis {
        upper_weakly_dominates: false,
        upper_each_beats_one: false,
        some_dominator: false,
        candidates: Vec::new(),
        neighborhoods: nb,
    };
    let nb = &analysis.neighborhoods;
    if nb.below.is_empty() {
        if !nb.above.is_empty() {
            analysis.candidates.push(SpecificPartition {
                pivot: z,
                kind: PartitionKind::PivotAtBottom,
                blocks: vec![nb.above_or_tied(), vec![z]],
            });
        }
        return analysis;
    }

    let upper = nb.upper();
    let above_or_tied = nb.above_or_tied();
    let weak = weakly_dominates(rel, &upper, &nb.below);
    let each = each_beats_one(rel, &upper, &nb.below);
    let some = !above_or_tied.is_empty() && full_dominators(rel, &above_or_tied, &nb.below) > 0;

    let bi_kind = if weak {
        Some(PartitionKind::WeakDominance)
    } else if each {
        Some(PartitionKind::EachBeatsOne)
    } else {
        None
    };
    let mut candidates = Vec::new();
    if let Some(kind) = bi_kind {
        candidates.push(SpecificPartition {
            pivot: z,
            kind,
            blocks: vec![upper, nb.below.clone()],
        });
    }
    if !nb.above.is_empty() && some {
        candidates.push(SpecificPartition {
            pivot: z,
            kind: PartitionKind::PivotInMiddle,
            blocks: vec![above_or_tied, vec![z], nb.below.clone()],
        });
    }
    analysis.upper_weakly_dominates = weak;
    analysis.upper_each_beats_one = each;
    analysis.some_dominator = some;
    analysis.candidates = candidates;
    analysis
}

/// Every admissible pivot-specific partition for `z`; a bipartition, when
/// present, comes first.
pub fn candidate_partitions(rel: &PreferenceRelation, z: usize) -> Vec<SpecificPartition> {
    analyse_pivot(rel, z).candidates
}

/// The partition used for `z`, or `None` if the roster is not divisible
/// with respect to `z`.
pub fn seek_partition(rel: &PreferenceRelation, z: usize) -> Option<SpecificPartition> {
    candidate_partitions(rel, z).into_iter().next()
}

/// [`seek_partition`] for every pivot in roster order.
pub fn seek_all(rel: &PreferenceRelation) -> Vec<Option<SpecificPartition>> {
    (0..rel.m()).map(|z| seek_partition(rel, z)).collect()
}
