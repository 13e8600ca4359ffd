//! Per-pivot scores, totals, the social ranking and the winner set.
//!
//! A pairwise comparison is worth `μ(x, y)`: 1 for a win, `α` for a tie with
//! a different alternative, 0 otherwise. Each pivot `z` with a partition
//! hands out points to the alternatives outside the bottom block:
//!
//! * pivot at the bottom (k1): `μ(x, z)`;
//! * otherwise: `μ(x, z) + Σ_{w ∈ below(z)} μ(x, w)`.
//!
//! Points are kept as integer `(wins, ties)` counts so that a table can be
//! re-valued for another `α` without recomputing any partition.

use std::cmp::Reverse;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AlternativeSet, ChoiceSet, Concept, PreferenceRelation, WeakOrder};
use crate::partitions::{seek_partition, PartitionKind, SpecificPartition};
use crate::Rational;

/// Largest accepted denominator for `α`; keeps every total well inside `i64`.
pub const MAX_ALPHA_DENOMINATOR: i64 = 1_000_000_000;

/// Pivots above this count are scored in parallel.
const PARALLEL_THRESHOLD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScoringConfig {
    alpha: Rational,
}

impl ScoringConfig {
    pub fn new(alpha: Rational) -> Result<Self> {
        if alpha < Rational::from_integer(0) || alpha > Rational::from_integer(1) {
            return Err(Error::InvalidAlpha(alpha.to_string()));
        }
        if *alpha.denom() > MAX_ALPHA_DENOMINATOR {
            return Err(Error::InvalidAlpha(format!(
                "{alpha} (denominator above {MAX_ALPHA_DENOMINATOR})"
            )));
        }
        Ok(ScoringConfig { alpha })
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }
}

impl Default for ScoringConfig {
    fn default() -> Self {
        ScoringConfig {
            alpha: Ratio::new(1, 2),
        }
    }
}

impl std::str::FromStr for ScoringConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScoringConfig::new(parse_alpha(s)?)
    }
}

/// Parses `P/Q`, an integer, or a finite decimal such as `0.75`.
pub fn parse_alpha(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::InvalidAlpha(text.to_string());
    let value = if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ratio::new(p, q)
    } else if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        if int < 0 || t.starts_with('-') {
            return Err(bad());
        }
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        Ratio::new(int * scale + frac, scale)
    } else {
        Ratio::from_integer(t.parse().map_err(|_| bad())?)
    };
    ScoringConfig::new(value).map(|c| c.alpha)
}

/// `μ(x, y)`.
pub fn mu(rel: &PreferenceRelation, x: usize, y: usize, config: &ScoringConfig) -> Rational {
    if rel.beats(x, y) {
        Rational::from_integer(1)
    } else if x != y && rel.ties(x, y) {
        config.alpha
    } else {
        Rational::from_integer(0)
    }
}

/// A score expressed as `wins + α · ties`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Points {
    pub wins: u32,
    pub ties: u32,
}

impl Points {
    fn add_pair(&mut self, rel: &PreferenceRelation, x: usize, y: usize) {
        if rel.beats(x, y) {
            self.wins += 1;
        } else if x != y && rel.ties(x, y) {
            self.ties += 1;
        }
    }

    pub fn value(&self, alpha: Rational) -> Rational {
        Rational::from_integer(i64::from(self.wins)) + alpha * i64::from(self.ties)
    }
}

impl std::ops::AddAssign for Points {
    fn add_assign(&mut self, rhs: Points) {
        self.wins += rhs.wins;
        self.ties += rhs.ties;
    }
}

/// Points handed out by pivot `z` under the ordered blocks `blocks`.
///
/// When `z` sits in the bottom block each member of the other blocks earns
/// `μ(x, z)`; otherwise it earns `μ(x, z)` plus its points against the bottom
/// block. Works for any block structure, not just the one chosen by
/// [`seek_partition`].
pub fn points_for_blocks(rel: &PreferenceRelation, z: usize, blocks: &[Vec<usize>]) -> Result<Vec<Points>> {
    let m = rel.m();
    if blocks.len() < 2 {
        return Err(Error::EmptyBlock);
    }
    let mut seen = vec![false; m];
    for &x in blocks.iter().flatten() {
        if x >= m {
            return Err(Error::IndexOutOfRange(x));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::OverlappingBlocks);
        }
    }
    if blocks.iter().any(Vec::is_empty) {
        return Err(Error::EmptyBlock);
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Coverage("blocks do not cover the roster".into()));
    }
    if z >= m {
        return Err(Error::IndexOutOfRange(z));
    }
    let (bottom, scored) = blocks.split_last().expect("at least two blocks");
    Ok(column(rel, z, scored.iter().flatten().copied(), bottom))
}

fn column(
    rel: &PreferenceRelation,
    z: usize,
    scored: impl Iterator<Item = usize>,
    bottom: &[usize],
) -> Vec<Points> {
    let pivot_at_bottom = bottom.contains(&z);
    let mut col = vec![Points::default(); rel.m()];
    for x in scored {
        let p = &mut col[x];
        p.add_pair(rel, x, z);
        if !pivot_at_bottom {
            for &w in bottom {
                p.add_pair(rel, x, w);
            }
        }
    }
    col
}

fn partition_points(rel: &PreferenceRelation, part: &SpecificPartition) -> Vec<Points> {
    let (bottom, scored) = part.blocks().split_last().expect("at least two blocks");
    column(rel, part.pivot(), scored.iter().flatten().copied(), bottom)
}

/// Scores of every alternative from every pivot, plus totals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreTable {
    alts: AlternativeSet,
    alpha: Rational,
    partitions: Vec<Option<SpecificPartition>>,
    /// `points[z][x]`.
    points: Vec<Vec<Points>>,
    totals: Vec<Rational>,
}

pub fn compute_scores(rel: &PreferenceRelation, config: &ScoringConfig) -> ScoreTable {
    let m = rel.m();
    let pivot = |z: usize| {
        let part = seek_partition(rel, z);
        let col = match &part {
            Some(p) => partition_points(rel, p),
            None => vec![Points::default(); m],
        };
        (part, col)
    };
    let columns: Vec<_> = if m > PARALLEL_THRESHOLD {
        (0..m).into_par_iter().map(pivot).collect()
    } else {
        (0..m).map(pivot).collect()
    };
    let (partitions, points): (Vec<_>, Vec<_>) = columns.into_iter().unzip();
    let mut table = ScoreTable {
        alts: rel.alternatives().clone(),
        alpha: config.alpha,
        partitions,
        points,
        totals: Vec::new(),
    };
    table.totals = (0..m).map(|x| table.total_points(x).value(table.alpha)).collect();
    table
}

impl ScoreTable {
    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }

    pub fn m(&self) -> usize {
        self.alts.len()
    }

    pub fn partition(&self, z: usize) -> Option<&SpecificPartition> {
        self.partitions[z].as_ref()
    }

    pub fn partitions(&self) -> &[Option<SpecificPartition>] {
        &self.partitions
    }

    pub fn points(&self, z: usize, x: usize) -> Points {
        self.points[z][x]
    }

    /// `score_z(x)`.
    pub fn score(&self, z: usize, x: usize) -> Rational {
        self.points[z][x].value(self.alpha)
    }

    /// `score_z(·)` for pivot `z`.
    pub fn column(&self, z: usize) -> Vec<Rational> {
        (0..self.m()).map(|x| self.score(z, x)).collect()
    }

    /// `ψ(x)` for every alternative.
    pub fn totals(&self) -> &[Rational] {
        &self.totals
    }

    pub fn total(&self, x: usize) -> Rational {
        self.totals[x]
    }

    /// `ψ(x)` as `wins + α · ties`; linear in `α`.
    pub fn total_points(&self, x: usize) -> Points {
        let mut acc = Points::default();
        for col in &self.points {
            acc += col[x];
        }
        acc
    }

    /// The same partitions valued with a different tie value.
    pub fn with_alpha(&self, config: &ScoringConfig) -> ScoreTable {
        let mut t = self.clone();
        t.alpha = config.alpha;
        t.totals = (0..self.m()).map(|x| t.total_points(x).value(t.alpha)).collect();
        t
    }

    /// Tiers of equal totals, highest first.
    pub fn social_ranking(&self) -> WeakOrder {
        social_ranking(self)
    }

    pub fn winners(&self) -> ChoiceSet {
        winner_set(self)
    }

    /// Re-checks the table's structural invariants.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let m = self.m();
        for x in 0..m {
            let sum: Rational = (0..m).map(|z| self.score(z, x)).sum();
            if sum != self.totals[x] {
                return Err(format!("total of {} is not its column sum", self.alts.name(x)));
            }
        }
        for z in 0..m {
            let limit = match &self.partitions[z] {
                None => 0,
                Some(p) => {
                    if let Some(&x) = p.bottom().iter().find(|&&x| self.points[z][x] != Points::default()) {
                        return Err(format!(
                            "{} scores from pivot {} while in the bottom block",
                            self.alts.name(x),
                            self.alts.name(z)
                        ));
                    }
                    match p.kind() {
                        PartitionKind::PivotAtBottom => 1,
                        _ => 1 + p.bottom().len(),
                    }
                }
            };
            for x in 0..m {
                let s = self.score(z, x);
                if s < Rational::from_integer(0) || s > Rational::from_integer(limit as i64) {
                    return Err(format!(
                        "score of {} from pivot {} is {s}, outside [0, {limit}]",
                        self.alts.name(x),
                        self.alts.name(z)
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for ScoreTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.m() {
            writeln!(f, "{}: {}", self.alts.name(x), self.totals[x])?;
        }
        Ok(())
    }
}

pub fn social_ranking(table: &ScoreTable) -> WeakOrder {
    let mut order: Vec<usize> = (0..table.m()).collect();
    order.sort_by_key(|&x| (Reverse(table.totals[x]), x));
    let mut tiers: Vec<Vec<usize>> = Vec::new();
    for x in order {
        match tiers.last_mut() {
            Some(tier) if table.totals[tier[0]] == table.totals[x] => tier.push(x),
            _ => tiers.push(vec![x]),
        }
    }
    WeakOrder::new(table.alts.clone(), tiers).expect("tiers cover the roster")
}

pub fn winner_set(table: &ScoreTable) -> ChoiceSet {
    let best = *table.totals.iter().max().expect("m >= 2");
    let members = (0..table.m()).filter(|&x| table.totals[x] == best).collect();
    ChoiceSet::new(members, Concept::Dsr)
}

/// Total of the alternative in position `i` from the bottom of a strict
/// linear order: `(i − 1)(i + 2) / 2`.
pub fn linear_order_score(i: usize) -> Rational {
    assert!(i >= 1, "positions start at 1");
    let i = i as i64;
    Rational::from_integer((i - 1) * (i + 2) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::majority::tally;

    fn r(n: i64, d: i64) -> Rational {
        Ratio::new(n, d)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn alpha(n: i64, d: i64) -> ScoringConfig {
        ScoringConfig::new(r(n, d)).unwrap()
    }

    #[test]
    fn mu_values() {
        let rel = fixtures::tied_four();
        let c = ScoringConfig::default();
        assert_eq!(mu(&rel, 0, 1, &c), int(1));
        assert_eq!(mu(&rel, 1, 0, &c), int(0));
        assert_eq!(mu(&rel, 2, 3, &c), r(1, 2));
        for x in 0..4 {
            assert_eq!(mu(&rel, x, x, &c), int(0));
        }
    }

    #[test]
    fn alpha_parsing() {
        assert_eq!(parse_alpha("3/4").unwrap(), r(3, 4));
        assert_eq!(parse_alpha("0.75").unwrap(), r(3, 4));
        assert_eq!(parse_alpha(" 1 ").unwrap(), int(1));
        assert_eq!(parse_alpha(".5").unwrap(), r(1, 2));
        assert_eq!(parse_alpha("2/4").unwrap(), r(1, 2));
        for bad in ["3/2", "-1/2", "1.5", "x", "1/0", "", "0.", "-0.5"] {
            assert!(matches!(parse_alpha(bad), Err(Error::InvalidAlpha(_))), "{bad}");
        }
        assert!(ScoringConfig::new(r(1, MAX_ALPHA_DENOMINATOR + 1)).is_err());
    }

    #[test]
    fn cycle_table() {
        let rel = tally(&fixtures::three_voter_cycle()).majority_relation();
        let t = compute_scores(&rel, &ScoringConfig::default());
        let (x, y, z, u) = (0, 1, 2, 3);
        assert_eq!(t.column(x), vec![int(0); 4]);
        assert_eq!(t.column(y), vec![int(0); 4]);
        assert_eq!(t.column(z), vec![int(0), int(2), int(2), int(0)]);
        assert_eq!(t.column(u), vec![int(0), int(1), int(2), int(1)]);
        assert_eq!(t.totals(), &[int(0), int(3), int(4), int(1)]);
        let ranking = t.social_ranking();
        assert_eq!(ranking.tiers(), &[vec![z], vec![y], vec![u], vec![x]]);
        assert_eq!(t.winners().members(), &[z]);
        t.check_invariants().unwrap();
    }

    #[test]
    fn six_tournament_table() {
        let t = compute_scores(&fixtures::six_tournament(), &ScoringConfig::default());
        assert_eq!(t.totals(), &[int(5), int(5), int(5), int(2), int(2), int(2)]);
        assert_eq!(t.column(0), vec![int(3), int(0), int(2), int(0), int(0), int(2)]);
        assert_eq!(t.column(1), vec![int(2), int(3), int(0), int(2), int(0), int(0)]);
        assert_eq!(t.column(2), vec![int(0), int(2), int(3), int(0), int(2), int(0)]);
        assert_eq!(t.social_ranking().tiers(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(t.winners().members(), &[0, 1, 2]);
    }

    #[test]
    fn four_tournament_table() {
        let t = compute_scores(&fixtures::four_tournament(), &ScoringConfig::default());
        assert_eq!(t.totals(), &[int(3), int(4), int(1), int(0)]);
        assert_eq!(t.winners().members(), &[1]);
    }

    #[test]
    fn approval_table() {
        let rel = tally(&fixtures::eleven_approvals().to_profile()).majority_relation();
        let t = compute_scores(&rel, &ScoringConfig::default());
        assert_eq!(t.totals(), &[int(2), int(0), int(5)]);
        assert_eq!(t.winners().members(), &[2]);
    }

    #[test]
    fn tied_triangle_depends_on_alpha() {
        let rel = fixtures::tied_triangle();
        for (n, d) in [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)] {
            let a = r(n, d);
            let t = compute_scores(&rel, &alpha(n, d));
            assert_eq!(t.totals(), &[int(1) + a * 2, int(2), int(0)]);
        }
        let at = |n, d| compute_scores(&rel, &alpha(n, d)).social_ranking().tiers().to_vec();
        assert_eq!(at(1, 4), vec![vec![1], vec![0], vec![2]]);
        assert_eq!(at(1, 2), vec![vec![0, 1], vec![2]]);
        assert_eq!(at(3, 4), vec![vec![0], vec![1], vec![2]]);

        let t = compute_scores(&rel, &ScoringConfig::default());
        assert!(t.partition(0).is_none());
        assert_eq!(t.partition(1).unwrap().kind(), PartitionKind::WeakDominance);
        assert_eq!(t.partition(2).unwrap().kind(), PartitionKind::PivotAtBottom);
    }

    #[test]
    fn revaluing_matches_recomputing() {
        let rel = fixtures::tied_triangle();
        let base = compute_scores(&rel, &ScoringConfig::default());
        let c = alpha(1, 3);
        assert_eq!(base.with_alpha(&c), compute_scores(&rel, &c));
    }

    #[test]
    fn all_ties_score_zero() {
        let rel = PreferenceRelation::all_ties(AlternativeSet::numbered(5).unwrap());
        let t = compute_scores(&rel, &ScoringConfig::default());
        assert!(t.totals().iter().all(|s| *s == int(0)));
        assert_eq!(t.winners().len(), 5);
    }

    #[test]
    fn linear_order_totals() {
        let expected: Vec<Rational> = [0, 2, 5, 9, 14].map(int).to_vec();
        assert_eq!((1..=5).map(linear_order_score).collect::<Vec<_>>(), expected);

        let alts = AlternativeSet::lettered(4).unwrap();
        let rel = PreferenceRelation::linear(alts, &[0, 1, 2, 3]).unwrap();
        let t = compute_scores(&rel, &ScoringConfig::default());
        assert_eq!(t.totals(), &[int(9), int(5), int(2), int(0)]);
    }

    #[test]
    fn tripartition_and_bipartition_agree() {
        // Pivot a under the approval majority c ≻ a ≻ b.
        let rel = tally(&fixtures::eleven_approvals().to_profile()).majority_relation();
        let bi = points_for_blocks(&rel, 0, &[vec![0, 2], vec![1]]).unwrap();
        let tri = points_for_blocks(&rel, 0, &[vec![2], vec![0], vec![1]]).unwrap();
        assert_eq!(bi, tri);
        let t = compute_scores(&rel, &ScoringConfig::default());
        assert_eq!(t.partition(0).unwrap().blocks(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn block_validation() {
        let rel = fixtures::tied_triangle();
        assert_eq!(points_for_blocks(&rel, 0, &[vec![0, 1, 2]]), Err(Error::EmptyBlock));
        assert_eq!(points_for_blocks(&rel, 0, &[vec![0], vec![]]), Err(Error::EmptyBlock));
        assert_eq!(
            points_for_blocks(&rel, 0, &[vec![0, 1], vec![1, 2]]),
            Err(Error::OverlappingBlocks)
        );
        assert!(matches!(points_for_blocks(&rel, 0, &[vec![0], vec![1]]), Err(Error::Coverage(_))));
    }

    #[test]
    fn large_relation_uses_parallel_path() {
        let alts = AlternativeSet::numbered(80).unwrap();
        let order: Vec<usize> = (0..80).rev().collect();
        let rel = PreferenceRelation::linear(alts, &order).unwrap();
        let t = compute_scores(&rel, &ScoringConfig::default());
        for (pos, &x) in order.iter().enumerate() {
            assert_eq!(t.total(x), linear_order_score(80 - pos));
        }
        t.check_invariants().unwrap();
    }
}
