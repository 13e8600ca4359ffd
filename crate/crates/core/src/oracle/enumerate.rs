//! Exhaustive and seeded-random instance generators.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{AlternativeSet, Outcome, PreferenceRelation, Profile, WeakOrder};

pub const TOURNAMENT_MAX: usize = 6;
pub const WEAK_ORDER_MAX: usize = 5;

fn check_size(m: usize, max: usize) -> Result<()> {
    if m < 2 {
        Err(Error::TooFewAlternatives(m))
    } else if m > max {
        Err(Error::TooLarge { m, max })
    } else {
        Ok(())
    }
}

/// All `2^(m(m-1)/2)` labeled tournaments on `a, b, ...`.
pub fn enumerate_tournaments(m: usize) -> Result<impl Iterator<Item = PreferenceRelation>> {
    check_size(m, TOURNAMENT_MAX)?;
    let alts = AlternativeSet::lettered(m)?;
    let pairs = m * (m - 1) / 2;
    Ok((0u64..1 << pairs).map(move |code| {
        let mut bit = 0;
        PreferenceRelation::from_upper(alts.clone(), |_, _| {
            let outcome = if code >> bit & 1 == 1 { Outcome::Beat } else { Outcome::Lose };
            bit += 1;
            outcome
        })
    }))
}

/// All ordered set partitions of `m` labeled alternatives.
pub fn enumerate_weak_orders(m: usize) -> Result<Vec<WeakOrder>> {
    check_size(m, WEAK_ORDER_MAX)?;
    let alts = AlternativeSet::lettered(m)?;
    let mut out = Vec::new();
    // Every map from alternatives to levels 0..m whose image is an initial
    // segment gives one weak order.
    let mut level = vec![0usize; m];
    loop {
        let top = *level.iter().max().expect("m >= 2");
        if (0..=top).all(|l| level.contains(&l)) {
            let tiers: Vec<Vec<usize>> = (0..=top)
                .map(|l| (0..m).filter(|&x| level[x] == l).collect())
                .collect();
            out.push(WeakOrder::new(alts.clone(), tiers).expect("levels cover the roster"));
        }
        let mut i = 0;
        while i < m {
            level[i] += 1;
            if level[i] < m {
                break;
            }
            level[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
    }
    Ok(out)
}

/// Kind of ballots produced by [`random_profiles`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallotStyle {
    Strict,
    Weak,
    /// Each ballot is strict or weak with equal odds.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSpec {
    pub seed: u64,
    pub count: usize,
    pub m: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    pub style: BallotStyle,
}

pub fn random_weak_order<R: Rng>(rng: &mut R, alts: &AlternativeSet, strict: bool) -> WeakOrder {
    let mut order: Vec<usize> = (0..alts.len()).collect();
    order.shuffle(rng);
    let mut tiers: Vec<Vec<usize>> = vec![vec![order[0]]];
    for &x in &order[1..] {
        if strict || rng.gen_bool(0.5) {
            tiers.push(vec![x]);
        } else {
            tiers.last_mut().expect("non-empty").push(x);
        }
    }
    WeakOrder::new(alts.clone(), tiers).expect("shuffled roster")
}

/// Reproducible stream of profiles; the same spec always yields the same
/// profiles.
pub fn random_profiles(spec: &RandomSpec) -> impl Iterator<Item = Profile> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let spec = spec.clone();
    (0..spec.count).map(move |_| {
        let m = rng.gen_range(spec.m.clone());
        let n = rng.gen_range(spec.n.clone());
        let alts = AlternativeSet::lettered(m).expect("m >= 2");
        let ballots = (0..n)
            .map(|_| {
                let strict = match spec.style {
                    BallotStyle::Strict => true,
                    BallotStyle::Weak => false,
                    BallotStyle::Mixed => rng.gen_bool(0.5),
                };
                (random_weak_order(&mut rng, &alts, strict), 1)
            })
            .collect();
        Profile::new(alts, ballots).expect("n >= 1")
    })
}

/// Relation whose pairs are independently `Beat`, `Tie` or `Lose`, the tie
/// having probability `tie_probability`.
pub fn random_relation<R: Rng>(rng: &mut R, m: usize, tie_probability: f64) -> PreferenceRelation {
    let alts = AlternativeSet::lettered(m).expect("m >= 2");
    PreferenceRelation::from_upper(alts, |_, _| {
        if rng.gen_bool(tie_probability) {
            Outcome::Tie
        } else if rng.gen_bool(0.5) {
            Outcome::Beat
        } else {
            Outcome::Lose
        }
    })
}

/// Uniformly random permutation of `0..m`.
pub fn random_permutation<R: Rng>(rng: &mut R, m: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    perm
}
