//! Reference implementations written directly from the set definitions.
//!
//! Nothing here calls into `partitions`, `scoring` or `solutions`; relations
//! are read once through their matrix and then handled as bitmasks.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::model::PreferenceRelation;
use crate::Rational;

/// Beat and tie masks per alternative.
pub(crate) struct Bits {
    m: usize,
    beat: Vec<u32>,
    tie: Vec<u32>,
}

impl Bits {
    pub(crate) fn new(rel: &PreferenceRelation) -> Self {
        let matrix = rel.to_matrix();
        let m = matrix.len();
        let mut beat = vec![0u32; m];
        let mut tie = vec![0u32; m];
        for x in 0..m {
            for y in 0..m {
                if x == y {
                    continue;
                }
                match matrix[x][y] {
                    1 => beat[x] |= 1 << y,
                    0 => tie[x] |= 1 << y,
                    _ => {}
                }
            }
        }
        Bits { m, beat, tie }
    }

    fn full(&self) -> u32 {
        (1u32 << self.m) - 1
    }

    fn members(mask: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| mask & (1 << i) != 0)
    }

    /// Every member of `a` beats every member of `b`.
    fn strictly_dominates(&self, a: u32, b: u32) -> bool {
        Self::members(a).all(|x| self.beat[x] & b == b)
    }

    /// Every member of `a` beats or ties every member of `b`.
    fn weakly_dominates(&self, a: u32, b: u32) -> bool {
        Self::members(a).all(|x| (self.beat[x] | self.tie[x]) & b == b)
    }

    /// β(a, b) > 0: some member of `a` beats all of `b`.
    fn beta_positive(&self, a: u32, b: u32) -> bool {
        Self::members(a).any(|x| self.beat[x] & b == b)
    }

    /// γ(a, b) > 0: every member of `a` beats some member of `b`.
    fn gamma_positive(&self, a: u32, b: u32) -> bool {
        Self::members(a).all(|x| self.beat[x] & b != 0)
    }

    fn above(&self, z: usize) -> u32 {
        (0..self.m).filter(|&x| self.beat[x] & (1 << z) != 0).fold(0, |acc, x| acc | 1 << x)
    }

    fn mu(&self, x: usize, y: usize, alpha: Rational) -> Rational {
        if self.beat[x] & (1 << y) != 0 {
            Rational::from_integer(1)
        } else if self.tie[x] & (1 << y) != 0 {
            alpha
        } else {
            Rational::from_integer(0)
        }
    }
}

fn to_vec(mask: u32) -> Vec<usize> {
    Bits::members(mask).collect()
}

fn guard(m: usize, max: usize) -> Result<()> {
    if m > max {
        Err(Error::TooLarge { m, max })
    } else {
        Ok(())
    }
}

pub const PSI_ORACLE_MAX: usize = 8;
pub const DSRP_ORACLE_MAX: usize = 10;
pub const SUBSET_ORACLE_MAX: usize = 12;

/// Totals evaluated term by term from the δ-form of the scoring rule:
///
/// `ψ(x) = Σ_z [ δ(below=∅, above≠∅) δ(x ∈ above∪tied) μ(x,z)
///             + δ(below≠∅) δ(upper ⪰ below ∨ γ(upper,below)>0
///                            ∨ (above≠∅ ∧ β(above∪tied,below)>0))
///               δ(x ∈ upper) (μ(x,z) + Σ_{y∈below} μ(x,y)) ]`
///
/// with `upper = above ∪ tied ∪ {z}`.
pub fn oracle_psi(rel: &PreferenceRelation, alpha: Rational) -> Result<Vec<Rational>> {
    let b = Bits::new(rel);
    guard(b.m, PSI_ORACLE_MAX)?;
    let delta = |c: bool| if c { Rational::from_integer(1) } else { Rational::from_integer(0) };
    let mut psi = vec![Rational::from_integer(0); b.m];
    for (x, total) in psi.iter_mut().enumerate() {
        for z in 0..b.m {
            let above = b.above(z);
            let below = b.beat[z];
            let tied = b.tie[z];
            let above_or_tied = above | tied;
            let upper = above_or_tied | 1 << z;
            let in_mask = |mask: u32| mask & (1 << x) != 0;

            let first = delta(below == 0 && above != 0)
                * delta(in_mask(above_or_tied))
                * b.mu(x, z, alpha);

            let below_sum: Rational = Bits::members(below).map(|y| b.mu(x, y, alpha)).sum();
            let second = delta(below != 0)
                * delta(
                    b.weakly_dominates(upper, below)
                        || b.gamma_positive(upper, below)
                        || (above != 0 && b.beta_positive(above_or_tied, below)),
                )
                * delta(in_mask(upper))
                * (b.mu(x, z, alpha) + below_sum);

            *total += first + second;
        }
    }
    Ok(psi)
}

/// Which clause of the pivot-specific definition a partition satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// Nobody below the pivot, someone above.
    PivotLast,
    /// Someone below; the upper block weakly dominates or each member beats one.
    UpperOverBelow,
    /// Someone above and below; a member of `above ∪ tied` beats all below.
    PivotBetween,
}

/// Every pivot-specific partition for `z`, read clause by clause.
pub fn clause_partitions(rel: &PreferenceRelation, z: usize) -> Vec<(Clause, Vec<Vec<usize>>)> {
    let b = Bits::new(rel);
    let above = b.above(z);
    let below = b.beat[z];
    let above_or_tied = above | b.tie[z];
    let upper = above_or_tied | 1 << z;
    let mut out = Vec::new();
    if below == 0 && above != 0 {
        out.push((Clause::PivotLast, vec![to_vec(above_or_tied), vec![z]]));
    }
    if below != 0 && (b.weakly_dominates(upper, below) || b.gamma_positive(upper, below)) {
        out.push((Clause::UpperOverBelow, vec![to_vec(upper), to_vec(below)]));
    }
    if below != 0 && above != 0 && b.beta_positive(above_or_tied, below) {
        out.push((Clause::PivotBetween, vec![to_vec(above_or_tied), vec![z], to_vec(below)]));
    }
    out
}

/// All general relaxed-dominance partitions of a relation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneralPartitions {
    /// `⟨A, B⟩` with β(A,B) > 0 and A ⪰ B.
    pub first_type: Vec<[Vec<usize>; 2]>,
    /// `⟨A, B⟩` with β(A,B) > 0 and γ(A,B) > 0.
    pub second_type: Vec<[Vec<usize>; 2]>,
    /// `⟨A, B, C⟩` with A ⪰ B, B ≻ C, β(A,B) > 0 and β(A,C) > 0.
    pub tripartitions: Vec<[Vec<usize>; 3]>,
}

impl GeneralPartitions {
    pub fn is_bipartition(&self, a: &[usize], b: &[usize]) -> bool {
        let key = [a.to_vec(), b.to_vec()];
        self.first_type.contains(&key) || self.second_type.contains(&key)
    }

    pub fn is_empty(&self) -> bool {
        self.first_type.is_empty() && self.second_type.is_empty() && self.tripartitions.is_empty()
    }
}

/// Brute force over every ordered 2- and 3-block partition.
pub fn enumerate_dsrps(rel: &PreferenceRelation) -> Result<GeneralPartitions> {
    let b = Bits::new(rel);
    guard(b.m, DSRP_ORACLE_MAX)?;
    let full = b.full();
    let mut out = GeneralPartitions::default();
    for a in 1..full {
        let rest = full & !a;
        if b.beta_positive(a, rest) {
            if b.weakly_dominates(a, rest) {
                out.first_type.push([to_vec(a), to_vec(rest)]);
            }
            if b.gamma_positive(a, rest) {
                out.second_type.push([to_vec(a), to_vec(rest)]);
            }
        }
        // Split the rest into a middle and a bottom block.
        let mut mid = rest;
        while mid != 0 {
            mid = (mid - 1) & rest;
            let middle = mid;
            let bottom = rest & !middle;
            if middle == 0 || bottom == 0 {
                continue;
            }
            if b.weakly_dominates(a, middle)
                && b.strictly_dominates(middle, bottom)
                && b.beta_positive(a, middle)
                && b.beta_positive(a, bottom)
            {
                out.tripartitions.push([to_vec(a), to_vec(middle), to_vec(bottom)]);
            }
        }
    }
    out.first_type.sort();
    out.second_type.sort();
    out.tripartitions.sort();
    Ok(out)
}

/// Every proper non-empty `A` whose members all beat every outsider.
pub fn dominating_sets(rel: &PreferenceRelation) -> Result<Vec<Vec<usize>>> {
    let b = Bits::new(rel);
    guard(b.m, SUBSET_ORACLE_MAX)?;
    let full = b.full();
    Ok((1..full)
        .filter(|&a| b.strictly_dominates(a, full & !a))
        .map(to_vec)
        .collect())
}

/// Smallest non-empty set beating every outsider (the whole roster counts).
pub fn brute_smith(rel: &PreferenceRelation) -> Result<Vec<usize>> {
    let b = Bits::new(rel);
    guard(b.m, SUBSET_ORACLE_MAX)?;
    let full = b.full();
    let best = (1..=full)
        .filter(|&a| b.strictly_dominates(a, full & !a))
        .min_by_key(|a| a.count_ones())
        .expect("the full roster dominates vacuously");
    Ok(to_vec(best))
}

/// Union of the inclusion-minimal sets that no outsider beats into.
pub fn brute_schwartz(rel: &PreferenceRelation) -> Result<Vec<usize>> {
    let b = Bits::new(rel);
    guard(b.m, SUBSET_ORACLE_MAX)?;
    let full = b.full();
    let undominated: Vec<u32> = (1..=full)
        .filter(|&a| Bits::members(full & !a).all(|y| b.beat[y] & a == 0))
        .collect();
    let union = undominated
        .iter()
        .filter(|&&a| !undominated.iter().any(|&s| s != a && s & a == s))
        .fold(0, |acc, &a| acc | a);
    Ok(to_vec(union))
}

/// `β` as a plain fraction, for cross-checking the production version.
pub fn brute_beta(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> Rational {
    let bits = Bits::new(rel);
    let bmask = b.iter().fold(0u32, |acc, &y| acc | 1 << y);
    let hits = a.iter().filter(|&&x| bits.beat[x] & bmask == bmask).count();
    Ratio::new(hits as i64, a.len() as i64)
}

/// `γ` as a plain fraction, for cross-checking the production version.
pub fn brute_gamma(rel: &PreferenceRelation, a: &[usize], b: &[usize]) -> Rational {
    let bits = Bits::new(rel);
    let bmask = b.iter().fold(0u32, |acc, &y| acc | 1 << y);
    a.iter()
        .map(|&x| Ratio::new((bits.beat[x] & bmask).count_ones() as i64, b.len() as i64))
        .min()
        .expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::majority::tally;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn delta_form_on_worked_instances() {
        let half = Ratio::new(1, 2);
        let cyc = tally(&fixtures::three_voter_cycle()).majority_relation();
        assert_eq!(oracle_psi(&cyc, half).unwrap(), vec![int(0), int(3), int(4), int(1)]);
        let appr = tally(&fixtures::eleven_approvals().to_profile()).majority_relation();
        assert_eq!(oracle_psi(&appr, half).unwrap(), vec![int(2), int(0), int(5)]);
        let ties = PreferenceRelation::all_ties(crate::AlternativeSet::numbered(4).unwrap());
        assert_eq!(oracle_psi(&ties, half).unwrap(), vec![int(0); 4]);
    }

    #[test]
    fn size_guards() {
        let big = PreferenceRelation::all_ties(crate::AlternativeSet::numbered(11).unwrap());
        assert_eq!(oracle_psi(&big, Ratio::new(1, 2)), Err(Error::TooLarge { m: 11, max: 8 }));
        assert_eq!(enumerate_dsrps(&big), Err(Error::TooLarge { m: 11, max: 10 }));
    }

    #[test]
    fn general_partitions_of_tied_four() {
        let rel = fixtures::tied_four();
        let p = enumerate_dsrps(&rel).unwrap();
        let (a, b, c, d) = (0, 1, 2, 3);
        assert!(p.first_type.contains(&[vec![a, b, c], vec![d]]));
        assert!(!p.second_type.contains(&[vec![a, b, c], vec![d]]));
        assert!(p.second_type.contains(&[vec![a, b], vec![c, d]]));
        assert!(!p.first_type.contains(&[vec![a, b], vec![c, d]]));
        assert!(p.first_type.contains(&[vec![a], vec![b, c, d]]));
        assert!(p.second_type.contains(&[vec![a], vec![b, c, d]]));
        assert!(p.tripartitions.contains(&[vec![a, c], vec![b], vec![d]]));
        assert!(p.tripartitions.contains(&[vec![a, d], vec![c], vec![b]]));
    }

    #[test]
    fn all_ties_have_no_partitions() {
        let rel = PreferenceRelation::all_ties(crate::AlternativeSet::numbered(4).unwrap());
        assert!(enumerate_dsrps(&rel).unwrap().is_empty());
        assert!(dominating_sets(&rel).unwrap().is_empty());
        assert_eq!(brute_smith(&rel).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(brute_schwartz(&rel).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn brute_sets_on_tournaments() {
        assert_eq!(brute_smith(&fixtures::four_tournament()).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(brute_smith(&fixtures::six_tournament()).unwrap().len(), 6);
        assert_eq!(brute_smith(&fixtures::tied_four()).unwrap(), vec![0]);
        assert_eq!(dominating_sets(&fixtures::tied_four()).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn clause_reading_of_cycle() {
        let cyc = tally(&fixtures::three_voter_cycle()).majority_relation();
        assert!(clause_partitions(&cyc, 0).is_empty());
        assert_eq!(
            clause_partitions(&cyc, 3),
            vec![(Clause::PivotBetween, vec![vec![1, 2], vec![3], vec![0]])]
        );
    }
}
