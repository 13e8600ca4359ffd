//! Alternatives, pairwise relations, weak orders and profiles.
//!
//! Alternatives are addressed by their index in roster order everywhere in
//! the crate. Labels only matter at the edges (parsing and rendering).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characters that may not appear in a label because the ballot format
/// uses them as separators.
const RESERVED: &[char] = &[',', '>', '=', '{', '}', ':', '#'];

/// An ordered roster of distinct alternative labels, `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternativeSet {
    names: Vec<String>,
}

impl AlternativeSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(Error::TooFewAlternatives(names.len()));
        }
        let mut seen = HashSet::with_capacity(names.len());
        for name in &names {
            if name.is_empty()
                || name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
            {
                return Err(Error::InvalidLabel(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateAlternative(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// Roster `x1, x2, ..., xm`.
    pub fn numbered(m: usize) -> Result<Self> {
        Self::new((1..=m).map(|i| format!("x{i}")))
    }

    /// Roster `a, b, c, ...` for `m <= 26`, numbered beyond that.
    pub fn lettered(m: usize) -> Result<Self> {
        if m > 26 {
            return Self::numbered(m);
        }
        Self::new((0..m).map(|i| char::from(b'a' + i as u8).to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownAlternative(name.to_string()))
    }

    /// Labels of `members`, in the given order.
    pub fn labels(&self, members: &[usize]) -> Vec<String> {
        members.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// `{a,b,c}` style rendering of a subset.
    pub fn format_set(&self, members: &[usize]) -> String {
        format!("{{{}}}", self.labels(members).join(","))
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(index))
        }
    }
}

/// Result of one ordered pairwise comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Beat,
    Tie,
    Lose,
}

impl Outcome {
    pub fn reversed(self) -> Self {
        match self {
            Outcome::Beat => Outcome::Lose,
            Outcome::Tie => Outcome::Tie,
            Outcome::Lose => Outcome::Beat,
        }
    }

    /// Matrix encoding: 1 for a win, -1 for a loss, 0 for a tie.
    pub fn sign(self) -> i8 {
        match self {
            Outcome::Beat => 1,
            Outcome::Tie => 0,
            Outcome::Lose => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Cell {
    /// Reserved marker for the diagonal; never an outcome.
    SelfPair,
    Is(Outcome),
}

/// A complete pairwise relation over a roster. A tournament is a relation
/// without `Tie` cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreferenceRelation {
    alts: AlternativeSet,
    cells: Vec<Cell>,
}

impl PreferenceRelation {
    /// Builds a relation from the outcome of each unordered pair `i < j`,
    /// filling the mirrored cell automatically.
    pub fn from_upper<F>(alts: AlternativeSet, mut outcome: F) -> Self
    where
        F: FnMut(usize, usize) -> Outcome,
    {
        let m = alts.len();
        let mut cells = vec![Cell::SelfPair; m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                let o = outcome(i, j);
                cells[i * m + j] = Cell::Is(o);
                cells[j * m + i] = Cell::Is(o.reversed());
            }
        }
        Self { alts, cells }
    }

    /// The relation in which every pair ties.
    pub fn all_ties(alts: AlternativeSet) -> Self {
        Self::from_upper(alts, |_, _| Outcome::Tie)
    }

    /// The linear order `order[0] > order[1] > ...`.
    pub fn linear(alts: AlternativeSet, order: &[usize]) -> Result<Self> {
        let tiers = order.iter().map(|&i| vec![i]).collect();
        Ok(WeakOrder::new(alts, tiers)?.to_relation())
    }

    /// Validates a tournament-style matrix of `1`, `-1` and `0` entries.
    /// Diagonal entries are ignored.
    pub fn from_matrix(alts: AlternativeSet, raw: &[Vec<i64>]) -> Result<Self> {
        let m = raw.len();
        if let Some(bad) = raw.iter().find(|row| row.len() != m) {
            return Err(Error::Dimension {
                rows: m,
                cols: bad.len(),
            });
        }
        if m < 2 {
            return Err(Error::Dimension { rows: m, cols: m });
        }
        if alts.len() != m {
            return Err(Error::Dimension {
                rows: m,
                cols: alts.len(),
            });
        }
        let table: Vec<Vec<Option<Outcome>>> = raw
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &v)| match (i == j, v) {
                        (true, _) => Ok(None),
                        (false, 1) => Ok(Some(Outcome::Beat)),
                        (false, 0) => Ok(Some(Outcome::Tie)),
                        (false, -1) => Ok(Some(Outcome::Lose)),
                        (false, value) => Err(Error::InvalidEntry { i, j, value }),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::from_outcomes(alts, &table)
    }

    /// Validates a table of symbolic outcomes. Diagonal cells are ignored
    /// and may be `None`; every off-diagonal cell must be present and agree
    /// with its mirror.
    pub fn from_outcomes(alts: AlternativeSet, table: &[Vec<Option<Outcome>>]) -> Result<Self> {
        let m = table.len();
        if m < 2 || table.iter().any(|row| row.len() != m) {
            let cols = table.iter().map(Vec::len).find(|&l| l != m).unwrap_or(m);
            return Err(Error::Dimension { rows: m, cols });
        }
        if alts.len() != m {
            return Err(Error::Dimension {
                rows: m,
                cols: alts.len(),
            });
        }
        for i in 0..m {
            for j in (i + 1)..m {
                match (table[i][j], table[j][i]) {
                    (Some(a), Some(b)) if a.reversed() == b => {}
                    _ => return Err(Error::InconsistentPair { i, j }),
                }
            }
        }
        Ok(Self::from_upper(alts, |i, j| {
            table[i][j].expect("checked above")
        }))
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn m(&self) -> usize {
        self.alts.len()
    }

    /// Outcome of `x` against `y`; `None` on the diagonal.
    pub fn outcome(&self, x: usize, y: usize) -> Option<Outcome> {
        match self.cells[x * self.m() + y] {
            Cell::SelfPair => None,
            Cell::Is(o) => Some(o),
        }
    }

    #[inline]
    pub fn beats(&self, x: usize, y: usize) -> bool {
        self.cells[x * self.m() + y] == Cell::Is(Outcome::Beat)
    }

    /// True for distinct tied alternatives only.
    #[inline]
    pub fn ties(&self, x: usize, y: usize) -> bool {
        self.cells[x * self.m() + y] == Cell::Is(Outcome::Tie)
    }

    /// `x ⪰ y` for distinct alternatives.
    #[inline]
    pub fn beats_or_ties(&self, x: usize, y: usize) -> bool {
        matches!(
            self.cells[x * self.m() + y],
            Cell::Is(Outcome::Beat) | Cell::Is(Outcome::Tie)
        )
    }

    pub fn is_tournament(&self) -> bool {
        !self.cells.contains(&Cell::Is(Outcome::Tie))
    }

    pub fn has_strict_pair(&self) -> bool {
        self.cells.contains(&Cell::Is(Outcome::Beat))
    }

    /// The four transitivity clauses: `≻∘≻ ⊆ ≻`, `∼∘≻ ⊆ ≻`, `≻∘∼ ⊆ ≻` and
    /// `∼∘∼ ⊆ ∼`, over distinct triples.
    pub fn is_transitive(&self) -> bool {
        let m = self.m();
        for x in 0..m {
            for y in 0..m {
                if x == y {
                    continue;
                }
                for z in 0..m {
                    if z == x || z == y {
                        continue;
                    }
                    let (xy, yz, xz) = (
                        self.outcome(x, y),
                        self.outcome(y, z),
                        self.outcome(x, z),
                    );
                    use Outcome::*;
                    let ok = match (xy, yz) {
                        (Some(Beat), Some(Beat))
                        | (Some(Tie), Some(Beat))
                        | (Some(Beat), Some(Tie)) => xz == Some(Beat),
                        (Some(Tie), Some(Tie)) => xz == Some(Tie),
                        _ => true,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relation restricted to `subset`, keeping the given order of members.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        match subset.len() {
            0 => return Err(Error::EmptySubset),
            1 => return Err(Error::SingletonSubset),
            _ => {}
        }
        for &i in subset {
            self.alts.check_index(i)?;
        }
        let alts = AlternativeSet::new(subset.iter().map(|&i| self.alts.name(i).to_string()))?;
        Ok(Self::from_upper(alts, |a, b| {
            self.outcome(subset[a], subset[b]).expect("distinct")
        }))
    }

    /// Relabels the relation so that old alternative `i` sits at index
    /// `perm[i]`, carrying its label along.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = self.m();
        let mut inverse = vec![0; m];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let alts = AlternativeSet {
            names: inverse.iter().map(|&old| self.alts.names[old].clone()).collect(),
        };
        Self::from_upper(alts, |a, b| {
            self.outcome(inverse[a], inverse[b]).expect("distinct")
        })
    }

    /// Matrix with 1 / -1 / 0 entries and a zero diagonal.
    pub fn to_matrix(&self) -> Vec<Vec<i8>> {
        let m = self.m();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| self.outcome(i, j).map_or(0, Outcome::sign))
                    .collect()
            })
            .collect()
    }

    /// Every ordered strict pair `(x, y)` with `x ≻ y`, in roster order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.m();
        (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter(|&(x, y)| self.beats(x, y))
            .collect()
    }
}

impl fmt::Display for PreferenceRelation {
    /// Lists strict pairs then ties, e.g. `a≻b, c∼d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m();
        let mut parts = Vec::new();
        for (x, y) in self.strict_pairs() {
            parts.push(format!("{}≻{}", self.alts.name(x), self.alts.name(y)));
        }
        for x in 0..m {
            for y in (x + 1)..m {
                if self.ties(x, y) {
                    parts.push(format!("{}∼{}", self.alts.name(x), self.alts.name(y)));
                }
            }
        }
        f.write_str(&parts.join(", "))
    }
}

/// A complete and transitive ordering given as tiers, best first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakOrder {
    alts: AlternativeSet,
    tiers: Vec<Vec<usize>>,
}

impl WeakOrder {
    pub fn new(alts: AlternativeSet, tiers: Vec<Vec<usize>>) -> Result<Self> {
        let m = alts.len();
        let mut seen = vec![false; m];
        for tier in &tiers {
            if tier.is_empty() {
                return Err(Error::Coverage("empty tier".into()));
            }
            for &i in tier {
                alts.check_index(i)?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Coverage(format!(
                        "alternative `{}` appears more than once",
                        alts.name(i)
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Coverage(format!(
                "alternative `{}` is missing",
                alts.name(missing)
            )));
        }
        Ok(Self { alts, tiers })
    }

    /// Builds a weak order from labelled tiers.
    pub fn from_labels<S: AsRef<str>>(alts: AlternativeSet, tiers: &[Vec<S>]) -> Result<Self> {
        let tiers = tiers
            .iter()
            .map(|tier| tier.iter().map(|n| alts.lookup(n.as_ref())).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::new(alts, tiers)
    }

    /// Approval ballot as two tiers `[approved, rest]`. Empty or full
    /// approval collapses to a single tier.
    pub fn from_approval(alts: AlternativeSet, approved: &[usize]) -> Result<Self> {
        let m = alts.len();
        let mut in_set = vec![false; m];
        for &i in approved {
            alts.check_index(i)?;
            in_set[i] = true;
        }
        let top: Vec<usize> = (0..m).filter(|&i| in_set[i]).collect();
        let rest: Vec<usize> = (0..m).filter(|&i| !in_set[i]).collect();
        let tiers = if top.is_empty() || rest.is_empty() {
            vec![(0..m).collect()]
        } else {
            vec![top, rest]
        };
        Self::new(alts, tiers)
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn tiers(&self) -> &[Vec<usize>] {
        &self.tiers
    }

    /// Tier position of each alternative (0 = most preferred).
    pub fn tier_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.alts.len()];
        for (t, tier) in self.tiers.iter().enumerate() {
            for &i in tier {
                pos[i] = t;
            }
        }
        pos
    }

    pub fn is_linear(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    /// `x ≻ y` iff `x`'s tier precedes `y`'s; same tier means a tie.
    pub fn to_relation(&self) -> PreferenceRelation {
        let pos = self.tier_of();
        PreferenceRelation::from_upper(self.alts.clone(), |i, j| match pos[i].cmp(&pos[j]) {
            std::cmp::Ordering::Less => Outcome::Beat,
            std::cmp::Ordering::Equal => Outcome::Tie,
            std::cmp::Ordering::Greater => Outcome::Lose,
        })
    }
}

impl fmt::Display for WeakOrder {
    /// `a ≻ b ∼ c` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tiers: Vec<String> = self
            .tiers
            .iter()
            .map(|t| self.alts.labels(t).join(" ∼ "))
            .collect();
        f.write_str(&tiers.join(" ≻ "))
    }
}

/// Turns an approval ballot given by labels into a weak order.
pub fn approval_to_weak_order<S: AsRef<str>>(
    approved: &[S],
    alts: &AlternativeSet,
) -> Result<WeakOrder> {
    let indices = approved
        .iter()
        .map(|n| alts.lookup(n.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    WeakOrder::from_approval(alts.clone(), &indices)
}

/// Weak-order ballots with integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    alts: AlternativeSet,
    ballots: Vec<(WeakOrder, u32)>,
}

impl Profile {
    pub fn new(alts: AlternativeSet, ballots: Vec<(WeakOrder, u32)>) -> Result<Self> {
        if ballots.iter().any(|(_, k)| *k == 0) {
            return Err(Error::ZeroMultiplicity);
        }
        if ballots.is_empty() {
            return Err(Error::EmptyProfile);
        }
        if ballots.iter().any(|(w, _)| w.alternatives() != &alts) {
            return Err(Error::Coverage("ballot roster differs from the profile roster".into()));
        }
        Ok(Self { alts, ballots })
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn ballots(&self) -> &[(WeakOrder, u32)] {
        &self.ballots
    }

    pub fn voter_count(&self) -> u64 {
        self.ballots.iter().map(|(_, k)| u64::from(*k)).sum()
    }
}

/// Approval ballots (approved subsets) with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApprovalProfile {
    alts: AlternativeSet,
    ballots: Vec<(Vec<usize>, u32)>,
}

impl ApprovalProfile {
    pub fn new(alts: AlternativeSet, ballots: Vec<(Vec<usize>, u32)>) -> Result<Self> {
        if ballots.iter().any(|(_, k)| *k == 0) {
            return Err(Error::ZeroMultiplicity);
        }
        if ballots.is_empty() {
            return Err(Error::EmptyProfile);
        }
        let mut ballots = ballots;
        for (set, _) in &mut ballots {
            for &i in set.iter() {
                alts.check_index(i)?;
            }
            set.sort_unstable();
            set.dedup();
        }
        Ok(Self { alts, ballots })
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn ballots(&self) -> &[(Vec<usize>, u32)] {
        &self.ballots
    }

    pub fn voter_count(&self) -> u64 {
        self.ballots.iter().map(|(_, k)| u64::from(*k)).sum()
    }

    /// Dichotomous preferences as two-tier weak orders.
    pub fn to_profile(&self) -> Profile {
        let ballots = self
            .ballots
            .iter()
            .map(|(set, k)| {
                let order = WeakOrder::from_approval(self.alts.clone(), set)
                    .expect("indices validated at construction");
                (order, *k)
            })
            .collect();
        Profile {
            alts: self.alts.clone(),
            ballots,
        }
    }
}

/// Which rule produced a [`ChoiceSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Concept {
    Dsr,
    Copeland,
    Smith,
    TopCycle,
    Schwartz,
    Uncovered,
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Concept::Dsr => "DSR",
            Concept::Copeland => "Copeland",
            Concept::Smith => "Smith set",
            Concept::TopCycle => "top cycle",
            Concept::Schwartz => "Schwartz set",
            Concept::Uncovered => "uncovered set",
        })
    }
}

/// Non-empty set of alternatives chosen by some rule. Members are kept
/// sorted by roster index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChoiceSet {
    members: Vec<usize>,
    concept: Concept,
}

impl ChoiceSet {
    pub(crate) fn new(mut members: Vec<usize>, concept: Concept) -> Self {
        members.sort_unstable();
        members.dedup();
        assert!(!members.is_empty(), "choice sets are never empty");
        Self { members, concept }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn concept(&self) -> Concept {
        self.concept
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &ChoiceSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn same_members(&self, other: &ChoiceSet) -> bool {
        self.members == other.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
