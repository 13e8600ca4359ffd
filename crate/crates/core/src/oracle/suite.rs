//! Property checks run over exhaustive or seeded-random instance sets.

use std::fmt;
use std::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::brute::{self, Clause};
use super::enumerate::{self, BallotStyle, RandomSpec};
use crate::error::{Error, Result};
use crate::io;
use crate::majority::tally;
use crate::model::{PreferenceRelation, Profile};
use crate::partitions::{candidate_partitions, PartitionKind};
use crate::scoring::{compute_scores, ScoreTable, ScoringConfig};
use crate::solutions;
use crate::Rational;

/// Largest roster accepted for random instances.
pub const RANDOM_MAX: usize = 10;

/// Where the instances of a run come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// Every labeled tournament.
    Tournaments,
    /// Every weak order, used directly as the relation.
    WeakOrders,
    /// Seeded random ballot profiles; checks run on their majority relation.
    RandomProfiles {
        seed: u64,
        count: usize,
        n: RangeInclusive<usize>,
        style: BallotStyle,
    },
    /// Seeded random relations with roughly one pair in three tied.
    RandomRelations { seed: u64, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub m: RangeInclusive<usize>,
    pub mode: Mode,
}

impl EnumerationSpec {
    pub fn seed(&self) -> Option<u64> {
        match self.mode {
            Mode::RandomProfiles { seed, .. } | Mode::RandomRelations { seed, .. } => Some(seed),
            _ => None,
        }
    }
}

impl fmt::Display for EnumerationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = (self.m.start(), self.m.end());
        let m = if lo == hi { format!("m={lo}") } else { format!("m={lo}..{hi}") };
        match &self.mode {
            Mode::Tournaments => write!(f, "all tournaments, {m}"),
            Mode::WeakOrders => write!(f, "all weak orders, {m}"),
            Mode::RandomProfiles { seed, count, n, style } => write!(
                f,
                "{count} random {} profiles, {m}, n={}..{}, seed {seed}",
                match style {
                    BallotStyle::Strict => "strict",
                    BallotStyle::Weak => "weak",
                    BallotStyle::Mixed => "mixed",
                },
                n.start(),
                n.end()
            ),
            Mode::RandomRelations { seed, count } => {
                write!(f, "{count} random relations with ties, {m}, seed {seed}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Relation(PreferenceRelation),
    Profile(Profile),
}

impl Instance {
    /// Text that reproduces the instance with the CLI.
    pub fn render(&self) -> String {
        match self {
            Instance::Relation(rel) => io::render_matrix(rel),
            Instance::Profile(p) => io::render_profile(p),
        }
    }
}

/// Materialises the instances described by `spec`.
pub fn instances(spec: &EnumerationSpec) -> Result<Vec<Instance>> {
    let (lo, hi) = (*spec.m.start(), *spec.m.end());
    if lo < 2 {
        return Err(Error::TooFewAlternatives(lo));
    }
    let mut out = Vec::new();
    match &spec.mode {
        Mode::Tournaments => {
            for m in lo..=hi {
                out.extend(enumerate::enumerate_tournaments(m)?.map(Instance::Relation));
            }
        }
        Mode::WeakOrders => {
            for m in lo..=hi {
                out.extend(
                    enumerate::enumerate_weak_orders(m)?
                        .into_iter()
                        .map(|w| Instance::Relation(w.to_relation())),
                );
            }
        }
        Mode::RandomProfiles { seed, count, n, style } => {
            if hi > RANDOM_MAX {
                return Err(Error::TooLarge { m: hi, max: RANDOM_MAX });
            }
            if *n.start() == 0 || n.is_empty() {
                return Err(Error::EmptyProfile);
            }
            let rs = RandomSpec {
                seed: *seed,
                count: *count,
                m: spec.m.clone(),
                n: n.clone(),
                style: *style,
            };
            out.extend(enumerate::random_profiles(&rs).map(Instance::Profile));
        }
        Mode::RandomRelations { seed, count } => {
            if hi > RANDOM_MAX {
                return Err(Error::TooLarge { m: hi, max: RANDOM_MAX });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for _ in 0..*count {
                let m = rand::Rng::gen_range(&mut rng, spec.m.clone());
                out.push(Instance::Relation(enumerate::random_relation(&mut rng, m, 1.0 / 3.0)));
            }
        }
    }
    Ok(out)
}

/// A property checked on every applicable instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    WeakPareto,
    StrongPareto,
    Anonymity,
    Neutrality,
    CondorcetWinner,
    CondorcetLoser,
    Gehrlein,
    OrderingPreserved,
    AllDivisible,
    CoveringOrder,
    WinnersUncovered,
    WinnersInTopCycle,
    SetOracles,
    WinnersInCopeland,
    WinnersInCopelandLarge,
    ScoreOracle,
    PartitionOracle,
    TableInvariants,
}

impl Check {
    pub const ALL: [Check; 18] = [
        Check::WeakPareto,
        Check::StrongPareto,
        Check::Anonymity,
        Check::Neutrality,
        Check::CondorcetWinner,
        Check::CondorcetLoser,
        Check::Gehrlein,
        Check::OrderingPreserved,
        Check::AllDivisible,
        Check::CoveringOrder,
        Check::WinnersUncovered,
        Check::WinnersInTopCycle,
        Check::SetOracles,
        Check::WinnersInCopeland,
        Check::WinnersInCopelandLarge,
        Check::ScoreOracle,
        Check::PartitionOracle,
        Check::TableInvariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::WeakPareto => "weak-pareto",
            Check::StrongPareto => "strong-pareto",
            Check::Anonymity => "anonymity",
            Check::Neutrality => "neutrality",
            Check::CondorcetWinner => "condorcet-winner",
            Check::CondorcetLoser => "condorcet-loser",
            Check::Gehrlein => "gehrlein-stability",
            Check::OrderingPreserved => "ordering-preserved",
            Check::AllDivisible => "all-divisible",
            Check::CoveringOrder => "covering-order",
            Check::WinnersUncovered => "winners-uncovered",
            Check::WinnersInTopCycle => "winners-in-top-cycle",
            Check::SetOracles => "set-oracles",
            Check::WinnersInCopeland => "winners-in-copeland",
            Check::WinnersInCopelandLarge => "winners-in-copeland-m6+",
            Check::ScoreOracle => "score-oracle",
            Check::PartitionOracle => "partition-oracle",
            Check::TableInvariants => "table-invariants",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Check::WeakPareto => "unanimous x ≻ y implies ψ(x) > ψ(y)",
            Check::StrongPareto => "unanimous x ⪰ y with one strict voter implies ψ(x) > ψ(y)",
            Check::Anonymity => "reordering ballots leaves the scores unchanged",
            Check::Neutrality => "relabeling alternatives permutes the scores",
            Check::CondorcetWinner => "a Condorcet winner is the unique top scorer",
            Check::CondorcetLoser => "a Condorcet loser has the strictly lowest score",
            Check::Gehrlein => "members of a dominating set outscore every outsider",
            Check::OrderingPreserved => "on an ordering, scores reproduce the ordering",
            Check::AllDivisible => "on an ordering with a strict pair, every pivot has a partition",
            Check::CoveringOrder => "x covers y implies ψ(x) > ψ(y) (tournaments)",
            Check::WinnersUncovered => "winners lie in the uncovered set (tournaments)",
            Check::WinnersInTopCycle => {
                "winners lie in Smith = top cycle = Schwartz (tournaments)"
            }
            Check::SetOracles => "Smith, Schwartz and top cycle match subset brute force",
            Check::WinnersInCopeland => "winners lie among Copeland winners (tournaments, m ≤ 5)",
            Check::WinnersInCopelandLarge => {
                "winners lie among Copeland winners (tournaments, m ≥ 6; reported only)"
            }
            Check::ScoreOracle => "totals match the term-by-term δ-form (m ≤ 8)",
            Check::PartitionOracle => "partitions match a clause-by-clause reading",
            Check::TableInvariants => "score table invariants hold",
        }
    }

    /// Whether a failure counts against the run.
    pub fn asserted(self) -> bool {
        self != Check::WinnersInCopelandLarge
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Position of the instance in the generated sequence.
    pub instance: usize,
    pub detail: String,
    /// Ballot or matrix file text reproducing the instance.
    pub data: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSummary {
    pub check: Check,
    pub checked: u64,
    pub failed: u64,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub spec: String,
    pub seed: Option<u64>,
    pub alpha: Rational,
    pub instances: usize,
    pub checks: Vec<CheckSummary>,
}

impl SuiteReport {
    /// No asserted check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.check.asserted() || c.failed == 0)
    }

    pub fn check(&self, check: Check) -> &CheckSummary {
        self.checks.iter().find(|c| c.check == check).expect("every check is summarised")
    }
}

type Verdict = (Check, std::result::Result<(), String>);

fn verdict(out: &mut Vec<Verdict>, check: Check, ok: bool, detail: impl FnOnce() -> String) {
    out.push((check, if ok { Ok(()) } else { Err(detail()) }));
}

fn names(rel: &PreferenceRelation, set: &[usize]) -> String {
    rel.alternatives().format_set(set)
}

fn profile_checks(p: &Profile, table: &ScoreTable, config: &ScoringConfig, out: &mut Vec<Verdict>) {
    let m = p.alternatives().len();
    let name = |x: usize| p.alternatives().name(x).to_string();
    let positions: Vec<Vec<usize>> = p.ballots().iter().map(|(w, _)| w.tier_of()).collect();
    let mut weak_ok = Ok(());
    let mut strong_ok = Ok(());
    for x in 0..m {
        for y in 0..m {
            if x == y {
                continue;
            }
            let all_strict = positions.iter().all(|pos| pos[x] < pos[y]);
            let all_weak = positions.iter().all(|pos| pos[x] <= pos[y]);
            let some_strict = positions.iter().any(|pos| pos[x] < pos[y]);
            let higher = table.total(x) > table.total(y);
            if all_strict && !higher && weak_ok.is_ok() {
                weak_ok = Err(format!("every voter ranks {} over {} but ψ does not", name(x), name(y)));
            }
            if all_weak && some_strict && !higher && strong_ok.is_ok() {
                strong_ok = Err(format!(
                    "voters weakly prefer {} to {}, one strictly, but ψ does not",
                    name(x),
                    name(y)
                ));
            }
        }
    }
    out.push((Check::WeakPareto, weak_ok));
    out.push((Check::StrongPareto, strong_ok));

    let mut reversed: Vec<_> = p.ballots().to_vec();
    reversed.reverse();
    let rp = Profile::new(p.alternatives().clone(), reversed).expect("same ballots");
    let again = compute_scores(&tally(&rp).majority_relation(), config);
    verdict(out, Check::Anonymity, again.totals() == table.totals(), || {
        "reversing the ballot list changed the totals".into()
    });
}

fn relation_checks(
    rel: &PreferenceRelation,
    table: &ScoreTable,
    config: &ScoringConfig,
    seed: u64,
    out: &mut Vec<Verdict>,
) {
    let m = rel.m();
    let psi = table.totals();
    let winners = table.winners();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perm = enumerate::random_permutation(&mut rng, m);
    let moved = compute_scores(&rel.permuted(&perm), config);
    let neutral = (0..m).all(|x| moved.total(perm[x]) == psi[x]);
    verdict(out, Check::Neutrality, neutral, || format!("permutation {perm:?} changed the scores"));

    if let Some(cw) = solutions::condorcet_winner(rel) {
        verdict(out, Check::CondorcetWinner, winners.members() == [cw], || {
            format!("Condorcet winner {} but winners {}", rel.alternatives().name(cw), names(rel, winners.members()))
        });
    }
    if let Some(cl) = solutions::condorcet_loser(rel) {
        let lowest = (0..m).all(|y| y == cl || psi[cl] < psi[y]);
        verdict(out, Check::CondorcetLoser, lowest, || {
            format!("Condorcet loser {} is not strictly last", rel.alternatives().name(cl))
        });
    }

    let dominating = brute::dominating_sets(rel).expect("size checked by caller");
    let mut gehrlein = Ok(());
    'sets: for set in &dominating {
        for &a in set {
            for b in (0..m).filter(|b| !set.contains(b)) {
                if psi[a] <= psi[b] {
                    gehrlein = Err(format!(
                        "{} dominates but ψ({}) ≤ ψ({})",
                        names(rel, set),
                        rel.alternatives().name(a),
                        rel.alternatives().name(b)
                    ));
                    break 'sets;
                }
            }
        }
    }
    out.push((Check::Gehrlein, gehrlein));

    if rel.is_transitive() {
        let mut ok = Ok(());
        'pairs: for x in 0..m {
            for y in 0..m {
                let bad = (rel.beats(x, y) && psi[x] <= psi[y]) || (x != y && rel.ties(x, y) && psi[x] != psi[y]);
                if bad {
                    ok = Err(format!(
                        "ordering places {} against {} differently from ψ",
                        rel.alternatives().name(x),
                        rel.alternatives().name(y)
                    ));
                    break 'pairs;
                }
            }
        }
        out.push((Check::OrderingPreserved, ok));
        if rel.has_strict_pair() {
            let missing = (0..m).find(|&z| table.partition(z).is_none());
            verdict(out, Check::AllDivisible, missing.is_none(), || {
                format!("no partition for {}", rel.alternatives().name(missing.unwrap_or(0)))
            });
        }
    }

    if rel.is_tournament() {
        let mut covering = Ok(());
        'cover: for x in 0..m {
            for y in 0..m {
                if solutions::covers(rel, x, y).expect("tournament") && psi[x] <= psi[y] {
                    covering = Err(format!(
                        "{} covers {} but ψ is not higher",
                        rel.alternatives().name(x),
                        rel.alternatives().name(y)
                    ));
                    break 'cover;
                }
            }
        }
        out.push((Check::CoveringOrder, covering));

        let uc = solutions::uncovered_set(rel).expect("tournament");
        verdict(out, Check::WinnersUncovered, winners.is_subset_of(&uc), || {
            format!("winners {} outside uncovered set {}", names(rel, winners.members()), names(rel, uc.members()))
        });

        let smith = solutions::smith_set(rel);
        let top = solutions::top_cycle(rel);
        let schwartz = solutions::schwartz_set(rel);
        let agree = smith.same_members(&top) && smith.same_members(&schwartz);
        verdict(out, Check::WinnersInTopCycle, agree && winners.is_subset_of(&smith), || {
            format!(
                "winners {}, Smith {}, top cycle {}, Schwartz {}",
                names(rel, winners.members()),
                names(rel, smith.members()),
                names(rel, top.members()),
                names(rel, schwartz.members())
            )
        });

        let cop = solutions::copeland(rel, config);
        let check = if m <= 5 { Check::WinnersInCopeland } else { Check::WinnersInCopelandLarge };
        verdict(out, check, winners.is_subset_of(&cop.winners), || {
            format!(
                "winners {} not among Copeland winners {}",
                names(rel, winners.members()),
                names(rel, cop.winners.members())
            )
        });
    }

    let smith = brute::brute_smith(rel).expect("size checked by caller");
    let schwartz = brute::brute_schwartz(rel).expect("size checked by caller");
    let sets_ok = solutions::smith_set(rel).members() == smith.as_slice()
        && solutions::top_cycle(rel).members() == smith.as_slice()
        && solutions::schwartz_set(rel).members() == schwartz.as_slice();
    verdict(out, Check::SetOracles, sets_ok, || {
        format!("brute force gives Smith {} and Schwartz {}", names(rel, &smith), names(rel, &schwartz))
    });

    if m <= brute::PSI_ORACLE_MAX {
        let expected = brute::oracle_psi(rel, config.alpha()).expect("size checked");
        verdict(out, Check::ScoreOracle, expected == psi, || {
            let show: Vec<String> = expected.iter().map(ToString::to_string).collect();
            format!("δ-form totals ({})", show.join(", "))
        });
    }

    let mut partitions_ok = Ok(());
    for z in 0..m {
        let direct = brute::clause_partitions(rel, z);
        let produced = candidate_partitions(rel, z);
        let same = direct.len() == produced.len()
            && direct.iter().zip(&produced).all(|((clause, blocks), p)| {
                let clause_ok = match p.kind() {
                    PartitionKind::PivotAtBottom => *clause == Clause::PivotLast,
                    PartitionKind::WeakDominance | PartitionKind::EachBeatsOne => {
                        *clause == Clause::UpperOverBelow
                    }
                    PartitionKind::PivotInMiddle => *clause == Clause::PivotBetween,
                };
                clause_ok && blocks.as_slice() == p.blocks()
            })
            && table.partition(z) == produced.first();
        if !same {
            partitions_ok = Err(format!("pivot {} partitions disagree", rel.alternatives().name(z)));
            break;
        }
    }
    out.push((Check::PartitionOracle, partitions_ok));

    out.push((Check::TableInvariants, table.check_invariants()));
}

fn check_instance(instance: &Instance, index: usize, config: &ScoringConfig) -> Vec<Verdict> {
    let mut out = Vec::new();
    let rel = match instance {
        Instance::Relation(rel) => rel.clone(),
        Instance::Profile(p) => tally(p).majority_relation(),
    };
    let table = compute_scores(&rel, config);
    if let Instance::Profile(p) = instance {
        profile_checks(p, &table, config, &mut out);
    }
    relation_checks(&rel, &table, config, index as u64, &mut out);
    out
}

/// Runs every applicable check on every instance of `spec`.
pub fn check_theorem_suite(spec: &EnumerationSpec, config: &ScoringConfig) -> Result<SuiteReport> {
    let all = instances(spec)?;
    Ok(check_instances(&all, spec.to_string(), spec.seed(), config))
}

/// [`check_theorem_suite`] over an explicit instance list.
pub fn check_instances(
    all: &[Instance],
    spec: String,
    seed: Option<u64>,
    config: &ScoringConfig,
) -> SuiteReport {
    let verdicts: Vec<Vec<Verdict>> = all
        .par_iter()
        .enumerate()
        .map(|(i, inst)| check_instance(inst, i, config))
        .collect();
    let mut checks: Vec<CheckSummary> = Check::ALL
        .iter()
        .map(|&check| CheckSummary {
            check,
            checked: 0,
            failed: 0,
            first_counterexample: None,
        })
        .collect();
    for (i, vs) in verdicts.into_iter().enumerate() {
        for (check, v) in vs {
            let s = checks.iter_mut().find(|s| s.check == check).expect("known check");
            s.checked += 1;
            if let Err(detail) = v {
                s.failed += 1;
                if s.first_counterexample.is_none() {
                    s.first_counterexample = Some(Counterexample {
                        instance: i,
                        detail,
                        data: all[i].render(),
                    });
                }
            }
        }
    }
    SuiteReport {
        spec,
        seed,
        alpha: config.alpha(),
        instances: all.len(),
        checks,
    }
}
