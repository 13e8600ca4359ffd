//! Classical solution concepts: Condorcet winner and loser, the Smith,
//! Schwartz and top-cycle sets, covering, and Copeland scores.

use std::collections::VecDeque;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::model::{ChoiceSet, Concept, PreferenceRelation};
use crate::scoring::ScoringConfig;
use crate::Rational;

/// The alternative beating every other one, if any.
pub fn condorcet_winner(rel: &PreferenceRelation) -> Option<usize> {
    (0..rel.m()).find(|&x| (0..rel.m()).all(|y| x == y || rel.beats(x, y)))
}

/// The alternative beaten by every other one, if any.
pub fn condorcet_loser(rel: &PreferenceRelation) -> Option<usize> {
    (0..rel.m()).find(|&x| (0..rel.m()).all(|y| x == y || rel.beats(y, x)))
}

/// Whether `set` beats (`strict`) or beats-or-ties every outsider.
pub fn is_dominating(rel: &PreferenceRelation, set: &[usize], strict: bool) -> bool {
    let outside: Vec<usize> = (0..rel.m()).filter(|x| !set.contains(x)).collect();
    set.iter().all(|&a| {
        outside
            .iter()
            .all(|&b| if strict { rel.beats(a, b) } else { rel.beats_or_ties(a, b) })
    })
}

/// Union of the strongly connected components of `edge` that no outside
/// vertex points into.
fn source_components(m: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut g = DiGraph::<(), ()>::with_capacity(m, m * m / 2);
    let nodes: Vec<_> = (0..m).map(|_| g.add_node(())).collect();
    for x in 0..m {
        for y in 0..m {
            if x != y && edge(x, y) {
                g.add_edge(nodes[x], nodes[y], ());
            }
        }
    }
    let mut component = vec![0usize; m];
    let sccs = tarjan_scc(&g);
    for (c, scc) in sccs.iter().enumerate() {
        for n in scc {
            component[n.index()] = c;
        }
    }
    let mut entered = vec![false; sccs.len()];
    for x in 0..m {
        for y in 0..m {
            if x != y && component[x] != component[y] && edge(x, y) {
                entered[component[y]] = true;
            }
        }
    }
    (0..m).filter(|&x| !entered[component[x]]).collect()
}

/// Smallest set that beats every outsider; the top component of the
/// beats-or-ties graph.
pub fn smith_set(rel: &PreferenceRelation) -> ChoiceSet {
    ChoiceSet::new(source_components(rel.m(), |x, y| rel.beats_or_ties(x, y)), Concept::Smith)
}

/// Union of the strict-beat components nobody outside beats.
pub fn schwartz_set(rel: &PreferenceRelation) -> ChoiceSet {
    ChoiceSet::new(source_components(rel.m(), |x, y| rel.beats(x, y)), Concept::Schwartz)
}

/// Alternatives that reach every other one along beats-or-ties paths.
pub fn top_cycle(rel: &PreferenceRelation) -> ChoiceSet {
    let m = rel.m();
    let reaches_all = |start: usize| {
        let mut seen = vec![false; m];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for y in 0..m {
                if !seen[y] && rel.beats_or_ties(x, y) {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == m
    };
    ChoiceSet::new((0..m).filter(|&x| reaches_all(x)).collect(), Concept::TopCycle)
}

/// `x` beats `y` and everything `y` beats. Tournaments only.
pub fn covers(rel: &PreferenceRelation, x: usize, y: usize) -> Result<bool> {
    if !rel.is_tournament() {
        return Err(Error::TiesPresent);
    }
    let m = rel.m();
    if x >= m {
        return Err(Error::IndexOutOfRange(x));
    }
    if y >= m {
        return Err(Error::IndexOutOfRange(y));
    }
    Ok(x != y && rel.beats(x, y) && (0..m).all(|z| !rel.beats(y, z) || rel.beats(x, z)))
}

/// Alternatives no one covers. Tournaments only.
pub fn uncovered_set(rel: &PreferenceRelation) -> Result<ChoiceSet> {
    if !rel.is_tournament() {
        return Err(Error::TiesPresent);
    }
    let m = rel.m();
    let mut members = Vec::new();
    for y in 0..m {
        if !(0..m).any(|x| covers(rel, x, y).expect("tournament")) {
            members.push(y);
        }
    }
    Ok(ChoiceSet::new(members, Concept::Uncovered))
}

/// Copeland scores `wins + α · ties` and their maximisers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopelandResult {
    pub alpha: Rational,
    pub scores: Vec<Rational>,
    pub winners: ChoiceSet,
}

pub fn copeland(rel: &PreferenceRelation, config: &ScoringConfig) -> CopelandResult {
    let m = rel.m();
    let alpha = config.alpha();
    let scores: Vec<Rational> = (0..m)
        .map(|x| {
            let wins = (0..m).filter(|&y| rel.beats(x, y)).count() as i64;
            let ties = (0..m).filter(|&y| y != x && rel.ties(x, y)).count() as i64;
            Rational::from_integer(wins) + alpha * ties
        })
        .collect();
    let best = *scores.iter().max().expect("m >= 2");
    let winners = (0..m).filter(|&x| scores[x] == best).collect();
    CopelandResult {
        alpha,
        scores,
        winners: ChoiceSet::new(winners, Concept::Copeland),
    }
}
