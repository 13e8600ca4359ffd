//! Text and JSON renderings of score tables, partition analyses,
//! comparisons and suite reports. Rationals always appear in JSON as exact
//! `"num/den"` strings.

use serde_json::{json, Value};

use crate::majority::PairwiseTally;
use crate::model::{AlternativeSet, ChoiceSet, PreferenceRelation};
use crate::oracle::SuiteReport;
use crate::partitions::{analyse_pivot, PivotAnalysis, SpecificPartition};
use crate::scoring::{ScoreTable, ScoringConfig};
use crate::solutions::{self, CopelandResult};
use crate::Rational;

/// `"3/1"`, `"1/2"`.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn labels(alts: &AlternativeSet, set: &[usize]) -> Value {
    json!(alts.labels(set))
}

fn partition_json(alts: &AlternativeSet, p: Option<&SpecificPartition>) -> Value {
    match p {
        None => Value::Null,
        Some(p) => json!({
            "kind": p.kind(),
            "blocks": p.blocks().iter().map(|b| labels(alts, b)).collect::<Vec<_>>(),
            "rendered": p.render(alts),
        }),
    }
}

fn named_values(alts: &AlternativeSet, values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .enumerate()
            .map(|(x, v)| json!({ "alternative": alts.name(x), "value": rational(v) }))
            .collect(),
    )
}

/// Full scoring result: relation, partitions, per-pivot scores, totals,
/// ranking and winners.
pub fn scores_json(rel: &PreferenceRelation, table: &ScoreTable, tally: Option<&PairwiseTally>) -> Value {
    let alts = rel.alternatives();
    let m = rel.m();
    let pivots: Vec<Value> = (0..m)
        .map(|z| {
            json!({
                "pivot": alts.name(z),
                "partition": partition_json(alts, table.partition(z)),
                "scores": named_values(alts, &table.column(z)),
            })
        })
        .collect();
    let ranking: Vec<Value> = table
        .social_ranking()
        .tiers()
        .iter()
        .map(|t| labels(alts, t))
        .collect();
    let mut doc = json!({
        "alternatives": alts.names(),
        "alpha": rational(&table.alpha()),
        "relation": {
            "matrix": rel.to_matrix(),
            "pairs": rel.to_string(),
            "tournament": rel.is_tournament(),
        },
        "pivots": pivots,
        "totals": named_values(alts, table.totals()),
        "ranking": ranking,
        "winners": labels(alts, table.winners().members()),
    });
    if let Some(t) = tally {
        doc["voters"] = json!(t.voters());
        doc["pairwise_wins"] = json!(t.to_matrix());
    }
    doc
}

fn table_text(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([header[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn set_text(alts: &AlternativeSet, set: &ChoiceSet) -> String {
    alts.format_set(set.members())
}

pub fn scores_text(rel: &PreferenceRelation, table: &ScoreTable, tally: Option<&PairwiseTally>) -> String {
    let alts = rel.alternatives();
    let m = rel.m();
    let mut out = String::new();
    if let Some(t) = tally {
        out.push_str(&format!("voters: {}\n", t.voters()));
    }
    out.push_str(&format!("alternatives: {}\n", alts.names().join(", ")));
    out.push_str(&format!("tie value: {}\n", table.alpha()));
    out.push_str(&format!("relation: {rel}\n\n"));

    let mut header = vec!["pivot".to_string(), "partition".to_string()];
    header.extend(alts.names().iter().cloned());
    let rows: Vec<Vec<String>> = (0..m)
        .map(|z| {
            let mut row = vec![
                alts.name(z).to_string(),
                table
                    .partition(z)
                    .map_or("none".to_string(), |p| format!("{} {}", p.render(alts), p.kind())),
            ];
            row.extend(table.column(z).iter().map(ToString::to_string));
            row
        })
        .collect();
    out.push_str(&table_text(&header, &rows));
    let totals: Vec<String> = (0..m)
        .map(|x| format!("{}={}", alts.name(x), table.total(x)))
        .collect();
    out.push_str(&format!("\ntotals: {}\n", totals.join(" ")));
    out.push_str(&format!("ranking: {}\n", table.social_ranking()));
    out.push_str(&format!("winners: {}\n", set_text(alts, &table.winners())));
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Verdicts that only make sense when someone loses to the pivot.
fn if_below(a: &PivotAnalysis, b: bool) -> String {
    if a.neighborhoods.below.is_empty() {
        "-".to_string()
    } else {
        yes_no(b)
    }
}

const PARTITION_ROWS: [&str; 11] = [
    "above or tied",
    "pivot",
    "below",
    "below non-empty",
    "upper ⪰ below",
    "each upper beats one below",
    "bipartition",
    "above non-empty",
    "some upper beats all below",
    "tripartition",
    "partition",
];

fn partition_cells(alts: &AlternativeSet, a: &PivotAnalysis) -> [String; 11] {
    let nb = &a.neighborhoods;
    [
        alts.format_set(&nb.above_or_tied()),
        alts.format_set(&[nb.pivot]),
        alts.format_set(&nb.below),
        yes_no(!nb.below.is_empty()),
        if_below(a, a.upper_weakly_dominates),
        if_below(a, a.upper_each_beats_one),
        yes_no(a.bipartition_possible()),
        yes_no(!nb.above.is_empty()),
        if_below(a, a.some_dominator),
        yes_no(a.tripartition_possible()),
        a.chosen().map_or("none".to_string(), |p| p.render(alts)),
    ]
}

/// One column per pivot, one row per divisibility check.
pub fn partitions_text(rel: &PreferenceRelation) -> String {
    let alts = rel.alternatives();
    let analyses: Vec<PivotAnalysis> = (0..rel.m()).map(|z| analyse_pivot(rel, z)).collect();
    let cells: Vec<[String; 11]> = analyses.iter().map(|a| partition_cells(alts, a)).collect();
    let mut header = vec![String::new()];
    header.extend(alts.names().iter().cloned());
    let rows: Vec<Vec<String>> = PARTITION_ROWS
        .iter()
        .enumerate()
        .map(|(r, name)| {
            let mut row = vec![name.to_string()];
            row.extend(cells.iter().map(|c| c[r].clone()));
            row
        })
        .collect();
    table_text(&header, &rows)
}

pub fn partitions_json(rel: &PreferenceRelation) -> Value {
    let alts = rel.alternatives();
    let pivots: Vec<Value> = (0..rel.m())
        .map(|z| {
            let a = analyse_pivot(rel, z);
            let nb = &a.neighborhoods;
            let below = !nb.below.is_empty();
            json!({
                "pivot": alts.name(z),
                "above": labels(alts, &nb.above),
                "tied": labels(alts, &nb.tied),
                "below": labels(alts, &nb.below),
                "upper_weakly_dominates": below.then_some(a.upper_weakly_dominates),
                "upper_each_beats_one": below.then_some(a.upper_each_beats_one),
                "some_upper_beats_all_below": below.then_some(a.some_dominator),
                "bipartition": a.bipartition_possible(),
                "tripartition": a.tripartition_possible(),
                "candidates": a.candidates.iter().map(|p| partition_json(alts, Some(p))).collect::<Vec<_>>(),
                "partition": partition_json(alts, a.chosen()),
            })
        })
        .collect();
    json!({ "alternatives": alts.names(), "pivots": pivots })
}

/// Winners of the scoring rule next to the classical solution concepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub table: ScoreTable,
    pub copeland: CopelandResult,
    /// `None` when the relation has ties.
    pub uncovered: Option<ChoiceSet>,
    pub smith: ChoiceSet,
    pub top_cycle: ChoiceSet,
    pub schwartz: ChoiceSet,
    pub condorcet_winner: Option<usize>,
    pub condorcet_loser: Option<usize>,
}

impl Comparison {
    pub fn new(rel: &PreferenceRelation, config: &ScoringConfig) -> Self {
        Comparison {
            table: crate::scoring::compute_scores(rel, config),
            copeland: solutions::copeland(rel, config),
            uncovered: solutions::uncovered_set(rel).ok(),
            smith: solutions::smith_set(rel),
            top_cycle: solutions::top_cycle(rel),
            schwartz: solutions::schwartz_set(rel),
            condorcet_winner: solutions::condorcet_winner(rel),
            condorcet_loser: solutions::condorcet_loser(rel),
        }
    }

    /// `(name, holds)` for each containment of the winner set; uncovered-set
    /// containment is `None` outside tournaments.
    pub fn containments(&self) -> Vec<(&'static str, Option<bool>)> {
        let w = self.table.winners();
        vec![
            ("winners ⊆ Copeland", Some(w.is_subset_of(&self.copeland.winners))),
            ("winners ⊆ uncovered set", self.uncovered.as_ref().map(|u| w.is_subset_of(u))),
            ("winners ⊆ Smith set", Some(w.is_subset_of(&self.smith))),
            ("winners ⊆ top cycle", Some(w.is_subset_of(&self.top_cycle))),
            ("winners ⊆ Schwartz set", Some(w.is_subset_of(&self.schwartz))),
        ]
    }
}

pub fn comparison_json(rel: &PreferenceRelation, c: &Comparison) -> Value {
    let alts = rel.alternatives();
    let containments: serde_json::Map<String, Value> = c
        .containments()
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "alternatives": alts.names(),
        "alpha": rational(&c.table.alpha()),
        "tournament": rel.is_tournament(),
        "dsr": {
            "totals": named_values(alts, c.table.totals()),
            "winners": labels(alts, c.table.winners().members()),
        },
        "copeland": {
            "alpha": rational(&c.copeland.alpha),
            "scores": named_values(alts, &c.copeland.scores),
            "winners": labels(alts, c.copeland.winners.members()),
        },
        "uncovered_set": c.uncovered.as_ref().map(|u| labels(alts, u.members())),
        "smith_set": labels(alts, c.smith.members()),
        "top_cycle": labels(alts, c.top_cycle.members()),
        "schwartz_set": labels(alts, c.schwartz.members()),
        "condorcet_winner": c.condorcet_winner.map(|x| alts.name(x)),
        "condorcet_loser": c.condorcet_loser.map(|x| alts.name(x)),
        "containments": containments,
    })
}

pub fn comparison_text(rel: &PreferenceRelation, c: &Comparison) -> String {
    let alts = rel.alternatives();
    let values = |v: &[Rational]| {
        v.iter()
            .enumerate()
            .map(|(x, s)| format!("{}={s}", alts.name(x)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let name = |x: Option<usize>| x.map_or("none".to_string(), |x| alts.name(x).to_string());
    let mut out = format!("tie value: {}\n", c.table.alpha());
    out.push_str(&format!(
        "DSR scores: {}\nDSR winners: {}\n",
        values(c.table.totals()),
        set_text(alts, &c.table.winners())
    ));
    out.push_str(&format!(
        "Copeland scores: {}\nCopeland winners: {}\n",
        values(&c.copeland.scores),
        set_text(alts, &c.copeland.winners)
    ));
    out.push_str(&format!(
        "uncovered set: {}\n",
        c.uncovered
            .as_ref()
            .map_or("n/a (relation has ties)".to_string(), |u| set_text(alts, u))
    ));
    out.push_str(&format!("Smith set: {}\n", set_text(alts, &c.smith)));
    out.push_str(&format!("top cycle: {}\n", set_text(alts, &c.top_cycle)));
    out.push_str(&format!("Schwartz set: {}\n", set_text(alts, &c.schwartz)));
    out.push_str(&format!("Condorcet winner: {}\n", name(c.condorcet_winner)));
    out.push_str(&format!("Condorcet loser: {}\n", name(c.condorcet_loser)));
    for (k, v) in c.containments() {
        let v = v.map_or("n/a", |b| if b { "yes" } else { "no" });
        out.push_str(&format!("{k}: {v}\n"));
    }
    out
}

pub fn suite_json(report: &SuiteReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.check.name(),
                "description": c.check.description(),
                "asserted": c.check.asserted(),
                "checked": c.checked,
                "failed": c.failed,
                "counterexample": c.first_counterexample.as_ref().map(|x| json!({
                    "instance": x.instance,
                    "detail": x.detail,
                    "data": x.data,
                })),
            })
        })
        .collect();
    json!({
        "spec": report.spec,
        "seed": report.seed,
        "alpha": rational(&report.alpha),
        "instances": report.instances,
        "passed": report.passed(),
        "checks": checks,
    })
}

pub fn suite_text(report: &SuiteReport) -> String {
    let mut out = format!("{}\n", report.spec);
    if let Some(seed) = report.seed {
        out.push_str(&format!("seed: {seed}\n"));
    }
    out.push_str(&format!("tie value: {}\ninstances: {}\n\n", report.alpha, report.instances));
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .filter(|c| c.checked > 0)
        .map(|c| {
            let status = match (c.failed, c.check.asserted()) {
                (0, _) => "ok",
                (_, true) => "FAIL",
                (_, false) => "violations (reported only)",
            };
            vec![
                c.check.name().to_string(),
                c.checked.to_string(),
                c.failed.to_string(),
                status.to_string(),
            ]
        })
        .collect();
    let header: Vec<String> = ["check", "checked", "failed", "status"].map(String::from).to_vec();
    out.push_str(&table_text(&header, &rows));
    for c in &report.checks {
        if let Some(x) = &c.first_counterexample {
            out.push_str(&format!(
                "\nfirst counterexample for {} (instance {}): {}\n{}",
                c.check.name(),
                x.instance,
                x.detail,
                x.data
            ));
        }
    }
    out.push_str(&format!("\nresult: {}\n", if report.passed() { "all asserted checks passed" } else { "FAILED" }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::majority::tally;
    use crate::scoring::compute_scores;

    #[test]
    fn rationals_are_strings() {
        assert_eq!(rational(&Rational::from_integer(4)), "4/1");
        assert_eq!(rational(&Rational::new(2, 4)), "1/2");
    }

    #[test]
    fn scores_document() {
        let p = fixtures::three_voter_cycle();
        let t = tally(&p);
        let rel = t.majority_relation();
        let table = compute_scores(&rel, &ScoringConfig::default());
        let doc = scores_json(&rel, &table, Some(&t));
        assert_eq!(doc["winners"], json!(["z"]));
        assert_eq!(doc["totals"][2], json!({"alternative": "z", "value": "4/1"}));
        assert_eq!(doc["pivots"][3]["partition"]["kind"], json!("k4"));
        assert_eq!(doc["pivots"][0]["partition"], Value::Null);
        assert_eq!(doc["ranking"], json!([["z"], ["y"], ["u"], ["x"]]));
        assert_eq!(doc["voters"], json!(3));

        let text = scores_text(&rel, &table, Some(&t));
        assert!(text.contains("ranking: z ≻ y ≻ u ≻ x"));
        assert!(text.contains("winners: {z}"));
    }

    #[test]
    fn partition_table() {
        let rel = tally(&fixtures::three_voter_cycle()).majority_relation();
        let text = partitions_text(&rel);
        assert!(text.contains("⟨{y,z}, {x,u}⟩_z"));
        assert!(text.contains("⟨{y,z}, {u}, {x}⟩_u"));
        let doc = partitions_json(&rel);
        assert_eq!(doc["pivots"][0]["partition"], Value::Null);
        assert_eq!(doc["pivots"][2]["partition"]["kind"], json!("k3"));
    }

    #[test]
    fn comparison_of_four_tournament() {
        let rel = fixtures::four_tournament();
        let c = Comparison::new(&rel, &ScoringConfig::default());
        let doc = comparison_json(&rel, &c);
        assert_eq!(doc["dsr"]["winners"], json!(["b"]));
        assert_eq!(doc["copeland"]["winners"], json!(["a", "b"]));
        assert_eq!(doc["uncovered_set"], json!(["a", "b", "d"]));
        assert_eq!(doc["containments"]["winners ⊆ Copeland"], json!(true));
        assert_eq!(doc["containments"]["winners ⊆ uncovered set"], json!(true));

        let tied = fixtures::tied_four();
        let c = Comparison::new(&tied, &ScoringConfig::default());
        assert!(comparison_text(&tied, &c).contains("n/a (relation has ties)"));
    }
}
