//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export takes file text in the CLI formats and returns a JSON
//! document; rationals are `"num/den"` strings as everywhere else.

use dsr_core::io::{self, report};
use dsr_core::majority::tally;
use dsr_core::scoring::{compute_scores, ScoringConfig};
use dsr_core::{PreferenceRelation, Rational};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest number of steps accepted by [`sweep`].
pub const MAX_STEPS: u32 = 200;

fn config(alpha: &str) -> Result<ScoringConfig, String> {
    alpha.trim().parse().map_err(|e: dsr_core::Error| e.to_string())
}

fn document(rel: &PreferenceRelation, alpha: &str, tally: Option<&dsr_core::majority::PairwiseTally>) -> Result<String, String> {
    let table = compute_scores(rel, &config(alpha)?);
    let mut doc = report::scores_json(rel, &table, tally);
    let cmp = report::Comparison::new(rel, &config(alpha)?);
    doc["comparison"] = report::comparison_json(rel, &cmp);
    Ok(doc.to_string())
}

/// Scores a ballot file at tie value `alpha`.
pub fn rank(ballots: &str, alpha: &str) -> Result<String, String> {
    let parsed = io::parse_ballots(ballots).map_err(|e| e.to_string())?;
    let t = tally(&parsed.to_profile());
    document(&t.majority_relation(), alpha, Some(&t))
}

/// Scores a matrix file at tie value `alpha`.
pub fn score(matrix: &str, alpha: &str) -> Result<String, String> {
    let rel = io::parse_matrix(matrix).map_err(|e| e.to_string())?;
    document(&rel, alpha, None)
}

fn relation(text: &str) -> Result<PreferenceRelation, String> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("alternatives") {
        let b = io::parse_ballots(text).map_err(|e| e.to_string())?;
        Ok(tally(&b.to_profile()).majority_relation())
    } else {
        io::parse_matrix(text).map_err(|e| e.to_string())
    }
}

/// Totals at α = 0, 1/steps, ..., 1 for ballots or a matrix. Partitions do
/// not depend on α, so the table is computed once and revalued.
pub fn sweep(text: &str, steps: u32) -> Result<String, String> {
    if steps == 0 || steps > MAX_STEPS {
        return Err(format!("steps must be between 1 and {MAX_STEPS}"));
    }
    let rel = relation(text)?;
    let base = compute_scores(&rel, &ScoringConfig::default());
    let points: Vec<Value> = (0..=steps)
        .map(|k| {
            let alpha = Rational::new(i64::from(k), i64::from(steps));
            let table = base.with_alpha(&ScoringConfig::new(alpha).expect("grid point in [0, 1]"));
            let winners = rel.alternatives().labels(table.winners().members());
            json!({
                "alpha": report::rational(&alpha),
                "alpha_float": k as f64 / steps as f64,
                "totals": table.totals().iter().map(report::rational).collect::<Vec<_>>(),
                "totals_float": table.totals().iter().map(|t| *t.numer() as f64 / *t.denom() as f64).collect::<Vec<_>>(),
                "winners": winners,
            })
        })
        .collect();
    Ok(json!({ "alternatives": rel.alternatives().names(), "points": points }).to_string())
}

#[wasm_bindgen]
pub fn rank_ballots(ballots: &str, alpha: &str) -> Result<String, JsValue> {
    rank(ballots, alpha).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn score_matrix(matrix: &str, alpha: &str) -> Result<String, JsValue> {
    score(matrix, alpha).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn alpha_sweep(text: &str, steps: u32) -> Result<String, JsValue> {
    sweep(text, steps).map_err(|e| JsValue::from_str(&e))
}
