//! Ballot and matrix file formats, and report rendering.
//!
//! Ballot files start with a roster line and list one ballot group per line:
//!
//! ```text
//! alternatives: x,y,z,u
//! # count: best > ... > worst, with `=` joining tied alternatives
//! 2: x > y=z > u
//! 1: z > u > x > y
//! ```
//!
//! Approval ballots use `COUNT: approve {a,b}` instead; one file holds one
//! style only.
//!
//! Matrix files give `m`, an optional `labels:` line, then `m` rows of
//! `1` / `-1` / `0` entries. Without labels the roster is `x1 .. xm`.

pub mod report;

use crate::error::{Error, Result};
use crate::model::{AlternativeSet, ApprovalProfile, PreferenceRelation, Profile, WeakOrder};

/// Contents of a ballot file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ballots {
    Ranked(Profile),
    Approval(ApprovalProfile),
}

impl Ballots {
    pub fn alternatives(&self) -> &AlternativeSet {
        match self {
            Ballots::Ranked(p) => p.alternatives(),
            Ballots::Approval(a) => a.alternatives(),
        }
    }

    /// Approval ballots become two-tier weak orders.
    pub fn to_profile(&self) -> Profile {
        match self {
            Ballots::Ranked(p) => p.clone(),
            Ballots::Approval(a) => a.to_profile(),
        }
    }
}

/// Lines with comments stripped, paired with 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn labels(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).collect()
}

enum Line {
    Ranked(WeakOrder, u32),
    Approval(Vec<usize>, u32),
}

fn parse_ballot_line(alts: &AlternativeSet, line: &str) -> Result<Line> {
    let (count, body) = line
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected `COUNT: ballot`, got `{line}`")))?;
    let count: u32 = count
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid ballot count `{}`", count.trim())))?;
    if count == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let body = body.trim();
    if let Some(set) = body.strip_prefix("approve") {
        let inner = set
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected `approve {{a,b}}`, got `{body}`")))?;
        let approved = if inner.trim().is_empty() {
            Vec::new()
        } else {
            labels(inner)
                .into_iter()
                .map(|n| alts.lookup(n))
                .collect::<Result<Vec<_>>>()?
        };
        return Ok(Line::Approval(approved, count));
    }
    let tiers: Vec<Vec<&str>> = body
        .split('>')
        .map(|group| group.split('=').map(str::trim).collect())
        .collect();
    if tiers.iter().flatten().any(|n| n.is_empty()) {
        return Err(Error::Parse(format!("empty alternative in ballot `{body}`")));
    }
    Ok(Line::Ranked(WeakOrder::from_labels(alts.clone(), &tiers)?, count))
}

pub fn parse_ballots(text: &str) -> Result<Ballots> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty ballot file".into()))?;
    let roster = header
        .strip_prefix("alternatives:")
        .ok_or_else(|| Error::Parse("expected `alternatives: a,b,...` header".into()).at_line(header_line))?;
    let alts = AlternativeSet::new(labels(roster)).map_err(|e| e.at_line(header_line))?;

    let mut ranked = Vec::new();
    let mut approvals = Vec::new();
    for (n, line) in lines {
        match parse_ballot_line(&alts, line).map_err(|e| e.at_line(n))? {
            Line::Ranked(w, k) => {
                if !approvals.is_empty() {
                    return Err(Error::MixedBallotStyles.at_line(n));
                }
                ranked.push((w, k));
            }
            Line::Approval(a, k) => {
                if !ranked.is_empty() {
                    return Err(Error::MixedBallotStyles.at_line(n));
                }
                approvals.push((a, k));
            }
        }
    }
    if !approvals.is_empty() {
        Ok(Ballots::Approval(ApprovalProfile::new(alts, approvals)?))
    } else {
        Ok(Ballots::Ranked(Profile::new(alts, ranked)?))
    }
}

/// Ballot-file text that parses back to `profile`.
pub fn render_profile(profile: &Profile) -> String {
    let alts = profile.alternatives();
    let mut out = format!("alternatives: {}\n", alts.names().join(","));
    for (order, count) in profile.ballots() {
        let tiers: Vec<String> = order.tiers().iter().map(|t| alts.labels(t).join("=")).collect();
        out.push_str(&format!("{count}: {}\n", tiers.join(" > ")));
    }
    out
}

pub fn render_approvals(profile: &ApprovalProfile) -> String {
    let alts = profile.alternatives();
    let mut out = format!("alternatives: {}\n", alts.names().join(","));
    for (set, count) in profile.ballots() {
        out.push_str(&format!("{count}: approve {}\n", alts.format_set(set)));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<PreferenceRelation> {
    let mut lines = significant_lines(text).peekable();
    let (size_line, size) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let m: usize = size
        .parse()
        .map_err(|_| Error::Parse(format!("expected the alternative count, got `{size}`")).at_line(size_line))?;
    if m < 2 {
        return Err(Error::TooFewAlternatives(m).at_line(size_line));
    }
    let alts = match lines.peek() {
        Some(&(n, line)) if line.starts_with("labels:") => {
            lines.next();
            let names: Vec<&str> = line["labels:".len()..].split_whitespace().collect();
            if names.len() != m {
                return Err(Error::Parse(format!("expected {m} labels, got {}", names.len())).at_line(n));
            }
            AlternativeSet::new(names).map_err(|e| e.at_line(n))?
        }
        _ => AlternativeSet::numbered(m)?,
    };
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(m);
    for (n, line) in lines {
        if rows.len() == m {
            return Err(Error::Parse(format!("more than {m} matrix rows")).at_line(n));
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("invalid entry `{t}`"))))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| e.at_line(n))?;
        if row.len() != m {
            return Err(Error::Dimension { rows: m, cols: row.len() }.at_line(n));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(Error::Dimension { rows: rows.len(), cols: m });
    }
    PreferenceRelation::from_matrix(alts, &rows)
}

/// Matrix-file text for `rel`; the labels line is written unless the roster
/// is the default `x1 .. xm`.
pub fn render_matrix(rel: &PreferenceRelation) -> String {
    let m = rel.m();
    let mut out = format!("{m}\n");
    let default = AlternativeSet::numbered(m).expect("m >= 2");
    if rel.alternatives() != &default {
        out.push_str(&format!("labels: {}\n", rel.alternatives().names().join(" ")));
    }
    for row in rel.to_matrix() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
