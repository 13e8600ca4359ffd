//! Partition-based scoring of pairwise preference relations.
//!
//! A [`PreferenceRelation`] over an [`AlternativeSet`] is scored by cutting
//! the roster around every alternative ([`partitions::seek_partition`]) and
//! summing the points each alternative earns from those cuts
//! ([`scoring::compute_scores`]). Ties are worth a configurable rational
//! `α ∈ [0, 1]`. Classical tournament solutions live in [`solutions`] and
//! brute-force cross-checks in [`oracle`].

pub mod error;
pub mod fixtures;
pub mod io;
pub mod majority;
pub mod model;
pub mod oracle;
pub mod partitions;
pub mod scoring;
pub mod solutions;

pub use error::{Error, Result};
pub use model::{
    AlternativeSet, ApprovalProfile, ChoiceSet, Concept, Outcome, PreferenceRelation, Profile,
    WeakOrder,
};

/// Exact rational number used for tie values, shares and scores.
pub type Rational = num_rational::Ratio<i64>;
