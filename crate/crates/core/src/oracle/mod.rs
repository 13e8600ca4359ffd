//! Brute-force reference implementations, instance generators and the
//! property suite built on them.
//!
//! The reference code in [`brute`] shares nothing with the production
//! partition, scoring and solution modules beyond the relation type, so
//! agreement between the two is meaningful.

pub mod brute;
pub mod enumerate;
pub mod suite;

pub use brute::{
    brute_schwartz, brute_smith, clause_partitions, dominating_sets, enumerate_dsrps, oracle_psi,
    Clause, GeneralPartitions,
};
pub use enumerate::{
    enumerate_tournaments, enumerate_weak_orders, random_permutation, random_profiles,
    random_relation, random_weak_order, BallotStyle, RandomSpec,
};
pub use suite::{
    check_instances, check_theorem_suite, instances, Check, CheckSummary, Counterexample,
    EnumerationSpec, Instance, Mode, SuiteReport,
};
