//! Exact Schur-functor combinatorics and characteristic-zero sheaf
//! cohomology on Grassmannians.
//!
//! The crate is organized in four layers, each usable on its own:
//!
//! * [`partition`] — canonical integer partitions, the lexicographic and
//!   dominance orders, box enumeration;
//! * [`schur`] — Littlewood-Richardson products, Pieri expansions with
//!   rank truncation, exact Schur-module dimensions;
//! * [`mod@bott`] — cohomology tables of twisted Schur bundles on
//!   `Grass(l, m)` via the rho-shift algorithm with the Kempf dominance
//!   shortcut;
//! * [`tilting`] — verifiers for the tilting properties of the bundle
//!   assembled from products of exterior powers of the tautological
//!   quotient, emitting machine-readable [`report`]s.
//!
//! All arithmetic is exact (arbitrary-precision integers throughout).
//! Cohomology verdicts are valid in characteristic zero only; reports say
//! so explicitly.

pub mod bott;
mod error;
pub mod partition;
pub mod report;
pub mod schur;
pub mod tilting;

pub use bott::{
    bott, bundle_cohomology, projective_line_bundle_oracle, serre_dual_weight, CohomologyTable,
    DominantWeight, GLWeight, GrassContext, TwistedSchurBundle,
};
pub use error::Error;
pub use partition::{partitions_of_size, Dominance, Partition, PartitionBox};
pub use report::{AggregateChecks, AggregateReport, Verdict, VerificationReport, Witness};
pub use schur::{
    exterior_product_character, lr_coefficient_oracle, lr_expand, pieri_column, pieri_row,
    schur_dim, VirtualSchurSum,
};
pub use tilting::{
    dual_summand_decompose, enumerate_summands, example_grass24_analysis, kapranov_decomposition,
    run_all_checks, run_indexed_jobs, summand_character, summand_rank, verify_generation_order,
    verify_prop3, verify_prop3_sweep, verify_tilting_ext, ExteriorSequence,
    CHARACTERISTIC_ZERO_DISCLAIMER,
};
