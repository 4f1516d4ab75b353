//! Weight-scaling approximation schemes for subset selection problems.
//!
//! A subset selection problem has a ground set of items with positive
//! integer weights and a feasibility structure; the goal is a feasible
//! subset of least or greatest total weight. If the problem has an exact
//! solver whose running time is polynomial in the total weight, and a
//! constant-ratio approximation, [`fptas`] combines the two into a
//! (1 +/- epsilon)-approximation whose exact-solver call only ever sees a
//! total weight of O(n^2 / epsilon).
//!
//! [`knapsack`] instantiates the scheme for the Minimum Knapsack Problem
//! (covering constraint) and the Maximum Knapsack Problem (packing
//! constraint). [`format`], [`generate`] and [`compare`] hold the instance
//! file format, the seeded generator and the counted-work comparison used by
//! the `fptas` command line tool.

pub mod compare;
pub mod error;
pub mod format;
pub mod generate;
pub mod instance;
pub mod knapsack;
pub mod oracle;
pub mod rational;
pub mod scaling;
pub mod selftest;

pub use compare::{bench_compare, write_csv, BenchConfig, MetricsRow, WorkMetrics};
pub use error::{Error, Result};
pub use format::{parse_instance, serialize_instance, AnyInstance, ProblemKind};
pub use generate::{generate_instance, small_corpus, GeneratorConfig};
pub use instance::{ScalingSummary, Sense, SolutionReport, Structure, SubsetInstance, Work};
pub use oracle::brute_force;
pub use rational::Rational;
pub use scaling::{
    check_ranges, compute_scale, fptas, scale_weights_max, scale_weights_min, scaled_weight_bound,
    verify_guarantee, within_guarantee, ScaledInstance, ScalingParameters, SolveFn, SolverHooks,
};
