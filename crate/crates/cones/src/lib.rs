//! An exact-arithmetic workbench for conical commutative monoids.
//!
//! The crate provides several interchangeable monoid backends -- complete
//! Cayley tables, finitely presented commutative monoids with a
//! completion-based word problem, finitely generated rational cones, and
//! the monoid of bounded lower sets of the non-negative rationals --
//! together with the classical predicates (conicality, cancellativity,
//! separativity, refinement, torsion-freeness, quasi-divisibility, ...),
//! a congruence engine with the canonical quotients, amalgamated-sum and
//! extension constructions, and exact verifiers for a family of worked
//! examples and counterexamples.
//!
//! Start with the runnable examples in `examples/`, one per capability,
//! or the `cones` binary which drives everything from monoid description
//! files.

pub mod amalgam;
pub mod backend;
pub mod cli;
pub mod corpus;
pub mod decision;
pub mod equations;
pub mod error;
pub mod extension;
pub mod finite;
pub mod format;
pub mod lambda;
pub mod predicates;
pub mod presentation;
pub mod pset;
pub mod qcone;
pub mod report;
pub mod sqrt2;

pub use backend::{DecidableOrder, MonoidBackend};
pub use decision::{Checked, Decision};
pub use error::{Error, Result};
pub use finite::{Congruence, FiniteMonoid};
pub use pset::PSet;
