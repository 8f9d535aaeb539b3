//! Finite-model workbench for topological spaces carrying an ideal and a
//! per-point scope assignment.
//!
//! The crate represents small finite spaces extensionally (subsets as
//! bitmasks, topologies as explicit families), implements the closure and
//! interior operators derived from the ideal and the scope function, derives
//! the refined topologies those operators induce, classifies subsets and maps,
//! checks a registry of algebraic laws across enumerated space families, and
//! searches for witnesses and counterexamples.

pub mod analysis;
pub mod classify;
pub mod continuity;
pub mod enumerate;
pub mod fixtures;
pub mod io;
pub mod laws;
pub mod ops;
pub mod rng;
pub mod search;
pub mod set;
pub mod space;
pub mod topologies;

pub use set::{PointSet, SetFamily, Universe};
pub use space::{
    AxiomViolation, Component, FiniteTopology, Ideal, IdealAuraSpace, ScopeFunction, UnknownPoint,
    ValidationError,
};
