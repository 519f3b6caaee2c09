//! Workbench for finite-group endomorphism semigroups.
//!
//! The crate builds Miller-Moreno groups M(p, q, v) from residue-field data,
//! enumerates endomorphism monoids of small Cayley-table groups by brute
//! force, models the proper endomorphisms in closed pair form, decides the
//! eight-property endomorphism characterization of Schmidt groups, and tests
//! finite semigroups for isomorphism. Everything is exact, deterministic,
//! and desk-scale; independent routes to the same facts are cross-checked
//! against each other throughout the test suite.

pub mod cayley;
pub mod config;
pub mod construct;
pub mod endo;
pub mod group;
pub mod num;
pub mod poly;
pub mod schmidt;
pub mod semigroup;
pub mod symbolic;

pub(crate) mod par;

pub use config::RunConfig;
