//! Exact verification engine for the algebraic skeleton of a Siegel-zero
//! elimination argument for Rankin-Selberg L-functions of symmetric-square
//! lifts from GL(2).
//!
//! The crate is organised bottom-up:
//!
//! - [`repalg`]: formal calculus of unramified automorphic symbols (character
//!   lattice, atoms, isobaric sums, Clebsch-Gordan products, plethysm).
//! - [`satake`]: exact Laurent polynomials in Satake variables with
//!   cyclotomic-integer coefficients, and numeric evaluation.
//! - [`dseries`]: the degree-324 auxiliary series, its sum-of-squares
//!   coefficient identity, and positivity scans on newform data.
//! - [`poles`]: pole-order bookkeeping at `s = 1` under three-valued equality.
//! - [`casebook`]: the eleven-case ledger and the plethysm bridge.
//! - [`ingest`]: local data for real newforms and characters.
//! - [`report`]: machine-readable verdict reports shared with the CLI.

pub mod casebook;
pub mod dseries;
pub mod exec;
pub mod ingest;
pub mod poles;
pub mod repalg;
pub mod report;
pub mod satake;
pub mod tri;

pub use exec::Exec;
pub use tri::Tri;

/// Tolerance used by every floating-point comparison in the crate.
pub const TOLERANCE: f64 = 1e-9;
