//! Formal calculus of unramified automorphic symbols.
//!
//! Characters live in a finitely presented abelian group ([`CharGroup`]);
//! atoms are twisted symmetric powers of the two GL(2) bases or opaque
//! dihedral GL(2) symbols; a [`VirtualRep`] is a multiset of L-factors.
//! Everything that depends on global facts goes through a [`Context`].

mod atom;
mod cg;
mod character;
mod context;
pub mod expr;
mod hypotheses;
pub mod lattice;
mod virtual_rep;

pub use atom::{render_atom, Base, Core, Factor, OpaqueLabel, RepAtom};
pub use cg::{cg_expand, plethysm_sym2, sym2_weights, sym_weights, Weight};
pub use character::{standard_relations, CharGroup, Character, Gen, NGEN};
pub use context::{Context, NormalOptions, Stabilizer};
pub use hypotheses::{BaseType, HypothesisError, Hypotheses};
pub use virtual_rep::{Delta, VirtualRep};
