//! Exact and numeric unramified local coefficients.
//!
//! `a_X(v^l)` is a Laurent polynomial in the Satake parameters of `pi`,
//! `pi'` and one unit-modulus variable per character generator, with
//! coefficients in `Z[zeta_12]`. Identities between such polynomials are
//! decided exactly; [`eval`] gives numeric values at a [`SatakePoint`].

mod cyclotomic;
mod laurent;
mod point;
mod space;

pub use cyclotomic::Cyc;
pub use laurent::{poly_equal, LocalCoefficientPoly, Monomial, PolyError};
pub use point::{eval, PointError, SatakePoint};
pub use space::{Role, SatakeError, SatakeSpace};
