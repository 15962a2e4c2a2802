//! Numeric unramified local data.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::laurent::{LocalCoefficientPoly, PolyError};
use super::space::SatakeSpace;
use crate::repalg::Gen;
use crate::TOLERANCE;

/// Satake parameters of `pi` and `pi'` at a prime, plus character values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SatakePoint {
    pub p: u64,
    pub alpha: Complex64,
    pub beta: Complex64,
    pub alpha_prime: Complex64,
    pub beta_prime: Complex64,
    pub chars: BTreeMap<Gen, Complex64>,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum PointError {
    #[error("{name} has modulus {modulus}, expected 1")]
    NotUnitary { name: String, modulus: f64 },
    #[error("alpha*beta = {product} differs from the central character value {omega}")]
    Central { product: Complex64, omega: Complex64 },
}

impl SatakePoint {
    /// All parameters equal to one and no character values.
    pub fn identity(p: u64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        SatakePoint {
            p,
            alpha: one,
            beta: one,
            alpha_prime: one,
            beta_prime: one,
            chars: BTreeMap::new(),
        }
    }

    pub fn with_char(mut self, g: Gen, v: Complex64) -> Self {
        self.chars.insert(g, v);
        self
    }

    /// Checks the unitary normalisation to [`TOLERANCE`].
    pub fn validate(&self) -> Result<(), PointError> {
        let mut named: Vec<(String, Complex64)> = vec![
            ("alpha".into(), self.alpha),
            ("beta".into(), self.beta),
            ("alpha'".into(), self.alpha_prime),
            ("beta'".into(), self.beta_prime),
        ];
        named.extend(self.chars.iter().map(|(g, &v)| (g.name().to_string(), v)));
        for (name, v) in named {
            if (v.norm() - 1.0).abs() > TOLERANCE {
                return Err(PointError::NotUnitary {
                    name,
                    modulus: v.norm(),
                });
            }
        }
        for (g, a, b) in [
            (Gen::Omega, self.alpha, self.beta),
            (Gen::OmegaPrime, self.alpha_prime, self.beta_prime),
        ] {
            if let Some(&omega) = self.chars.get(&g) {
                if (a * b - omega).norm() > TOLERANCE {
                    return Err(PointError::Central {
                        product: a * b,
                        omega,
                    });
                }
            }
        }
        Ok(())
    }

    /// Variable values in the order of `space`.
    pub fn values(&self, space: &SatakeSpace) -> Vec<Option<Complex64>> {
        let mut v = vec![
            Some(self.alpha),
            Some(self.beta),
            Some(self.alpha_prime),
            Some(self.beta_prime),
        ];
        for i in 4..space.nvars() {
            v.push(space.var_gen(i).and_then(|g| self.chars.get(&g).copied()));
        }
        v
    }
}

/// Evaluates `p` at `x`.
pub fn eval(p: &LocalCoefficientPoly, space: &SatakeSpace, x: &SatakePoint) -> Result<Complex64, PolyError> {
    p.eval(&x.values(space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repalg::{Base, BaseType, Character, Context, Hypotheses, RepAtom, VirtualRep};

    #[test]
    fn sym2_at_simple_points() {
        let ctx = Context::new(Hypotheses::new(BaseType::General, BaseType::General, false));
        let s = SatakeSpace::new(&ctx);
        let p = s
            .coeff_poly(&VirtualRep::from_atom(RepAtom::sym(Base::Pi, 2, Character::TRIVIAL)), 1)
            .unwrap();
        let one = SatakePoint::identity(2);
        assert!((eval(&p, &s, &one).unwrap().re - 3.0).abs() < 1e-12);
        let mut x = SatakePoint::identity(2);
        x.alpha = Complex64::new(0.0, 1.0);
        x.beta = Complex64::new(0.0, -1.0);
        assert!((eval(&p, &s, &x).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn validation_catches_non_unitary_values() {
        let mut x = SatakePoint::identity(3);
        assert!(x.validate().is_ok());
        x.beta = Complex64::new(1.1, 0.0);
        assert!(matches!(x.validate(), Err(PointError::NotUnitary { .. })));
        let y = SatakePoint::identity(3).with_char(Gen::Omega, Complex64::new(-1.0, 0.0));
        assert!(matches!(y.validate(), Err(PointError::Central { .. })));
    }
}
