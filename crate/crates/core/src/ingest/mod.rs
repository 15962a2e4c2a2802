//! Unramified local data for concrete newforms and characters.

mod character;
pub mod curve;
mod file;
pub mod modular;
pub mod tau;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::repalg::Gen;
use crate::satake::SatakePoint;
use crate::Exec;

pub use character::CharacterData;
pub use file::{load_eigenvalue_file, parse_eigenvalues};

/// Largest prime bound accepted by the built-in generators.
pub const MAX_BOUND: u64 = 1_000_000;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum IngestError {
    #[error("p = {p} divides the level {level}")]
    Ramified { p: u64, level: u64 },
    #[error("no eigenvalue stored for p = {0}")]
    Missing(u64),
    #[error("a_{p} = {ap} violates the Deligne bound in weight {weight}")]
    BoundViolation { p: u64, ap: i128, weight: u32 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
    #[error("prime bound {0} exceeds {MAX_BOUND}")]
    BoundTooLarge(u64),
}

/// Hecke eigenvalues `a_p` of a holomorphic newform at primes up to `bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewformData {
    pub weight: u32,
    pub level: u64,
    pub ap: BTreeMap<u64, i128>,
    pub bound: u64,
}

impl fmt::Display for NewformData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight {} level {} ({} primes up to {})",
            self.weight,
            self.level,
            self.ap.len(),
            self.bound
        )
    }
}

/// `a_p^2 <= 4 p^(k-1)`, decided exactly.
pub fn within_deligne(ap: i128, p: u64, weight: u32) -> bool {
    let lhs = BigInt::from(ap) * BigInt::from(ap);
    let rhs = BigInt::from(4) * BigInt::from(p).pow(weight.saturating_sub(1));
    lhs <= rhs
}

impl NewformData {
    /// Builds a record, rejecting any unramified `a_p` outside the Deligne bound.
    pub fn new(
        weight: u32,
        level: u64,
        ap: BTreeMap<u64, i128>,
        bound: u64,
    ) -> Result<Self, IngestError> {
        for (&p, &a) in &ap {
            if !level.is_multiple_of(p) && !within_deligne(a, p, weight) {
                return Err(IngestError::BoundViolation { p, ap: a, weight });
            }
        }
        Ok(NewformData { weight, level, ap, bound })
    }

    pub fn is_ramified(&self, p: u64) -> bool {
        self.level.is_multiple_of(p)
    }

    /// Unramified primes with stored eigenvalues.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.ap.keys().copied().filter(|&p| !self.is_ramified(p))
    }

    /// Normalised trace `a_p / p^((k-1)/2)`.
    pub fn normalized(&self, p: u64) -> Result<f64, IngestError> {
        if self.is_ramified(p) {
            return Err(IngestError::Ramified { p, level: self.level });
        }
        let a = *self.ap.get(&p).ok_or(IngestError::Missing(p))?;
        Ok(a as f64 / (p as f64).powf((self.weight as f64 - 1.0) / 2.0))
    }
}

/// Roots of `z^2 - t z + 1` for the normalised trace `t`.
pub fn satake_from_ap(d: &NewformData, p: u64) -> Result<(Complex64, Complex64), IngestError> {
    let t = d.normalized(p)?;
    let a = *d.ap.get(&p).ok_or(IngestError::Missing(p))?;
    if !within_deligne(a, p, d.weight) {
        return Err(IngestError::BoundViolation { p, ap: a, weight: d.weight });
    }
    // rounding can push t^2/4 slightly past 1 at the boundary
    let im = (1.0 - t * t / 4.0).max(0.0).sqrt();
    let alpha = Complex64::new(t / 2.0, im);
    Ok((alpha, alpha.conj()))
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    primal::Primes::all()
        .take_while(|&p| p as u64 <= bound)
        .map(|p| p as u64)
        .collect()
}

fn check_bound(bound: u64) -> Result<(), IngestError> {
    if bound > MAX_BOUND {
        return Err(IngestError::BoundTooLarge(bound));
    }
    Ok(())
}

/// `tau(p)` for `p <= bound`.
pub fn delta_eigenvalues(bound: u64, exec: Exec) -> Result<NewformData, IngestError> {
    check_bound(bound)?;
    let tau = tau::tau_series(bound as usize, exec);
    let ap = primes_up_to(bound)
        .into_iter()
        .map(|p| (p, tau[p as usize]))
        .collect();
    NewformData::new(12, 1, ap, bound)
}

/// Point-count traces of the level-11 curve for `p <= bound`, `p != 11`.
pub fn x0_11_eigenvalues(bound: u64, exec: Exec) -> Result<NewformData, IngestError> {
    check_bound(bound)?;
    let primes: Vec<u64> = primes_up_to(bound)
        .into_iter()
        .filter(|&p| p != curve::LEVEL)
        .collect();
    let traces = exec.map(&primes, |&p| curve::trace(p) as i128);
    NewformData::new(2, curve::LEVEL, primes.into_iter().zip(traces).collect(), bound)
}

/// Satake points for a pair of forms and a character at every prime up to
/// `bound` where all three are unramified, plus the primes left out.
pub fn build_points(
    form1: &NewformData,
    form2: &NewformData,
    chi: &CharacterData,
    bound: u64,
) -> Result<(Vec<SatakePoint>, Vec<u64>), IngestError> {
    let one = Complex64::new(1.0, 0.0);
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    for p in primes_up_to(bound) {
        let value = chi.value(p);
        if form1.is_ramified(p) || form2.is_ramified(p) || value.is_none() {
            skipped.push(p);
            continue;
        }
        let (alpha, beta) = satake_from_ap(form1, p)?;
        let (alpha_prime, beta_prime) = satake_from_ap(form2, p)?;
        let mut chars = BTreeMap::new();
        chars.insert(Gen::Chi, value.unwrap_or(one));
        chars.insert(Gen::Omega, one);
        chars.insert(Gen::OmegaPrime, one);
        points.push(SatakePoint { p, alpha, beta, alpha_prime, beta_prime, chars });
    }
    Ok((points, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_small_primes() {
        let d = delta_eigenvalues(30, Exec::Sequential).unwrap();
        assert_eq!(d.ap[&2], -24);
        assert_eq!(d.ap[&3], 252);
        assert_eq!(d.ap[&5], 4830);
        assert_eq!(d.ap[&7], -16744);
    }

    #[test]
    fn level_eleven() {
        let e = x0_11_eigenvalues(50, Exec::Sequential).unwrap();
        assert_eq!(e.ap[&2], -2);
        assert_eq!(e.ap[&3], -1);
        assert!(!e.ap.contains_key(&11));
        assert_eq!(satake_from_ap(&e, 11), Err(IngestError::Ramified { p: 11, level: 11 }));
    }

    #[test]
    fn satake_examples() {
        let d = delta_eigenvalues(10, Exec::Sequential).unwrap();
        let (a, b) = satake_from_ap(&d, 2).unwrap();
        assert!(((a + b).re - (-0.530330)).abs() < 1e-6);
        assert!((a * b - 1.0).norm() < 1e-12);

        let zero = NewformData::new(2, 1, [(5, 0)].into(), 5).unwrap();
        let (a, b) = satake_from_ap(&zero, 5).unwrap();
        assert!((a - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((b - Complex64::new(0.0, -1.0)).norm() < 1e-12);

        // weight 3 at p = 2 puts a_p = 4 exactly on the boundary
        let edge = NewformData::new(3, 1, [(2, 4)].into(), 2).unwrap();
        let (a, b) = satake_from_ap(&edge, 2).unwrap();
        assert!((a - 1.0).norm() < 1e-12 && (b - 1.0).norm() < 1e-12);

        assert_eq!(satake_from_ap(&zero, 7), Err(IngestError::Missing(7)));
    }

    #[test]
    fn deligne_gate() {
        assert!(within_deligne(90, 2, 12));
        assert!(!within_deligne(91, 2, 12));
        assert!(within_deligne(4, 2, 3));
        assert!(!within_deligne(5, 2, 3));
        let err = NewformData::new(12, 1, [(2, 5000)].into(), 2).unwrap_err();
        assert_eq!(err, IngestError::BoundViolation { p: 2, ap: 5000, weight: 12 });
    }

    #[test]
    fn points_skip_ramified() {
        let d = delta_eigenvalues(50, Exec::Sequential).unwrap();
        let e = x0_11_eigenvalues(50, Exec::Sequential).unwrap();
        let chi = CharacterData::kronecker(-4).unwrap();
        let (pts, skipped) = build_points(&d, &e, &chi, 50).unwrap();
        assert_eq!(skipped, vec![2, 11]);
        assert_eq!(pts.len(), 13);
        for x in &pts {
            x.validate().unwrap();
        }
        assert_eq!(pts[0].chars[&Gen::Chi], Complex64::new(-1.0, 0.0));
    }
}
