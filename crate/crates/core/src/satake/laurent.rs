//! Sparse Laurent polynomials with `Z[zeta_12]` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::cyclotomic::{Cyc, N};

/// Exponent vector, one slot per variable.
pub type Monomial = Vec<i32>;

/// A Laurent polynomial over a fixed variable list. Variables with a
/// non-zero period `p` satisfy `x^p = 1` and have exponents kept in `[0, p)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LocalCoefficientPoly {
    periods: Vec<u32>,
    terms: BTreeMap<Monomial, Cyc>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {0} has period {1}, which does not divide 12 * k")]
    BadSpecialization(usize, u32),
    #[error("missing value for variable {0}")]
    MissingVariable(usize),
}

impl LocalCoefficientPoly {
    pub fn zero(periods: &[u32]) -> Self {
        LocalCoefficientPoly {
            periods: periods.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(periods: &[u32], c: Cyc) -> Self {
        let mut p = Self::zero(periods);
        p.add_term(vec![0; periods.len()], c);
        p
    }

    pub fn monomial(periods: &[u32], m: Monomial, c: Cyc) -> Self {
        let mut p = Self::zero(periods);
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.periods.len()
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn reduce_exps(&self, m: &mut Monomial) {
        for (e, &p) in m.iter_mut().zip(&self.periods) {
            if p > 0 {
                *e = e.rem_euclid(p as i32);
            }
        }
    }

    pub fn add_term(&mut self, mut m: Monomial, c: Cyc) {
        debug_assert_eq!(m.len(), self.periods.len());
        if c.is_zero() {
            return;
        }
        self.reduce_exps(&mut m);
        let e = self.terms.entry(m.clone()).or_insert(Cyc::ZERO);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.periods, other.periods, "variable universes differ");
        let mut out = self.clone();
        for (m, &c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Cyc::int(-1)))
    }

    pub fn scale(&self, k: Cyc) -> Self {
        let mut out = Self::zero(&self.periods);
        for (m, &c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.periods, other.periods, "variable universes differ");
        let mut out = Self::zero(&self.periods);
        for (ma, &ca) in self.terms() {
            for (mb, &cb) in other.terms() {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Conjugation on the unitary locus: every variable is inverted and
    /// every coefficient conjugated.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(&self.periods);
        for (m, &c) in self.terms() {
            out.add_term(m.iter().map(|e| -e).collect(), c.conj());
        }
        out
    }

    /// Substitutes `v -> v^l` for every variable.
    pub fn power_substitute(&self, l: i32) -> Self {
        let mut out = Self::zero(&self.periods);
        for (m, &c) in self.terms() {
            out.add_term(m.iter().map(|e| e * l).collect(), c);
        }
        out
    }

    /// Substitutes `var -> zeta_12^k`.
    pub fn specialize(&self, var: usize, k: i64) -> Result<Self, PolyError> {
        let p = self.periods[var];
        if p > 0 && (k * p as i64) % N != 0 {
            return Err(PolyError::BadSpecialization(var, p));
        }
        let mut out = Self::zero(&self.periods);
        for (m, &c) in self.terms() {
            let mut m = m.clone();
            let e = std::mem::take(&mut m[var]) as i64;
            out.add_term(m, c * Cyc::zeta_pow(k * e));
        }
        Ok(out)
    }

    /// Substitutes `var -> 1` for every variable and returns the constant.
    pub fn value_at_identity(&self) -> Cyc {
        self.terms().fold(Cyc::ZERO, |acc, (_, &c)| acc + c)
    }

    pub fn eval(&self, values: &[Option<Complex64>]) -> Result<Complex64, PolyError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms() {
            let mut t = c.to_complex();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values.get(i).copied().flatten().ok_or(PolyError::MissingVariable(i))?;
                t *= v.powi(e);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms() {
            let mut mono = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push(names[i].clone()),
                    _ => mono.push(format!("{}^{}", names[i], e)),
                }
            }
            let coeff = c.to_string();
            parts.push(match (mono.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => mono.join("*"),
                (false, "-1") => format!("-{}", mono.join("*")),
                (false, _) => format!("{coeff}*{}", mono.join("*")),
            });
        }
        parts.join(" + ")
    }
}

/// Exact equality of two polynomials over the same variables.
pub fn poly_equal(p: &LocalCoefficientPoly, q: &LocalCoefficientPoly) -> bool {
    p.periods == q.periods && p.sub(q).is_zero()
}

impl fmt::Debug for LocalCoefficientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.render(&names))
    }
}
