//! Exact arithmetic in `Z[zeta_12]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Order of the fixed root of unity.
pub const N: i64 = 12;

/// `a0 + a1 z + a2 z^2 + a3 z^3` with `z = exp(2 pi i / 12)`, reduced
/// modulo the cyclotomic polynomial `z^4 - z^2 + 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cyc(pub [i64; 4]);

impl Cyc {
    pub const ZERO: Cyc = Cyc([0; 4]);
    pub const ONE: Cyc = Cyc([1, 0, 0, 0]);

    pub fn int(n: i64) -> Cyc {
        Cyc([n, 0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Multiplication by `z`.
    fn shift(self) -> Cyc {
        let [a0, a1, a2, a3] = self.0;
        // a3 z^4 = a3 (z^2 - 1)
        Cyc([-a3, a0, a1 + a3, a2])
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Cyc {
        let mut out = Cyc::ONE;
        for _ in 0..k.rem_euclid(N) {
            out = out.shift();
        }
        out
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conj(self) -> Cyc {
        let mut out = Cyc::ZERO;
        for (i, &a) in self.0.iter().enumerate() {
            if a != 0 {
                out += Cyc::zeta_pow(-(i as i64)) * a;
            }
        }
        out
    }

    pub fn to_complex(self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / N as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut p = Complex64::new(1.0, 0.0);
        for &a in &self.0 {
            acc += p * a as f64;
            p *= z;
        }
        acc
    }

    /// The integer value, if the element is rational.
    pub fn as_int(&self) -> Option<i64> {
        (self.0[1..] == [0, 0, 0]).then_some(self.0[0])
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, o: Cyc) -> Cyc {
        let mut r = self;
        r += o;
        r
    }
}

impl AddAssign for Cyc {
    fn add_assign(&mut self, o: Cyc) {
        for (a, b) in self.0.iter_mut().zip(o.0) {
            *a += b;
        }
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, o: Cyc) -> Cyc {
        self + (-o)
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc(self.0.map(|a| -a))
    }
}

impl Mul<i64> for Cyc {
    type Output = Cyc;
    fn mul(self, k: i64) -> Cyc {
        Cyc(self.0.map(|a| a * k))
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, o: Cyc) -> Cyc {
        let mut c = [0i64; 7];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        // z^d = z^(d-2) - z^(d-4)
        for d in (4..7).rev() {
            let t = c[d];
            c[d] = 0;
            c[d - 2] += t;
            c[d - 4] -= t;
        }
        Cyc([c[0], c[1], c[2], c[3]])
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_int() {
            return write!(f, "{n}");
        }
        let mut parts = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            parts.push(match i {
                0 => format!("{a}"),
                1 => format!("{a}z"),
                _ => format!("{a}z^{i}"),
            });
        }
        write!(f, "({})", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_cycle_with_period_12() {
        assert_eq!(Cyc::zeta_pow(12), Cyc::ONE);
        assert_eq!(Cyc::zeta_pow(6), Cyc::int(-1));
        assert_eq!(Cyc::zeta_pow(5) * Cyc::zeta_pow(9), Cyc::zeta_pow(2));
        assert_eq!(Cyc::zeta_pow(-1), Cyc::zeta_pow(11));
    }

    #[test]
    fn conjugation_matches_complex_conjugate() {
        for k in 0..12 {
            let x = Cyc::zeta_pow(k) * 3 + Cyc::zeta_pow(2 * k + 1);
            let d = x.conj().to_complex() - x.to_complex().conj();
            assert!(d.norm() < 1e-12);
            assert_eq!(x.conj().conj(), x);
        }
    }

    #[test]
    fn product_with_conjugate_is_real() {
        let x = Cyc([1, 2, 0, -1]);
        let v = (x * x.conj()).to_complex();
        assert!(v.im.abs() < 1e-12);
        assert!((v.re - x.to_complex().norm_sqr()).abs() < 1e-9);
    }
}
