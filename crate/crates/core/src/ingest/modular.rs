//! Residue symbols.

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut r = 1 % m;
    let mut b = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: u64, p: u64) -> i64 {
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Kronecker symbol `(d/p)` for a prime `p`.
pub fn kronecker(d: i64, p: u64) -> i64 {
    if p == 2 {
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    legendre(d.rem_euclid(p as i64) as u64, p)
}

/// Whether `d` is a fundamental discriminant.
pub fn is_fundamental(d: i64) -> bool {
    let squarefree = |mut n: u64| {
        let mut f = 2;
        while f * f <= n {
            if n.is_multiple_of(f * f) {
                return false;
            }
            if n.is_multiple_of(f) {
                n /= f;
            }
            f += 1;
        }
        true
    };
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 7), -1);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(-7, 2), 1);
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, 5, 8, 12, -15, 13] {
            assert!(is_fundamental(d), "{d}");
        }
        for d in [0, 1, -1, 2, 4, 9, -12, 16, 20 * 9] {
            assert!(!is_fundamental(d), "{d}");
        }
    }
}
