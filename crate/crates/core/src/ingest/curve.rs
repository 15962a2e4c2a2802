//! Traces of Frobenius of `y^2 + y = x^3 - x^2 - 10x - 20`, the weight-2
//! newform of level 11, by counting points.

use super::modular::legendre;

pub const LEVEL: u64 = 11;

/// Projective points over `F_p`, the point at infinity included.
pub fn count_points(p: u64) -> u64 {
    let rhs = |x: u64| -> u64 {
        let x = x as i128;
        (x * x * x - x * x - 10 * x - 20).rem_euclid(p as i128) as u64
    };
    let affine: u64 = if p == 2 {
        (0..2)
            .map(|x| (0..2).filter(|y| (y * y + y) % 2 == rhs(x)).count() as u64)
            .sum()
    } else {
        // y^2 + y = r  <=>  (2y + 1)^2 = 4r + 1
        (0..p)
            .map(|x| {
                let d = (4 * rhs(x) as u128 + 1) % p as u128;
                (1 + legendre(d as u64, p)) as u64
            })
            .sum()
    };
    affine + 1
}

/// `a_p = p + 1 - #E(F_p)`.
pub fn trace(p: u64) -> i64 {
    p as i64 + 1 - count_points(p) as i64
}
