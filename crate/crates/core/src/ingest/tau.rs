//! Ramanujan's tau function from `q * prod (1 - q^n)^24`.
//!
//! `prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}` is sparse, so the
//! 24th power is eight multiplications by a sparse series.

use crate::Exec;

/// Non-zero terms `(exponent, coefficient)` of `prod (1 - q^n)^3` up to `q^n`.
fn eta_cubed(n: usize) -> Vec<(usize, i128)> {
    let mut out = Vec::new();
    for k in 0.. {
        let e = k * (k + 1) / 2;
        if e > n {
            break;
        }
        let c = (2 * k + 1) as i128;
        out.push((e, if k % 2 == 0 { c } else { -c }));
    }
    out
}

/// `tau(0..=n)`, with `tau(0) = 0`.
pub fn tau_series(n: usize, exec: Exec) -> Vec<i128> {
    // coefficients of prod (1 - q^m)^24 up to q^(n-1)
    let len = n.max(1);
    let sparse = eta_cubed(len - 1);
    let mut acc = vec![0i128; len];
    for &(e, c) in &sparse {
        acc[e] = c;
    }
    for _ in 1..8 {
        let prev = acc;
        acc = vec![0i128; len];
        exec.fill(&mut acc, |i| {
            sparse
                .iter()
                .take_while(|(e, _)| *e <= i)
                .map(|&(e, c)| c * prev[i - e])
                .sum()
        });
    }
    let mut tau = vec![0i128; n + 1];
    tau[1..].copy_from_slice(&acc[..n]);
    tau
}
