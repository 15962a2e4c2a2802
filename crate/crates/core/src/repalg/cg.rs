//! Clebsch-Gordan rules and the `Sym^2` plethysm for GL(2).

use std::collections::BTreeMap;

/// `Sym^j (x) Sym^k = sum_r Sym^{j+k-2r} tw omega^r`, as `(degree, r)` pairs.
pub fn cg_expand(j: u32, k: u32) -> Vec<(u32, u32)> {
    (0..=j.min(k)).map(|r| (j + k - 2 * r, r)).collect()
}

/// A GL(2) weight `alpha^a beta^b`, stored as `(a, b)`.
pub type Weight = (u32, u32);

/// Weights of `Sym^m` tw `omega^r`.
pub fn sym_weights(m: u32, r: u32) -> Vec<Weight> {
    (0..=m).map(|j| (j + r, m - j + r)).collect()
}

/// `Sym^2(Sym^m(std))` as a list of `(Sym degree, omega power)` terms.
///
/// Peels weight strings off the multiset `{alpha^(j+k) beta^(2m-j-k) : j <= k}`
/// starting from the highest power of `alpha`.
pub fn plethysm_sym2(m: u32) -> Vec<(u32, u32)> {
    let mut bag: BTreeMap<Weight, i64> = BTreeMap::new();
    for w in sym2_weights(m) {
        *bag.entry(w).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    while let Some((&(a, b), _)) = bag.iter().rev().find(|(_, &n)| n > 0) {
        // highest alpha-power left is the top of a string Sym^{a-b} tw omega^b
        debug_assert!(a >= b);
        let d = a - b;
        for w in sym_weights(d, b) {
            let n = bag.get_mut(&w).expect("weight multiset is not a GL(2) character");
            *n -= 1;
        }
        bag.retain(|_, n| *n != 0);
        out.push((d, b));
    }
    out
}

/// The weight multiset `{alpha^(j+k) beta^(2m-j-k) : 0 <= j <= k <= m}`.
pub fn sym2_weights(m: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    for j in 0..=m {
        for k in j..=m {
            out.push((j + k, 2 * m - j - k));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cg_cases() {
        assert_eq!(cg_expand(2, 2), vec![(4, 0), (2, 1), (0, 2)]);
        assert_eq!(cg_expand(0, 5), vec![(5, 0)]);
        let degs: Vec<u32> = cg_expand(4, 4).into_iter().map(|t| t.0).collect();
        assert_eq!(degs, vec![8, 6, 4, 2, 0]);
    }

    #[test]
    fn plethysm_small_m() {
        assert_eq!(plethysm_sym2(1), vec![(2, 0)]);
        assert_eq!(plethysm_sym2(2), vec![(4, 0), (0, 2)]);
        assert_eq!(plethysm_sym2(3), vec![(6, 0), (2, 2)]);
    }
}
