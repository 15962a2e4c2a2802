//! Integer lattice reduction over `Z^n`.
//!
//! The character group is presented as `Z^n / L` for a relation lattice `L`.
//! [`HermiteBasis`] gives canonical coset representatives (two characters are
//! equal iff their reduced vectors are equal), and [`smith_invariants`] gives
//! the invariant factors used to decide element orders.

/// Row-style Hermite normal form of a sublattice of `Z^dim`.
///
/// Rows are in echelon form with strictly increasing pivot columns, positive
/// pivots, and every entry above a pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteBasis {
    dim: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl HermiteBasis {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> Self {
        let mut m: Vec<Vec<i64>> = generators
            .iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .map(|r| {
                assert_eq!(r.len(), dim, "relation row has wrong length");
                r.clone()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0usize;
        for col in 0..dim {
            if top >= m.len() {
                break;
            }
            loop {
                // smallest nonzero entry in this column at or below `top`
                let best = (top..m.len())
                    .filter(|&i| m[i][col] != 0)
                    .min_by_key(|&i| m[i][col].unsigned_abs());
                let Some(best) = best else { break };
                m.swap(top, best);
                let mut clean = true;
                for i in top + 1..m.len() {
                    if m[i][col] != 0 {
                        let q = m[i][col] / m[top][col];
                        let (head, tail) = m.split_at_mut(i);
                        axpy(&mut tail[0], -q, &head[top]);
                        if tail[0][col] != 0 {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if m[top][col] == 0 {
                continue;
            }
            if m[top][col] < 0 {
                for x in m[top].iter_mut() {
                    *x = -*x;
                }
            }
            let d = m[top][col];
            for i in 0..top {
                let q = m[i][col].div_euclid(d);
                if q != 0 {
                    let (head, tail) = m.split_at_mut(top);
                    axpy(&mut head[i], -q, &tail[0]);
                }
            }
            pivots.push(col);
            top += 1;
        }
        m.truncate(top);
        HermiteBasis {
            dim,
            rows: m,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` in place to the canonical representative of `v + L`.
    pub fn reduce(&self, v: &mut [i64]) {
        debug_assert_eq!(v.len(), self.dim);
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let q = v[c].div_euclid(row[c]);
            if q != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= q * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Hermite basis of `L + span(extra)`.
    pub fn extended(&self, extra: &[Vec<i64>]) -> HermiteBasis {
        let mut gens = self.rows.clone();
        gens.extend(extra.iter().cloned());
        HermiteBasis::new(self.dim, &gens)
    }
}

fn axpy(dst: &mut [i64], a: i64, src: &[i64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += a * s;
    }
}

/// Invariant factors `d_1 | d_2 | ...` (all positive) of the relation matrix
/// whose rows are `relations`. Zero diagonal entries are dropped; the free
/// rank of `Z^dim / L` is `dim - invariants.len()`.
pub fn smith_invariants(dim: usize, relations: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = relations
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0usize;
    while t < rows.min(dim) {
        // pick the smallest nonzero entry of the trailing submatrix
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(bi, bj)| x.unsigned_abs() < a[bi][bj].unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut done = true;
        let p = a[t][t];
        for i in t + 1..rows {
            let q = a[i][t] / p;
            if q != 0 {
                let (head, tail) = a.split_at_mut(i);
                axpy(&mut tail[0], -q, &head[t]);
            }
            if a[i][t] != 0 {
                done = false;
            }
        }
        for j in t + 1..dim {
            let q = a[t][j] / p;
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            if a[t][j] != 0 {
                done = false;
            }
        }
        if !done {
            continue;
        }
        // enforce divisibility of the remaining block by the pivot
        let mut offender = None;
        'scan: for (i, row) in a.iter().enumerate().skip(t + 1) {
            for &x in row.iter().skip(t + 1) {
                if x % p != 0 {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            let (head, tail) = a.split_at_mut(i);
            axpy(&mut head[t], 1, &tail[0]);
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_torsion_reduces_mod_order() {
        let h = HermiteBasis::new(3, &[vec![0, 3, 0], vec![0, 0, 2]]);
        let mut v = vec![5, -1, 7];
        h.reduce(&mut v);
        assert_eq!(v, vec![5, 2, 1]);
        assert!(h.contains(&[0, 6, -4]));
        assert!(!h.contains(&[1, 0, 0]));
    }

    #[test]
    fn non_diagonal_relation_is_canonical() {
        // 2x - 2y = 0 : x^2 = y^2
        let h = HermiteBasis::new(2, &[vec![2, -2]]);
        let mut a = vec![3, 0];
        let mut b = vec![1, 2];
        h.reduce(&mut a);
        h.reduce(&mut b);
        assert_eq!(a, b);
    }

    #[test]
    fn hermite_is_independent_of_generator_order() {
        let g1 = vec![vec![4, 6, 0], vec![2, 0, 3], vec![0, 0, 9]];
        let mut g2 = g1.clone();
        g2.reverse();
        g2.push(vec![6, 6, 3]);
        assert_eq!(HermiteBasis::new(3, &g1), HermiteBasis::new(3, &g2));
    }

    #[test]
    fn smith_invariants_of_small_presentations() {
        assert_eq!(smith_invariants(2, &[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(2, &[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_invariants(3, &[vec![0, 0, 0]]), Vec::<i64>::new());
        assert_eq!(smith_invariants(2, &[vec![2, -2]]), vec![2]);
    }
}
