//! Dense linear algebra: modular echelon forms for support and pivot
//! selection, exact Gauss-Jordan over `Q(q)`.

use crate::qcoeff::{modp, RatFunc};

/// Row echelon form over `F_p`, built one row at a time. Every stored row is
/// reduced against the earlier ones and scaled to have pivot entry 1.
#[derive(Debug, Clone, Default)]
pub struct ModEchelon {
    width: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    pub fn new(width: usize) -> Self {
        ModEchelon { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }

    /// Reduces `v` in place against the stored rows.
    pub fn reduce(&self, v: &mut [u64]) {
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    if *y != 0 {
                        *x = modp::sub(*x, modp::mul(c, *y));
                    }
                }
            }
        }
    }

    /// Adds `v` if it is independent; returns its pivot column.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<usize> {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let p = v.iter().position(|&x| x != 0)?;
        let inv = modp::inv(v[p]);
        for x in v.iter_mut() {
            *x = modp::mul(*x, inv);
        }
        self.rows.push((p, v));
        Some(p)
    }
}

/// Rank of a list of rows over `F_p`.
pub fn modp_rank(rows: impl IntoIterator<Item = Vec<u64>>, width: usize) -> usize {
    let mut e = ModEchelon::new(width);
    for r in rows {
        e.insert(r);
        if e.rank() == width {
            break;
        }
    }
    e.rank()
}

/// Inverse of a square matrix over `Q(q)`, or `None` if singular.
pub fn ratfunc_inverse(m: &[Vec<RatFunc>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let mut inv: Vec<Vec<RatFunc>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect();
    for col in 0..n {
        // prefer the simplest nonzero pivot
        let piv = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].num().num_terms() + a[r][col].den().num_terms())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].inv();
        for x in a[col].iter_mut() {
            *x = &*x * &p;
        }
        for x in inv[col].iter_mut() {
            *x = &*x * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in 0..n {
                if !a[col][k].is_zero() {
                    let t = &f * &a[col][k];
                    a[r][k] = &a[r][k] - &t;
                }
                if !inv[col][k].is_zero() {
                    let t = &f * &inv[col][k];
                    inv[r][k] = &inv[r][k] - &t;
                }
            }
        }
    }
    Some(inv)
}

/// `m · v`.
pub fn mat_vec(m: &[Vec<RatFunc>], v: &[RatFunc]) -> Vec<RatFunc> {
    m.iter()
        .map(|row| {
            let mut acc = RatFunc::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::LaurentInt;

    #[test]
    fn inverse_round_trip() {
        let q = RatFunc::q_pow(1);
        let two = RatFunc::from_int(2);
        let m = vec![vec![q.clone(), RatFunc::one()], vec![two.clone(), RatFunc::from_laurent(LaurentInt::q_pow(-1))]];
        let inv = ratfunc_inverse(&m).unwrap();
        for i in 0..2 {
            let col: Vec<RatFunc> = inv.iter().map(|row| row[i].clone()).collect();
            let r = mat_vec(&m, &col);
            for (k, x) in r.iter().enumerate() {
                assert_eq!(x.is_one(), k == i);
                assert_eq!(x.is_zero(), k != i);
            }
        }
        let sing = vec![vec![q.clone(), q.clone()], vec![two.clone(), two]];
        assert!(ratfunc_inverse(&sing).is_none());
    }

    #[test]
    fn modular_rank() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(modp_rank(rows, 3), 2);
    }
}
