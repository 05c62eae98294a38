use std::collections::{BTreeMap, HashMap};

use super::shuffle::{psi_word, ModPsi, PsiVec};
use super::word::{words_of_weight, Word};
use crate::linalg::ModEchelon;
use crate::qcoeff::{modp, quantum_binomial, LaurentInt};
use crate::rootdata::RootSystem;

/// `Σ_r (-1)^r [1-a_ij choose r]_{d_i} E_i^r E_j E_i^{1-a_ij-r}` as a word combination.
pub fn serre_relator(rs: &RootSystem, i: usize, j: usize) -> BTreeMap<Word, LaurentInt> {
    assert!(i != j, "Serre relator needs distinct nodes");
    let m = (1 - rs.cartan[i - 1][j - 1]) as u32;
    let d = rs.d[i - 1];
    let mut out = BTreeMap::new();
    for r in 0..=m {
        let mut w = vec![i as u8; r as usize];
        w.push(j as u8);
        w.extend(std::iter::repeat_n(i as u8, (m - r) as usize));
        let b = quantum_binomial(m, r, d);
        out.insert(w, if r % 2 == 0 { b } else { -b });
    }
    out
}

/// `Ψ` of a word combination.
pub fn psi_comb(c: &BTreeMap<Word, LaurentInt>, form: &[Vec<i32>]) -> PsiVec {
    let mut acc = PsiVec::zero();
    for (w, x) in c {
        acc.add_scaled(&psi_word(w, form), x);
    }
    acc
}

/// Exact dimension data of `U⁺_ν` from the Serre presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerreDimension {
    pub words: usize,
    /// Rank of the products `w₁ S w₂` modulo `p` (a lower bound for the exact rank).
    pub serre_rank: usize,
    /// Rank of `Ψ` on all words modulo `p` (a lower bound for `dim Ψ(U⁺_ν)`).
    pub psi_rank: usize,
}

impl SerreDimension {
    /// Since every relator is killed by `Ψ`, `psi_rank ≤ dim ≤ words - serre_rank`;
    /// equality of the bounds pins the dimension exactly.
    pub fn certified(&self) -> Option<usize> {
        (self.words - self.serre_rank == self.psi_rank).then_some(self.psi_rank)
    }
}

/// Rank computations for the dimension certificate at weight `nu`.
pub fn serre_dimension(rs: &RootSystem, nu: &[u32]) -> SerreDimension {
    let form = &rs.form;
    let n = rs.rank();
    let words = words_of_weight(nu);
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let width = words.len();
    let mut mp = ModPsi::new(modp::points(2)[1]);
    let (x, xinv) = mp.point();

    let mut psi = ModEchelon::new(width);
    for w in &words {
        let mut v = vec![0u64; width];
        for (u, c) in mp.psi_word(w, form) {
            v[index[&u]] = c;
        }
        psi.insert(v);
    }

    let mut serre = ModEchelon::new(width);
    'outer: for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let rel = serre_relator(rs, i, j);
            let rel_w: Vec<(Word, u64)> = rel.iter().map(|(w, c)| (w.clone(), c.eval_mod(x, xinv))).collect();
            let mut rest = nu.to_vec();
            let m = rel.keys().next().unwrap().len() as u32;
            if rest[i - 1] < m - 1 || rest[j - 1] < 1 {
                continue;
            }
            rest[i - 1] -= m - 1;
            rest[j - 1] -= 1;
            for u in words_of_weight(&rest) {
                for split in 0..=u.len() {
                    let mut v = vec![0u64; width];
                    for (w, c) in &rel_w {
                        let mut full = u[..split].to_vec();
                        full.extend_from_slice(w);
                        full.extend_from_slice(&u[split..]);
                        let k = index[&full];
                        v[k] = modp::add(v[k], *c);
                    }
                    serre.insert(v);
                    if serre.rank() + psi.rank() == width {
                        break 'outer;
                    }
                }
            }
        }
    }
    SerreDimension { words: width, serre_rank: serre.rank(), psi_rank: psi.rank() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, LieType};

    #[test]
    fn relators_vanish_under_psi() {
        for t in ["A3", "B2", "G2", "C3", "F4", "D4"] {
            let rs = build_root_system(LieType::parse(t).unwrap());
            for i in 1..=rs.rank() {
                for j in 1..=rs.rank() {
                    if i != j {
                        assert!(psi_comb(&serre_relator(&rs, i, j), &rs.form).is_zero(), "{t} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn a2_relator_shape() {
        let rs = build_root_system(LieType::parse("A2").unwrap());
        let r = serre_relator(&rs, 1, 2);
        assert_eq!(r.len(), 3);
        assert_eq!(r[&vec![1, 2, 1]], -LaurentInt::from_terms([(1, 1i64), (-1, 1)]));
        let rs = build_root_system(LieType::parse("A3").unwrap());
        let r = serre_relator(&rs, 1, 3);
        assert_eq!(r.len(), 2);
        assert_eq!(r[&vec![3, 1]], LaurentInt::one());
        assert_eq!(r[&vec![1, 3]], -LaurentInt::one());
    }

    #[test]
    fn small_dimension_certificates() {
        let rs = build_root_system(LieType::parse("A2").unwrap());
        let d = serre_dimension(&rs, &[2, 1]);
        assert_eq!(d.certified(), Some(2));
        let d = serre_dimension(&rs, &[2, 2]);
        assert_eq!(d.certified(), Some(3));
    }
}
