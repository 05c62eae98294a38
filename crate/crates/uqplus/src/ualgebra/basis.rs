//! Per-weight normal forms.
//!
//! Normal words are the lexicographically smallest words whose images under
//! `Ψ` are independent; every other word is a pivot and reduces to a unique
//! combination of normal words. Independence is decided modulo a prime at a
//! random point (a nonzero minor there is a nonzero minor over `Q(q)`), and
//! every reduction is checked exactly in the shuffle algebra before use.

use std::collections::HashMap;
use std::sync::Arc;

use super::shuffle::{psi_word, ModPsi, PsiVec};
use super::word::{words_of_weight, Word};
use crate::error::{Error, Result};
use crate::linalg::{mat_vec, ratfunc_inverse, ModEchelon};
use crate::once::OnceMap;
use crate::qcoeff::{laurent_lcm, modp, LaurentInt, RatFunc};
use crate::rootdata::Weight;

/// A word reduced to normal words: pairs (index into `normal_words`, coefficient).
pub type Reduction = Arc<Vec<(usize, RatFunc)>>;
/// A pivot word and its expression in the normal words.
pub type Reducer = (Word, Vec<(Word, RatFunc)>);

pub struct WeightSpaceBasis {
    pub weight: Weight,
    /// Lexicographically ascending.
    pub all_words: Vec<Word>,
    pub normal_words: Vec<Word>,
    normal_pos: HashMap<Word, usize>,
    test_words: Vec<Word>,
    psi_normal: Vec<PsiVec>,
    /// Inverse of `Ψ(normal_words)` restricted to `test_words`.
    inverse: Vec<Vec<RatFunc>>,
    reductions: OnceMap<Word, Result<Reduction>>,
}

impl std::fmt::Debug for WeightSpaceBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightSpaceBasis")
            .field("weight", &self.weight)
            .field("words", &self.all_words.len())
            .field("normal_words", &self.normal_words)
            .finish()
    }
}

impl WeightSpaceBasis {
    pub fn build(weight: &[u32], form: &[Vec<i32>]) -> Result<Self> {
        let all_words = words_of_weight(weight);
        let index: HashMap<&Word, usize> = all_words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let width = all_words.len();
        let mut modpsi = ModPsi::new(modp::points(1)[0]);
        let mut ech = ModEchelon::new(width);
        let mut normal_words = Vec::new();
        let mut test_cols = Vec::new();
        for w in &all_words {
            let mut v = vec![0u64; width];
            for (x, c) in modpsi.psi_word(w, form) {
                v[index[&x]] = c;
            }
            if let Some(p) = ech.insert(v) {
                normal_words.push(w.clone());
                test_cols.push(p);
            }
        }
        let test_words: Vec<Word> = test_cols.iter().map(|&p| all_words[p].clone()).collect();
        let psi_normal: Vec<PsiVec> = normal_words.iter().map(|w| psi_word(w, form)).collect();
        let m = normal_words.len();
        // column j of the matrix is Ψ(normal_j) restricted to the test words
        let mat: Vec<Vec<RatFunc>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| psi_normal[j].get(&test_words[i]).map_or_else(RatFunc::zero, |c| RatFunc::from_laurent(c.clone())))
                    .collect()
            })
            .collect();
        let inverse = ratfunc_inverse(&mat)
            .ok_or_else(|| Error::Verification(format!("normal words at {weight:?} are not independent")))?;
        let normal_pos = normal_words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(WeightSpaceBasis {
            weight: weight.to_vec(),
            all_words,
            normal_words,
            normal_pos,
            test_words,
            psi_normal,
            inverse,
            reductions: OnceMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.normal_words.len()
    }

    pub fn normal_index(&self, w: &[u8]) -> Option<usize> {
        self.normal_pos.get(w).copied()
    }

    pub fn psi_of_normal(&self, i: usize) -> &PsiVec {
        &self.psi_normal[i]
    }

    /// Coordinates in normal words of the element whose image under `Ψ` is `v`.
    /// Fails if `v` is not in the image.
    pub fn preimage(&self, v: &PsiVec) -> Result<Vec<RatFunc>> {
        let rhs: Vec<RatFunc> =
            self.test_words.iter().map(|w| v.get(w).map_or_else(RatFunc::zero, |c| RatFunc::from_laurent(c.clone()))).collect();
        let y = mat_vec(&self.inverse, &rhs);
        self.check_combination(&y, v)?;
        Ok(y)
    }

    /// Exact check of `Σ y_i Ψ(normal_i) = v`, after clearing denominators.
    fn check_combination(&self, y: &[RatFunc], v: &PsiVec) -> Result<()> {
        let mut den = LaurentInt::one();
        for c in y.iter().filter(|c| !c.is_zero()) {
            if !c.den().is_one() {
                den = laurent_lcm(&den, c.den());
            }
        }
        let mut acc = v.scale(&-&den);
        for (i, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = c.mul_laurent(&den).to_laurent()?;
            acc.add_scaled(&self.psi_normal[i], &k);
        }
        if acc.is_zero() {
            Ok(())
        } else {
            Err(Error::Verification(format!("element is not in the span of the normal words at {:?}", self.weight)))
        }
    }

    /// Reduction of an arbitrary word of this weight, cached.
    pub fn reduce(&self, w: &[u8], form: &[Vec<i32>]) -> Result<Reduction> {
        if let Some(i) = self.normal_index(w) {
            return Ok(Arc::new(vec![(i, RatFunc::one())]));
        }
        self.reductions.get_or_init(&w.to_vec(), || {
            let y = self.preimage(&psi_word(w, form))?;
            Ok(Arc::new(y.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()))
        })
    }

    /// Rows `w - Σ c_v v` for every pivot word `w`.
    pub fn reducers(&self, form: &[Vec<i32>]) -> Result<Vec<Reducer>> {
        let mut out = Vec::new();
        for w in &self.all_words {
            if self.normal_index(w).is_none() {
                let r = self.reduce(w, form)?;
                out.push((w.clone(), r.iter().map(|(i, c)| (self.normal_words[*i].clone(), c.clone())).collect()));
            }
        }
        Ok(out)
    }
}
