//! The quantum shuffle algebra and the embedding `Ψ` of `U⁺` into it.
//!
//! `Ψ(E_a) = a` extends multiplicatively, where the product of words `u ⋆ v`
//! is the sum over shuffles, each weighted by `q^{(α_a, α_b)}` for every pair
//! in which a letter `b` of `v` ends up before a letter `a` of `u`. The kernel
//! of `Ψ` on the free algebra is the Serre ideal, so `U⁺` is computed inside
//! the shuffle algebra where multiplication needs no rewriting.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::word::Word;
use crate::qcoeff::{modp, LaurentInt};

/// Element of the shuffle algebra with Laurent coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PsiVec {
    map: HashMap<Word, LaurentInt>,
}

impl PsiVec {
    pub fn zero() -> Self {
        PsiVec::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        let mut map = HashMap::new();
        map.insert(w, LaurentInt::one());
        PsiVec { map }
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, w: &[u8]) -> Option<&LaurentInt> {
        self.map.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &LaurentInt)> {
        self.map.iter()
    }

    /// Entries sorted by word.
    pub fn sorted(&self) -> Vec<(&Word, &LaurentInt)> {
        let mut v: Vec<_> = self.map.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, w: &[u8], c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.map.remove(w);
                }
            }
            None => {
                self.map.insert(w.to_vec(), c.clone());
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &PsiVec, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.map {
            self.add_term(w, &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentInt) -> PsiVec {
        let mut out = PsiVec::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn div_exact(&self, d: &LaurentInt) -> Option<PsiVec> {
        let mut map = HashMap::with_capacity(self.map.len());
        for (w, x) in &self.map {
            map.insert(w.clone(), x.div_exact(d)?);
        }
        Some(PsiVec { map })
    }

    /// Shuffle product `self ⋆ other`.
    pub fn shuffle(&self, other: &PsiVec, form: &[Vec<i32>]) -> PsiVec {
        let mut acc: HashMap<Word, LaurentInt> = HashMap::new();
        let one = BigInt::from(1);
        for (u, cu) in &self.map {
            for (v, cv) in &other.map {
                let cuv = cu * cv;
                shuffle_words(u, v, form, &mut |w, e| match acc.get_mut(w) {
                    Some(x) => x.add_scaled(&cuv, &one, e),
                    None => {
                        acc.insert(w.to_vec(), cuv.shift(e));
                    }
                });
            }
        }
        acc.retain(|_, x| !x.is_zero());
        PsiVec { map: acc }
    }

    /// The twisted derivation removing a trailing letter `i`; it corresponds
    /// to the derivation `∂_i` of `U⁺` with `∂_i(E_j) = δ_ij` and
    /// `∂_i(xy) = x∂_i(y) + q^{(α_i,|y|)} ∂_i(x) y`.
    pub fn strip_last(&self, i: u8) -> PsiVec {
        let mut out = PsiVec::zero();
        for (w, c) in &self.map {
            if w.last() == Some(&i) {
                out.add_term(&w[..w.len() - 1], c);
            }
        }
        out
    }

    pub fn eval_mod(&self, x: u64, xinv: u64) -> HashMap<Word, u64> {
        self.map.iter().map(|(w, c)| (w.clone(), c.eval_mod(x, xinv))).filter(|(_, v)| *v != 0).collect()
    }
}

/// Calls `f(w, e)` for every shuffle `w` of `u` and `v` with its exponent `e`.
pub fn shuffle_words(u: &[u8], v: &[u8], form: &[Vec<i32>], f: &mut dyn FnMut(&[u8], i32)) {
    // suffix[i][b] = Σ_{x ∈ u[i..]} (α_b, α_x)
    let n = form.len();
    let mut suffix = vec![vec![0i32; n]; u.len() + 1];
    for i in (0..u.len()).rev() {
        for b in 0..n {
            suffix[i][b] = suffix[i + 1][b] + form[b][u[i] as usize - 1];
        }
    }
    let mut buf = Vec::with_capacity(u.len() + v.len());
    rec(u, v, 0, 0, 0, &suffix, &mut buf, f);
}

#[allow(clippy::too_many_arguments)]
fn rec(
    u: &[u8],
    v: &[u8],
    i: usize,
    j: usize,
    e: i32,
    suffix: &[Vec<i32>],
    buf: &mut Word,
    f: &mut dyn FnMut(&[u8], i32),
) {
    if i == u.len() {
        let l = buf.len();
        buf.extend_from_slice(&v[j..]);
        f(buf, e);
        buf.truncate(l);
        return;
    }
    if j == v.len() {
        let l = buf.len();
        buf.extend_from_slice(&u[i..]);
        f(buf, e);
        buf.truncate(l);
        return;
    }
    buf.push(u[i]);
    rec(u, v, i + 1, j, e, suffix, buf, f);
    buf.pop();
    let b = v[j] as usize - 1;
    buf.push(v[j]);
    rec(u, v, i, j + 1, e + suffix[i][b], suffix, buf, f);
    buf.pop();
}

/// `Ψ(w)` for a single word, by inserting one letter at a time.
pub fn psi_word(w: &[u8], form: &[Vec<i32>]) -> PsiVec {
    let mut cur = PsiVec::one();
    for &a in w {
        let mut next: HashMap<Word, LaurentInt> = HashMap::with_capacity(cur.len() * (w.len() + 1));
        for (u, c) in &cur.map {
            insert_letter(u, a, form, &mut |x, e| {
                let t = c.shift(e);
                match next.get_mut(x) {
                    Some(y) => *y += &t,
                    None => {
                        next.insert(x.to_vec(), t);
                    }
                }
            });
        }
        next.retain(|_, x| !x.is_zero());
        cur = PsiVec { map: next };
    }
    cur
}

/// All ways of inserting the letter `a` (as the right factor) into `u`.
fn insert_letter(u: &[u8], a: u8, form: &[Vec<i32>], f: &mut dyn FnMut(&[u8], i32)) {
    let ai = a as usize - 1;
    let mut e: i32 = u.iter().map(|&x| form[ai][x as usize - 1]).sum();
    let mut buf = Vec::with_capacity(u.len() + 1);
    for p in 0..=u.len() {
        buf.clear();
        buf.extend_from_slice(&u[..p]);
        buf.push(a);
        buf.extend_from_slice(&u[p..]);
        f(&buf, e);
        if p < u.len() {
            e -= form[ai][u[p] as usize - 1];
        }
    }
}

/// Modular images of `Ψ(w)` at `q = x`.
pub struct ModPsi {
    x: u64,
    xinv: u64,
    cache: HashMap<i32, u64>,
}

impl ModPsi {
    pub fn new(x: u64) -> Self {
        ModPsi { x, xinv: modp::inv(x), cache: HashMap::new() }
    }

    pub fn qpow(&mut self, e: i32) -> u64 {
        let (x, xinv) = (self.x, self.xinv);
        *self.cache.entry(e).or_insert_with(|| if e >= 0 { modp::pow(x, e as u64) } else { modp::pow(xinv, (-e) as u64) })
    }

    pub fn point(&self) -> (u64, u64) {
        (self.x, self.xinv)
    }

    pub fn psi_word(&mut self, w: &[u8], form: &[Vec<i32>]) -> HashMap<Word, u64> {
        let mut cur: HashMap<Word, u64> = HashMap::new();
        cur.insert(Vec::new(), 1);
        for &a in w {
            let mut next: HashMap<Word, u64> = HashMap::with_capacity(cur.len() * (w.len() + 1));
            for (u, c) in &cur {
                let mut items = Vec::new();
                insert_letter(u, a, form, &mut |x, e| items.push((x.to_vec(), e)));
                for (x, e) in items {
                    let t = modp::mul(*c, self.qpow(e));
                    let slot = next.entry(x).or_insert(0);
                    *slot = modp::add(*slot, t);
                }
            }
            next.retain(|_, v| *v != 0);
            cur = next;
        }
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_form() -> Vec<Vec<i32>> {
        vec![vec![2, -1], vec![-1, 2]]
    }

    #[test]
    fn two_letter_shuffle() {
        let f = a2_form();
        let p = psi_word(&[1, 2], &f);
        assert_eq!(p.get(&[1, 2]), Some(&LaurentInt::one()));
        assert_eq!(p.get(&[2, 1]), Some(&LaurentInt::q_pow(-1)));
        let p = psi_word(&[1, 1], &f);
        assert_eq!(p.get(&[1, 1]), Some(&LaurentInt::from_terms([(0, 1i64), (2, 1)])));
    }

    #[test]
    fn serre_relator_is_killed() {
        let f = a2_form();
        let two = LaurentInt::from_terms([(1, 1i64), (-1, 1)]);
        let mut x = psi_word(&[1, 1, 2], &f);
        x.add_scaled(&psi_word(&[1, 2, 1], &f), &-two);
        x.add_scaled(&psi_word(&[2, 1, 1], &f), &LaurentInt::one());
        assert!(x.is_zero());
    }

    #[test]
    fn shuffle_is_associative_and_matches_words() {
        let f = vec![vec![2, -2], vec![-2, 4]];
        let a = psi_word(&[1, 2], &f);
        let b = psi_word(&[2], &f);
        let c = psi_word(&[1], &f);
        assert_eq!(a.shuffle(&b, &f).shuffle(&c, &f), a.shuffle(&b.shuffle(&c, &f), &f));
        assert_eq!(a.shuffle(&b, &f), psi_word(&[1, 2, 2], &f));
    }

    #[test]
    fn modular_image_agrees() {
        let f = vec![vec![2, -3], vec![-3, 6]];
        let w = [2, 1, 1, 2, 1];
        let exact = psi_word(&w, &f);
        let mut m = ModPsi::new(12345);
        let (x, xi) = m.point();
        assert_eq!(m.psi_word(&w, &f), exact.eval_mod(x, xi));
    }
}
