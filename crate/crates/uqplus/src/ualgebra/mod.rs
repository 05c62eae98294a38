//! Exact arithmetic in `U` at bounded weight.
//!
//! Elements are combinations of triangular terms `F K E` whose F- and E-words
//! are normal words of their weight spaces. Products are straightened with the
//! cross relations and then reduced weight space by weight space.

mod basis;
mod element;
mod serre;
mod shuffle;
mod word;

use std::collections::HashMap;
use std::sync::Arc;

pub use basis::{Reduction, WeightSpaceBasis};
pub use element::{Gen, MixedTerm, UElement, WordCoeff};
pub use serre::{psi_comb, serre_dimension, serre_relator, SerreDimension};
pub use shuffle::{psi_word, shuffle_words, ModPsi, PsiVec};
pub use word::{format_word, weight_of_word, word_count, words_of_weight, Word};

use crate::error::{Error, Result};
use crate::once::OnceMap;
use crate::qcoeff::{laurent_lcm, q_diff, quantum_factorial, LaurentInt, RatFunc};
use crate::rootdata::{build_root_system, height, LieType, RootSystem, Weight};

/// Default word-length cap by rank.
pub fn default_cap(rank: usize) -> u32 {
    match rank {
        0..=3 => 12,
        4 => 8,
        _ => 6,
    }
}

/// The algebra of a fixed Cartan type with its per-weight caches.
pub struct UAlgebra {
    pub rs: RootSystem,
    cap: u32,
    bases: OnceMap<Weight, Result<Arc<WeightSpaceBasis>>>,
}

/// Unreduced accumulator used while straightening.
type Raw = HashMap<MixedTerm, RatFunc>;

fn raw_add(acc: &mut Raw, t: MixedTerm, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&t) {
        Some(x) => {
            *x = &*x + &c;
            if x.is_zero() {
                acc.remove(&t);
            }
        }
        None => {
            acc.insert(t, c);
        }
    }
}

impl UAlgebra {
    pub fn new(t: LieType) -> Self {
        Self::with_cap(t, default_cap(t.rank))
    }

    pub fn with_cap(t: LieType, cap: u32) -> Self {
        UAlgebra { rs: build_root_system(t), cap, bases: OnceMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn lie(&self) -> LieType {
        self.rs.lie
    }

    pub fn form(&self) -> &[Vec<i32>] {
        &self.rs.form
    }

    pub fn check_height(&self, nu: &[u32]) -> Result<()> {
        let h = height(nu);
        if h > self.cap {
            Err(Error::HeightCapExceeded { height: h, cap: self.cap, words: word_count(nu) })
        } else {
            Ok(())
        }
    }

    fn check_weight(&self, nu: &[u32]) -> Result<()> {
        if nu.len() != self.rank() {
            return Err(Error::BadInput(format!("weight {nu:?} has the wrong length")));
        }
        Ok(())
    }

    pub fn weight_basis(&self, nu: &[u32]) -> Result<Arc<WeightSpaceBasis>> {
        self.check_weight(nu)?;
        self.check_height(nu)?;
        self.bases.get_or_init(&nu.to_vec(), || WeightSpaceBasis::build(nu, &self.rs.form).map(Arc::new))
    }

    /// Number of cached weight spaces.
    pub fn cached_bases(&self) -> usize {
        self.bases.len()
    }

    fn check_letters(&self, w: &[u8]) -> Result<()> {
        match w.iter().find(|&&a| a == 0 || a as usize > self.rank()) {
            Some(&a) => Err(Error::BadInput(format!("node {a} out of range"))),
            None => Ok(()),
        }
    }

    /// A word as a combination of normal words.
    pub fn reduce_word(&self, w: &[u8]) -> Result<Vec<(Word, RatFunc)>> {
        self.check_letters(w)?;
        let nu = weight_of_word(self.rank(), w);
        let b = self.weight_basis(&nu)?;
        let r = b.reduce(w, &self.rs.form)?;
        Ok(r.iter().map(|(i, c)| (b.normal_words[*i].clone(), c.clone())).collect())
    }

    /// `E_w` in normal form.
    pub fn e_word(&self, w: &[u8]) -> Result<UElement> {
        let mut out = UElement::zero(self.rank());
        for (v, c) in self.reduce_word(w)? {
            out.add_term(MixedTerm::e_only(self.rank(), v), &c);
        }
        Ok(out)
    }

    pub fn generator(&self, i: usize) -> UElement {
        UElement::e_word(self.rank(), vec![i as u8], RatFunc::one())
    }

    /// `E_i^{(m)}`.
    pub fn divided_power(&self, i: usize, m: u32) -> Result<UElement> {
        self.check_letters(&[i as u8])?;
        let nu = {
            let mut v = vec![0; self.rank()];
            v[i - 1] = m;
            v
        };
        self.check_height(&nu)?;
        let c = RatFunc::one().div_laurent(&quantum_factorial(m, self.rs.d[i - 1]));
        Ok(UElement::e_word(self.rank(), vec![i as u8; m as usize], c))
    }

    /// `x · g` for a single generator, on unreduced triangular terms.
    fn rmul_gen(&self, acc: Raw, g: Gen) -> Raw {
        let form = &self.rs.form;
        let mut out = Raw::with_capacity(acc.len());
        match g {
            Gen::E(b) => {
                for (mut t, c) in acc {
                    t.e.push(b);
                    raw_add(&mut out, t, c);
                }
            }
            Gen::K(b, s) => {
                let bi = b as usize - 1;
                for (mut t, c) in acc {
                    let p: i32 = t.e.iter().map(|&x| form[bi][x as usize - 1]).sum();
                    t.k[bi] += s;
                    raw_add(&mut out, t, c.mul_laurent(&LaurentInt::q_pow(-s * p)));
                }
            }
            Gen::F(b) => {
                let bi = b as usize - 1;
                let h = q_diff(self.rs.d[bi]);
                for (t, c) in acc {
                    // E_{<p} [E_b, F_b] E_{>p} for every occurrence of b
                    let mut prefix = 0i32;
                    for p in 0..t.e.len() {
                        let x = t.e[p] as usize - 1;
                        if x == bi {
                            let mut e = t.e.clone();
                            e.remove(p);
                            for s in [1i32, -1] {
                                let mut k = t.k.clone();
                                k[bi] += s;
                                let coef = c.mul_laurent(&LaurentInt::monomial(s.into(), -s * prefix)).div_laurent(&h);
                                raw_add(&mut out, MixedTerm { f: t.f.clone(), k, e: e.clone() }, coef);
                            }
                        }
                        prefix += form[bi][x];
                    }
                    // F_b moves past K^λ
                    let lam: i32 = t.k.iter().enumerate().map(|(i, &ki)| ki * form[i][bi]).sum();
                    let mut t2 = t;
                    t2.f.push(b);
                    raw_add(&mut out, t2, c.mul_laurent(&LaurentInt::q_pow(-lam)));
                }
            }
        }
        out
    }

    /// Reduces the F- and E-words of every term to normal words.
    fn reduce_raw(&self, acc: Raw) -> Result<UElement> {
        let mut cache: HashMap<Word, Vec<(Word, RatFunc)>> = HashMap::new();
        let mut get = |w: &Word| -> Result<Vec<(Word, RatFunc)>> {
            if let Some(r) = cache.get(w) {
                return Ok(r.clone());
            }
            let r = self.reduce_word(w)?;
            cache.insert(w.clone(), r.clone());
            Ok(r)
        };
        let mut out = UElement::zero(self.rank());
        for (t, c) in acc {
            let rf = get(&t.f)?;
            let re = get(&t.e)?;
            for (f, cf) in &rf {
                let cfc = &c * cf;
                for (e, ce) in &re {
                    out.add_term(MixedTerm { f: f.clone(), k: t.k.clone(), e: e.clone() }, &(&cfc * ce));
                }
            }
        }
        Ok(out)
    }

    /// Straightens a combination of generator sequences into normal form.
    pub fn normalize(&self, raw: &[(RatFunc, Vec<Gen>)]) -> Result<UElement> {
        let mut total = Raw::new();
        for (c, gens) in raw {
            for g in gens {
                let a = match g {
                    Gen::E(a) | Gen::F(a) | Gen::K(a, _) => *a,
                };
                self.check_letters(&[a])?;
            }
            let mut acc = Raw::new();
            acc.insert(MixedTerm::e_only(self.rank(), Vec::new()), c.clone());
            for g in gens {
                acc = self.rmul_gen(acc, *g);
            }
            for (t, x) in acc {
                raw_add(&mut total, t, x);
            }
        }
        self.reduce_raw(total)
    }

    /// Re-normalizes an element (terms need not be normal words).
    pub fn renormalize(&self, x: &UElement) -> Result<UElement> {
        let raw: Vec<(RatFunc, Vec<Gen>)> = x.terms().map(|(t, c)| (c.clone(), t.gens())).collect();
        self.normalize(&raw)
    }

    pub fn multiply(&self, x: &UElement, y: &UElement) -> Result<UElement> {
        let mut total = Raw::new();
        for (tx, cx) in x.terms() {
            for (ty, cy) in y.terms() {
                let mut acc = Raw::new();
                acc.insert(tx.clone(), cx * cy);
                for g in ty.gens() {
                    acc = self.rmul_gen(acc, g);
                }
                for (t, c) in acc {
                    raw_add(&mut total, t, c);
                }
            }
        }
        self.reduce_raw(total)
    }

    /// Bar involution on `U⁺`: words are fixed, so only coefficients change.
    pub fn bar_element(&self, x: &UElement) -> Result<UElement> {
        if !x.is_uplus() {
            return Err(Error::NotInUPlus);
        }
        Ok(x.map_coeffs(|c| c.bar()))
    }

    /// `Ψ(x)` for `x ∈ U⁺`; the image must have Laurent coefficients.
    pub fn psi(&self, x: &UElement) -> Result<PsiVec> {
        let (acc, den) = self.psi_scaled(x)?;
        acc.div_exact(&den)
            .ok_or_else(|| Error::Verification("image under the shuffle embedding is not integral".into()))
    }

    /// `(den · Ψ(x), den)` where `den` clears the denominators of `x`.
    pub fn psi_scaled(&self, x: &UElement) -> Result<(PsiVec, LaurentInt)> {
        let terms = x.uplus_terms().ok_or(Error::NotInUPlus)?;
        let mut den = LaurentInt::one();
        for (_, c) in &terms {
            if !c.den().is_one() {
                den = laurent_lcm(&den, c.den());
            }
        }
        let mut acc = PsiVec::zero();
        for (w, c) in terms {
            let k = c.mul_laurent(&den).to_laurent()?;
            let b = self.weight_basis(&weight_of_word(self.rank(), w))?;
            match b.normal_index(w) {
                Some(i) => acc.add_scaled(b.psi_of_normal(i), &k),
                None => acc.add_scaled(&psi_word(w, &self.rs.form), &k),
            }
        }
        Ok((acc, den))
    }

    /// The element of `U⁺_ν` with shuffle image `v`.
    pub fn from_psi(&self, nu: &[u32], v: &PsiVec) -> Result<UElement> {
        let b = self.weight_basis(nu)?;
        let y = b.preimage(v)?;
        let mut out = UElement::zero(self.rank());
        for (i, c) in y.into_iter().enumerate() {
            out.add_term(MixedTerm::e_only(self.rank(), b.normal_words[i].clone()), &c);
        }
        Ok(out)
    }

    /// Reduces a free combination of E-words.
    pub fn from_words<'a>(&self, comb: impl IntoIterator<Item = (&'a Word, &'a RatFunc)>) -> Result<UElement> {
        let mut acc = Raw::new();
        for (w, c) in comb {
            raw_add(&mut acc, MixedTerm::e_only(self.rank(), w.clone()), c.clone());
        }
        self.reduce_raw(acc)
    }

    /// Weight of a homogeneous element of `U⁺` (`None` if zero or inhomogeneous).
    pub fn weight_of(&self, x: &UElement) -> Option<Weight> {
        let mut it = x.terms().map(|(t, _)| {
            let mut v: Vec<i64> = weight_of_word(self.rank(), &t.e).into_iter().map(i64::from).collect();
            for &a in &t.f {
                v[a as usize - 1] -= 1;
            }
            v
        });
        let first = it.next()?;
        if it.all(|v| v == first) && first.iter().all(|&x| x >= 0) {
            Some(first.into_iter().map(|x| x as u32).collect())
        } else {
            None
        }
    }

    pub fn serre_relator(&self, i: usize, j: usize) -> UElement {
        let mut out = UElement::zero(self.rank());
        for (w, c) in serre_relator(&self.rs, i, j) {
            out.add_term(MixedTerm::e_only(self.rank(), w), &RatFunc::from_laurent(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> UAlgebra {
        UAlgebra::new(LieType::parse(s).unwrap())
    }

    fn two() -> RatFunc {
        RatFunc::from_laurent(LaurentInt::from_terms([(1, 1i64), (-1, 1)]))
    }

    #[test]
    fn a2_weight_bases() {
        let u = alg("A2");
        let b = u.weight_basis(&[1, 1]).unwrap();
        assert_eq!(b.normal_words, vec![vec![1, 2], vec![2, 1]]);
        let b = u.weight_basis(&[2, 1]).unwrap();
        assert_eq!(b.all_words.len(), 3);
        assert_eq!(b.normal_words, vec![vec![1, 1, 2], vec![1, 2, 1]]);
        assert_eq!(b.reducers(u.form()).unwrap().len(), 1);
        let r = u.reduce_word(&[2, 1, 1]).unwrap();
        assert_eq!(r, vec![(vec![1, 1, 2], RatFunc::from_int(-1)), (vec![1, 2, 1], two())]);
    }

    #[test]
    fn commutator_and_conjugation() {
        let u = alg("A2");
        let x = u.normalize(&[(RatFunc::one(), vec![Gen::E(1), Gen::F(1)])]).unwrap();
        let mut k1 = vec![0, 0];
        k1[0] = 1;
        let inv = RatFunc::one().div_laurent(&q_diff(1));
        assert_eq!(x.coeff(&MixedTerm { f: vec![1], k: vec![0, 0], e: vec![1] }), RatFunc::one());
        assert_eq!(x.coeff(&MixedTerm { f: vec![], k: k1, e: vec![] }), inv);
        assert_eq!(x.len(), 3);
        let y = u.normalize(&[(RatFunc::one(), vec![Gen::K(1, 1), Gen::E(2), Gen::K(1, -1)])]).unwrap();
        assert_eq!(y, UElement::e_word(2, vec![2], RatFunc::q_pow(-1)));
    }

    #[test]
    fn serre_relators_normalize_to_zero() {
        for t in ["A3", "B2", "G2", "C3", "D4"] {
            let u = alg(t);
            for i in 1..=u.rank() {
                for j in 1..=u.rank() {
                    if i != j {
                        let s = u.serre_relator(i, j);
                        assert!(u.renormalize(&s).unwrap().is_zero(), "{t} {i} {j}");
                        let p = u.multiply(&s, &u.generator(1)).unwrap();
                        assert!(p.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn divided_powers_and_bar() {
        let u = alg("A2");
        let d = u.divided_power(1, 2).unwrap();
        assert_eq!(d.coeff_e(&[1, 1]), RatFunc::one().div_laurent(&LaurentInt::from_terms([(1, 1i64), (-1, 1)])));
        assert!(u.divided_power(1, 0).unwrap() == UElement::one(2));
        let x = UElement::e_word(2, vec![1, 2], RatFunc::q_pow(1));
        assert_eq!(u.bar_element(&x).unwrap(), UElement::e_word(2, vec![1, 2], RatFunc::q_pow(-1)));
    }

    #[test]
    fn psi_round_trip() {
        let u = alg("B2");
        let x = u.e_word(&[2, 1, 1, 2, 1]).unwrap();
        let p = u.psi(&x).unwrap();
        assert_eq!(u.from_psi(&[3, 2], &p).unwrap(), x);
    }

    #[test]
    fn height_cap_is_loud() {
        let u = UAlgebra::with_cap(LieType::parse("A2").unwrap(), 3);
        assert!(matches!(u.weight_basis(&[2, 2]), Err(Error::HeightCapExceeded { .. })));
    }
}
