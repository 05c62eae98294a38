//! PBW bases of `U⁺`, by default for the word `i`.
//!
//! Root vectors are built with the braid operators. Products are straightened
//! directly in PBW coordinates: for `s > t` the relation `E_s E_t = Σ r_d E_d`
//! (with `d` supported between `t` and `s`) is found once by solving in the
//! shuffle algebra, and `E_c · E_t` is then computed recursively by moving
//! `E_t` leftwards through the factors of `E_c`. Only the relations and the
//! root vectors need word-model computations; everything else is exact
//! arithmetic on sparse PBW coordinates.

pub mod braid;
mod expansion;
pub mod rank_two;
pub mod weyl;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub use expansion::{
    lattice_check, lex_compare, ExponentVector, Expansion, LatticeMode, LatticeReport, PBWExpansion, PbwMap, PbwTerm,
};
pub use weyl::ChainPlan;

use crate::error::{Error, Result};
use crate::linalg::{mat_vec, ratfunc_inverse, ModEchelon};
use crate::once::OnceMap;
use crate::par::{self, Mode};
use crate::qcoeff::{laurent_lcm, modp, quantum_factorial, quantum_integer, LaurentInt, RatFunc};
use crate::rootdata::{kostant_vectors, unit, validate_convex_order, word_i, ConvexOrder, Weight};
use crate::ualgebra::{MixedTerm, PsiVec, UAlgebra, UElement, Word};

/// How root vectors are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathChoice {
    /// Lowest intermediate heights, using `T_y(E_k) = E_{k'}` shortcuts.
    #[default]
    Shortest,
    /// `T_{i_1} ... T_{i_{t-1}}` applied exactly as written.
    Literal,
}

type Shared<T> = Result<Arc<T>>;

pub struct Pbw {
    pub alg: Arc<UAlgebra>,
    pub order: ConvexOrder,
    mode: Mode,
    path: PathChoice,
    simple_pos: Vec<usize>,
    roots: OnceMap<usize, Shared<UElement>>,
    root_psi: OnceMap<(usize, u32), Shared<PsiVec>>,
    mono_psi: OnceMap<ExponentVector, Shared<PsiVec>>,
    rels: OnceMap<(usize, usize), Shared<PbwMap>>,
    products: OnceMap<(ExponentVector, usize), Shared<PbwMap>>,
    words: OnceMap<Word, Shared<PbwMap>>,
}

fn add_into(acc: &mut PbwMap, c: ExponentVector, x: LaurentInt) {
    if x.is_zero() {
        return;
    }
    match acc.get_mut(&c) {
        Some(y) => {
            *y += &x;
            if y.is_zero() {
                acc.remove(&c);
            }
        }
        None => {
            acc.insert(c, x);
        }
    }
}

fn div_map(m: &PbwMap, d: &LaurentInt) -> Result<PbwMap> {
    if d.is_one() {
        return Ok(m.clone());
    }
    m.iter()
        .map(|(c, x)| {
            x.div_exact(d)
                .map(|y| (c.clone(), y))
                .ok_or_else(|| Error::Verification(format!("PBW coefficient at {c:?} is not divisible by {d}")))
        })
        .collect()
}

fn last_support(c: &[u32]) -> Option<usize> {
    c.iter().rposition(|&x| x > 0)
}

fn first_support(c: &[u32]) -> Option<usize> {
    c.iter().position(|&x| x > 0)
}

impl Pbw {
    pub fn new(alg: Arc<UAlgebra>) -> Result<Self> {
        Self::with_options(alg, Mode::default_mode(), PathChoice::default())
    }

    pub fn with_options(alg: Arc<UAlgebra>, mode: Mode, path: PathChoice) -> Result<Self> {
        let w = word_i(alg.lie());
        Self::with_word(alg, &w, mode, path)
    }

    /// The PBW basis of another reduced expression of the longest element.
    pub fn with_word(alg: Arc<UAlgebra>, word: &[usize], mode: Mode, path: PathChoice) -> Result<Self> {
        let order = validate_convex_order(&alg.rs, word)?;
        let n = alg.rank();
        let simple_pos = (1..=n).map(|k| order.position(&unit(n, k)).expect("simple roots are positive")).collect();
        Ok(Pbw {
            alg,
            order,
            mode,
            path,
            simple_pos,
            roots: OnceMap::new(),
            root_psi: OnceMap::new(),
            mono_psi: OnceMap::new(),
            rels: OnceMap::new(),
            products: OnceMap::new(),
            words: OnceMap::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Index (0-based) of `α_k` in the convex order.
    pub fn simple_position(&self, k: usize) -> usize {
        self.simple_pos[k - 1]
    }

    pub fn weight_of(&self, c: &[u32]) -> Result<Weight> {
        self.check_len(c)?;
        Ok(self.order.weight_of(c))
    }

    fn check_len(&self, c: &[u32]) -> Result<()> {
        if c.len() != self.len() {
            return Err(Error::LengthMismatch(c.len(), self.len()));
        }
        Ok(())
    }

    fn unit_vec(&self, t: usize, m: u32) -> ExponentVector {
        let mut c = vec![0; self.len()];
        c[t] = m;
        c
    }

    /// The evaluation route used for `E_{β_{t+1}}` (0-based `t`).
    pub fn plan(&self, t: usize) -> ChainPlan {
        let w = &self.order.word;
        match self.path {
            PathChoice::Shortest => weyl::plan(&self.alg.rs, &w[..t], w[t]),
            PathChoice::Literal => weyl::literal_plan(&self.alg.rs, &w[..t], w[t]),
        }
    }

    fn root(&self, t: usize) -> Shared<UElement> {
        self.roots.get_or_init(&t, || {
            let p = self.plan(t);
            let mut x = self.alg.generator(p.start);
            for &j in &p.steps {
                x = braid::ti_plus(&self.alg, j, &x)?;
            }
            if self.alg.weight_of(&x).as_ref() != Some(&self.order.betas[t]) {
                return Err(Error::ImpureResult(t + 1));
            }
            Ok(Arc::new(x))
        })
    }

    /// `E_{β_t}^{(m)}` for `t` in `1..=r`.
    pub fn root_vector(&self, t: usize, m: u32) -> Result<UElement> {
        if t == 0 || t > self.len() {
            return Err(Error::BadInput(format!("root index {t} out of range 1..={}", self.len())));
        }
        let t = t - 1;
        let mut w = self.order.betas[t].clone();
        w.iter_mut().for_each(|x| *x *= m);
        self.alg.check_height(&w)?;
        let x = self.root(t)?;
        let mut acc = UElement::one(self.alg.rank());
        for _ in 0..m {
            acc = self.alg.multiply(&acc, &x)?;
        }
        Ok(acc.scale(&RatFunc::one().div_laurent(&quantum_factorial(m, self.order.d[t]))))
    }

    /// `E_c` in the word model.
    pub fn pbw_monomial(&self, c: &[u32]) -> Result<UElement> {
        let nu = self.weight_of(c)?;
        self.alg.check_height(&nu)?;
        let mut acc = UElement::one(self.alg.rank());
        for (t, &m) in c.iter().enumerate() {
            if m > 0 {
                acc = self.alg.multiply(&acc, &self.root_vector(t + 1, m)?)?;
            }
        }
        Ok(acc)
    }

    /// `Ψ(E_{β_{t+1}}^{(m)})`.
    fn psi_root(&self, t: usize, m: u32) -> Shared<PsiVec> {
        self.root_psi.get_or_init(&(t, m), || {
            let mut w = self.order.betas[t].clone();
            w.iter_mut().for_each(|x| *x *= m);
            self.alg.check_height(&w)?;
            if m == 1 {
                return Ok(Arc::new(self.alg.psi(&*self.root(t)?)?));
            }
            let prev = self.psi_root(t, m - 1)?;
            let one = self.psi_root(t, 1)?;
            let prod = prev.shuffle(&one, self.alg.form());
            let v = prod
                .div_exact(&quantum_integer(m, self.order.d[t]))
                .ok_or_else(|| Error::Verification(format!("divided power {m} of root vector {} is not integral", t + 1)))?;
            Ok(Arc::new(v))
        })
    }

    /// `Ψ(E_d)`.
    fn psi_monomial(&self, d: &[u32]) -> Shared<PsiVec> {
        let Some(s) = last_support(d) else {
            return Ok(Arc::new(PsiVec::one()));
        };
        if d.iter().filter(|&&x| x > 0).count() == 1 {
            return self.psi_root(s, d[s]);
        }
        self.mono_psi.get_or_init(&d.to_vec(), || {
            self.alg.check_height(&self.order.weight_of(d))?;
            let mut head = d.to_vec();
            head[s] = 0;
            let a = self.psi_monomial(&head)?;
            let b = self.psi_root(s, d[s])?;
            Ok(Arc::new(a.shuffle(&b, self.alg.form())))
        })
    }

    /// Solves `target = Σ_j y_j Ψ(E_{cols[j]})`. `Ok(None)` if the target is
    /// outside the span; an error if the columns are dependent.
    fn solve(&self, nu: &[u32], cols: &[ExponentVector], target: &PsiVec) -> Result<Option<Vec<RatFunc>>> {
        let psis: Vec<Arc<PsiVec>> = cols.iter().map(|d| self.psi_monomial(d)).collect::<Result<_>>()?;
        let mut index: HashMap<&Word, usize> = HashMap::new();
        for p in &psis {
            for (w, _) in p.iter() {
                let k = index.len();
                index.entry(w).or_insert(k);
            }
        }
        let width = index.len();
        let x = modp::points(3)[2];
        let xinv = modp::inv(x);
        let mut ech = ModEchelon::new(width);
        let mut test = Vec::with_capacity(cols.len());
        for p in &psis {
            let mut v = vec![0u64; width];
            for (w, c) in p.iter() {
                v[index[w]] = c.eval_mod(x, xinv);
            }
            match ech.insert(v) {
                Some(piv) => test.push(piv),
                None => return Err(Error::SingularBasisMatrix(nu.to_vec())),
            }
        }
        let mut words: Vec<&Word> = vec![&EMPTY; width];
        for (w, &k) in &index {
            words[k] = w;
        }
        let entry = |p: &PsiVec, w: &Word| p.get(w).map_or_else(RatFunc::zero, |c| RatFunc::from_laurent(c.clone()));
        let mat: Vec<Vec<RatFunc>> = test.iter().map(|&i| psis.iter().map(|p| entry(p, words[i])).collect()).collect();
        let inv = ratfunc_inverse(&mat).ok_or_else(|| Error::SingularBasisMatrix(nu.to_vec()))?;
        let rhs: Vec<RatFunc> = test.iter().map(|&i| entry(target, words[i])).collect();
        let y = mat_vec(&inv, &rhs);
        // exact check on every word
        let mut den = LaurentInt::one();
        for c in &y {
            if !c.is_zero() && !c.den().is_one() {
                den = laurent_lcm(&den, c.den());
            }
        }
        let mut acc = target.scale(&-&den);
        for (p, c) in psis.iter().zip(&y) {
            if !c.is_zero() {
                acc.add_scaled(p, &c.mul_laurent(&den).to_laurent()?);
            }
        }
        Ok(acc.is_zero().then_some(y))
    }

    /// `E_{β_s} E_{β_t}` in PBW coordinates, `s > t` (0-based).
    pub fn relation(&self, s: usize, t: usize) -> Shared<PbwMap> {
        assert!(s > t, "relations are needed for s > t only");
        self.rels.get_or_init(&(s, t), || {
            let nu: Weight = self.order.betas[s].iter().zip(&self.order.betas[t]).map(|(a, b)| a + b).collect();
            self.alg.check_height(&nu)?;
            let target = self.psi_root(s, 1)?.shuffle(&*self.psi_root(t, 1)?, self.alg.form());
            let all = kostant_vectors(&nu, &self.order);
            let inner: Vec<ExponentVector> = all
                .iter()
                .filter(|d| first_support(d) >= Some(t) && last_support(d) <= Some(s))
                .cloned()
                .collect();
            let mut sol = self.solve(&nu, &inner, &target)?.map(|y| (inner.clone(), y));
            if sol.is_none() {
                log::warn!("relation ({}, {}) needed the full weight space", s + 1, t + 1);
                sol = self.solve(&nu, &all, &target)?.map(|y| (all.clone(), y));
            }
            let (cols, y) = sol.ok_or_else(|| Error::Verification(format!("no PBW relation for ({}, {})", s + 1, t + 1)))?;
            let mut out = PbwMap::new();
            for (d, c) in cols.into_iter().zip(y) {
                if !c.is_zero() {
                    out.insert(d, c.to_laurent()?);
                }
            }
            Ok(Arc::new(out))
        })
    }

    /// `E_c · E_{β_{t+1}}` in PBW coordinates.
    pub fn mul_gen(&self, c: &[u32], t: usize) -> Shared<PbwMap> {
        let single = |c: ExponentVector, x: LaurentInt| Ok(Arc::new(BTreeMap::from([(c, x)])));
        let s = match last_support(c) {
            None => return single(self.unit_vec(t, 1), LaurentInt::one()),
            Some(s) => s,
        };
        if t >= s {
            let mut d = c.to_vec();
            d[t] += 1;
            let x = if t == s { quantum_integer(d[t], self.order.d[t]) } else { LaurentInt::one() };
            return single(d, x);
        }
        self.products.get_or_init(&(c.to_vec(), t), || {
            let m = c[s];
            let mut head = c.to_vec();
            head[s] = 0;
            let rel = self.relation(s, t)?;
            // E_s^{(m)} E_t = E_s^{(m-1)} (E_s E_t) / [m]
            let base = self.unit_vec(s, m - 1);
            let mut y = PbwMap::new();
            for (d, r) in rel.iter() {
                for (e, x) in self.mul_mono(&base, d)? {
                    add_into(&mut y, e, &x * r);
                }
            }
            let z = div_map(&y, &quantum_integer(m, self.order.d[s]))?;
            let mut out = PbwMap::new();
            for (d, r) in &z {
                for (e, x) in self.mul_mono(&head, d)? {
                    add_into(&mut out, e, &x * r);
                }
            }
            Ok(Arc::new(out))
        })
    }

    /// `E_a · E_d`.
    pub fn mul_mono(&self, a: &[u32], d: &[u32]) -> Result<PbwMap> {
        match (last_support(a), first_support(d)) {
            (None, _) => return Ok(BTreeMap::from([(d.to_vec(), LaurentInt::one())])),
            (_, None) => return Ok(BTreeMap::from([(a.to_vec(), LaurentInt::one())])),
            (Some(x), Some(y)) if x < y => {
                let sum = a.iter().zip(d).map(|(p, q)| p + q).collect();
                return Ok(BTreeMap::from([(sum, LaurentInt::one())]));
            }
            _ => {}
        }
        let mut cur = BTreeMap::from([(a.to_vec(), LaurentInt::one())]);
        for (u, &k) in d.iter().enumerate() {
            if k > 0 {
                cur = self.mul_divided(&cur, u, k)?;
            }
        }
        Ok(cur)
    }

    /// `x · E_{β_{u+1}}^{(k)}`.
    pub fn mul_divided(&self, x: &PbwMap, u: usize, k: u32) -> Result<PbwMap> {
        let mut cur = x.clone();
        for _ in 0..k {
            let mut next = PbwMap::new();
            for (c, a) in &cur {
                for (e, b) in self.mul_gen(c, u)?.iter() {
                    add_into(&mut next, e.clone(), a * b);
                }
            }
            cur = next;
        }
        div_map(&cur, &quantum_factorial(k, self.order.d[u]))
    }

    /// `x · E_i^{(k)}` for a Chevalley generator.
    pub fn mul_chevalley(&self, x: &PbwMap, i: usize, k: u32) -> Result<PbwMap> {
        self.mul_divided(x, self.simple_position(i), k)
    }

    /// PBW coordinates of `E_{a_1}^{(k_1)} E_{a_2}^{(k_2)} ...`.
    pub fn expand_divided_product(&self, factors: &[(usize, u32)]) -> Result<PBWExpansion> {
        let n = self.alg.rank();
        let mut weight = vec![0u32; n];
        let mut cur = BTreeMap::from([(vec![0; self.len()], LaurentInt::one())]);
        for &(i, k) in factors {
            if i == 0 || i > n {
                return Err(Error::BadInput(format!("node {i} out of range")));
            }
            weight[i - 1] += k;
            if k > 0 {
                cur = self.mul_chevalley(&cur, i, k)?;
            }
        }
        Ok(PBWExpansion::from_map(weight, cur))
    }

    /// PBW coordinates of a word `E_{w_1} E_{w_2} ...`.
    pub fn word_expansion(&self, w: &[u8]) -> Shared<PbwMap> {
        if w.is_empty() {
            return Ok(Arc::new(BTreeMap::from([(vec![0; self.len()], LaurentInt::one())])));
        }
        self.words.get_or_init(&w.to_vec(), || {
            let head = self.word_expansion(&w[..w.len() - 1])?;
            let t = self.simple_position(w[w.len() - 1] as usize);
            let mut out = PbwMap::new();
            for (c, a) in head.iter() {
                for (e, b) in self.mul_gen(c, t)?.iter() {
                    add_into(&mut out, e.clone(), a * b);
                }
            }
            Ok(Arc::new(out))
        })
    }

    fn homogeneous_weight(&self, x: &UElement) -> Result<Weight> {
        if !x.is_uplus() {
            return Err(Error::NotInUPlus);
        }
        if x.is_zero() {
            return Ok(vec![0; self.alg.rank()]);
        }
        self.alg.weight_of(x).ok_or_else(|| Error::BadInput("element is not homogeneous".into()))
    }

    /// Coordinates of `x ∈ U⁺` in the PBW basis, by straightening its words.
    pub fn pbw_expand(&self, x: &UElement) -> Result<Expansion<RatFunc>> {
        let weight = self.homogeneous_weight(x)?;
        let terms: Vec<(&MixedTerm, &RatFunc)> = x.terms().collect();
        let parts = par::map(self.mode, &terms, |(t, c)| self.word_expansion(&t.e).map(|m| (m, (*c).clone())));
        let mut acc: BTreeMap<ExponentVector, RatFunc> = BTreeMap::new();
        for p in parts {
            let (m, c) = p?;
            for (d, x) in m.iter() {
                let v = c.mul_laurent(x);
                let slot = acc.entry(d.clone()).or_default();
                *slot = &*slot + &v;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Expansion { weight, coeffs: acc })
    }

    /// The same coordinates by solving against `Ψ(E_c)` for every `c` of the weight.
    pub fn pbw_expand_by_matrix(&self, x: &UElement) -> Result<Expansion<RatFunc>> {
        let weight = self.homogeneous_weight(x)?;
        let cols = kostant_vectors(&weight, &self.order);
        let (v, den) = self.alg.psi_scaled(x)?;
        let y = self.solve(&weight, &cols, &v)?.ok_or_else(|| Error::Verification("element outside the PBW span".into()))?;
        let coeffs =
            cols.into_iter().zip(y).filter(|(_, c)| !c.is_zero()).map(|(d, c)| (d, c.div_laurent(&den))).collect();
        Ok(Expansion { weight, coeffs })
    }

    /// The exponent vectors of a weight, in descending lexicographic order.
    pub fn kostant(&self, nu: &[u32]) -> Vec<ExponentVector> {
        kostant_vectors(nu, &self.order)
    }

    /// Cached relations `(s, t) → E_s E_t`, 0-based.
    pub fn cached_relations(&self) -> Vec<((usize, usize), PbwMap)> {
        let mut v: Vec<_> =
            self.rels.entries().into_iter().filter_map(|(k, r)| r.ok().map(|m| (k, (*m).clone()))).collect();
        v.sort_by_key(|x| x.0);
        v
    }

    /// Seeds a relation read back from a cache.
    pub fn seed_relation(&self, s: usize, t: usize, m: PbwMap) {
        self.rels.insert((s, t), Ok(Arc::new(m)));
    }

    /// Cached root vectors (0-based position, element).
    pub fn cached_roots(&self) -> Vec<(usize, UElement)> {
        let mut v: Vec<_> =
            self.roots.entries().into_iter().filter_map(|(k, r)| r.ok().map(|m| (k, (*m).clone()))).collect();
        v.sort_by_key(|a| a.0);
        v
    }

    pub fn seed_root(&self, t: usize, x: UElement) {
        self.roots.insert(t, Ok(Arc::new(x)));
    }
}

static EMPTY: Word = Vec::new();

#[cfg(test)]
pub(crate) mod tests;
