//! Monomials `M_k = E_{j_1}^{(k_1)} ... E_{j_r}^{(k_r)}` over word `j`, the
//! exponent map `f`, and triangularity against the PBW basis.

pub mod closed;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use closed::{block_matrix, f_closed, levels, BlockKind, Level};

use crate::error::{Error, Result};
use crate::once::OnceMap;
use crate::par;
use crate::pbw::{lattice_check, ExponentVector, LatticeMode, PBWExpansion, Pbw};
use crate::qcoeff::LaurentInt;
use crate::rootdata::{validate_convex_order, word_j, ConvexOrder, Weight};
use crate::ualgebra::UElement;

/// `k_t` is the exponent of the `t`-th letter of word `j`.
pub type MonomialExponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HigherTerm {
    pub d: ExponentVector,
    pub coeff: LaurentInt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangularReport {
    pub c: ExponentVector,
    pub k: MonomialExponents,
    pub leading_ok: bool,
    /// Every term other than `E_c`, ascending.
    pub higher: Vec<HigherTerm>,
    pub integral: bool,
    pub violations: Vec<String>,
}

impl TriangularReport {
    pub fn passed(&self) -> bool {
        self.leading_ok && self.integral && self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisMatrix {
    pub weight: Weight,
    /// Row and column labels, descending.
    pub labels: Vec<ExponentVector>,
    pub ks: Vec<MonomialExponents>,
    /// `entries[a][b]` is the coefficient of `E_{labels[b]}` in `M_{f(labels[a])}`.
    pub entries: Vec<Vec<LaurentInt>>,
    pub unitriangular: bool,
}

/// Where an exponent vector `f(c)` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Closed,
    Oracle,
}

type Shared<T> = Result<Arc<T>>;

pub struct Monomials {
    pub pbw: Arc<Pbw>,
    pub jorder: ConvexOrder,
    levels: Option<Vec<Level>>,
    expansions: OnceMap<MonomialExponents, Shared<PBWExpansion>>,
    searches: OnceMap<ExponentVector, Shared<Vec<MonomialExponents>>>,
}

impl Monomials {
    pub fn new(pbw: Arc<Pbw>) -> Result<Self> {
        let t = pbw.alg.lie();
        let w = word_j(t);
        Self::with_word(pbw, &w)
    }

    /// Monomials over another reduced word. Closed forms are only attached
    /// when the PBW order and the word are the catalogue pair `(i, j)`.
    pub fn with_word(pbw: Arc<Pbw>, word: &[usize]) -> Result<Self> {
        let t = pbw.alg.lie();
        let jorder = validate_convex_order(&pbw.alg.rs, word)?;
        let standard = word == word_j(t).as_slice() && pbw.order.word == crate::rootdata::word_i(t);
        let levels = if standard { levels(t).ok() } else { None };
        Ok(Monomials { pbw, jorder, levels, expansions: OnceMap::new(), searches: OnceMap::new() })
    }

    pub fn len(&self) -> usize {
        self.jorder.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jorder.is_empty()
    }

    pub fn levels(&self) -> Option<&[Level]> {
        self.levels.as_deref()
    }

    fn check_k(&self, k: &[u32]) -> Result<Weight> {
        if k.len() != self.len() {
            return Err(Error::LengthMismatch(k.len(), self.len()));
        }
        Ok(self.weight_of_k(k))
    }

    /// `Σ k_t α_{j_t}`.
    pub fn weight_of_k(&self, k: &[u32]) -> Weight {
        let mut w = vec![0u32; self.pbw.alg.rank()];
        for (&x, &a) in k.iter().zip(&self.jorder.word) {
            w[a - 1] += x;
        }
        w
    }

    /// `M_k` in the word model.
    #[allow(non_snake_case)]
    pub fn monomial_M(&self, k: &[u32]) -> Result<UElement> {
        let nu = self.check_k(k)?;
        let alg = &self.pbw.alg;
        alg.check_height(&nu)?;
        let mut acc = UElement::one(alg.rank());
        for (&x, &a) in k.iter().zip(&self.jorder.word) {
            if x > 0 {
                acc = alg.multiply(&acc, &alg.divided_power(a, x)?)?;
            }
        }
        Ok(acc)
    }

    /// PBW coordinates of `M_k`.
    pub fn expand(&self, k: &[u32]) -> Shared<PBWExpansion> {
        self.check_k(k)?;
        self.expansions.get_or_init(&k.to_vec(), || {
            let factors: Vec<(usize, u32)> =
                k.iter().zip(&self.jorder.word).filter(|(x, _)| **x > 0).map(|(&x, &a)| (a, x)).collect();
            Ok(Arc::new(self.pbw.expand_divided_product(&factors)?))
        })
    }

    /// All `k` with `Σ k_t α_{j_t} = ν`, descending.
    pub fn candidates(&self, nu: &[u32]) -> Vec<MonomialExponents> {
        let word = &self.jorder.word;
        let mut out = Vec::new();
        let mut cur = vec![0u32; word.len()];
        let mut rem = nu.to_vec();
        fn rec(t: usize, word: &[usize], rem: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if t == word.len() {
                if rem.iter().all(|&x| x == 0) {
                    out.push(cur.clone());
                }
                return;
            }
            let a = word[t] - 1;
            // the last occurrence of a letter must take what is left
            let last = !word[t + 1..].contains(&word[t]);
            let lo = if last { rem[a] } else { 0 };
            for x in (lo..=rem[a]).rev() {
                cur[t] = x;
                rem[a] -= x;
                rec(t + 1, word, rem, cur, out);
                rem[a] += x;
            }
            cur[t] = 0;
        }
        rec(0, word, &mut rem, &mut cur, &mut out);
        out
    }

    /// Checks `M_k = E_c + Σ_{d > c} ξ_d E_d` with `ξ_d ∈ Z[q, q^{-1}]`.
    pub fn verify_triangular(&self, c: &[u32], k: &[u32]) -> Result<TriangularReport> {
        let nu = self.pbw.weight_of(c)?;
        let nk = self.check_k(k)?;
        if nu != nk {
            return Err(Error::BadInput(format!("weight of k is {nk:?}, weight of c is {nu:?}")));
        }
        let e = self.expand(k)?;
        Ok(report(c, k, &e))
    }

    /// Every `k` whose monomial is `E_c` plus strictly higher terms, descending.
    pub fn f_search(&self, c: &[u32]) -> Shared<Vec<MonomialExponents>> {
        let nu = self.pbw.weight_of(c)?;
        self.pbw.alg.check_height(&nu)?;
        self.searches.get_or_init(&c.to_vec(), || {
            let cands = self.candidates(&nu);
            let hits = par::map(self.pbw.mode(), &cands, |k| {
                self.expand(k).map(|e| leading(&e).is_some_and(|(d, x)| d == c && x.is_one()))
            });
            let mut out = Vec::new();
            for (k, h) in cands.iter().zip(hits) {
                if h? {
                    out.push(k.clone());
                }
            }
            if out.is_empty() {
                return Err(Error::EmptyResult(c.to_vec()));
            }
            Ok(Arc::new(out))
        })
    }

    /// The closed form when one is attached to this pair of words.
    pub fn f_closed(&self, c: &[u32]) -> Result<MonomialExponents> {
        self.pbw.weight_of(c)?;
        let lv = self.levels.as_ref().ok_or_else(|| Error::UnsupportedType(self.pbw.alg.lie().to_string()))?;
        Ok(closed::apply_levels(lv, c))
    }

    /// `f(c)`: the closed form if available, else the greatest oracle answer.
    pub fn f(&self, c: &[u32]) -> Result<(MonomialExponents, Source)> {
        match self.f_closed(c) {
            Ok(k) => Ok((k, Source::Closed)),
            Err(Error::UnsupportedType(_)) => Ok((self.f_search(c)?[0].clone(), Source::Oracle)),
            Err(e) => Err(e),
        }
    }

    /// Finished oracle searches, sorted by `c`.
    pub fn cached_searches(&self) -> Vec<(ExponentVector, Vec<MonomialExponents>)> {
        let mut v: Vec<_> =
            self.searches.entries().into_iter().filter_map(|(c, r)| r.ok().map(|ks| (c, (*ks).clone()))).collect();
        v.sort();
        v
    }

    pub fn seed_search(&self, c: ExponentVector, ks: Vec<MonomialExponents>) {
        self.searches.insert(c, Ok(Arc::new(ks)));
    }

    /// Rows `M_{f(c)}` over all `c` of weight `ν`.
    pub fn monomial_basis_matrix(&self, nu: &[u32]) -> Result<BasisMatrix> {
        let labels = self.pbw.kostant(nu);
        let rows = par::map(self.pbw.mode(), &labels, |c| {
            let (k, _) = self.f(c)?;
            let e = self.expand(&k)?;
            Ok::<_, Error>((k, e))
        });
        let mut ks = Vec::new();
        let mut entries = Vec::new();
        let mut unitriangular = true;
        for (a, r) in rows.into_iter().enumerate() {
            let (k, e) = r?;
            let row: Vec<LaurentInt> = labels.iter().map(|d| e.coeff(d)).collect();
            for (b, x) in row.iter().enumerate() {
                // labels are descending, so d > c sits left of the diagonal
                let ok = match b.cmp(&a) {
                    std::cmp::Ordering::Equal => x.is_one(),
                    std::cmp::Ordering::Greater => x.is_zero(),
                    std::cmp::Ordering::Less => true,
                };
                unitriangular &= ok;
            }
            ks.push(k);
            entries.push(row);
        }
        Ok(BasisMatrix { weight: nu.to_vec(), labels, ks, entries, unitriangular })
    }
}

/// The lex-smallest term.
fn leading(e: &PBWExpansion) -> Option<(&ExponentVector, &LaurentInt)> {
    e.coeffs.iter().next()
}

fn report(c: &[u32], k: &[u32], e: &PBWExpansion) -> TriangularReport {
    let mut violations = Vec::new();
    let lead = e.coeffs.get(c);
    let leading_ok = lead.is_some_and(|x| x.is_one()) && leading(e).is_some_and(|(d, _)| d == c);
    match lead {
        None => violations.push(format!("no term at c = {c:?}")),
        Some(x) if !x.is_one() => violations.push(format!("coefficient at c is {x}")),
        _ => {}
    }
    let mut higher = Vec::new();
    for (d, x) in &e.coeffs {
        if d.as_slice() == c {
            continue;
        }
        if d.as_slice() < c {
            violations.push(format!("term {d:?} is below c"));
        }
        higher.push(HigherTerm { d: d.clone(), coeff: x.clone() });
    }
    let integral = lattice_check(&e.to_ratfunc(), LatticeMode::Integral).ok;
    TriangularReport { c: c.to_vec(), k: k.to_vec(), leading_ok, higher, integral, violations }
}
