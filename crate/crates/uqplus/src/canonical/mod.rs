//! The canonical basis `b_c`: start from `M_{f(c)}` and subtract
//! bar-invariant multiples of `M_{f(c_k)}` for `c_k` ascending in `S_c`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomials;
use crate::par;
use crate::pbw::{ExponentVector, PBWExpansion, PbwMap, PbwTerm};
use crate::qcoeff::{bar_invariant_split, LaurentInt, RatFunc};
use crate::ualgebra::UElement;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Correction {
    pub ck: ExponentVector,
    pub xi_prime: LaurentInt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalElement {
    pub c: ExponentVector,
    pub expansion: PBWExpansion,
    pub corrections: Vec<Correction>,
}

#[derive(Serialize, Deserialize)]
struct CanonicalJson {
    c: ExponentVector,
    expansion: Vec<PbwTerm<LaurentInt>>,
    corrections: Vec<Correction>,
}

impl Serialize for CanonicalElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CanonicalJson { c: self.c.clone(), expansion: self.expansion.terms(), corrections: self.corrections.clone() }
            .serialize(s)
    }
}

impl CanonicalElement {
    /// Rebuilds an element from its JSON form; the weight is recomputed by the caller.
    pub fn from_json(v: &serde_json::Value, weight: Vec<u32>) -> Result<Self> {
        let j: CanonicalJson = serde_json::from_value(v.clone()).map_err(|e| Error::BadInput(e.to_string()))?;
        let coeffs = j.expansion.into_iter().map(|t| (t.c, t.coeff)).collect();
        Ok(CanonicalElement { c: j.c, expansion: PBWExpansion::from_map(weight, coeffs), corrections: j.corrections })
    }
}

/// Outcome of the three checks; `failure` names the first one violated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub c: ExponentVector,
    pub unitriangular: bool,
    pub sublattice: bool,
    pub bar_invariant: bool,
    pub failure: Option<String>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub struct Canonical {
    pub mono: Arc<Monomials>,
}

impl Canonical {
    pub fn new(mono: Arc<Monomials>) -> Self {
        Canonical { mono }
    }

    /// `S_c = {d ≥ c of the same weight}`, ascending.
    pub fn enum_s(&self, c: &[u32]) -> Result<Vec<ExponentVector>> {
        let nu = self.mono.pbw.weight_of(c)?;
        self.mono.pbw.alg.check_height(&nu)?;
        let mut s: Vec<ExponentVector> = self.mono.pbw.kostant(&nu).into_iter().filter(|d| d.as_slice() >= c).collect();
        s.reverse();
        Ok(s)
    }

    fn monomial_expansion(&self, c: &[u32]) -> Result<Arc<PBWExpansion>> {
        let (k, _) = self.mono.f(c)?;
        self.mono.expand(&k)
    }

    pub fn canonical_b(&self, c: &[u32]) -> Result<CanonicalElement> {
        let s = self.enum_s(c)?;
        let first = self.monomial_expansion(c)?;
        let mut x: PbwMap = first.coeffs.clone();
        let mut corrections = Vec::new();
        for ck in &s[1..] {
            let xi = x.get(ck).cloned().unwrap_or_default();
            let (inv, _) = bar_invariant_split(&xi);
            if inv.is_zero() {
                continue;
            }
            let m = self.monomial_expansion(ck)?;
            for (d, y) in &m.coeffs {
                let slot = x.entry(d.clone()).or_default();
                *slot = &*slot - &(&inv * y);
            }
            x.retain(|_, v| !v.is_zero());
            corrections.push(Correction { ck: ck.clone(), xi_prime: inv });
        }
        Ok(CanonicalElement { c: c.to_vec(), expansion: PBWExpansion::from_map(first.weight.clone(), x), corrections })
    }

    pub fn canonical_basis_at_weight(&self, nu: &[u32]) -> Result<Vec<CanonicalElement>> {
        self.mono.pbw.alg.check_height(nu)?;
        let labels = self.mono.pbw.kostant(nu);
        par::map(self.mono.pbw.mode(), &labels, |c| self.canonical_b(c)).into_iter().collect()
    }

    /// `Σ ξ_d E_d` in the word model.
    pub fn to_element(&self, e: &PBWExpansion) -> Result<UElement> {
        let pbw = &self.mono.pbw;
        let mut x = UElement::zero(pbw.alg.rank());
        for (d, y) in &e.coeffs {
            x.add_scaled(&pbw.pbw_monomial(d)?, &RatFunc::from_laurent(y.clone()));
        }
        Ok(x)
    }

    /// Checks leading term, the `q^{-1} Z[q^{-1}]` condition, and bar-invariance
    /// (rebuilt in the word model, barred, expanded again).
    pub fn verify_canonical(&self, b: &CanonicalElement) -> Certificate {
        let mut cert = Certificate { c: b.c.clone(), unitriangular: true, sublattice: true, bar_invariant: true, failure: None };
        let fail = |cert: &mut Certificate, msg: String| {
            cert.failure.get_or_insert(msg);
        };
        if !b.expansion.coeff(&b.c).is_one() {
            cert.unitriangular = false;
            fail(&mut cert, format!("coefficient at c = {:?} is not 1", b.c));
        }
        for (d, x) in &b.expansion.coeffs {
            if d == &b.c {
                continue;
            }
            if d < &b.c {
                cert.unitriangular = false;
                fail(&mut cert, format!("term {d:?} is below c"));
            }
            if !x.in_qinv_z_qinv() {
                cert.sublattice = false;
                fail(&mut cert, format!("coefficient at {d:?} is {x}, not in q^-1 Z[q^-1]"));
            }
        }
        match self.bar_check(&b.expansion) {
            Ok(true) => {}
            Ok(false) => {
                cert.bar_invariant = false;
                fail(&mut cert, "not bar-invariant".into());
            }
            Err(e) => {
                cert.bar_invariant = false;
                fail(&mut cert, format!("bar check failed: {e}"));
            }
        }
        cert
    }

    /// Whether `Σ ξ_d E_d` is fixed by the bar involution.
    pub fn bar_check(&self, e: &PBWExpansion) -> Result<bool> {
        let x = self.to_element(e)?;
        let y = self.mono.pbw.alg.bar_element(&x)?;
        if x != y {
            return Ok(false);
        }
        let back: BTreeMap<ExponentVector, RatFunc> = self.mono.pbw.pbw_expand(&y)?.coeffs;
        Ok(back == e.to_ratfunc().coeffs)
    }
}
