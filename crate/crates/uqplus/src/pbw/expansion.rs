use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcoeff::{LaurentInt, RatFunc};
use crate::rootdata::Weight;

/// `c ∈ N^r`, position `t` holding the exponent of `E_{β_{t+1}}`.
pub type ExponentVector = Vec<u32>;

/// Sparse PBW coordinates with Laurent coefficients.
pub type PbwMap = BTreeMap<ExponentVector, LaurentInt>;

/// `c > d` iff `c` is larger at the first index where they differ, so
/// `(1,0,...,0) > (0,1,0,...,0) > ... > (0,...,0,1)`.
pub fn lex_compare(c: &[u32], d: &[u32]) -> Result<Ordering> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    Ok(c.cmp(d))
}

/// Coordinates of a homogeneous element in the PBW basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion<C> {
    pub weight: Weight,
    pub coeffs: BTreeMap<ExponentVector, C>,
}

pub type PBWExpansion = Expansion<LaurentInt>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PbwTerm<C> {
    pub c: ExponentVector,
    pub coeff: C,
}

impl<C: Clone> Expansion<C> {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> Vec<PbwTerm<C>> {
        self.coeffs.iter().map(|(c, x)| PbwTerm { c: c.clone(), coeff: x.clone() }).collect()
    }
}

impl PBWExpansion {
    pub fn from_map(weight: Weight, coeffs: PbwMap) -> Self {
        Expansion { weight, coeffs: coeffs.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn coeff(&self, c: &[u32]) -> LaurentInt {
        self.coeffs.get(c).cloned().unwrap_or_default()
    }

    pub fn to_ratfunc(&self) -> Expansion<RatFunc> {
        Expansion {
            weight: self.weight.clone(),
            coeffs: self.coeffs.iter().map(|(c, x)| (c.clone(), RatFunc::from_laurent(x.clone()))).collect(),
        }
    }
}

impl Expansion<RatFunc> {
    pub fn coeff(&self, c: &[u32]) -> RatFunc {
        self.coeffs.get(c).cloned().unwrap_or_default()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|x| x.is_laurent())
    }

    /// Conversion to Laurent coefficients; fails on the first non-Laurent one.
    pub fn integral(&self) -> Result<PBWExpansion> {
        let mut out = BTreeMap::new();
        for (c, x) in &self.coeffs {
            out.insert(c.clone(), x.to_laurent()?);
        }
        Ok(Expansion { weight: self.weight.clone(), coeffs: out })
    }
}

/// Which lattice membership to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeMode {
    /// `Z[q, q^{-1}]`
    Integral,
    /// `Z[q^{-1}]`
    Lattice,
    /// `q^{-1} Z[q^{-1}]`
    Sublattice,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub ok: bool,
    /// First violating term in ascending lexicographic order.
    pub witness: Option<PbwTerm<RatFunc>>,
}

fn in_mode(x: &RatFunc, mode: LatticeMode) -> bool {
    let Ok(l) = x.to_laurent() else {
        return false;
    };
    match mode {
        LatticeMode::Integral => true,
        LatticeMode::Lattice => l.in_z_qinv(),
        LatticeMode::Sublattice => l.in_qinv_z_qinv(),
    }
}

pub fn lattice_check(e: &Expansion<RatFunc>, mode: LatticeMode) -> LatticeReport {
    let witness = e.coeffs.iter().find(|(_, x)| !in_mode(x, mode)).map(|(c, x)| PbwTerm { c: c.clone(), coeff: x.clone() });
    LatticeReport { ok: witness.is_none(), witness }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Expansion<RatFunc> {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0, 1, 0], RatFunc::one());
        coeffs.insert(vec![1, 0, 1], RatFunc::q_pow(-1));
        Expansion { weight: vec![1, 1], coeffs }
    }

    #[test]
    fn lex_chain() {
        assert_eq!(lex_compare(&[1, 0, 0], &[0, 1, 0]).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&[0, 1, 0], &[0, 0, 1]).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&[0, 1, 0], &[0, 1, 0]).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&[0, 1], &[0, 1, 0]), Err(Error::LengthMismatch(2, 3)));
    }

    #[test]
    fn lattice_modes() {
        let e = sample();
        assert!(lattice_check(&e, LatticeMode::Integral).ok);
        assert!(lattice_check(&e, LatticeMode::Lattice).ok);
        let r = lattice_check(&e, LatticeMode::Sublattice);
        assert!(!r.ok);
        assert_eq!(r.witness.unwrap().c, vec![0, 1, 0]);
        let mut e2 = e.clone();
        e2.coeffs.remove(&vec![0, 1, 0]);
        assert!(lattice_check(&e2, LatticeMode::Sublattice).ok);
        let mut e3 = e.clone();
        e3.coeffs.insert(vec![0, 0, 2], RatFunc::new(LaurentInt::one(), LaurentInt::from_terms([(1, 1i64), (-1, -1)])));
        let r = lattice_check(&e3, LatticeMode::Integral);
        assert_eq!(r.witness.unwrap().c, vec![0, 0, 2]);
    }
}
