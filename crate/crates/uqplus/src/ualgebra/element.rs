use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{format_word, Word};
use crate::qcoeff::RatFunc;

/// A generator of `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    E(u8),
    F(u8),
    /// `K_i^s`
    K(u8, i32),
}

/// `F_{f} K^{k} E_{e}` in triangular order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MixedTerm {
    pub f: Word,
    pub k: Vec<i32>,
    pub e: Word,
}

impl MixedTerm {
    pub fn e_only(rank: usize, e: Word) -> Self {
        MixedTerm { f: Vec::new(), k: vec![0; rank], e }
    }

    pub fn is_e_only(&self) -> bool {
        self.f.is_empty() && self.k.iter().all(|&x| x == 0)
    }

    pub fn gens(&self) -> Vec<Gen> {
        let mut g: Vec<Gen> = self.f.iter().map(|&a| Gen::F(a)).collect();
        g.extend(self.k.iter().enumerate().filter(|(_, &s)| s != 0).map(|(i, &s)| Gen::K(i as u8 + 1, s)));
        g.extend(self.e.iter().map(|&a| Gen::E(a)));
        g
    }
}

/// A linear combination of triangular terms with `Q(q)` coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UElement {
    rank: usize,
    terms: BTreeMap<MixedTerm, RatFunc>,
}

impl UElement {
    pub fn zero(rank: usize) -> Self {
        UElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::e_word(rank, Vec::new(), RatFunc::one())
    }

    pub fn e_word(rank: usize, w: Word, c: RatFunc) -> Self {
        let mut x = Self::zero(rank);
        x.add_term(MixedTerm::e_only(rank, w), &c);
        x
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MixedTerm, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &MixedTerm) -> RatFunc {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    /// Coefficient of an E-only word.
    pub fn coeff_e(&self, w: &[u8]) -> RatFunc {
        self.coeff(&MixedTerm::e_only(self.rank, w.to_vec()))
    }

    pub fn is_uplus(&self) -> bool {
        self.terms.keys().all(|t| t.is_e_only())
    }

    /// `(word, coefficient)` pairs if the element lies in `U⁺`.
    pub fn uplus_terms(&self) -> Option<Vec<(&Word, &RatFunc)>> {
        self.terms.iter().map(|(t, c)| t.is_e_only().then_some((&t.e, c))).collect()
    }

    /// The part of the element with no F letters and trivial K part.
    pub fn uplus_component(&self) -> UElement {
        UElement { rank: self.rank, terms: self.terms.iter().filter(|(t, _)| t.is_e_only()).map(|(t, c)| (t.clone(), c.clone())).collect() }
    }

    pub fn add_term(&mut self, t: MixedTerm, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(x) => {
                *x = &*x + c;
                if x.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UElement, c: &RatFunc) {
        for (t, x) in &other.terms {
            self.add_term(t.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &RatFunc) -> UElement {
        let mut out = UElement::zero(self.rank);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> UElement {
        let mut out = UElement::zero(self.rank);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), &f(c));
        }
        out
    }
}

impl std::ops::Add<&UElement> for &UElement {
    type Output = UElement;
    fn add(self, rhs: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl std::ops::Sub<&UElement> for &UElement {
    type Output = UElement;
    fn sub(self, rhs: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::from_int(-1));
        out
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if !t.f.is_empty() {
                write!(f, " F[{}]", format_word(&t.f))?;
            }
            if t.k.iter().any(|&x| x != 0) {
                write!(f, " K{:?}", t.k)?;
            }
            if !t.e.is_empty() {
                write!(f, " E[{}]", format_word(&t.e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({self})")
    }
}

/// JSON form of a `U⁺` element: `[{word, coeff}]`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WordCoeff {
    pub word: Vec<u8>,
    pub coeff: RatFunc,
}

impl UElement {
    pub fn to_json_terms(&self) -> Option<Vec<WordCoeff>> {
        self.uplus_terms().map(|v| v.into_iter().map(|(w, c)| WordCoeff { word: w.clone(), coeff: c.clone() }).collect())
    }
}
