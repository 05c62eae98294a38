//! Commutation identities between root vectors of a rank-two string
//! `{α, α+α_k, ..., α_k}`, evaluated either in the word model or in PBW
//! coordinates.

use serde::Serialize;

use super::{add_into, Pbw, PbwMap};
use crate::error::{Error, Result};
use crate::qcoeff::{LaurentInt, RatFunc};
use crate::ualgebra::UElement;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub a: u32,
    pub b: u32,
    pub holds: bool,
}

/// Where both sides of an identity are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Normal words, with root vectors from braid operators. Height-capped.
    Words,
    /// PBW coordinates through the straightening relations.
    Pbw,
}

#[derive(PartialEq)]
enum Side {
    Words(UElement),
    Pbw(PbwMap),
}

struct Ctx<'a> {
    pbw: &'a Pbw,
    model: Model,
    /// 1-based positions of `α, α+α_k, α+2α_k` (if present) and `α_k`.
    pos: Vec<usize>,
}

impl Ctx<'_> {
    /// `Σ coeff · Π E^{(m)}` over the listed factors.
    fn sum(&self, terms: Vec<(LaurentInt, Vec<(usize, u32)>)>) -> Result<Side> {
        let alg = &self.pbw.alg;
        match self.model {
            Model::Words => {
                let mut out = UElement::zero(alg.rank());
                for (c, factors) in terms {
                    let mut x = UElement::one(alg.rank());
                    for (w, m) in factors {
                        x = alg.multiply(&x, &self.pbw.root_vector(self.pos[w], m)?)?;
                    }
                    out.add_scaled(&x, &RatFunc::from_laurent(c));
                }
                Ok(Side::Words(out))
            }
            Model::Pbw => {
                let mut out = PbwMap::new();
                for (c, factors) in terms {
                    let mut x = PbwMap::from([(vec![0; self.pbw.len()], c)]);
                    for (w, m) in factors {
                        if m > 0 {
                            x = self.pbw.mul_divided(&x, self.pos[w] - 1, m)?;
                        }
                    }
                    for (d, y) in x {
                        add_into(&mut out, d, y);
                    }
                }
                Ok(Side::Pbw(out))
            }
        }
    }

    fn prod(&self, f: &[(usize, u32)]) -> Result<Side> {
        self.sum(vec![(LaurentInt::one(), f.to_vec())])
    }
}

fn qp(e: i64) -> LaurentInt {
    LaurentInt::q_pow(e as i32)
}

/// `Π_{h=1}^{r} (q^{u h + v} + s)`.
fn product(r: u32, u: i64, v: i64, s: i64) -> LaurentInt {
    let mut acc = LaurentInt::one();
    for h in 1..=r as i64 {
        acc = &acc * &LaurentInt::from_terms([(((u * h) + v) as i32, 1i64), (0, s)]);
    }
    acc
}

/// All identities for `a, b ≤ max` in a rank-two algebra whose convex order
/// runs `α, ..., α_k` with `α = α_2`, `α_k = α_1`.
pub fn rank_two_identities(pbw: &Pbw, max: u32, model: Model) -> Result<Vec<IdentityCheck>> {
    let rs = &pbw.alg.rs;
    if rs.rank() != 2 {
        return Err(Error::BadInput("the identities are stated for rank two".into()));
    }
    let order = &pbw.order;
    let find = |b: [u32; 2]| order.position(&b).map(|p| p + 1).ok_or_else(|| Error::BadInput(format!("root {b:?} missing")));
    let ctx = match order.len() {
        3 => Ctx { pbw, model, pos: vec![find([0, 1])?, find([1, 1])?, find([1, 0])?] },
        4 => Ctx { pbw, model, pos: vec![find([0, 1])?, find([1, 1])?, find([2, 1])?, find([1, 0])?] },
        _ => return Err(Error::BadInput("only the strings of length 3 and 4 are covered".into())),
    };
    if ctx.pos.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadInput("convex order does not run from α to α_k".into()));
    }
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            let mut push = |name: &str, lhs: Side, rhs: Side| {
                out.push(IdentityCheck { name: name.into(), a, b, holds: lhs == rhs });
            };
            let (ab, ai, bi) = ((a * b) as i64, a as i64, b as i64);
            if ctx.pos.len() == 3 {
                let d = rs.d[0] as i64;
                let (al, mid, k) = (0, 1, 2);
                push("mid·α", ctx.prod(&[(mid, a), (al, b)])?, ctx.sum(vec![(qp(d * ab), vec![(al, b), (mid, a)])])?);
                push("α_k·mid", ctx.prod(&[(k, a), (mid, b)])?, ctx.sum(vec![(qp(d * ab), vec![(mid, b), (k, a)])])?);
                let terms = (0..=a.min(b))
                    .map(|r| {
                        let ri = r as i64;
                        (qp(-d * (ai - ri) * (bi - ri)), vec![(al, b - r), (mid, r), (k, a - r)])
                    })
                    .collect();
                push("α_k·α", ctx.prod(&[(k, a), (al, b)])?, ctx.sum(terms)?);
            } else {
                let (al, m1, m2, k) = (0, 1, 2, 3);
                push("m1·α", ctx.prod(&[(m1, a), (al, b)])?, ctx.sum(vec![(qp(2 * ab), vec![(al, b), (m1, a)])])?);
                push("m2·m1", ctx.prod(&[(m2, a), (m1, b)])?, ctx.sum(vec![(qp(2 * ab), vec![(m1, b), (m2, a)])])?);
                push("α_k·m2", ctx.prod(&[(k, a), (m2, b)])?, ctx.sum(vec![(qp(2 * ab), vec![(m2, b), (k, a)])])?);
                let terms = (0..=a.min(b))
                    .map(|r| {
                        let ri = r as i64;
                        let c = &qp(2 * ri * (bi - ri) + 2 * ri * (ai - ri)) * &product(r, 4, -2, -1);
                        (c, vec![(al, b - r), (m1, 2 * r), (m2, a - r)])
                    })
                    .collect();
                push("m2·α", ctx.prod(&[(m2, a), (al, b)])?, ctx.sum(terms)?);
                let terms = (0..=a.min(b))
                    .map(|r| {
                        let ri = r as i64;
                        let c = &qp(ri * (bi - ri) + ri * (ai - ri) - ri) * &product(r, 2, 0, 1);
                        (c, vec![(m1, b - r), (m2, r), (k, a - r)])
                    })
                    .collect();
                push("α_k·m1", ctx.prod(&[(k, a), (m1, b)])?, ctx.sum(terms)?);
                let mut terms = Vec::new();
                for r in 0..=a.min(b) {
                    for t in 0..=(b - r).min((a - r) / 2) {
                        let (ri, ti) = (r as i64, t as i64);
                        let e = -2 * (bi - ri - ti) * (ai - ri - ti) - (ai - ri - 2 * ti) * ri;
                        terms.push((qp(e), vec![(al, b - r - t), (m1, r), (m2, t), (k, a - r - 2 * t)]));
                    }
                }
                push("α_k·α", ctx.prod(&[(k, a), (al, b)])?, ctx.sum(terms)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::rootdata::LieType;
    use crate::ualgebra::UAlgebra;

    #[test]
    fn both_models_agree_on_small_exponents() {
        for (s, per) in [("A2", 3), ("B2", 6)] {
            let pbw = Pbw::new(Arc::new(UAlgebra::new(LieType::parse(s).unwrap()))).unwrap();
            for model in [Model::Words, Model::Pbw] {
                let v = rank_two_identities(&pbw, 2, model).unwrap();
                assert_eq!(v.len(), per * 9);
                assert!(v.iter().all(|c| c.holds), "{s} {model:?}");
            }
        }
        let pbw = Pbw::new(Arc::new(UAlgebra::new(LieType::parse("A3").unwrap()))).unwrap();
        assert!(rank_two_identities(&pbw, 1, Model::Pbw).is_err());
    }
}
