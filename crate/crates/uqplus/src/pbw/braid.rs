//! Braid operators `T_i`.
//!
//! `T_i(E_j) = Σ_r (-1)^r q_i^{-r} E_i^{(r)} E_j E_i^{(m-r)}` with `m = -a_ij`,
//! and `T_i(E_i) = -K_i^{-1} F_i`.
//!
//! [`apply_ti`] multiplies the letterwise images out in `U`. [`ti_plus`]
//! computes only the component of `T_i(x)` with no F letters and trivial K
//! part, working in the shuffle algebra: right multiplication by
//! `-K_i^{-1}F_i` contributes to that component exactly through
//! `-q^{(α_i,α_i)} / (q_i - q_i^{-1}) · ∂_i`, and terms that have left it
//! never come back. When `T_i(x) ∈ U⁺` both agree.

use crate::error::{Error, Result};
use crate::qcoeff::{laurent_lcm, q_diff, quantum_factorial, LaurentInt, RatFunc};
use crate::ualgebra::{Gen, PsiVec, UAlgebra, UElement};

fn q_i(alg: &UAlgebra, i: usize, e: i32) -> i32 {
    alg.rs.d[i - 1] as i32 * e
}

fn tri(r: usize) -> usize {
    r * r.saturating_sub(1) / 2
}

/// `Ψ(T_i(E_a))` for `a ≠ i`.
pub fn psi_ti_generator(alg: &UAlgebra, i: usize, a: usize) -> PsiVec {
    let form = alg.form();
    let m = (-alg.rs.cartan[i - 1][a - 1]) as usize;
    let mut out = PsiVec::zero();
    for r in 0..=m {
        // Ψ(E_i^{(r)}) = q_i^{r(r-1)/2} i^r
        let e = q_i(alg, i, (tri(r) + tri(m - r)) as i32 - r as i32);
        let left = PsiVec::word(vec![i as u8; r]);
        let right = PsiVec::word(vec![i as u8; m - r]);
        let mid = left.shuffle(&PsiVec::word(vec![a as u8]), form).shuffle(&right, form);
        let c = LaurentInt::monomial(if r % 2 == 0 { 1.into() } else { (-1).into() }, e);
        out.add_scaled(&mid, &c);
    }
    out
}

/// `T_i(E_a)` as an element of `U`.
pub fn ti_generator(alg: &UAlgebra, i: usize, a: usize) -> Result<UElement> {
    if a == i {
        return alg.normalize(&[(RatFunc::from_int(-1), vec![Gen::K(i as u8, -1), Gen::F(i as u8)])]);
    }
    let d = alg.rs.d[i - 1];
    let m = (-alg.rs.cartan[i - 1][a - 1]) as u32;
    let mut raw = Vec::new();
    for r in 0..=m {
        let mut gens = vec![Gen::E(i as u8); r as usize];
        gens.push(Gen::E(a as u8));
        gens.extend(std::iter::repeat_n(Gen::E(i as u8), (m - r) as usize));
        let den = &quantum_factorial(r, d) * &quantum_factorial(m - r, d);
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let c = RatFunc::new(LaurentInt::monomial(sign.into(), -(d as i32) * r as i32), den);
        raw.push((c, gens));
    }
    alg.normalize(&raw)
}

/// `T_i(x)` for `x ∈ U⁺`, multiplied out in `U`. The result may contain F and K terms.
pub fn apply_ti(alg: &UAlgebra, i: usize, x: &UElement) -> Result<UElement> {
    let terms = x.uplus_terms().ok_or(Error::NotInUPlus)?;
    let images: Vec<UElement> = (1..=alg.rank()).map(|a| ti_generator(alg, i, a)).collect::<Result<_>>()?;
    let mut out = UElement::zero(alg.rank());
    for (w, c) in terms {
        let mut acc = UElement::one(alg.rank());
        for &a in w {
            acc = alg.multiply(&acc, &images[a as usize - 1])?;
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// `Ψ` of the F-free, K-trivial component of `T_i(x)` for `x ∈ U⁺`, up to the
/// returned scalar: the component equals `(returned vector) / (returned denominator)`.
pub fn psi_ti_plus(alg: &UAlgebra, i: usize, x: &UElement) -> Result<(PsiVec, LaurentInt)> {
    let terms = x.uplus_terms().ok_or(Error::NotInUPlus)?;
    let form = alg.form();
    let gens: Vec<Option<PsiVec>> = (1..=alg.rank()).map(|a| (a != i).then(|| psi_ti_generator(alg, i, a))).collect();
    let mut den = LaurentInt::one();
    for (_, c) in &terms {
        if !c.den().is_one() {
            den = laurent_lcm(&den, c.den());
        }
    }
    let twist = LaurentInt::monomial((-1).into(), 2 * alg.rs.d[i - 1] as i32);
    let mut total = PsiVec::zero();
    let mut n_i = None;
    // words arrive sorted, so consecutive ones share prefixes
    let mut stack: Vec<PsiVec> = vec![PsiVec::one()];
    let mut prev: &[u8] = &[];
    for (w, c) in terms {
        let common = prev.iter().zip(w.iter()).take_while(|(a, b)| a == b).count();
        stack.truncate(common + 1);
        for &a in &w[common..] {
            let top = stack.last().unwrap();
            let next = match &gens[a as usize - 1] {
                Some(g) => top.shuffle(g, form),
                None => top.strip_last(i as u8).scale(&twist),
            };
            stack.push(next);
        }
        prev = w;
        let k = w.iter().filter(|&&a| a as usize == i).count();
        if *n_i.get_or_insert(k) != k {
            return Err(Error::BadInput("element is not homogeneous".into()));
        }
        let scale = c.mul_laurent(&den).to_laurent()?;
        total.add_scaled(stack.last().unwrap(), &scale);
    }
    let h = q_diff(alg.rs.d[i - 1]);
    for _ in 0..n_i.unwrap_or(0) {
        den = &den * &h;
    }
    Ok((total, den))
}

/// The U⁺-component of `T_i(x)` for homogeneous `x ∈ U⁺`, in normal words.
pub fn ti_plus(alg: &UAlgebra, i: usize, x: &UElement) -> Result<UElement> {
    if x.is_zero() {
        return Ok(x.clone());
    }
    let nu = alg.weight_of(x).ok_or(Error::NotInUPlus)?;
    let Some(target) = reflect_weight(alg, i, &nu) else {
        return Ok(UElement::zero(alg.rank()));
    };
    let (v, den) = psi_ti_plus(alg, i, x)?;
    let y = alg.from_psi(&target, &v)?;
    Ok(y.map_coeffs(|c| c.div_laurent(&den)))
}

/// `s_i(ν)` if it is still a nonnegative combination.
pub fn reflect_weight(alg: &UAlgebra, i: usize, nu: &[u32]) -> Option<Vec<u32>> {
    let v: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
    let r = alg.rs.reflect(i, &v);
    r.iter().all(|&x| x >= 0).then(|| r.into_iter().map(|x| x as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;

    fn alg(s: &str) -> UAlgebra {
        UAlgebra::new(LieType::parse(s).unwrap())
    }

    fn a2_t2e1(a: &UAlgebra) -> UElement {
        let mut x = a.e_word(&[1, 2]).unwrap();
        x.add_scaled(&a.e_word(&[2, 1]).unwrap(), &RatFunc::from_laurent(LaurentInt::monomial((-1).into(), -1)));
        x
    }

    #[test]
    fn a2_generator_images() {
        let a = alg("A2");
        assert_eq!(ti_generator(&a, 2, 1).unwrap(), a2_t2e1(&a));
        let t = ti_generator(&a, 1, 1).unwrap();
        assert_eq!(t.len(), 1);
        let (term, c) = t.terms().next().unwrap();
        assert_eq!(term.f, vec![1]);
        assert_eq!(term.k, vec![-1, 0]);
        // -K_1^{-1} F_1 = -q^2 F_1 K_1^{-1}
        assert_eq!(*c, RatFunc::from_laurent(LaurentInt::monomial((-1).into(), 2)));
    }

    #[test]
    fn a2_inverse_direction() {
        let a = alg("A2");
        // T_1 T_2 (E_1) = E_2
        let x = a2_t2e1(&a);
        let full = apply_ti(&a, 1, &x).unwrap();
        assert_eq!(full, a.generator(2));
        assert_eq!(ti_plus(&a, 1, &x).unwrap(), a.generator(2));
        // T_1 T_1 (E_2) is not in U⁺
        let y = ti_generator(&a, 1, 2).unwrap();
        assert!(!apply_ti(&a, 1, &y).unwrap().is_uplus());
    }

    #[test]
    fn shuffle_images_match_generators() {
        for t in ["A2", "B2", "G2", "C3"] {
            let a = alg(t);
            for i in 1..=a.rank() {
                for j in 1..=a.rank() {
                    if i != j {
                        let x = ti_generator(&a, i, j).unwrap();
                        assert_eq!(a.psi(&x).unwrap(), psi_ti_generator(&a, i, j), "{t} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn plus_part_agrees_with_full_product() {
        for t in ["A3", "B2", "G2"] {
            let a = alg(t);
            let n = a.rank();
            for w in [vec![1u8, 2], vec![2, 1], vec![1, 2, 1], vec![2, 1, 2], vec![1, 1, 2]] {
                if w.iter().any(|&x| x as usize > n) {
                    continue;
                }
                let x = a.e_word(&w).unwrap();
                for i in 1..=n {
                    let full = apply_ti(&a, i, &x).unwrap().uplus_component();
                    let (v, den) = psi_ti_plus(&a, i, &x).unwrap();
                    let expect = a.psi(&full.scale(&RatFunc::from_laurent(den))).unwrap();
                    assert_eq!(v, expect, "{t} T_{i} {w:?}");
                }
            }
        }
    }
}
