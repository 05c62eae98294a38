use super::*;
use crate::rootdata::LieType;

fn pbw(s: &str) -> Pbw {
    Pbw::new(Arc::new(UAlgebra::new(LieType::parse(s).unwrap()))).unwrap()
}

fn literal(s: &str) -> Pbw {
    let alg = Arc::new(UAlgebra::new(LieType::parse(s).unwrap()));
    Pbw::with_options(alg, Mode::Sequential, PathChoice::Literal).unwrap()
}

fn qinv() -> RatFunc {
    RatFunc::q_pow(-1)
}

#[test]
fn a2_root_vectors() {
    let p = pbw("A2");
    let a = &p.alg;
    assert_eq!(p.root_vector(1, 1).unwrap(), a.generator(2));
    let mut e12 = a.e_word(&[1, 2]).unwrap();
    e12.add_scaled(&a.e_word(&[2, 1]).unwrap(), &qinv().mul_laurent(&LaurentInt::constant(-1)));
    assert_eq!(p.root_vector(2, 1).unwrap(), e12);
    assert_eq!(p.root_vector(3, 1).unwrap(), a.generator(1));
    assert_eq!(p.root_vector(3, 0).unwrap(), UElement::one(2));
}

#[test]
fn a2_monomials_and_expansions() {
    let p = pbw("A2");
    let a = &p.alg;
    assert_eq!(p.pbw_monomial(&[1, 0, 1]).unwrap(), a.e_word(&[2, 1]).unwrap());
    assert_eq!(p.pbw_monomial(&[0, 0, 2]).unwrap(), a.divided_power(1, 2).unwrap());
    assert_eq!(p.pbw_monomial(&[0, 0, 0]).unwrap(), UElement::one(2));

    let e = p.pbw_expand(&a.e_word(&[1, 2]).unwrap()).unwrap();
    assert_eq!(e.len(), 2);
    assert_eq!(e.coeff(&[0, 1, 0]), RatFunc::one());
    assert_eq!(e.coeff(&[1, 0, 1]), qinv());
    let e = p.pbw_expand(&a.e_word(&[2, 1]).unwrap()).unwrap();
    assert_eq!(e.coeffs, BTreeMap::from([(vec![1, 0, 1], RatFunc::one())]));
}

#[test]
fn literal_and_short_routes_agree() {
    for t in ["A2", "A3", "B2", "B3", "G2", "D4", "C3"] {
        let p = pbw(t);
        let l = literal(t);
        for s in 1..=p.len() {
            let h: u32 = p.order.betas[s - 1].iter().sum();
            if h > 5 {
                continue;
            }
            assert_eq!(p.root_vector(s, 1).unwrap(), l.root_vector(s, 1).unwrap(), "{t} β_{s}");
        }
    }
}

#[test]
fn simple_betas_give_generators_on_the_literal_route() {
    for t in ["A2", "A3", "B2", "B3", "G2", "D4"] {
        let l = literal(t);
        let n = l.alg.rank();
        for s in 1..=l.len() {
            let b = &l.order.betas[s - 1];
            if b.iter().sum::<u32>() == 1 {
                let k = b.iter().position(|&x| x == 1).unwrap() + 1;
                assert_eq!(l.root_vector(s, 1).unwrap(), l.alg.generator(k), "{t} β_{s}");
                assert_eq!(l.simple_position(k), s - 1);
                let _ = n;
            }
        }
    }
}

/// Each braid step of the literal route, multiplied out in full, leaves no F or K terms.
#[test]
fn literal_steps_are_pure() {
    for t in ["A2", "A3", "B2", "G2"] {
        let l = literal(t);
        for s in 0..l.len() {
            let plan = l.plan(s);
            let mut x = l.alg.generator(plan.start);
            for &j in &plan.steps {
                let full = braid::apply_ti(&l.alg, j, &x).unwrap();
                assert!(full.is_uplus(), "{t} β_{} step T_{j}", s + 1);
                let plus = braid::ti_plus(&l.alg, j, &x).unwrap();
                assert_eq!(full, plus);
                x = plus;
            }
        }
    }
}

#[test]
fn monomials_round_trip() {
    for (t, hmax) in [("A2", 5u32), ("B2", 5), ("G2", 5), ("A3", 4), ("B3", 3)] {
        let p = pbw(t);
        let n = p.alg.rank();
        for nu in weights_up_to(n, hmax) {
            for c in p.kostant(&nu) {
                let m = p.pbw_monomial(&c).unwrap();
                let e = p.pbw_expand(&m).unwrap();
                assert_eq!(e.coeffs, BTreeMap::from([(c.clone(), RatFunc::one())]), "{t} {c:?}");
            }
        }
    }
}

#[test]
fn straightening_matches_matrix_solve() {
    for (t, hmax) in [("A2", 5u32), ("B2", 5), ("G2", 5), ("A3", 4), ("C3", 3)] {
        let p = pbw(t);
        let n = p.alg.rank();
        for nu in weights_up_to(n, hmax) {
            let b = p.alg.weight_basis(&nu).unwrap();
            assert_eq!(b.dim(), p.kostant(&nu).len(), "{t} {nu:?}");
            for w in &b.all_words {
                let x = p.alg.e_word(w).unwrap();
                let e1 = p.pbw_expand(&x).unwrap();
                let e2 = p.pbw_expand_by_matrix(&x).unwrap();
                assert_eq!(e1, e2, "{t} {w:?}");
                assert!(e1.is_integral());
                assert_eq!(e1.coeffs, p.word_expansion(w).unwrap().iter().map(|(c, x)| (c.clone(), RatFunc::from_laurent(x.clone()))).collect());
            }
        }
    }
}

#[test]
fn divided_products_are_integral_and_agree_with_words() {
    let p = pbw("B2");
    let a = &p.alg;
    for f in [vec![(1usize, 2u32), (2, 1)], vec![(2, 2), (1, 3)], vec![(1, 1), (2, 2), (1, 1)]] {
        let e = p.expand_divided_product(&f).unwrap();
        let mut x = UElement::one(2);
        for &(i, k) in &f {
            x = a.multiply(&x, &a.divided_power(i, k).unwrap()).unwrap();
        }
        assert_eq!(p.pbw_expand(&x).unwrap(), e.to_ratfunc());
    }
}

#[test]
fn relations_have_convex_support() {
    let p = pbw("G2");
    for s in 0..p.len() {
        for t in 0..s {
            let nu: Weight = p.order.betas[s].iter().zip(&p.order.betas[t]).map(|(a, b)| a + b).collect();
            if nu.iter().sum::<u32>() > 8 {
                continue;
            }
            let r = p.relation(s, t).unwrap();
            let mut st = vec![0; p.len()];
            st[s] += 1;
            st[t] += 1;
            assert!(r.contains_key(&st));
            for d in r.keys() {
                assert!(first_support(d) >= Some(t) && last_support(d) <= Some(s));
            }
        }
    }
}

#[test]
fn bad_indices() {
    let p = pbw("A2");
    assert!(matches!(p.root_vector(0, 1), Err(Error::BadInput(_))));
    assert!(matches!(p.root_vector(4, 1), Err(Error::BadInput(_))));
    assert_eq!(p.weight_of(&[1, 0]), Err(Error::LengthMismatch(2, 3)));
}

pub(crate) use crate::rootdata::weights_up_to;
