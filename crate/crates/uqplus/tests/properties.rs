use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use uqplus::canonical::Canonical;
use uqplus::monomial::Monomials;
use uqplus::pbw::Pbw;
use uqplus::qcoeff::{LaurentInt, RatFunc};
use uqplus::rootdata::LieType;
use uqplus::ualgebra::UAlgebra;

fn laurent() -> impl Strategy<Value = LaurentInt> {
    prop::collection::vec((-6i32..=6, -5i64..=5), 0..5).prop_map(LaurentInt::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentInt> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

// one shared engine per type so the property cases reuse the caches
fn canon(s: &'static str) -> &'static Canonical {
    static A2: OnceLock<Canonical> = OnceLock::new();
    static B2: OnceLock<Canonical> = OnceLock::new();
    let cell = if s == "A2" { &A2 } else { &B2 };
    cell.get_or_init(|| {
        let alg = Arc::new(UAlgebra::new(LieType::parse(s).unwrap()));
        Canonical::new(Arc::new(Monomials::new(Arc::new(Pbw::new(alg).unwrap())).unwrap()))
    })
}

fn rank_two() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("A2"), Just("B2")]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentInt::zero());
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert!((&a + &a.bar()).is_bar_invariant());
    }

    #[test]
    fn exact_division(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        let x = &RatFunc::from_laurent(a.clone()) / &RatFunc::from_laurent(b.clone());
        prop_assert_eq!(&x * &RatFunc::from_laurent(b), RatFunc::from_laurent(a));
    }

    /// Straightening a word in PBW coordinates agrees with the word model.
    #[test]
    fn straightening_matches_word_model(s in rank_two(), w in prop::collection::vec(1u8..=2, 1..6)) {
        let pbw = &canon(s).mono.pbw;
        let by_words = pbw.pbw_expand(&pbw.alg.e_word(&w).unwrap()).unwrap();
        let by_relations = pbw.word_expansion(&w).unwrap();
        prop_assert_eq!(by_words.coeffs.len(), by_relations.len());
        for (c, x) in by_relations.iter() {
            prop_assert_eq!(by_words.coeffs.get(c), Some(&RatFunc::from_laurent(x.clone())));
        }
    }

    /// `M_{f(c)}` is `E_c` plus integral higher terms.
    #[test]
    fn monomials_are_unitriangular(s in rank_two(), c in prop::collection::vec(0u32..=2, 4)) {
        let m = &canon(s).mono;
        let c = c[..m.pbw.len()].to_vec();
        prop_assume!(c.iter().any(|&x| x > 0));
        let (k, _) = m.f(&c).unwrap();
        let r = m.verify_triangular(&c, &k).unwrap();
        prop_assert!(r.passed(), "{:?}", r.violations);
    }

    /// Every `b_c` is certified.
    #[test]
    fn canonical_elements_certify(s in rank_two(), c in prop::collection::vec(0u32..=1, 4)) {
        let k = canon(s);
        let c = c[..k.mono.pbw.len()].to_vec();
        prop_assume!(c.iter().any(|&x| x > 0));
        let b = k.canonical_b(&c).unwrap();
        let cert = k.verify_canonical(&b);
        prop_assert!(cert.passed(), "{:?}", cert.failure);
    }
}
