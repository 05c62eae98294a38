//! Acceptance criteria 1-8. Every criterion prints one line
//! `criterion N: PASS|FAIL ...`; all comparisons are exact.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use uqplus::canonical::Canonical;
use uqplus::cli::{cache, verify};
use uqplus::monomial::{levels, Monomials, TriangularReport};
use uqplus::pbw::Pbw;
use uqplus::qcoeff::LaurentInt;
use uqplus::rootdata::{compositions, weights_up_to, LieType};
use uqplus::ualgebra::UAlgebra;

fn lie(s: &str) -> LieType {
    LieType::parse(s).unwrap()
}

fn mono(s: &str) -> Arc<Monomials> {
    let alg = Arc::new(UAlgebra::new(lie(s)));
    Arc::new(Monomials::new(Arc::new(Pbw::new(alg).unwrap())).unwrap())
}

fn report(n: u32, what: &str, failures: &[String], started: Instant) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} {what} ({:.1} s)", started.elapsed().as_secs_f64());
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {} problems", failures.len());
}

/// `(type, max Σ c_t)` for criteria 4-6.
const TRIANGULAR_RANGE: [(&str, u32); 5] = [("A2", 4), ("B2", 4), ("G2", 2), ("A3", 3), ("B3", 3)];

fn cs(m: &Monomials, max_total: u32) -> Vec<Vec<u32>> {
    (1..=max_total).flat_map(|s| compositions(m.pbw.len(), s)).collect()
}

fn triangular_reports(m: &Monomials, max_total: u32) -> Vec<TriangularReport> {
    cs(m, max_total).iter().map(|c| m.verify_triangular(c, &m.f_closed(c).unwrap()).unwrap()).collect()
}

#[test]
fn criterion_1_word_catalogue() {
    let t0 = Instant::now();
    let types: Vec<LieType> = verify::CATALOGUE.iter().map(|s| lie(s)).collect();
    let checks = verify::words(&types);
    let failures: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    assert_eq!(checks.len(), 30);
    report(1, "both words reduced for 15 types", &failures, t0);
}

#[test]
fn criterion_2_serre_and_dimensions() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for (s, h) in [("A2", 8), ("B2", 8), ("A3", 6), ("B3", 6), ("G2", 6)] {
        let m = mono(s);
        for c in verify::serre(&m).unwrap().into_iter().chain(verify::dims(&m, h).unwrap()) {
            count += 1;
            if !c.passed {
                failures.push(format!("{s} {}: {}", c.name, c.detail));
            }
        }
    }
    report(2, &format!("{count} Serre and dimension checks"), &failures, t0);
}

#[test]
fn criterion_3_rank_two_identities() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for s in ["A2", "B2"] {
        for c in verify::lemma21(&mono(s), 3).unwrap() {
            count += 1;
            if !c.passed {
                failures.push(format!("{s} {}", c.name));
            }
        }
    }
    // A2: 3 identities, B2: 6, over a, b in 0..=3 in PBW coordinates and
    // a, b in 0..=3 (A2) or 0..=2 (B2) in the word model
    assert_eq!(count, 9 * 16 + 3 * 16 + 6 * 9);
    report(3, &format!("{count} rank-two identities"), &failures, t0);
}

#[test]
fn criterion_4_triangularity() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for (s, max) in TRIANGULAR_RANGE {
        for r in triangular_reports(&mono(s), max) {
            count += 1;
            if !(r.passed() && r.integral) {
                failures.push(format!("{s} c={:?} k={:?}: {}", r.c, r.k, r.violations.join("; ")));
            }
        }
    }
    report(4, &format!("{count} monomials M_f(c) triangular and integral"), &failures, t0);
}

#[test]
fn criterion_5_basis_matrices() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for (s, max) in TRIANGULAR_RANGE {
        let m = mono(s);
        let weights: std::collections::BTreeSet<_> = cs(&m, max).iter().map(|c| m.pbw.weight_of(c).unwrap()).collect();
        for nu in weights {
            count += 1;
            let b = m.monomial_basis_matrix(&nu).unwrap();
            if !b.unitriangular {
                failures.push(format!("{s} weight {nu:?}"));
            }
        }
    }
    report(5, &format!("{count} basis matrices unitriangular"), &failures, t0);
}

#[test]
fn criterion_6_closed_form_against_oracle() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    let mut check = |s: &str, m: &Monomials, c: &[u32]| {
        count += 1;
        let k = m.f_closed(c).unwrap();
        let found = m.f_search(c).unwrap();
        if !found.contains(&k) {
            failures.push(format!("{s} c={c:?}: closed form {k:?} not among {:?}", found));
        }
    };
    for (s, max) in TRIANGULAR_RANGE.iter().take(3) {
        let m = mono(s);
        for c in cs(&m, *max) {
            check(s, &m, &c);
        }
    }
    for s in ["A3", "B3", "C3", "D4"] {
        let m = mono(s);
        let first = levels(lie(s)).unwrap()[0].c_range.clone();
        for t in first {
            let mut c = vec![0; m.pbw.len()];
            c[t] = 1;
            check(s, &m, &c);
        }
    }
    let m = mono("E6");
    for (t, beta) in m.pbw.order.betas.iter().enumerate() {
        if beta.iter().sum::<u32>() <= 4 {
            let mut c = vec![0; m.pbw.len()];
            c[t] = 1;
            check("E6", &m, &c);
        }
    }
    report(6, &format!("{count} closed forms found by the oracle"), &failures, t0);
}

#[test]
fn criterion_7_canonical_basis() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for (s, h) in [("A2", 6), ("B2", 4)] {
        let k = Canonical::new(mono(s));
        for nu in weights_up_to(2, h) {
            for b in k.canonical_basis_at_weight(&nu).unwrap() {
                count += 1;
                let cert = k.verify_canonical(&b);
                if !cert.passed() {
                    failures.push(format!("{s} b_{:?}: {}", b.c, cert.failure.unwrap_or_default()));
                }
            }
        }
    }
    let k = Canonical::new(mono("A2"));
    let b = k.canonical_b(&[0, 1, 0]).unwrap();
    let expected = BTreeMap::from([(vec![0, 1, 0], LaurentInt::one()), (vec![1, 0, 1], LaurentInt::q_pow(-1))]);
    if b.expansion.coeffs != expected {
        failures.push(format!("A2 b_(0,1,0) = {:?}", b.expansion.coeffs));
    }
    report(7, &format!("{count} canonical elements certified, b_(0,1,0) exact"), &failures, t0);
}

#[test]
fn criterion_8_determinism_and_cache() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let dir = tempfile::tempdir().unwrap();
    for (s, max) in TRIANGULAR_RANGE {
        let cold = mono(s);
        let cold_json = serde_json::to_string(&triangular_reports(&cold, max)).unwrap();
        let path = cache::path_for(dir.path(), cold.pbw.alg.lie());
        cache::write(&path, &cache::collect(&cold)).unwrap();
        let warm = mono(s);
        if !cache::load(&path, &warm) {
            failures.push(format!("{s}: cache entry rejected"));
        }
        let warm_json = serde_json::to_string(&triangular_reports(&warm, max)).unwrap();
        if warm_json != cold_json {
            failures.push(format!("{s}: warm run differs from cold run"));
        }
    }
    for s in ["A2", "B2"] {
        let run = || {
            let m = mono(s);
            let k = Canonical::new(m.clone());
            let checks = verify::theorem1(&m, &k, 3, 17, 8).unwrap();
            let basis = k.canonical_basis_at_weight(&[2, 2]).unwrap();
            serde_json::to_string(&(checks, basis)).unwrap()
        };
        if run() != run() {
            failures.push(format!("{s}: JSON differs between runs with the same seed"));
        }
    }
    report(8, "warm cache equals cold run, JSON stable under a fixed seed", &failures, t0);
}
