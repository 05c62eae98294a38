//! Property suites behind `verify`.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::canonical::Canonical;
use crate::error::Result;
use crate::monomial::{Monomials, Source};
use crate::pbw::rank_two::{rank_two_identities, Model};
use crate::rootdata::{
    build_root_system, compositions, kostant_vectors, validate_convex_order, weights_up_to, word_i, word_j, LieType,
};

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

pub const CATALOGUE: [&str; 15] =
    ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"];

/// Both words of every listed type are reduced expressions of `w_0`.
pub fn words(types: &[LieType]) -> Vec<Check> {
    let mut out = Vec::new();
    for &t in types {
        let rs = build_root_system(t);
        for (name, w) in [("j", word_j(t)), ("i", word_i(t))] {
            let r = validate_convex_order(&rs, &w);
            let detail = match &r {
                Ok(o) => format!("{} letters", o.len()),
                Err(e) => e.to_string(),
            };
            out.push(Check::new(format!("{t} word {name}"), r.is_ok(), detail));
        }
    }
    out
}

/// Serre relators vanish, and weight-space dimensions match Kostant counts.
pub fn serre(mono: &Monomials) -> Result<Vec<Check>> {
    let alg = &mono.pbw.alg;
    let n = alg.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let x = alg.serre_relator(i, j);
                let zero = alg.renormalize(&x)?.is_zero() && alg.psi(&x)?.is_zero();
                out.push(Check::new(format!("serre({i},{j})"), zero, ""));
            }
        }
    }
    Ok(out)
}

pub fn dims(mono: &Monomials, max_height: u32) -> Result<Vec<Check>> {
    let alg = &mono.pbw.alg;
    let mut out = Vec::new();
    for nu in weights_up_to(alg.rank(), max_height) {
        let d = alg.weight_basis(&nu)?.dim();
        let k = kostant_vectors(&nu, &mono.pbw.order).len();
        out.push(Check::new(format!("dim {nu:?}"), d == k, format!("{d} normal words, {k} exponent vectors")));
    }
    Ok(out)
}

/// The rank-two identities for `a, b ≤ max` in PBW coordinates, and in the
/// word model as far as the height cap allows.
pub fn lemma21(mono: &Monomials, max: u32) -> Result<Vec<Check>> {
    let pbw = &mono.pbw;
    let top: u32 = pbw.order.betas.iter().map(|b| b.iter().sum::<u32>()).max().unwrap_or(0);
    // the heaviest side is E_θ^{(a)} times the next root to the power b
    let word_max = (0..=max).rev().find(|&m| 2 * top * m <= pbw.alg.cap()).unwrap_or(0);
    let mut out = Vec::new();
    for (model, m) in [(Model::Pbw, max), (Model::Words, word_max)] {
        for c in rank_two_identities(pbw, m, model)? {
            out.push(Check::new(format!("{model:?} {} a={} b={}", c.name, c.a, c.b).to_lowercase(), c.holds, ""));
        }
    }
    Ok(out)
}

/// Triangularity of `M_{f(c)}` for all `c` with `Σ c_t ≤ max_total`, the
/// basis matrices of the weights met, agreement of closed forms with the
/// oracle, and bar-invariance of a seeded sample of the monomials.
pub fn theorem1(mono: &Monomials, canon: &Canonical, max_total: u32, seed: u64, sample: usize) -> Result<Vec<Check>> {
    let r = mono.pbw.len();
    let mut out = Vec::new();
    let mut weights = std::collections::BTreeSet::new();
    let mut ks = Vec::new();
    for total in 1..=max_total {
        for c in compositions(r, total) {
            let (k, source) = mono.f(&c)?;
            let rep = mono.verify_triangular(&c, &k)?;
            let detail = if rep.passed() { String::new() } else { rep.violations.join("; ") };
            out.push(Check::new(format!("triangular c={c:?} k={k:?}"), rep.passed() && rep.integral, detail));
            if source == Source::Closed {
                let found = mono.f_search(&c)?;
                out.push(Check::new(format!("oracle c={c:?}"), found.contains(&k), format!("{} valid k", found.len())));
            }
            weights.insert(mono.pbw.weight_of(&c)?);
            ks.push(k);
        }
    }
    for nu in weights {
        let m = mono.monomial_basis_matrix(&nu)?;
        out.push(Check::new(format!("basis matrix {nu:?}"), m.unitriangular, format!("{} rows", m.labels.len())));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    ks.shuffle(&mut rng);
    for k in ks.iter().take(sample) {
        let e = mono.expand(k)?;
        out.push(Check::new(format!("bar-invariant M k={k:?}"), canon.bar_check(&e)?, ""));
    }
    Ok(out)
}

pub fn canonical(canon: &Canonical, max_height: u32) -> Result<Vec<Check>> {
    let n = canon.mono.pbw.alg.rank();
    let mut out = Vec::new();
    for nu in weights_up_to(n, max_height) {
        for b in canon.canonical_basis_at_weight(&nu)? {
            let cert = canon.verify_canonical(&b);
            out.push(Check::new(format!("b_{:?}", b.c), cert.passed(), cert.failure.unwrap_or_default()));
        }
    }
    Ok(out)
}
