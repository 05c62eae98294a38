//! On-disk cache: one JSON file per type with a versioned header. Writes go
//! to a temporary file in the same directory and are renamed into place.
//! Anything unreadable or with a mismatched header is ignored.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::monomial::{MonomialExponents, Monomials};
use crate::pbw::{ExponentVector, PbwTerm};
use crate::qcoeff::LaurentInt;
use crate::rootdata::{word_j, LieType};
use crate::ualgebra::WordCoeff;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub version: u32,
    #[serde(rename = "type")]
    pub lie: String,
    pub word_j: Vec<usize>,
    pub word_i: Vec<usize>,
    pub order_hash: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub t: usize,
    pub terms: Vec<WordCoeff>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub s: usize,
    pub t: usize,
    pub terms: Vec<PbwTerm<LaurentInt>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub c: ExponentVector,
    pub ks: Vec<MonomialExponents>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub header: Header,
    pub roots: Vec<RootEntry>,
    pub relations: Vec<RelationEntry>,
    pub oracle: Vec<OracleEntry>,
}

pub fn header_for(mono: &Monomials) -> Header {
    let order = &mono.pbw.order;
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(&(&order.word, &order.betas)).expect("plain data serializes"));
    let lie = mono.pbw.alg.lie();
    Header {
        version: FORMAT_VERSION,
        lie: lie.to_string(),
        word_j: mono.jorder.word.clone(),
        word_i: order.word.clone(),
        order_hash: hex::encode(h.finalize()),
    }
}

pub fn path_for(dir: &Path, t: LieType) -> PathBuf {
    dir.join(format!("{t}.json"))
}

/// Snapshot of everything worth keeping.
pub fn collect(mono: &Monomials) -> CacheEntry {
    let pbw = &mono.pbw;
    let roots = pbw
        .cached_roots()
        .into_iter()
        .filter_map(|(t, x)| x.to_json_terms().map(|terms| RootEntry { t, terms }))
        .collect();
    let relations = pbw
        .cached_relations()
        .into_iter()
        .map(|((s, t), m)| RelationEntry { s, t, terms: m.into_iter().map(|(c, coeff)| PbwTerm { c, coeff }).collect() })
        .collect();
    let oracle = mono.cached_searches().into_iter().map(|(c, ks)| OracleEntry { c, ks }).collect();
    CacheEntry { header: header_for(mono), roots, relations, oracle }
}

pub fn read(path: &Path) -> Result<CacheEntry> {
    let bytes = std::fs::read(path).map_err(|e| Error::CorruptCache(format!("{}: {e}", path.display())))?;
    serde_json::from_slice(&bytes).map_err(|e| Error::CorruptCache(format!("{}: {e}", path.display())))
}

pub fn write(path: &Path, entry: &CacheEntry) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let io = |e: std::io::Error| Error::BadInput(format!("cache directory {}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    serde_json::to_writer(&mut tmp, entry).map_err(|e| Error::BadInput(e.to_string()))?;
    tmp.flush().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Seeds the caches from `path`. Returns whether the entry was used.
pub fn load(path: &Path, mono: &Monomials) -> bool {
    let entry = match read(path) {
        Ok(e) => e,
        Err(e) => {
            if path.exists() {
                log::warn!("{e}; recomputing");
            }
            return false;
        }
    };
    let expected = header_for(mono);
    if entry.header != expected || expected.word_j != word_j(mono.pbw.alg.lie()) {
        log::warn!("{}: header does not match, ignoring", path.display());
        return false;
    }
    match seed(&entry, mono) {
        Ok(()) => true,
        Err(e) => {
            log::warn!("{}: {e}; ignoring", path.display());
            false
        }
    }
}

fn seed(entry: &CacheEntry, mono: &Monomials) -> Result<()> {
    let pbw = &mono.pbw;
    let r = pbw.len();
    let bad = |m: String| Error::CorruptCache(m);
    // validate everything before seeding anything
    let mut roots = Vec::new();
    for e in &entry.roots {
        if e.t >= r {
            return Err(bad(format!("root index {}", e.t)));
        }
        let x = pbw.alg.from_words(e.terms.iter().map(|w| (&w.word, &w.coeff)))?;
        if pbw.alg.weight_of(&x).as_ref() != Some(&pbw.order.betas[e.t]) {
            return Err(bad(format!("root vector {} has the wrong weight", e.t + 1)));
        }
        roots.push((e.t, x));
    }
    for e in &entry.relations {
        if e.t >= e.s || e.s >= r {
            return Err(bad(format!("relation ({}, {})", e.s, e.t)));
        }
        let nu: Vec<u32> = pbw.order.betas[e.s].iter().zip(&pbw.order.betas[e.t]).map(|(a, b)| a + b).collect();
        if e.terms.iter().any(|x| x.c.len() != r || pbw.order.weight_of(&x.c) != nu) {
            return Err(bad(format!("relation ({}, {}) has a term of the wrong weight", e.s, e.t)));
        }
    }
    for e in &entry.oracle {
        if e.c.len() != r || e.ks.iter().any(|k| k.len() != mono.len() || mono.weight_of_k(k) != pbw.order.weight_of(&e.c)) {
            return Err(bad(format!("oracle entry for {:?}", e.c)));
        }
    }
    for (t, x) in roots {
        pbw.seed_root(t, x);
    }
    for e in &entry.relations {
        pbw.seed_relation(e.s, e.t, e.terms.iter().map(|x| (x.c.clone(), x.coeff.clone())).collect());
    }
    for e in &entry.oracle {
        mono.seed_search(e.c.clone(), e.ks.clone());
    }
    Ok(())
}
