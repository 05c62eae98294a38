//! Root data in the diagram numbering: Cartan matrices, symmetrizers,
//! positive roots, the words `j` and `i`, convex orders and Kostant
//! partitions.

mod cartan;
mod words;

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

pub use cartan::{cartan_matrix, symmetrizers, Family, LieType};
pub use words::{is_cartan_embedding, tau, word_i, word_j, WeylWord, D5_INTO_E6};

/// Nonnegative coordinates in the basis of simple roots.
pub type Weight = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("illegal rank {1} for type {0}")]
    IllegalRank(char, usize),
    #[error("unknown Cartan type {0:?}")]
    UnknownFamily(String),
    #[error("word is not reduced: beta_{0} is negative or repeated")]
    NotReduced(usize),
    #[error("word has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("node {0} out of range")]
    BadNode(usize),
    #[error("weight has {got} coordinates, expected {expected}")]
    BadWeight { got: usize, expected: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub fn height(w: &[u32]) -> u32 {
    w.iter().sum()
}

pub fn unit(n: usize, k: usize) -> Weight {
    let mut v = vec![0; n];
    v[k - 1] = 1;
    v
}

/// Cartan data and positive roots of a finite type.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystem {
    pub lie: LieType,
    pub cartan: Vec<Vec<i32>>,
    pub d: Vec<u32>,
    /// `(α_i, α_j) = d_i a_ij`.
    pub form: Vec<Vec<i32>>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<Weight>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.lie.rank
    }

    /// Symmetric form on weights (or any integer coordinate vectors).
    pub fn pairing(&self, u: &[u32], v: &[u32]) -> i32 {
        let mut s = 0i32;
        for (&x, row) in u.iter().zip(&self.form) {
            if x != 0 {
                s += x as i32 * row.iter().zip(v).map(|(f, &y)| f * y as i32).sum::<i32>();
            }
        }
        s
    }

    /// `(α_k, v)` for a node `k` (1-based).
    pub fn pair_node(&self, k: usize, v: &[u32]) -> i32 {
        self.form[k - 1].iter().zip(v).map(|(f, x)| f * *x as i32).sum()
    }

    /// `(α_a, α_b)` for nodes.
    pub fn node_form(&self, a: usize, b: usize) -> i32 {
        self.form[a - 1][b - 1]
    }

    /// `s_k(v) = v - <α_k^∨, v> α_k` on signed coordinates.
    pub fn reflect(&self, k: usize, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        let s: i64 = self.cartan[k - 1].iter().zip(v).map(|(a, x)| *a as i64 * x).sum();
        out[k - 1] -= s;
        out
    }

    pub fn is_positive_root(&self, v: &[u32]) -> bool {
        self.positive_roots.binary_search_by(|r| cmp_root(r, v)).is_ok()
    }

    /// `d_β = (β, β)/2` for a root.
    pub fn d_root(&self, beta: &[u32]) -> u32 {
        (self.pairing(beta, beta) / 2) as u32
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }
}

fn cmp_root(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    height(a).cmp(&height(b)).then_with(|| a.cmp(b))
}

/// Builds the root system: positive roots by closure of the simple roots
/// under simple reflections, symmetrizers solved from the Cartan matrix.
pub fn build_root_system(t: LieType) -> RootSystem {
    let cartan = cartan_matrix(t);
    let d = symmetrizers(&cartan).expect("finite type Cartan matrices are symmetrizable");
    let n = t.rank;
    let form: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| d[i] as i32 * cartan[i][j]).collect()).collect();
    let mut rs = RootSystem { lie: t, cartan, d, form, positive_roots: Vec::new() };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = (1..=n).map(|k| unit(n, k).into_iter().map(i64::from).collect()).collect();
    seen.extend(frontier.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for k in 1..=n {
                let c = rs.reflect(k, b);
                if c.iter().all(|&x| x >= 0) && seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Weight> = seen.into_iter().map(|v| v.into_iter().map(|x| x as u32).collect()).collect();
    roots.sort_by(|a, b| cmp_root(a, b));
    rs.positive_roots = roots;
    rs
}

/// A reduced expression of the longest element together with its convex
/// order `β_1 < ... < β_r`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvexOrder {
    pub word: WeylWord,
    pub betas: Vec<Weight>,
    /// `d_{β_t}`, which equals `d_{word[t]}`.
    pub d: Vec<u32>,
}

impl ConvexOrder {
    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn position(&self, beta: &[u32]) -> Option<usize> {
        self.betas.iter().position(|b| b.as_slice() == beta)
    }

    /// `Σ c_t β_t`.
    pub fn weight_of(&self, c: &[u32]) -> Weight {
        let n = self.betas.first().map_or(0, |b| b.len());
        let mut w = vec![0u32; n];
        for (ct, b) in c.iter().zip(&self.betas) {
            if *ct > 0 {
                for (x, y) in w.iter_mut().zip(b) {
                    *x += ct * y;
                }
            }
        }
        w
    }
}

/// `β_t = s_{k_1} ... s_{k_{t-1}} α_{k_t}` for every prefix of `w`.
pub fn betas_of_word(rs: &RootSystem, w: &[usize]) -> Vec<Vec<i64>> {
    let n = rs.rank();
    (0..w.len())
        .map(|t| {
            let mut v: Vec<i64> = unit(n, w[t]).into_iter().map(i64::from).collect();
            for s in (0..t).rev() {
                v = rs.reflect(w[s], &v);
            }
            v
        })
        .collect()
}

/// Accepts `w` iff it is a reduced expression of the longest element.
pub fn validate_convex_order(rs: &RootSystem, w: &[usize]) -> Result<ConvexOrder, RootError> {
    words::check_letters(rs.lie, w)?;
    let r = rs.num_positive_roots();
    let mut seen = HashSet::new();
    let mut betas = Vec::with_capacity(w.len());
    for (t, b) in betas_of_word(rs, w).into_iter().enumerate() {
        if b.iter().any(|&x| x < 0) || !seen.insert(b.clone()) {
            return Err(RootError::NotReduced(t + 1));
        }
        betas.push(b.into_iter().map(|x| x as u32).collect::<Weight>());
    }
    if w.len() != r {
        return Err(RootError::WrongLength { got: w.len(), expected: r });
    }
    let d = w.iter().map(|&k| rs.d[k - 1]).collect();
    Ok(ConvexOrder { word: w.to_vec(), betas, d })
}

/// Number of positive roots with positive coordinate at the last node.
pub fn first_block_length(rs: &RootSystem) -> usize {
    let n = rs.rank();
    rs.positive_roots.iter().filter(|b| b[n - 1] >= 1).count()
}

/// All `c` with `Σ c_t β_t = ν`, in descending lexicographic order.
pub fn kostant_vectors(nu: &[u32], order: &ConvexOrder) -> Vec<Vec<u32>> {
    let r = order.len();
    let mut memo: HashMap<(usize, Weight), bool> = HashMap::new();
    let mut out = Vec::new();
    let mut cur = vec![0u32; r];
    kostant_rec(order, 0, nu.to_vec(), &mut cur, &mut memo, &mut out);
    out
}

fn feasible(order: &ConvexOrder, t: usize, rem: &Weight, memo: &mut HashMap<(usize, Weight), bool>) -> bool {
    if rem.iter().all(|&x| x == 0) {
        return true;
    }
    if t == order.len() {
        return false;
    }
    if let Some(&v) = memo.get(&(t, rem.clone())) {
        return v;
    }
    let b = &order.betas[t];
    let mut cur = rem.clone();
    let mut ok = false;
    loop {
        if feasible(order, t + 1, &cur, memo) {
            ok = true;
            break;
        }
        if !sub_in_place(&mut cur, b) {
            break;
        }
    }
    memo.insert((t, rem.clone()), ok);
    ok
}

fn sub_in_place(v: &mut [u32], b: &[u32]) -> bool {
    if v.iter().zip(b).any(|(x, y)| x < y) {
        return false;
    }
    v.iter_mut().zip(b).for_each(|(x, y)| *x -= y);
    true
}

fn kostant_rec(
    order: &ConvexOrder,
    t: usize,
    rem: Weight,
    cur: &mut Vec<u32>,
    memo: &mut HashMap<(usize, Weight), bool>,
    out: &mut Vec<Vec<u32>>,
) {
    if t == order.len() {
        if rem.iter().all(|&x| x == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let b = &order.betas[t];
    let max = rem.iter().zip(b).filter(|(_, y)| **y > 0).map(|(x, y)| x / y).min().unwrap_or(0);
    for m in (0..=max).rev() {
        let next: Weight = rem.iter().zip(b).map(|(x, y)| x - m * y).collect();
        if feasible(order, t + 1, &next, memo) {
            cur[t] = m;
            kostant_rec(order, t + 1, next, cur, memo, out);
        }
    }
    cur[t] = 0;
}

/// The cases of the rank-two commutation lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank2Case {
    /// `{α, α_k}`
    Orthogonal,
    /// `{α, α+α_k, α_k}`
    Simple,
    /// `{α, α+α_k, α+2α_k, α_k}`
    Double,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Subsystem {
    pub members: Vec<Weight>,
    pub case: Rank2Case,
}

/// `R^+_{α,k} = {β ∈ R^+ : β = rα + sα_k}` and its case.
pub fn rank2_subsystem(alpha: &[u32], k: usize, rs: &RootSystem) -> Result<Rank2Subsystem, RootError> {
    let n = rs.rank();
    if !rs.is_positive_root(alpha) {
        return Err(RootError::NotApplicable("alpha is not a positive root".into()));
    }
    let ak = unit(n, k);
    if alpha == ak.as_slice() {
        return Err(RootError::NotApplicable("alpha equals alpha_k".into()));
    }
    let mut members = Vec::new();
    for beta in &rs.positive_roots {
        // β - rα must be a multiple of α_k
        let mut found = false;
        for r in 0..=3u32 {
            let rest: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| *b as i64 - (r * a) as i64).collect();
            if rest.iter().enumerate().all(|(i, &x)| i == k - 1 || x == 0) {
                found = true;
                break;
            }
        }
        if found {
            members.push(beta.clone());
        }
    }
    let plus = |s: u32| -> Weight {
        let mut v = alpha.to_vec();
        v[k - 1] += s;
        v
    };
    let set: HashSet<Weight> = members.iter().cloned().collect();
    let pattern = |extra: &[Weight]| -> bool {
        let mut want: HashSet<Weight> = [alpha.to_vec(), ak.clone()].into_iter().collect();
        want.extend(extra.iter().cloned());
        want == set
    };
    let case = if pattern(&[]) {
        Rank2Case::Orthogonal
    } else if pattern(&[plus(1)]) {
        Rank2Case::Simple
    } else if pattern(&[plus(1), plus(2)]) {
        Rank2Case::Double
    } else {
        return Err(RootError::NotApplicable(format!("{} roots in the rank two subsystem", members.len())));
    };
    Ok(Rank2Subsystem { members, case })
}

/// Nonzero weights of height at most `hmax`, in lexicographic order.
pub fn weights_up_to(n: usize, hmax: u32) -> Vec<Weight> {
    (1..=hmax).flat_map(|h| compositions(n, h)).collect::<std::collections::BTreeSet<_>>().into_iter().collect()
}

/// All `v ∈ N^r` with `Σ v_t = total`.
pub fn compositions(r: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(t: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if t + 1 == cur.len() {
            cur[t] = left;
            out.push(cur.clone());
            cur[t] = 0;
            return;
        }
        for x in 0..=left {
            cur[t] = x;
            rec(t + 1, left - x, cur, out);
        }
        cur[t] = 0;
    }
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    let mut cur = vec![0; r];
    rec(0, total, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(LieType::parse(s).unwrap())
    }

    #[test]
    fn root_counts() {
        for (s, r) in [("A2", 3), ("B2", 4), ("G2", 6), ("B9", 81), ("F4", 24), ("E8", 120), ("D4", 12)] {
            assert_eq!(rs(s).num_positive_roots(), r, "{s}");
        }
    }

    #[test]
    fn a2_convex_order() {
        let r = rs("A2");
        let o = validate_convex_order(&r, &[2, 1, 2]).unwrap();
        assert_eq!(o.betas, vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
        assert_eq!(validate_convex_order(&r, &[1, 1, 1]).unwrap_err(), RootError::NotReduced(2));
        assert!(matches!(validate_convex_order(&r, &[1, 2]), Err(RootError::WrongLength { .. })));
    }

    #[test]
    fn first_blocks() {
        assert_eq!(first_block_length(&rs("A3")), 3);
        assert_eq!(first_block_length(&rs("B3")), 5);
        assert_eq!(first_block_length(&rs("A1")), 1);
        assert_eq!(first_block_length(&rs("E6")), 16);
    }

    #[test]
    fn kostant_a2() {
        let r = rs("A2");
        let o = validate_convex_order(&r, &[2, 1, 2]).unwrap();
        assert_eq!(kostant_vectors(&[1, 1], &o), vec![vec![1, 0, 1], vec![0, 1, 0]]);
        assert_eq!(kostant_vectors(&[1, 0], &o), vec![vec![0, 0, 1]]);
        assert_eq!(kostant_vectors(&[2, 0], &o), vec![vec![0, 0, 2]]);
    }

    #[test]
    fn rank2_cases() {
        let a2 = rs("A2");
        assert_eq!(rank2_subsystem(&[0, 1], 1, &a2).unwrap().case, Rank2Case::Simple);
        let a3 = rs("A3");
        assert_eq!(rank2_subsystem(&[0, 0, 1], 1, &a3).unwrap().case, Rank2Case::Orthogonal);
        let b2 = rs("B2");
        assert_eq!(rank2_subsystem(&[0, 1], 1, &b2).unwrap().case, Rank2Case::Double);
        let g2 = rs("G2");
        assert!(rank2_subsystem(&[0, 1], 1, &g2).is_err());
    }
}

#[cfg(test)]
mod catalogue_tests {
    use super::*;

    #[test]
    fn catalogue_words_are_reduced() {
        for s in ["A1", "A4", "B3", "C4", "D5", "G2", "F4", "E6", "E7", "E8"] {
            let t = LieType::parse(s).unwrap();
            let r = build_root_system(t);
            validate_convex_order(&r, &word_j(t)).unwrap_or_else(|e| panic!("{s} j: {e}"));
            validate_convex_order(&r, &word_i(t)).unwrap_or_else(|e| panic!("{s} i: {e}"));
        }
    }
}
