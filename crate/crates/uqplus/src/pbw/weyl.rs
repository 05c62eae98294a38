//! Choosing how to evaluate `T_w(E_k)`.
//!
//! `T_w` depends only on the Weyl group element, so any reduced expression of
//! `w` may be used, and whenever a right factor `y` of `w` maps `α_k` to a
//! simple root `α_{k'}` we have `T_y(E_k) = E_{k'}`. Among all such routes we
//! pick one that keeps the weights of the intermediate elements as low as
//! possible, since word-model cost grows with height.

use std::collections::HashMap;

use crate::rootdata::RootSystem;

/// Evaluation route for a root vector: start from `E_start`, then apply
/// `T_{steps[0]}`, `T_{steps[1]}`, ... in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPlan {
    pub start: usize,
    pub steps: Vec<usize>,
    /// Largest height met along the route.
    pub peak: u32,
}

type Elem = Vec<i64>;

struct Ctx<'a> {
    rs: &'a RootSystem,
    n: usize,
    memo: HashMap<Elem, (u32, Option<usize>)>,
}

fn ht(v: &[i64]) -> u32 {
    v.iter().sum::<i64>() as u32
}

fn is_simple(v: &[i64]) -> Option<usize> {
    (ht(v) == 1).then(|| v.iter().position(|&x| x == 1).unwrap() + 1)
}

impl Ctx<'_> {
    fn image(&self, e: &Elem, j: usize) -> Vec<i64> {
        e[(j - 1) * self.n..j * self.n].to_vec()
    }

    fn descents(&self, e: &Elem) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.image(e, j).iter().all(|&x| x <= 0)).collect()
    }

    /// `v s_j`.
    fn times(&self, e: &Elem, j: usize) -> Elem {
        let n = self.n;
        let ij = self.image(e, j);
        let mut out = e.clone();
        for l in 1..=n {
            let a = self.rs.cartan[j - 1][l - 1] as i64;
            if a != 0 {
                for x in 0..n {
                    out[(l - 1) * n + x] -= a * ij[x];
                }
            }
        }
        out
    }

    /// Minimal peak height from state `e` (carrying an element of weight `g`) to the identity.
    fn best(&mut self, e: &Elem, g: &[i64]) -> u32 {
        if let Some(&(v, _)) = self.memo.get(e) {
            return v;
        }
        let mut choice = None;
        let mut val = u32::MAX;
        for j in self.descents(e) {
            let ne = self.times(e, j);
            let ng = self.rs.reflect(j, g);
            let v = self.best(&ne, &ng);
            if v < val {
                val = v;
                choice = Some(j);
            }
        }
        let v = if choice.is_none() { ht(g) } else { val.max(ht(g)) };
        self.memo.insert(e.clone(), (v, choice));
        v
    }
}

fn element_of_word(rs: &RootSystem, w: &[usize]) -> Elem {
    let n = rs.rank();
    let mut out = Vec::with_capacity(n * n);
    for j in 1..=n {
        let mut v = vec![0i64; n];
        v[j - 1] = 1;
        for &s in w.iter().rev() {
            v = rs.reflect(s, &v);
        }
        out.extend(v);
    }
    out
}

/// Route for `T_{w_1} ... T_{w_m}(E_k)` with `w` reduced and `w(α_k) > 0`.
pub fn plan(rs: &RootSystem, w: &[usize], k: usize) -> ChainPlan {
    let n = rs.rank();
    let mut ctx = Ctx { rs, n, memo: HashMap::new() };
    let start = element_of_word(rs, w);
    let mut g0 = vec![0i64; n];
    g0[k - 1] = 1;
    // every state below `w`; the weight carried there does not depend on the path
    let mut frontier = vec![(start.clone(), g0, 0usize)];
    let mut seen: HashMap<Elem, ()> = HashMap::new();
    seen.insert(start, ());
    let mut best: Option<(u32, usize, Elem, Vec<i64>)> = None;
    let mut i = 0;
    while i < frontier.len() {
        let (e, g, depth) = frontier[i].clone();
        i += 1;
        if is_simple(&g).is_some() {
            let v = ctx.best(&e, &g);
            if best.as_ref().is_none_or(|b| v < b.0 || (v == b.0 && depth > b.1)) {
                best = Some((v, depth, e.clone(), g.clone()));
            }
        }
        for j in ctx.descents(&e) {
            let ne = ctx.times(&e, j);
            if seen.insert(ne.clone(), ()).is_none() {
                frontier.push((ne, rs.reflect(j, &g), depth + 1));
            }
        }
    }
    let (peak, _, mut e, mut g) = best.expect("start state exists");
    let start = is_simple(&g).expect("route starts at a simple weight");
    let mut steps = Vec::new();
    while let Some(&(_, Some(j))) = ctx.memo.get(&e) {
        steps.push(j);
        e = ctx.times(&e, j);
        g = rs.reflect(j, &g);
    }
    ChainPlan { start, steps, peak }
}

/// The route read directly off the word: `T_{w_{m}}` is applied first.
pub fn literal_plan(rs: &RootSystem, w: &[usize], k: usize) -> ChainPlan {
    let n = rs.rank();
    let mut g = vec![0i64; n];
    g[k - 1] = 1;
    let mut peak = 1;
    for &s in w.iter().rev() {
        g = rs.reflect(s, &g);
        peak = peak.max(ht(&g));
    }
    ChainPlan { start: k, steps: w.iter().rev().copied().collect(), peak }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, word_i, LieType};

    fn weight_after(rs: &RootSystem, p: &ChainPlan) -> Vec<i64> {
        let mut g = vec![0i64; rs.rank()];
        g[p.start - 1] = 1;
        for &j in &p.steps {
            g = rs.reflect(j, &g);
        }
        g
    }

    #[test]
    fn routes_reach_the_right_root() {
        for t in ["A3", "B3", "G2", "E6", "F4"] {
            let lt = LieType::parse(t).unwrap();
            let rs = build_root_system(lt);
            let w = word_i(lt);
            for s in 0..w.len() {
                let p = plan(&rs, &w[..s], w[s]);
                let lit = literal_plan(&rs, &w[..s], w[s]);
                assert_eq!(weight_after(&rs, &p), weight_after(&rs, &lit), "{t} {s}");
                assert!(p.peak <= lit.peak);
                let h = weight_after(&rs, &p).iter().sum::<i64>() as u32;
                if h == 1 {
                    assert!(p.steps.is_empty());
                }
                match t {
                    "A3" | "E6" => assert!(p.peak <= h.max(2), "{t} position {s}"),
                    "B3" | "F4" => assert!(p.peak <= h + 1, "{t} position {s}"),
                    _ => {}
                }
            }
        }
    }
}
