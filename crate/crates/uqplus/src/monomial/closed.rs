//! Closed forms for `f(c)`.
//!
//! The PBW order of rank `n` splits into a first block (the `l` roots with
//! positive `α_n`-coordinate) followed by the roots of the rank `n-1`
//! subdiagram, and word `j` splits the same way into its first `l` letters and
//! the word `j` of the subdiagram. Repeating this gives one block per rank.
//! Each block carries a linear map `k_block = L · c_block` that depends only
//! on the local Cartan type and on which local order the block's roots follow.

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{
    betas_of_word, build_root_system, first_block_length, word_i, word_j, Family, LieType, D5_INTO_E6,
};

/// The order in which a block lists its roots, relative to the local diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockKind {
    /// The first block of the local word `i`.
    I,
    /// The first block of the local word `j`.
    J,
    /// Orthogonal simple roots (`D2`); exponents are copied letter by letter.
    Commuting,
}

/// One rank of the descent.
#[derive(Debug, Clone, Serialize)]
pub struct Level {
    pub local: String,
    /// Local node `k` is node `nodes[k-1]` of the full diagram.
    pub nodes: Vec<usize>,
    pub kind: BlockKind,
    /// Positions in `c` (PBW order).
    pub c_range: Range<usize>,
    /// Positions in `k` (word `j`).
    pub k_range: Range<usize>,
    /// `k_{k_range[a]} = Σ_b matrix[a][b] c_{c_range[b]}`.
    pub matrix: Vec<Vec<u32>>,
}

fn lower(t: LieType, nodes: &[usize]) -> (LieType, Vec<usize>) {
    let n = t.rank;
    if n == 2 && t.family != Family::D {
        return (LieType::raw(Family::A, 1), vec![nodes[0]]);
    }
    match t.family {
        Family::E if n == 6 => (LieType::raw(Family::D, 5), D5_INTO_E6.iter().map(|&k| nodes[k - 1]).collect()),
        f => (LieType::raw(f, n - 1), nodes[..n - 1].to_vec()),
    }
}

/// Block decomposition of the PBW order `i` against word `j`.
pub fn levels(t: LieType) -> Result<Vec<Level>> {
    if matches!(t.family, Family::F) || (t.family == Family::E && t.rank > 6) {
        return Err(Error::UnsupportedType(t.to_string()));
    }
    let rs = build_root_system(t);
    let n = t.rank;
    let ibetas = betas_of_word(&rs, &word_i(t));
    let jw = word_j(t);
    let mut out = Vec::new();
    let (mut local, mut nodes) = (t, (1..=n).collect::<Vec<usize>>());
    let (mut cp, mut kp) = (0usize, 0usize);
    let embed = |local_beta: &[i64], nodes: &[usize]| {
        let mut v = vec![0i64; n];
        for (k, &x) in local_beta.iter().enumerate() {
            v[nodes[k] - 1] = x;
        }
        v
    };
    loop {
        let m = local.rank;
        if local.family == Family::D && m == 2 {
            // α_1 and α_2 commute: one exponent per letter
            let c_range = cp..cp + 2;
            let k_range = kp..kp + 2;
            let mut matrix = vec![vec![0u32; 2]; 2];
            for (a, &letter) in jw[k_range.clone()].iter().enumerate() {
                let b = c_range
                    .clone()
                    .position(|s| ibetas[s].iter().enumerate().all(|(x, &y)| y == i64::from(x + 1 == letter)))
                    .ok_or_else(|| Error::Verification(format!("{t}: commuting block does not match")))?;
                matrix[a][b] = 1;
            }
            out.push(Level { local: "D2".into(), nodes, kind: BlockKind::Commuting, c_range, k_range, matrix });
            break;
        }
        let lrs = build_root_system(local);
        let l = first_block_length(&lrs);
        let c_range = cp..cp + l;
        let k_range = kp..kp + l;
        let lj = word_j(local);
        if jw[k_range.clone()].iter().zip(&lj).any(|(&a, &b)| a != nodes[b - 1]) {
            return Err(Error::Verification(format!("{t}: word j does not descend to {local}")));
        }
        let block = &ibetas[c_range.clone()];
        let same = |w: &[usize]| betas_of_word(&lrs, w)[..l].iter().zip(block).all(|(b, x)| &embed(b, &nodes) == x);
        let kind = if same(&word_i(local)) {
            BlockKind::I
        } else if same(&lj) {
            BlockKind::J
        } else {
            return Err(Error::UnsupportedType(format!("{t}: block {local} follows neither local order")));
        };
        let matrix = block_matrix(local, kind).ok_or_else(|| Error::UnsupportedType(format!("{local} ({kind:?})")))?;
        out.push(Level { local: local.to_string(), nodes: nodes.clone(), kind, c_range, k_range, matrix });
        cp += l;
        kp += l;
        if m == 1 {
            break;
        }
        (local, nodes) = lower(local, &nodes);
    }
    Ok(out)
}

/// `f(c)` assembled from the per-rank blocks.
pub fn f_closed(t: LieType, c: &[u32]) -> Result<Vec<u32>> {
    let lv = levels(t)?;
    let r = lv.last().map_or(0, |x| x.c_range.end);
    if c.len() != r {
        return Err(Error::LengthMismatch(c.len(), r));
    }
    Ok(apply_levels(&lv, c))
}

pub(crate) fn apply_levels(lv: &[Level], c: &[u32]) -> Vec<u32> {
    let mut k = vec![0u32; c.len()];
    for level in lv {
        let cb = &c[level.c_range.clone()];
        for (a, row) in level.matrix.iter().enumerate() {
            k[level.k_range.start + a] = row.iter().zip(cb).map(|(x, y)| x * y).sum();
        }
    }
    k
}

/// 1-based sparse rows: `rows[i-1]` lists `(t, coefficient)`.
fn dense(l: usize, rows: Vec<Vec<(usize, u32)>>) -> Vec<Vec<u32>> {
    assert_eq!(rows.len(), l);
    rows.into_iter()
        .map(|r| {
            let mut v = vec![0u32; l];
            for (t, x) in r {
                v[t - 1] += x;
            }
            v
        })
        .collect()
}

fn ones(range: std::ops::RangeInclusive<usize>) -> Vec<(usize, u32)> {
    range.map(|t| (t, 1)).collect()
}

/// The first-block map for a local type and block order.
pub fn block_matrix(t: LieType, kind: BlockKind) -> Option<Vec<Vec<u32>>> {
    let n = t.rank;
    if n == 1 {
        return Some(vec![vec![1]]);
    }
    let rows = match (t.family, kind) {
        // k_i = c_n + c_{n-1} + ... + c_{n-i+1}
        (Family::A, BlockKind::I) => (1..=n).map(|i| ones(n - i + 1..=n)).collect(),
        (Family::B, BlockKind::I) => (1..2 * n)
            .map(|i| {
                if i == 1 {
                    vec![(1, 1)]
                } else if i < n {
                    let mut r = vec![(i, 1)];
                    r.extend(ones(2 * n - i + 1..=2 * n - 1));
                    r
                } else if i == n {
                    let mut r = vec![(n, 1)];
                    r.extend((n + 1..2 * n).map(|t| (t, 2)));
                    r
                } else {
                    ones(2 * n - i + 1..=2 * n - 1)
                }
            })
            .collect(),
        (Family::C, BlockKind::I) => (1..2 * n)
            .map(|i| {
                if i == 1 {
                    vec![(1, 1)]
                } else if i < n {
                    let mut r = vec![(i, 1)];
                    r.extend(ones(2 * n - i + 1..=2 * n - 1));
                    r
                } else if i == n {
                    ones(n..=2 * n - 1)
                } else {
                    let j = i - n;
                    let mut r = ones(n - j + 1..=n - 1);
                    r.push((n, 2));
                    r.extend(ones(n + 1..=2 * n - 1));
                    r
                }
            })
            .collect(),
        (Family::G, BlockKind::I) => vec![vec![(1, 1)], vec![(2, 1), (3, 3)], vec![(2, 1), (3, 2)], vec![(4, 2), (5, 3)], vec![(4, 1), (5, 1)]],
        (Family::D, _) => return d_block(n, kind),
        (Family::E, BlockKind::I) if n == 6 => e6_rows(),
        _ => return None,
    };
    Some(dense(rows.len(), rows))
}

fn d_block(n: usize, kind: BlockKind) -> Option<Vec<Vec<u32>>> {
    let l = 2 * n - 2;
    // the J order; the I order lists β_{n-1} and β_n the other way round
    let rows: Vec<Vec<(usize, u32)>> = (1..=l)
        .map(|i| {
            if i == 1 {
                vec![(1, 1)]
            } else if i < n {
                let mut r = vec![(i, 1)];
                r.extend(ones(2 * n - i..=l));
                r
            } else if i == n {
                ones(n..=l)
            } else {
                ones(2 * n - i..=l)
            }
        })
        .collect();
    let swap = |t: usize| match t {
        _ if t == n - 1 => n,
        _ if t == n => n - 1,
        _ => t,
    };
    let rows = match kind {
        BlockKind::J => rows,
        BlockKind::I => rows.into_iter().map(|r| r.into_iter().map(|(t, x)| (swap(t), x)).collect()).collect(),
        BlockKind::Commuting => return None,
    };
    Some(dense(l, rows))
}

fn e6_rows() -> Vec<Vec<(usize, u32)>> {
    let k: [&[usize]; 16] = [
        &[9],
        &[5, 9],
        &[3, 5, 9],
        &[4, 6, 10, 16],
        &[2, 3, 5, 9],
        &[4, 7, 11, 15, 16],
        &[6, 7, 12, 14, 15, 16],
        &[10, 11, 12, 13, 14, 15, 16],
        &[1, 2, 3, 5, 9],
        &[4, 8, 13, 14, 15, 16],
        &[6, 8, 12, 13, 14, 15, 16],
        &[7, 8, 11, 12, 13, 14, 15, 16],
        &[8, 10, 11, 12, 13, 14, 15, 16],
        &[7, 8, 10, 11, 12, 13, 14, 15, 16],
        &[6, 7, 8, 10, 11, 12, 13, 14, 15, 16],
        &[4, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16],
    ];
    k.iter().map(|r| r.iter().map(|&t| (t, 1)).collect()).collect()
}
