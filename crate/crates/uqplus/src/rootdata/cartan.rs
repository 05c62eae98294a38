use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::RootError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(RootError::UnknownFamily(other.to_string())),
        }
    }
}

/// A finite Cartan type with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(RootError::IllegalRank(family.letter(), rank))
        }
    }

    /// Parses names such as `A3`, `b2`, `E6`.
    pub fn parse(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let (f, n) = s.split_at(1.min(s.len()));
        let family = Family::from_str(f)?;
        let rank = n.parse::<usize>().map_err(|_| RootError::UnknownFamily(s.to_string()))?;
        Self::new(family, rank)
    }

    /// Unchecked constructor for the rank-descent recursion, which passes
    /// through ranks below the catalogue range (e.g. `C2`, `D3`).
    pub(crate) fn raw(family: Family, rank: usize) -> Self {
        LieType { family, rank }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Cartan matrix `a_ij = 2(α_i, α_j)/(α_i, α_i)` in the diagram numbering:
/// B has node 1 short, C has node 1 long, D has the fork at node 3 with tips
/// 1 and 2, E has node 2 attached to node 4, F and G have node 1 short.
pub fn cartan_matrix(t: LieType) -> Vec<Vec<i32>> {
    let n = t.rank;
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match t.family {
        Family::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B | Family::C => {
            (2..n).for_each(|i| link(i, i + 1, -1, -1));
            if n >= 2 {
                if t.family == Family::B {
                    link(1, 2, -2, -1);
                } else {
                    link(1, 2, -1, -2);
                }
            }
        }
        Family::D => {
            if n >= 3 {
                link(1, 3, -1, -1);
                link(2, 3, -1, -1);
            }
            (3..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::E => {
            link(1, 3, -1, -1);
            link(3, 4, -1, -1);
            link(2, 4, -1, -1);
            (4..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(1, 2, -1, -1);
            link(2, 3, -2, -1);
            link(3, 4, -1, -1);
        }
        Family::G => link(1, 2, -3, -1),
    }
    a
}

/// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`.
///
/// Propagates ratios along the Dynkin graph from node 1 and clears
/// denominators; returns `None` if the matrix is not symmetrizable.
pub fn symmetrizers(a: &[Vec<i32>]) -> Option<Vec<u32>> {
    let n = a.len();
    // rational d_i as (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                if a[j][i] == 0 {
                    return None;
                }
                // d_j = d_i a_ij / a_ji
                let (mut np, mut nq) = (p * a[i][j] as i64, q * a[j][i] as i64);
                if nq < 0 {
                    np = -np;
                    nq = -nq;
                }
                let g = np.gcd(&nq);
                let v = (np / g, nq / g);
                match d[j] {
                    None => {
                        d[j] = Some(v);
                        stack.push(j);
                    }
                    Some(w) if w != v => return None,
                    _ => {}
                }
            }
        }
    }
    let den = d.iter().fold(1i64, |acc, x| acc.lcm(&x.unwrap().1));
    let ints: Vec<i64> = d.iter().map(|x| x.unwrap().0 * den / x.unwrap().1).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    Some(ints.iter().map(|x| (x / g) as u32).collect())
}
