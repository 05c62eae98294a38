//! The reduced expressions `j` and `i` of the longest Weyl group element.

use super::cartan::{cartan_matrix, Family, LieType};
use super::RootError;

/// A word in simple reflections; letters are 1-based node indices.
pub type WeylWord = Vec<usize>;

/// `γ_n` for the classical families.
fn gamma(family: Family, n: usize) -> WeylWord {
    match family {
        Family::A => (1..=n).collect(),
        Family::B | Family::C => {
            if n == 1 {
                vec![1]
            } else {
                (1..=n).rev().chain(2..=n).collect()
            }
        }
        Family::D => {
            if n == 2 {
                vec![1, 2]
            } else {
                (3..=n).rev().chain([1, 2]).chain(3..=n).collect()
            }
        }
        _ => unreachable!("gamma is defined for classical families"),
    }
}

/// Classical `j = γ_n γ_{n-1} ... γ_1` (for D the product stops at `γ_2 = s_1 s_2`).
fn classical_j(family: Family, n: usize) -> WeylWord {
    let last = if family == Family::D { 2 } else { 1 };
    (last..=n).rev().flat_map(|m| gamma(family, m)).collect()
}

/// Relabeling from the `D5` diagram onto `E6` with node 6 removed
/// (entry `k-1` is the image of `D5` node `k`).
pub const D5_INTO_E6: [usize; 5] = [2, 5, 4, 3, 1];

const E6_HEAD: [usize; 16] = [1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6];
const E7_HEAD: [usize; 27] = [
    7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 1, 3, 4, 5, 2, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6, 7,
];
const E8_HEAD: [usize; 57] = [
    8, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 7, 6, 4, 3, 2, 5, 4, 5, 3, 2,
    4, 6, 5, 7, 6, 1, 3, 4, 2, 5, 4, 3, 1, 8, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8,
];
const F4_J: [usize; 24] = [4, 3, 2, 3, 4, 1, 2, 3, 2, 1, 4, 3, 2, 3, 4, 1, 2, 3, 2, 1, 2, 3, 2, 3];

/// The word `j` in the diagram numbering.
pub fn word_j(t: LieType) -> WeylWord {
    let n = t.rank;
    match t.family {
        Family::A | Family::B | Family::C | Family::D => classical_j(t.family, n),
        Family::G => vec![2, 1, 2, 1, 2, 1],
        Family::F => F4_J.to_vec(),
        Family::E => {
            let (head, tail): (&[usize], WeylWord) = match n {
                6 => (&E6_HEAD, classical_j(Family::D, 5).into_iter().map(|k| D5_INTO_E6[k - 1]).collect()),
                7 => (&E7_HEAD, word_j(LieType::raw(Family::E, 6))),
                8 => (&E8_HEAD, word_j(LieType::raw(Family::E, 7))),
                _ => unreachable!("E rank checked at construction"),
            };
            head.iter().copied().chain(tail).collect()
        }
    }
}

/// The order-two diagram automorphism used to pass from `j` to `i`
/// (identity for the families where `i = j`). Entry `k-1` is the image of node `k`.
pub fn tau(t: LieType) -> Vec<usize> {
    let n = t.rank;
    match t.family {
        Family::A => (1..=n).rev().collect(),
        Family::D => {
            let mut p: Vec<usize> = (1..=n).collect();
            p.swap(0, 1);
            p
        }
        Family::E if n == 6 => vec![6, 2, 5, 4, 3, 1],
        _ => (1..=n).collect(),
    }
}

/// The word `i`, obtained from `j` by applying `τ` letterwise.
pub fn word_i(t: LieType) -> WeylWord {
    let p = tau(t);
    word_j(t).into_iter().map(|k| p[k - 1]).collect()
}

/// Checks that a node map is an isomorphism between the Cartan matrices of
/// `from` and the subdiagram of `to` on the image nodes.
pub fn is_cartan_embedding(from: LieType, to: LieType, map: &[usize]) -> bool {
    let a = cartan_matrix(from);
    let b = cartan_matrix(to);
    if map.len() != from.rank {
        return false;
    }
    for i in 0..from.rank {
        for j in 0..from.rank {
            if a[i][j] != b[map[i] - 1][map[j] - 1] {
                return false;
            }
        }
    }
    true
}

pub(crate) fn check_letters(t: LieType, w: &[usize]) -> Result<(), RootError> {
    match w.iter().find(|&&k| k == 0 || k > t.rank) {
        Some(&k) => Err(RootError::BadNode(k)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LieType {
        LieType::parse(s).unwrap()
    }

    #[test]
    fn small_words() {
        assert_eq!(word_j(t("A2")), vec![1, 2, 1]);
        assert_eq!(word_i(t("A2")), vec![2, 1, 2]);
        assert_eq!(word_j(t("G2")), vec![2, 1, 2, 1, 2, 1]);
        assert_eq!(word_j(t("B2")), vec![2, 1, 2, 1]);
        assert_eq!(word_i(t("B2")), vec![2, 1, 2, 1]);
        assert_eq!(word_j(t("D4")), vec![4, 3, 1, 2, 3, 4, 3, 1, 2, 3, 1, 2]);
        assert_eq!(word_i(t("D4")), vec![4, 3, 2, 1, 3, 4, 3, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn d5_relabeling_is_diagram_embedding() {
        assert!(is_cartan_embedding(t("D5"), t("E6"), &D5_INTO_E6));
        assert!(is_cartan_embedding(t("E6"), t("E7"), &[1, 2, 3, 4, 5, 6]));
        assert!(is_cartan_embedding(t("E7"), t("E8"), &[1, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn e6_head_matches_relabeled_gamma() {
        let g: Vec<usize> = gamma(Family::D, 5).into_iter().map(|k| D5_INTO_E6[k - 1]).collect();
        assert_eq!(&word_j(t("E6"))[..8], &g[..]);
    }

    #[test]
    fn word_lengths() {
        for (s, r) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("C4", 16), ("D5", 20)] {
            assert_eq!(word_j(t(s)).len(), r, "{s}");
        }
    }
}
