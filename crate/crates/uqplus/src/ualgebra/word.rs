use std::fmt::Write as _;

use crate::rootdata::Weight;

/// A word in the Chevalley generators; letters are 1-based nodes.
pub type Word = Vec<u8>;

pub fn weight_of_word(n: usize, w: &[u8]) -> Weight {
    let mut v = vec![0u32; n];
    for &a in w {
        v[a as usize - 1] += 1;
    }
    v
}

/// All words with content `nu`, in lexicographic order (`1 < 2 < ...`).
pub fn words_of_weight(nu: &[u32]) -> Vec<Word> {
    let h: u32 = nu.iter().sum();
    let mut out = Vec::new();
    let mut rem = nu.to_vec();
    let mut cur = Vec::with_capacity(h as usize);
    fill(&mut rem, &mut cur, h as usize, &mut out);
    out
}

fn fill(rem: &mut [u32], cur: &mut Word, h: usize, out: &mut Vec<Word>) {
    if cur.len() == h {
        out.push(cur.clone());
        return;
    }
    for a in 0..rem.len() {
        if rem[a] > 0 {
            rem[a] -= 1;
            cur.push(a as u8 + 1);
            fill(rem, cur, h, out);
            cur.pop();
            rem[a] += 1;
        }
    }
}

/// Number of words with content `nu` (a multinomial coefficient), saturating.
pub fn word_count(nu: &[u32]) -> u128 {
    let mut acc: u128 = 1;
    let mut total: u128 = 0;
    for &k in nu {
        for j in 1..=k as u128 {
            total += 1;
            acc = acc.saturating_mul(total) / j;
        }
    }
    acc
}

pub fn format_word(w: &[u8]) -> String {
    let mut s = String::new();
    for (i, a) in w.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{a}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_lex_order() {
        let w = words_of_weight(&[2, 1]);
        assert_eq!(w, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(word_count(&[2, 1]), 3);
        assert_eq!(word_count(&[2, 2, 2]), 90);
        assert_eq!(words_of_weight(&[0, 0]), vec![Vec::<u8>::new()]);
    }
}
