use num_bigint::BigInt;

use super::LaurentInt;

/// `[m]_d = (q^{dm} - q^{-dm}) / (q^d - q^{-d})`.
pub fn quantum_integer(m: u32, d: u32) -> LaurentInt {
    assert!(d >= 1, "quantum integer needs d >= 1");
    let m = m as i32;
    let d = d as i32;
    LaurentInt::from_terms((0..m).map(|k| (d * (m - 1 - 2 * k), 1i64)))
}

/// `[m]_d! = [m]_d [m-1]_d ... [1]_d`.
pub fn quantum_factorial(m: u32, d: u32) -> LaurentInt {
    (1..=m).fold(LaurentInt::one(), |acc, k| &acc * &quantum_integer(k, d))
}

/// `[m choose r]_d`, computed as an exact quotient of quantum factorials.
pub fn quantum_binomial(m: u32, r: u32, d: u32) -> LaurentInt {
    assert!(r <= m, "quantum binomial requires r <= m");
    let r = r.min(m - r);
    let mut num = LaurentInt::one();
    for k in 0..r {
        num = &num * &quantum_integer(m - k, d);
    }
    num.div_exact(&quantum_factorial(r, d)).expect("quantum binomial is a Laurent polynomial")
}

/// Splits `xi` as `xi' + eta` with `xi'` bar-invariant and `eta` in `q^-1 Z[q^-1]`.
pub fn bar_invariant_split(xi: &LaurentInt) -> (LaurentInt, LaurentInt) {
    let mut sym = Vec::new();
    for (e, c) in xi.terms() {
        if e >= 0 {
            sym.push((e, c.clone()));
            if e > 0 {
                sym.push((-e, c.clone()));
            }
        }
    }
    let inv = LaurentInt::from_terms(sym);
    let eta = xi - &inv;
    (inv, eta)
}

/// `q^d - q^-d`.
pub fn q_diff(d: u32) -> LaurentInt {
    let d = d as i32;
    LaurentInt::from_terms([(d, 1i64), (-d, -1)])
}

/// `(-1)^k` as a big integer.
pub fn sign(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> LaurentInt {
        LaurentInt::from_terms(t.iter().copied())
    }

    #[test]
    fn small_quantum_integers() {
        assert!(quantum_integer(0, 2).is_zero());
        assert_eq!(quantum_integer(1, 3), LaurentInt::one());
        assert_eq!(quantum_integer(2, 1), l(&[(1, 1), (-1, 1)]));
        assert_eq!(quantum_integer(3, 2), l(&[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn small_binomials() {
        assert_eq!(quantum_binomial(5, 0, 2), LaurentInt::one());
        assert_eq!(quantum_binomial(2, 1, 1), l(&[(1, 1), (-1, 1)]));
        assert_eq!(quantum_binomial(4, 2, 1), l(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
    }

    #[test]
    fn split_examples() {
        let (a, b) = bar_invariant_split(&l(&[(2, 1), (0, 3), (-1, 1)]));
        assert_eq!(a, l(&[(2, 1), (-2, 1), (0, 3)]));
        assert_eq!(b, l(&[(-1, 1), (-2, -1)]));
        let (a, b) = bar_invariant_split(&l(&[(-1, 1)]));
        assert!(a.is_zero());
        assert_eq!(b, l(&[(-1, 1)]));
        let (a, b) = bar_invariant_split(&LaurentInt::constant(5));
        assert_eq!(a, LaurentInt::constant(5));
        assert!(b.is_zero());
    }
}
