use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;

/// Integer Laurent polynomial in `q`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. The first
/// and last stored coefficients are nonzero; zero has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        LaurentInt { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// `c q^e`.
    pub fn monomial(c: BigInt, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentInt { low: e, coeffs: vec![c] }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let items: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if items.is_empty() {
            return Self::zero();
        }
        let lo = items.iter().map(|t| t.0).min().unwrap();
        let hi = items.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in items {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// Builds from a dense coefficient vector starting at exponent `low`.
    pub fn from_dense(low: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
        }
        LaurentInt { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Dense view: (low exponent, coefficients).
    pub fn dense(&self) -> (i32, &[BigInt]) {
        (self.low, &self.coeffs)
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentInt { low: -self.high_exp().unwrap(), coeffs: c }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentInt { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentInt { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `self * c q^e` for a single term.
    pub fn mul_term(&self, c: &BigInt, e: i32) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LaurentInt { low: self.low + e, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Adds `c q^e * other` into `self` in place.
    pub fn add_scaled(&mut self, other: &LaurentInt, c: &BigInt, e: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.mul_term(c, e);
            return;
        }
        let olow = other.low + e;
        let ohigh = olow + other.coeffs.len() as i32 - 1;
        let shigh = self.high_exp().unwrap();
        if olow < self.low {
            let pad = (self.low - olow) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = olow;
        }
        if ohigh > shigh {
            let extra = (ohigh - shigh) as usize;
            self.coeffs.extend(std::iter::repeat_n(BigInt::zero(), extra));
        }
        let base = (olow - self.low) as usize;
        for (k, x) in other.coeffs.iter().enumerate() {
            if !x.is_zero() {
                self.coeffs[base + k] += x * c;
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        let s = std::mem::take(self);
        *self = Self::from_dense(s.low, s.coeffs);
    }

    /// Content: gcd of the coefficients (nonnegative); zero for zero.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division by an integer; `None` when some coefficient is not divisible.
    pub fn div_int(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (qt, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(qt);
        }
        Some(LaurentInt { low: self.low, coeffs: out })
    }

    /// Exact division in `Z[q, q^-1]`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentInt) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.coeffs.len() == 1 {
            return self.div_int(&d.coeffs[0]).map(|x| x.shift(-d.low));
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let n = self.coeffs.len();
        let m = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        let lead = &d.coeffs[m - 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (qt, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (t, dc) in d.coeffs.iter().enumerate() {
                rem[k + t] -= &qt * dc;
            }
            quot[k] = qt;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d.low, quot))
    }

    /// True when all exponents are `<= 0`, i.e. the element lies in `Z[q^-1]`.
    pub fn in_z_qinv(&self) -> bool {
        self.high_exp().is_none_or(|h| h <= 0)
    }

    /// True when all exponents are `< 0`, i.e. the element lies in `q^-1 Z[q^-1]`.
    pub fn in_qinv_z_qinv(&self) -> bool {
        self.high_exp().is_none_or(|h| h < 0)
    }

    /// Value at `q = x` modulo the working prime, `x` invertible.
    pub fn eval_mod(&self, x: u64, xinv: u64) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = modp::add(modp::mul(acc, x), modp::from_bigint(c));
        }
        let sh = if self.low >= 0 { modp::pow(x, self.low as u64) } else { modp::pow(xinv, (-self.low) as u64) };
        modp::mul(acc, sh)
    }

    pub fn to_i64_terms(&self) -> Option<Vec<(i32, i64)>> {
        self.terms().map(|(e, c)| c.to_i64().map(|v| (e, v))).collect()
    }

    /// Polynomial part shifted so the lowest exponent is zero: `(low, coeffs)`.
    pub(crate) fn into_dense(self) -> (i32, Vec<BigInt>) {
        (self.low, self.coeffs)
    }

    /// Leading (highest-exponent) coefficient.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Total order used for deterministic output: by low exponent, then coefficients.
    pub fn cmp_repr(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for LaurentInt {
    /// Descending powers, e.g. `3q^2 + 1 - q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms: Vec<_> = self.terms().collect();
        for (e, c) in terms.into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a.is_one();
            match e {
                0 => write!(f, "{a}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({self})")
    }
}

impl From<i64> for LaurentInt {
    fn from(c: i64) -> Self {
        LaurentInt::constant(c)
    }
}

impl From<BigInt> for LaurentInt {
    fn from(c: BigInt) -> Self {
        LaurentInt::monomial(c, 0)
    }
}

impl Add<&LaurentInt> for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one(), 0);
        out
    }
}

impl Sub<&LaurentInt> for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one(), 0);
        out
    }
}

impl Mul<&LaurentInt> for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        let n = self.coeffs.len();
        let m = rhs.coeffs.len();
        let mut out = vec![BigInt::zero(); n + m - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentInt::from_dense(self.low + rhs.low, out)
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(mut self) -> LaurentInt {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: &LaurentInt) -> LaurentInt {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentInt> for &LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        self.add_scaled(rhs, &BigInt::one(), 0);
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        self.add_scaled(rhs, &-BigInt::one(), 0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> LaurentInt {
        LaurentInt::from_terms(t.iter().copied())
    }

    #[test]
    fn trims_and_orders_terms() {
        let x = l(&[(3, 0), (-2, 5), (1, -1), (-2, -5)]);
        assert_eq!(x, l(&[(1, -1)]));
        assert_eq!(x.low_exp(), Some(1));
        assert!(l(&[(0, 0)]).is_zero());
    }

    #[test]
    fn product_of_binomials() {
        let a = l(&[(1, 1), (-1, 1)]);
        let b = l(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, l(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn exact_division() {
        let num = l(&[(2, 1), (-2, -1)]);
        let den = l(&[(1, 1), (-1, -1)]);
        assert_eq!(num.div_exact(&den), Some(l(&[(1, 1), (-1, 1)])));
        assert_eq!(LaurentInt::one().div_exact(&den), None);
        assert_eq!(l(&[(3, 6)]).div_exact(&l(&[(1, 3)])), Some(l(&[(2, 2)])));
    }

    #[test]
    fn display_descending() {
        assert_eq!(l(&[(2, 3), (0, 1), (-1, -1)]).to_string(), "3q^2 + 1 - q^-1");
        assert_eq!(l(&[(1, -1)]).to_string(), "-q");
        assert_eq!(LaurentInt::zero().to_string(), "0");
    }

    #[test]
    fn bar_reverses_exponents() {
        let x = l(&[(2, 1), (0, 3)]);
        assert_eq!(x.bar(), l(&[(-2, 1), (0, 3)]));
        assert!(l(&[(1, 1), (-1, 1)]).is_bar_invariant());
    }
}
