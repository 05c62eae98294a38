use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentInt, QError};

/// Element of `Q(q)` stored as a reduced quotient of Laurent polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit of `Z[q, q^-1]`, `den` has lowest
/// exponent 0 and a positive leading coefficient. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentInt,
    den: LaurentInt,
}

fn poly_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = poly_content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, coefficients low degree first).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let off = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[off + k] -= &lr * bc;
        }
        poly_trim(&mut r);
        if !r.is_empty() {
            let c = poly_content(&r);
            if !c.is_one() {
                for x in r.iter_mut() {
                    *x = &*x / &c;
                }
            }
        }
    }
    r
}

/// Gcd in `Z[x]` of nonzero polynomials with nonzero constant terms.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let c = poly_content(a).gcd(&poly_content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (mut x, mut y) = if a.len() >= b.len() { (primitive(a), primitive(b)) } else { (primitive(b), primitive(a)) };
    loop {
        let r = prem(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![c];
        }
        x = y;
        y = primitive(&r);
    }
    let mut g: Vec<BigInt> = y.into_iter().map(|v| v * &c).collect();
    if g.last().unwrap().is_negative() {
        for v in g.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
    g
}

/// Gcd of two nonzero Laurent polynomials, normalized to lowest exponent 0
/// and positive leading coefficient.
pub fn laurent_gcd(a: &LaurentInt, b: &LaurentInt) -> LaurentInt {
    assert!(!a.is_zero() && !b.is_zero(), "gcd of zero");
    let (_, x) = a.clone().into_dense();
    let (_, y) = b.clone().into_dense();
    let g = poly_gcd(&x, &y);
    let g = LaurentInt::from_dense(0, g);
    if g.leading_coeff().unwrap().is_negative() {
        -g
    } else {
        g
    }
}

/// Least common multiple with the same normalization as [`laurent_gcd`].
pub fn laurent_lcm(a: &LaurentInt, b: &LaurentInt) -> LaurentInt {
    let g = laurent_gcd(a, b);
    let (_, x) = (a * b).into_dense();
    let l = LaurentInt::from_dense(0, x).div_exact(&g).expect("gcd divides product");
    if l.leading_coeff().unwrap().is_negative() {
        -l
    } else {
        l
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentInt::zero(), den: LaurentInt::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentInt::one(), den: LaurentInt::one() }
    }

    /// `num / den` brought to canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentInt, den: LaurentInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (nl, nc) = num.into_dense();
        let (dl, dc) = den.into_dense();
        let (nc, dc) = if dc.len() == 1 && dc[0].is_one() {
            (nc, dc)
        } else {
            let g = poly_gcd(&nc, &dc);
            if g.len() == 1 && g[0].is_one() {
                (nc, dc)
            } else {
                let gl = LaurentInt::from_dense(0, g);
                let n = LaurentInt::from_dense(0, nc).div_exact(&gl).expect("gcd divides numerator");
                let d = LaurentInt::from_dense(0, dc).div_exact(&gl).expect("gcd divides denominator");
                let (a, mut x) = n.into_dense();
                let (b, mut y) = d.into_dense();
                // gcd has nonzero constant term, so quotients keep low exponent 0
                debug_assert!(a == 0 && b == 0);
                if y.last().unwrap().is_negative() {
                    x.iter_mut().for_each(|v| *v = -std::mem::take(v));
                    y.iter_mut().for_each(|v| *v = -std::mem::take(v));
                }
                return RatFunc { num: LaurentInt::from_dense(nl - dl, x), den: LaurentInt::from_dense(0, y) };
            }
        };
        let mut num = LaurentInt::from_dense(nl - dl, nc);
        let mut den = LaurentInt::from_dense(0, dc);
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn from_laurent(x: LaurentInt) -> Self {
        RatFunc { num: x, den: LaurentInt::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentInt::constant(c))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentInt::q_pow(e))
    }

    pub fn num(&self) -> &LaurentInt {
        &self.num
    }

    pub fn den(&self) -> &LaurentInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Exact Laurent value, or `NonIntegral` when the denominator is not a unit.
    pub fn to_laurent(&self) -> Result<LaurentInt, QError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(QError::NonIntegral(self.to_string()))
        }
    }

    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn shift(&self, k: i32) -> Self {
        RatFunc { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn mul_laurent(&self, x: &LaurentInt) -> Self {
        if self.den.is_one() {
            return RatFunc { num: &self.num * x, den: LaurentInt::one() };
        }
        Self::new(&self.num * x, self.den.clone())
    }

    pub fn div_laurent(&self, x: &LaurentInt) -> Self {
        Self::new(self.num.clone(), &self.den * x)
    }

    /// Value at `q = x` modulo the working prime; `None` if the denominator vanishes.
    pub fn eval_mod(&self, x: u64, xinv: u64) -> Option<u64> {
        let d = self.den.eval_mod(x, xinv);
        if d == 0 {
            return None;
        }
        Some(super::modp::mul(self.num.eval_mod(x, xinv), super::modp::inv(d)))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentInt> for RatFunc {
    fn from(x: LaurentInt) -> Self {
        RatFunc::from_laurent(x)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({self})")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc { num: &self.num + &rhs.num, den: LaurentInt::one() };
            }
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: LaurentInt::one() };
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> LaurentInt {
        LaurentInt::from_terms(t.iter().copied())
    }

    #[test]
    fn cancels_common_factor() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1
        let x = RatFunc::new(l(&[(2, 1), (-2, -1)]), l(&[(1, 1), (-1, -1)]));
        assert!(x.is_laurent());
        assert_eq!(x.to_laurent().unwrap(), l(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn denominator_normalized() {
        let x = RatFunc::new(LaurentInt::one(), l(&[(1, -1), (-1, 1)]));
        assert_eq!(x.den().low_exp(), Some(0));
        assert!(x.den().leading_coeff().unwrap().is_positive());
        assert!(x.to_laurent().is_err());
        let y = RatFunc::new(l(&[(0, 6)]), l(&[(3, 4)]));
        assert_eq!(y.num(), &l(&[(-3, 3)]));
        assert_eq!(y.den(), &l(&[(0, 2)]));
    }

    #[test]
    fn field_identities() {
        let a = RatFunc::new(l(&[(1, 1), (0, 2)]), l(&[(2, 1), (0, -3)]));
        let b = RatFunc::new(l(&[(-1, 5)]), l(&[(1, 1), (0, 1)]));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a * &a.inv()).is_one());
    }
}
