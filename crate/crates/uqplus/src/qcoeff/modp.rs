//! Arithmetic modulo the Mersenne prime 2^61 - 1.
//!
//! Used only to choose pivots and supports before an exact computation;
//! every result derived from it is re-verified over `Z[q, q^-1]`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

pub const P: u64 = (1u64 << 61) - 1;

#[inline]
pub fn reduce128(x: u128) -> u64 {
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & P) + ((x >> 122) as u64);
    let s = (s & P) + (s >> 61);
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn neg(a: u64) -> u64 {
    if a == 0 {
        0
    } else {
        P - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce128(a as u128 * b as u128)
}

pub fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    assert!(a != 0, "inverse of zero mod p");
    pow(a, P - 2)
}

pub fn from_i64(c: i64) -> u64 {
    if c >= 0 {
        (c as u64) % P
    } else {
        neg(((-(c as i128)) as u64) % P)
    }
}

pub fn from_bigint(c: &BigInt) -> u64 {
    if let Some(v) = c.to_i64() {
        return from_i64(v);
    }
    let m = BigInt::from(P);
    let r = ((c % &m) + &m) % &m;
    let r = if r.is_negative() { r + m } else { r };
    r.to_u64().unwrap()
}

/// Evaluation points used for generic-position checks.
pub fn points(k: usize) -> Vec<u64> {
    const SEEDS: [u64; 8] = [
        1_234_567_891_011,
        987_654_321_987,
        31_415_926_535_897,
        27_182_818_284_590,
        16_180_339_887_498,
        14_142_135_623_730,
        17_320_508_075_688,
        22_360_679_774_997,
    ];
    SEEDS.iter().cycle().take(k).enumerate().map(|(i, s)| (s + 7919 * i as u64) % P).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        for a in [1u64, 2, 12345, P - 1] {
            assert_eq!(mul(a, inv(a)), 1);
        }
    }

    #[test]
    fn bigint_reduction() {
        let big = BigInt::from(P) * BigInt::from(5) - BigInt::from(3);
        assert_eq!(from_bigint(&big), P - 3);
        assert_eq!(from_bigint(&BigInt::from(-1)), P - 1);
    }
}
