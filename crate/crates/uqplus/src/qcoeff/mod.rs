//! Exact coefficients: integer Laurent polynomials `Z[q, q^-1]`, their
//! fraction field, quantum integers and binomials, and the bar involution.

mod json;
mod laurent;
pub mod modp;
mod quantum;
mod ratfunc;

pub use laurent::LaurentInt;
pub use quantum::{
    bar_invariant_split, q_diff, quantum_binomial, quantum_factorial, quantum_integer, sign,
};
pub use ratfunc::{laurent_gcd, laurent_lcm, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QError {
    #[error("coefficient is not a Laurent polynomial: {0}")]
    NonIntegral(String),
}

/// Exact Laurent value of a rational function.
pub fn ratfunc_to_laurent(x: &RatFunc) -> Result<LaurentInt, QError> {
    x.to_laurent()
}

/// `q^e` as a Laurent polynomial; shorthand used throughout.
pub fn qp(e: i32) -> LaurentInt {
    LaurentInt::q_pow(e)
}
