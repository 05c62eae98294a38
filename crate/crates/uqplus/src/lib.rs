pub mod canonical;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod monomial;
pub mod once;
pub mod par;
pub mod pbw;
pub mod qcoeff;
pub mod rootdata;
pub mod ualgebra;

pub use error::{Error, Result};
