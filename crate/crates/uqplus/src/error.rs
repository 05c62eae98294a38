use crate::qcoeff::QError;
use crate::rootdata::{RootError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Coeff(#[from] QError),
    #[error("weight of height {height} exceeds the height cap {cap} ({words} words)")]
    HeightCapExceeded { height: u32, cap: u32, words: u128 },
    #[error("element has F or K terms")]
    NotInUPlus,
    #[error("root vector at position {0} has surviving F/K terms")]
    ImpureResult(usize),
    #[error("PBW basis matrix is singular at weight {0:?}")]
    SingularBasisMatrix(Weight),
    #[error("exponent vectors of lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("no closed form for type {0}")]
    UnsupportedType(String),
    #[error("no exponent vector passes for c = {0:?}")]
    EmptyResult(Vec<u32>),
    #[error("exact verification failed: {0}")]
    Verification(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("corrupt cache entry: {0}")]
    CorruptCache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
