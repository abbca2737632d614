//! Finite-level decompositions of `GL_2` (Bruhat, Iwahori, Cartan), Mackey
//! double-coset labels, the `H^0` injectivity check and Ore witnesses.

mod cartan;
mod finite;
mod h0;
mod ore;

pub use cartan::*;
pub use finite::*;
pub use h0::*;
pub use ore::*;

use thiserror::Error;

use crate::padic::ArithError;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix is not in the Iwahori subgroup")]
    NotIwahori,
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("precision too low to determine valuations")]
    Precision,
    #[error("only gl_2 is supported, got n = {0}")]
    NotGl2(usize),
    #[error("window radius {0} has no strictly interior weights")]
    WindowTooSmall(u32),
    #[error("s must be a nonzero multiple of e")]
    NotInN,
    #[error("degree {0} exceeds the supported bound 6")]
    DegreeTooLarge(u32),
    #[error("no witness with s' = s^k, k <= {max_k}, for degree {degree}")]
    NoWitness { degree: u32, max_k: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
