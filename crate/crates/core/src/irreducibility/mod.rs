//! Intertwiner coefficient tables for `gl_2`: the conjugation formulas, the
//! three case recurrences, an operator-level oracle and divergence
//! certification.

mod certify;
mod conjugation;
mod oracle;
mod table;

pub use certify::*;
pub use conjugation::*;
pub use oracle::*;
pub use table::*;

use thiserror::Error;

use crate::analytic::AnalyticError;
use crate::padic::ArithError;
use crate::weights::WeightError;

#[derive(Debug, Error)]
pub enum IrredError {
    #[error("matrix is singular")]
    Singular,
    #[error("{what} vanishes at index {index}")]
    Precondition { what: &'static str, index: i64 },
    #[error("inconsistent seeds: {0}")]
    InconsistentSeeds(String),
    #[error("window {window} exceeds table extent {extent} minus one")]
    WindowTooLarge { window: u32, extent: u32 },
    #[error("only n = 1 is supported here, got rank {0}")]
    NotGl2(usize),
    #[error("negative valuation {0} for t_1")]
    NotIntegral(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
}
