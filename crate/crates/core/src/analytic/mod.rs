//! Coefficient sequences in the completed distribution algebra, exact
//! valuation-slope convergence decisions, and locally analytic characters.

mod characters;
mod radius;
mod series;
mod verdict;

use num_rational::Rational64;

use crate::padic::ArithError;

pub use characters::{
    char_binomial, char_exp_log, padic_exp, padic_log, unit_split, CharValue, UnitSplit,
};
pub use radius::{
    admissible_lambda_window, standard_kappa, term_norm, validate_radius, RadiusParams,
    RadiusViolation,
};
pub use series::{c_to_d, conversion_factor, d_to_c, AnalyticVector};
pub use verdict::{
    convergence_verdict, slope_string, DivergenceCertificate, SideAnalysis, SlopeMethod, Verdict,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalyticError {
    #[error("argument outside the unit disc around 1 (val(x-1) = {valuation})")]
    OutsideDisc { valuation: Rational64 },
    #[error("argument outside the disc of convergence of exp (valuation {valuation})")]
    OutsideExpDisc { valuation: Rational64 },
    #[error("{terms} terms do not certify the tail; need {needed} (per-term rate {rate})")]
    TailNotCertified {
        terms: u64,
        needed: u64,
        rate: Rational64,
    },
    #[error("vanishing Pochhammer factor at index {index}")]
    ZeroPochhammer { index: i64 },
    #[error("input is not a unit")]
    NotUnit,
    #[error("unit splitting is only implemented for e = 1")]
    Ramified,
    #[error(transparent)]
    Arith(#[from] ArithError),
}
