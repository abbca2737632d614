//! Cuspidal weight modules `M^μ` of `gl(n+1)` realized on Laurent monomials
//! `t^{μ+ν}`, `ν` in the root lattice, and their finite shadows on windows.

mod cuspidal;
mod element;
mod lattice;
mod mu;
mod rep;

use std::sync::Arc;

use crate::padic::{ExactScalar, FieldSpec};

pub use cuspidal::{check_cuspidality, degree, CuspidalityReport};
pub use element::{
    apply_gl2, apply_root_operator, apply_root_operator_windowed, apply_torus, ModuleElement,
    Windowed,
};
pub use lattice::{window_points, LatticePoint};
pub use mu::{
    central_character_weight, irreducibility_precheck, same_module, twist_by_character,
    weyl_condition, HypothesisCheck, PrecheckReport, HYP_DISTINCT, HYP_NOT_IN_L, HYP_SOME_GE_ONE,
    HYP_SOME_LE_ONE, HYP_WEYL,
};
pub use rep::FiniteRep;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WeightError {
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rank n must be >= 1")]
    RankTooSmall,
    #[error("operation needs n = 1, got n = {0}")]
    NotRankOne(usize),
    #[error("entries live in different fields")]
    FieldMismatch,
    #[error("window of radius {radius} misses the integral entry mu_{index}; the window scan and the integrality test disagree")]
    WindowDisagreement { index: usize, radius: u32 },
    #[error("window contains no complete weight space")]
    EmptyWindow,
    #[error("weight space dimensions are not constant: {0:?}")]
    NonConstantDegree(Vec<usize>),
    #[error("module is not cuspidal")]
    NotCuspidal,
    #[error("representation data invalid: {0}")]
    InvalidRep(String),
}

/// The data defining `M^μ`: the field, `μ ∈ K^{n+1}`, and the window radius
/// used by every truncated computation.
///
/// `μ` is kept exact so that integrality and lattice-difference tests are
/// decidable.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspidalModuleSpec {
    pub field: FieldSpec,
    pub n: usize,
    pub mu: Vec<ExactScalar>,
    pub window_radius: u32,
}

impl CuspidalModuleSpec {
    pub fn new(
        field: FieldSpec,
        mu: Vec<ExactScalar>,
        window_radius: u32,
    ) -> Result<Self, WeightError> {
        if mu.len() < 2 {
            return Err(WeightError::RankTooSmall);
        }
        if mu.iter().any(|m| *m.field() != field) {
            return Err(WeightError::FieldMismatch);
        }
        Ok(CuspidalModuleSpec {
            n: mu.len() - 1,
            field,
            mu,
            window_radius,
        })
    }

    /// Convenience constructor for rational `μ`, entries given as `(num, den)`.
    pub fn rational(
        field: FieldSpec,
        mu: &[(i64, i64)],
        window_radius: u32,
    ) -> Result<Self, WeightError> {
        let mu = mu
            .iter()
            .map(|&(a, b)| {
                ExactScalar::ratio(&field, a, b)
                    .map_err(|_| WeightError::InvalidRep("zero denominator".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, mu, window_radius)
    }

    /// `|μ| = Σ μ_i`, the eigenvalue of the Euler operator.
    pub fn total_mu(&self) -> ExactScalar {
        self.mu
            .iter()
            .fold(ExactScalar::zero(&self.field), |acc, m| acc + m)
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }
}
