//! Arithmetic in `Q_p` and its totally ramified extensions `Q_p(π)`, `π^e = p`.

mod capped;
mod combinat;
mod exact;
mod field;
mod valuation;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;

pub use capped::PadicScalar;
pub use combinat::{binomial_scalar, digit_sum, factorial_valuation, falling_factorial};
pub use exact::ExactScalar;
pub use field::{is_prime, FieldSpec};
pub use valuation::{Norm, Valuation};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ArithError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("precision exhausted: value indistinguishable from zero (valuation >= {bound})")]
    PrecisionLoss { bound: Rational64 },
    #[error("operands live in different fields")]
    FieldMismatch,
}

/// `norm(x) = p^{-val(x)}`.
pub fn norm(x: &PadicScalar) -> Norm {
    x.norm()
}

/// Field operations shared by the exact and the capped-precision backends,
/// so that the module and recurrence code can run on either.
pub trait Scalar:
    Clone
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn field(&self) -> &FieldSpec;
    fn zero_in(field: &FieldSpec) -> Self;
    fn from_int_in(field: &FieldSpec, n: i64) -> Self;
    fn from_exact(x: &ExactScalar) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError>;
    /// True for exact zeros and for values indistinguishable from zero.
    fn is_zero(&self) -> bool;
    /// True only for a genuine zero (never for a precision-loss result).
    fn is_exact_zero(&self) -> bool;
    fn valuation(&self) -> Valuation;
    /// Equality, up to the available precision for inexact backends.
    fn agrees(&self, other: &Self) -> bool;

    fn one_in(field: &FieldSpec) -> Self {
        Self::from_int_in(field, 1)
    }

    /// `π^k`; `p^j` is `pi_power_in(field, e·j)`.
    fn pi_power_in(field: &FieldSpec, k: i64) -> Self {
        Self::from_exact(&ExactScalar::pi_power(field, k))
    }
}

impl Scalar for PadicScalar {
    fn field(&self) -> &FieldSpec {
        PadicScalar::field(self)
    }
    fn zero_in(field: &FieldSpec) -> Self {
        PadicScalar::zero(field)
    }
    fn from_int_in(field: &FieldSpec, n: i64) -> Self {
        PadicScalar::from_int(field, n)
    }
    fn from_exact(x: &ExactScalar) -> Self {
        x.to_padic()
    }
    fn pi_power_in(field: &FieldSpec, k: i64) -> Self {
        PadicScalar::pi_power(field, k)
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.checked_div(rhs)
    }
    fn is_zero(&self) -> bool {
        PadicScalar::is_zero(self)
    }
    fn is_exact_zero(&self) -> bool {
        PadicScalar::is_exact_zero(self)
    }
    fn valuation(&self) -> Valuation {
        PadicScalar::valuation(self)
    }
    fn agrees(&self, other: &Self) -> bool {
        self.eq_to_precision(other)
    }
}

impl Scalar for ExactScalar {
    fn field(&self) -> &FieldSpec {
        ExactScalar::field(self)
    }
    fn zero_in(field: &FieldSpec) -> Self {
        ExactScalar::zero(field)
    }
    fn from_int_in(field: &FieldSpec, n: i64) -> Self {
        ExactScalar::from_int(field, n)
    }
    fn from_exact(x: &ExactScalar) -> Self {
        x.clone()
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.checked_div(rhs)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn is_exact_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn valuation(&self) -> Valuation {
        ExactScalar::valuation(self)
    }
    fn agrees(&self, other: &Self) -> bool {
        self == other
    }
}
