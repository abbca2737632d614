use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::padic::{FieldSpec, Norm, Valuation};

/// Radius data of the completed distribution algebra: `s = p^{-λ_s}`, the
/// exponent `κ`, and the level `m_0 + m` of the generators `p^{m_0+m} y`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusParams {
    pub field: FieldSpec,
    pub kappa: u32,
    pub m0: u32,
    pub m: u32,
    pub lambda_s: Rational64,
}

/// `κ = 1` for odd `p`, `κ = 2` for `p = 2`.
pub fn standard_kappa(p: u32) -> u32 {
    if p == 2 {
        2
    } else {
        1
    }
}

impl RadiusParams {
    pub fn new(field: FieldSpec, m0: u32, m: u32, lambda_s: Rational64) -> Self {
        let kappa = standard_kappa(field.p());
        RadiusParams {
            field,
            kappa,
            m0,
            m,
            lambda_s,
        }
    }

    pub fn m0m(&self) -> u32 {
        self.m0 + self.m
    }

    /// `κ λ_s`, the valuation drop contributed by each generator.
    pub fn step(&self) -> Rational64 {
        Rational64::from_integer(self.kappa as i64) * self.lambda_s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadiusViolation {
    /// `κ` must be 1 for odd `p` and 2 for `p = 2`.
    KappaConvention { expected: u32, got: u32 },
    /// `s < 1` requires `λ_s > 0`.
    NonPositiveExponent,
    /// `s > 1/p`.
    BelowInverseP,
    /// `s > |π| p^{-1/(p-1)}`.
    BelowPiBound,
    /// `s^κ < p^{-1/(p-1)}`.
    KappaPowerTooLarge,
}

impl fmt::Display for RadiusViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusViolation::KappaConvention { expected, got } => {
                write!(f, "kappa must be {expected}, got {got}")
            }
            RadiusViolation::NonPositiveExponent => write!(f, "s < 1 fails"),
            RadiusViolation::BelowInverseP => write!(f, "s > 1/p fails"),
            RadiusViolation::BelowPiBound => write!(f, "s > |pi| p^(-1/(p-1)) fails"),
            RadiusViolation::KappaPowerTooLarge => write!(f, "s^kappa < p^(-1/(p-1)) fails"),
        }
    }
}

/// Check the radius window exactly on exponents:
/// `λ_s < 1`, `λ_s < 1/e + 1/(p-1)` and `κ λ_s > 1/(p-1)`.
pub fn validate_radius(params: &RadiusParams) -> Result<(), Vec<RadiusViolation>> {
    let p = params.field.p() as i64;
    let e = params.field.e() as i64;
    let inv = Rational64::new(1, p - 1);
    let ls = params.lambda_s;
    let mut out = Vec::new();
    let expected = standard_kappa(params.field.p());
    if params.kappa != expected {
        out.push(RadiusViolation::KappaConvention {
            expected,
            got: params.kappa,
        });
    }
    if ls <= Rational64::zero() {
        out.push(RadiusViolation::NonPositiveExponent);
    }
    if ls >= Rational64::one() {
        out.push(RadiusViolation::BelowInverseP);
    }
    if ls >= Rational64::new(1, e) + inv {
        out.push(RadiusViolation::BelowPiBound);
    }
    if params.step() <= inv {
        out.push(RadiusViolation::KappaPowerTooLarge);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// The open interval of admissible `λ_s` for the standard `κ`, if nonempty.
pub fn admissible_lambda_window(p: u32, e: u32) -> Option<(Rational64, Rational64)> {
    let inv = Rational64::new(1, p as i64 - 1);
    let lo = inv / Rational64::from_integer(standard_kappa(p) as i64);
    let hi = Rational64::one().min(Rational64::new(1, e as i64) + inv);
    (lo < hi).then_some((lo, hi))
}

/// `|d| · s^{κ|i|}` as an exact power of `p`.
pub fn term_norm(i: i64, d: &Valuation, params: &RadiusParams) -> Norm {
    let shift = params.step() * Rational64::from_integer(i.abs());
    let v = match *d {
        Valuation::Finite(x) => Valuation::Finite(x + shift),
        Valuation::AtLeast(x) => Valuation::AtLeast(x + shift),
        Valuation::Infinite => Valuation::Infinite,
    };
    Norm::from_valuation(params.field.p(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u32, e: u32, ls: (i64, i64)) -> RadiusParams {
        RadiusParams::new(
            FieldSpec::new(p, e, 20).unwrap(),
            1,
            1,
            Rational64::new(ls.0, ls.1),
        )
    }

    #[test]
    fn examples() {
        assert!(validate_radius(&params(5, 1, (1, 2))).is_ok());
        assert_eq!(
            validate_radius(&params(5, 1, (2, 1))).unwrap_err()[0],
            RadiusViolation::BelowInverseP
        );
        assert_eq!(
            validate_radius(&params(5, 1, (1, 8))),
            Err(vec![RadiusViolation::KappaPowerTooLarge])
        );
    }

    #[test]
    fn norms() {
        let pr = params(5, 1, (1, 2));
        assert!(term_norm(0, &Valuation::finite(0, 1), &pr).is_one());
        assert_eq!(
            term_norm(3, &Valuation::finite(0, 1), &pr).exponent(),
            Some(Rational64::new(-3, 2))
        );
        assert_eq!(
            term_norm(-2, &Valuation::finite(1, 1), &pr).exponent(),
            Some(Rational64::new(-2, 1))
        );
    }

    #[test]
    fn windows_exist() {
        for p in [2, 3, 5, 7, 11, 13, 17, 19, 23] {
            for e in 1..=3 {
                let (lo, hi) = admissible_lambda_window(p, e).unwrap();
                let mid = (lo + hi) / Rational64::from_integer(2);
                assert!(validate_radius(&params(p, e, (*mid.numer(), *mid.denom()))).is_ok());
            }
        }
    }
}
