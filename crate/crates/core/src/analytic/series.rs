use std::collections::BTreeMap;

use super::{convergence_verdict, term_norm, AnalyticError, DivergenceCertificate, RadiusParams};
use crate::padic::{Norm, Scalar, Valuation};

/// `x (x-1) ⋯ (x-k+1)`, failing on a vanishing factor.
fn pochhammer<S: Scalar>(x: &S, k: u64, index: i64) -> Result<S, AnalyticError> {
    let field = x.field().clone();
    let mut acc = S::one_in(&field);
    for r in 0..k {
        let factor = x.clone() - &S::from_int_in(&field, r as i64);
        if factor.is_exact_zero() {
            return Err(AnalyticError::ZeroPochhammer { index });
        }
        acc = acc * &factor;
    }
    Ok(acc)
}

/// The factor `F_i` with `c_i = F_i d_i`: `μ_1^{(i)} p^{i m0m}` for `i > 0`,
/// `μ_0^{(|i|)} p^{|i| m0m}` for `i < 0`, and `1` for `i = 0`
/// (`x^{(k)}` the falling factorial).
pub fn conversion_factor<S: Scalar>(i: i64, mu: (&S, &S), m0m: u32) -> Result<S, AnalyticError> {
    let field = mu.0.field().clone();
    if i == 0 {
        return Ok(S::one_in(&field));
    }
    let k = i.unsigned_abs();
    let base = if i > 0 { mu.1 } else { mu.0 };
    let poch = pochhammer(base, k, i)?;
    let ppow = S::pi_power_in(&field, field.e() as i64 * k as i64 * m0m as i64);
    Ok(poch * &ppow)
}

/// Coefficient `d_i` of the completed-algebra expansion from the monomial
/// coefficient `c_i`.
pub fn c_to_d<S: Scalar>(c: &S, i: i64, mu: (&S, &S), m0m: u32) -> Result<S, AnalyticError> {
    let f = conversion_factor(i, mu, m0m)?;
    Ok(c.try_div(&f)?)
}

pub fn d_to_c<S: Scalar>(d: &S, i: i64, mu: (&S, &S), m0m: u32) -> Result<S, AnalyticError> {
    Ok(d.clone() * &conversion_factor(i, mu, m0m)?)
}

/// A two-sided coefficient sequence `(d_i)`: `i < 0` multiplies powers of the
/// lowering generator, `i >= 0` powers of the raising one.
#[derive(Clone, Debug)]
pub struct AnalyticVector<S> {
    pub params: RadiusParams,
    coeffs: BTreeMap<i64, S>,
}

impl<S: Scalar> AnalyticVector<S> {
    pub fn new(params: RadiusParams) -> Self {
        AnalyticVector {
            params,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_fn(
        params: RadiusParams,
        range: std::ops::RangeInclusive<i64>,
        f: impl Fn(i64) -> S,
    ) -> Self {
        let coeffs = range.map(|i| (i, f(i))).collect();
        AnalyticVector { params, coeffs }
    }

    pub fn set(&mut self, i: i64, d: S) {
        self.coeffs.insert(i, d);
    }

    pub fn get(&self, i: i64) -> Option<&S> {
        self.coeffs.get(&i)
    }

    pub fn valuation(&self, i: i64) -> Valuation {
        self.coeffs
            .get(&i)
            .map(|d| d.valuation())
            .unwrap_or(Valuation::Infinite)
    }

    pub fn term_norm(&self, i: i64) -> Norm {
        term_norm(i, &self.valuation(i), &self.params)
    }

    /// Slope analysis of the stored coefficients up to `|i| <= horizon`.
    pub fn verdict(&self, horizon: u64) -> DivergenceCertificate {
        convergence_verdict(|i| self.valuation(i), &self.params, horizon)
    }
}
