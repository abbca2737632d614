use num_rational::Rational64;

use super::{ArithError, Scalar};

/// Sum of the base-`p` digits of `i`.
pub fn digit_sum(p: u32, mut i: u64) -> u64 {
    let p = p as u64;
    let mut s = 0;
    while i > 0 {
        s += i % p;
        i /= p;
    }
    s
}

/// `val_p(i!) = (i - s_p(i)) / (p - 1)` (Legendre).
pub fn factorial_valuation(p: u32, i: u64) -> Rational64 {
    let v = (i - digit_sum(p, i)) / (p as u64 - 1);
    Rational64::from_integer(v as i64)
}

/// `x (x-1) ⋯ (x-n+1)`.
pub fn falling_factorial<S: Scalar>(x: &S, n: u64) -> S {
    let field = x.field().clone();
    let mut acc = S::one_in(&field);
    for k in 0..n {
        acc = acc * &(x.clone() - &S::from_int_in(&field, k as i64));
    }
    acc
}

/// `C(μ, n) = μ(μ-1)⋯(μ-n+1)/n!`, built incrementally so each step divides by
/// a single integer.
pub fn binomial_scalar<S: Scalar>(mu: &S, n: u64) -> Result<S, ArithError> {
    let field = mu.field().clone();
    let mut c = S::one_in(&field);
    for k in 0..n {
        let num = c * &(mu.clone() - &S::from_int_in(&field, k as i64));
        c = num.try_div(&S::from_int_in(&field, k as i64 + 1))?;
    }
    Ok(c)
}
