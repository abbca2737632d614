//! Exact elements of `Q(π)`, `π^e = p`, as `Σ_{k<e} q_k π^k` with rational `q_k`.
//!
//! These carry no precision at all, which makes integrality and equality
//! tests decidable. They embed into the completion through [`ExactScalar::to_padic`].
//!
//! Coefficients are stored as `malachite` rationals, whose gcd is much faster
//! than `num-bigint`'s on the large heights reached by the recurrences; the
//! public API speaks `num` types.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use malachite_base::num::arithmetic::traits::{DivExact, DivisibleBy, Pow, Reciprocal, Sign};
use malachite_base::num::basic::traits::{One as _, Zero as _};
use malachite_base::num::conversion::traits::IsInteger;
use malachite_nz::natural::Natural;
use malachite_q::Rational;
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_rational::{BigRational, Rational64};

use super::{ArithError, FieldSpec, PadicScalar, Valuation};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactScalar {
    field: FieldSpec,
    coeffs: Vec<Rational>,
}

fn natural_from(x: &BigUint) -> Natural {
    Natural::from_owned_limbs_asc(x.to_u64_digits())
}

fn biguint_from(x: &Natural) -> BigUint {
    let limbs: Vec<u64> = x.to_limbs_asc();
    BigUint::new(
        limbs
            .iter()
            .flat_map(|&l| [l as u32, (l >> 32) as u32])
            .collect(),
    )
}

fn to_malachite(q: &BigRational) -> Rational {
    let positive = q.numer().sign() != BigSign::Minus;
    Rational::from_sign_and_naturals(
        positive,
        natural_from(q.numer().magnitude()),
        natural_from(q.denom().magnitude()),
    )
}

fn to_num(q: &Rational) -> BigRational {
    let sign = if q.sign() == std::cmp::Ordering::Less {
        BigSign::Minus
    } else {
        BigSign::Plus
    };
    let n = BigInt::from_biguint(sign, biguint_from(q.numerator_ref()));
    BigRational::new(n, BigInt::from(biguint_from(q.denominator_ref())))
}

fn vp_natural(n: &Natural, p: &Natural) -> i64 {
    let mut n = n.clone();
    let mut v = 0;
    while n != 0u32 && (&n).divisible_by(p) {
        n = n.div_exact(p);
        v += 1;
    }
    v
}

/// `v_p` of a nonzero rational.
fn vp_rational(q: &Rational, p: u32) -> i64 {
    let p = Natural::from(p);
    vp_natural(q.numerator_ref(), &p) - vp_natural(q.denominator_ref(), &p)
}

impl ExactScalar {
    pub fn zero(field: &FieldSpec) -> Self {
        ExactScalar {
            field: field.clone(),
            coeffs: vec![Rational::ZERO; field.e() as usize],
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &FieldSpec, n: i64) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = Rational::from(n);
        x
    }

    pub fn from_rational(field: &FieldSpec, q: BigRational) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = to_malachite(&q);
        x
    }

    pub fn ratio(field: &FieldSpec, num: i64, den: i64) -> Result<Self, ArithError> {
        if den == 0 {
            return Err(ArithError::ZeroDenominator);
        }
        let mut x = Self::zero(field);
        x.coeffs[0] = Rational::from_signeds(num, den);
        Ok(x)
    }

    fn rational_pi_power(field: &FieldSpec, q: Rational, k: i64) -> Self {
        let e = field.e() as i64;
        let (quot, rem) = (k.div_euclid(e), k.rem_euclid(e));
        let scale = Rational::from(field.p()).pow(quot);
        let mut x = Self::zero(field);
        x.coeffs[rem as usize] = q * scale;
        x
    }

    /// `q · π^k` for any integer `k`.
    pub fn rational_times_pi_power(field: &FieldSpec, q: BigRational, k: i64) -> Self {
        Self::rational_pi_power(field, to_malachite(&q), k)
    }

    pub fn pi_power(field: &FieldSpec, k: i64) -> Self {
        Self::rational_pi_power(field, Rational::ONE, k)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Coordinates `q_0, …, q_{e-1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(to_num).collect()
    }

    /// The same element viewed in a field with another digit cap.
    pub fn with_field(&self, field: &FieldSpec) -> Result<Self, ArithError> {
        if field.p() != self.field.p() || field.e() != self.field.e() {
            return Err(ArithError::FieldMismatch);
        }
        Ok(ExactScalar {
            field: field.clone(),
            coeffs: self.coeffs.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0u32)
    }

    fn rational_part(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(|c| *c == 0u32)
            .then(|| &self.coeffs[0])
    }

    /// The value as a rational number, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.rational_part().map(to_num)
    }

    pub fn is_integer(&self) -> bool {
        self.rational_part().is_some_and(|q| q.is_integer())
    }

    /// The integer value, when the scalar is an integer that fits.
    pub fn as_i64(&self) -> Option<i64> {
        let q = self.rational_part()?;
        if !q.is_integer() {
            return None;
        }
        i64::try_from(to_num(q).to_integer()).ok()
    }

    /// π-adic valuation (units of `1/e`).
    pub fn pi_valuation(&self) -> Option<i64> {
        let e = self.field.e() as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0u32)
            .map(|(k, c)| e * vp_rational(c, self.field.p()) + k as i64)
            .min()
    }

    pub fn valuation(&self) -> Valuation {
        match self.pi_valuation() {
            None => Valuation::Infinite,
            Some(v) => Valuation::Finite(Rational64::new(v, self.field.e() as i64)),
        }
    }

    fn mul_impl(&self, rhs: &ExactScalar) -> ExactScalar {
        assert!(self.field == rhs.field, "field mismatch");
        let e = self.coeffs.len();
        let p = Rational::from(self.field.p());
        let mut out = vec![Rational::ZERO; e];
        for (i, x) in self.coeffs.iter().enumerate() {
            if *x == 0u32 {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if *y == 0u32 {
                    continue;
                }
                if i + j < e {
                    out[i + j] += x * y;
                } else {
                    out[i + j - e] += x * y * &p;
                }
            }
        }
        ExactScalar {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    pub fn inverse(&self) -> Result<ExactScalar, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let e = self.coeffs.len();
        if e == 1 {
            return Ok(ExactScalar {
                field: self.field.clone(),
                coeffs: vec![(&self.coeffs[0]).reciprocal()],
            });
        }
        // Column j of the multiplication matrix is x·π^j.
        let mut m = vec![vec![Rational::ZERO; e + 1]; e];
        for j in 0..e {
            let col = self.mul_impl(&ExactScalar::pi_power(&self.field, j as i64));
            for (i, c) in col.coeffs.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m[0][e] = Rational::ONE;
        for c in 0..e {
            let piv = (c..e)
                .find(|&r| m[r][c] != 0u32)
                .ok_or(ArithError::DivisionByZero)?;
            m.swap(c, piv);
            let inv = (&m[c][c]).reciprocal();
            for v in m[c].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..e {
                if r != c && m[r][c] != 0u32 {
                    let f = m[r][c].clone();
                    for k in 0..=e {
                        let t = &m[c][k] * &f;
                        m[r][k] -= t;
                    }
                }
            }
        }
        Ok(ExactScalar {
            field: self.field.clone(),
            coeffs: m.into_iter().map(|row| row[e].clone()).collect(),
        })
    }

    pub fn checked_div(&self, rhs: &ExactScalar) -> Result<ExactScalar, ArithError> {
        Ok(self.mul_impl(&rhs.inverse()?))
    }

    pub fn pow(&self, n: u32) -> ExactScalar {
        let mut acc = ExactScalar::one(&self.field);
        for _ in 0..n {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Image in the completion, correct to the field's digit cap.
    pub fn to_padic(&self) -> PadicScalar {
        let mut acc = PadicScalar::zero(&self.field);
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0u32 {
                continue;
            }
            let c = to_num(c);
            let term = PadicScalar::from_ratio(&self.field, c.numer(), c.denom())
                .expect("nonzero denominator")
                * PadicScalar::pi_power(&self.field, k as i64);
            acc = acc + term;
        }
        acc
    }

    /// Compact textual form, e.g. `1/2`, `3*pi`, `1/2 + 5/3*pi`.
    pub fn to_expr(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0u32 {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 => format!("{c}*pi"),
                _ => format!("{c}*pi^{k}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn zip_with(a: &ExactScalar, b: &ExactScalar, neg: bool) -> ExactScalar {
    assert!(a.field == b.field, "field mismatch");
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| if neg { x - y } else { x + y })
        .collect();
    ExactScalar {
        field: a.field.clone(),
        coeffs,
    }
}

impl Add<&ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        zip_with(&self, rhs, false)
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        zip_with(&self, &rhs, false)
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        zip_with(self, rhs, false)
    }
}

impl Sub<&ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        zip_with(&self, rhs, true)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        zip_with(&self, &rhs, true)
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        zip_with(self, rhs, true)
    }
}

impl Mul<&ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        self.mul_impl(rhs)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        self.mul_impl(&rhs)
    }
}

impl Mul<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        self.mul_impl(rhs)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            field: self.field,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.clone().neg()
    }
}
