//! Capped relative precision arithmetic in `Q_p(π)`, `π^e = p`.
//!
//! A nonzero scalar is `π^v · u + O(π^{v + rel})` with `u` a unit known modulo
//! `π^rel`. Units are stored in the integral basis `1, π, …, π^{e-1}`: the
//! coefficient of `π^k` is reduced modulo `p^{⌈(rel-k)/e⌉}`, which makes the
//! representation canonical. Results whose digits are all lost are kept as
//! `O(π^k)` instead of collapsing to zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use super::{ArithError, FieldSpec, Norm, Valuation};

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// Exact zero.
    Zero,
    /// Indistinguishable from zero: known only to be `O(π^k)`.
    Approx(i64),
    Unit {
        val: i64,
        rel: u32,
        unit: Vec<BigInt>,
    },
}

#[derive(Clone, PartialEq, Eq)]
pub struct PadicScalar {
    field: FieldSpec,
    repr: Repr,
}

fn modulus_exp(rel: u32, k: u32, e: u32) -> u32 {
    if rel <= k {
        0
    } else {
        (rel - k).div_ceil(e)
    }
}

fn reduce(field: &FieldSpec, coeffs: &mut [BigInt], rel: u32) {
    let e = field.e();
    for (k, c) in coeffs.iter_mut().enumerate() {
        let m = modulus_exp(rel, k as u32, e);
        if m == 0 {
            c.set_zero();
        } else {
            let md = field.p_pow(m);
            if c.is_negative() || *c >= md {
                *c = c.mod_floor(&md);
            }
        }
    }
}

fn vp_bigint(n: &BigInt, p: &BigInt) -> u32 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// π-adic valuation of `Σ a_k π^k`; the terms have distinct valuations mod `e`.
fn poly_val(field: &FieldSpec, coeffs: &[BigInt]) -> Option<i64> {
    let e = field.e() as i64;
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| e * vp_bigint(c, field.p_big()) as i64 + k as i64)
        .min()
}

/// Multiply by `π^s`.
fn shift_up(field: &FieldSpec, coeffs: &[BigInt], s: u32) -> Vec<BigInt> {
    let e = field.e();
    let (q, r) = (s / e, s % e);
    let scale = field.p_pow(q);
    let mut out: Vec<BigInt> = coeffs.iter().map(|c| c * &scale).collect();
    for _ in 0..r {
        let top = out.pop().expect("e >= 1");
        out.insert(0, top * field.p_big());
    }
    out
}

/// Divide by `π^s`; the caller guarantees divisibility.
fn shift_down(field: &FieldSpec, coeffs: &[BigInt], s: u32) -> Vec<BigInt> {
    let e = field.e();
    let (q, r) = (s / e, s % e);
    let mut out = coeffs.to_vec();
    for _ in 0..r {
        let low = out.remove(0);
        debug_assert!((&low % field.p_big()).is_zero());
        out.push(low / field.p_big());
    }
    if q > 0 {
        let d = field.p_pow(q);
        for c in out.iter_mut() {
            debug_assert!((&*c % &d).is_zero());
            *c = &*c / &d;
        }
    }
    out
}

/// Product in `Z[π]/(π^e - p)`.
fn mul_poly(field: &FieldSpec, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let e = a.len();
    if e == 1 {
        return vec![&a[0] * &b[0]];
    }
    let mut out = vec![BigInt::zero(); e];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = x * y;
            if i + j < e {
                out[i + j] += t;
            } else {
                out[i + j - e] += t * field.p_big();
            }
        }
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.extended_gcd(m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(m)
}

fn unit_inverse(field: &FieldSpec, u: &[BigInt], rel: u32) -> Vec<BigInt> {
    let e = field.e();
    let m = rel.div_ceil(e);
    let md = field.p_pow(m);
    let mut y = vec![BigInt::zero(); e as usize];
    y[0] = mod_inverse(&u[0], &md);
    if e == 1 {
        return y;
    }
    let mut one = vec![BigInt::zero(); e as usize];
    one[0] = BigInt::one();
    reduce(field, &mut one, rel);
    // Newton: y <- y (2 - u y); the number of correct digits doubles.
    loop {
        let mut uy = mul_poly(field, u, &y);
        reduce(field, &mut uy, rel);
        if uy == one {
            return y;
        }
        let mut corr: Vec<BigInt> = uy.iter().map(|c| -c).collect();
        corr[0] += BigInt::from(2);
        let mut next = mul_poly(field, &y, &corr);
        reduce(field, &mut next, rel);
        y = next;
    }
}

impl PadicScalar {
    pub fn zero(field: &FieldSpec) -> Self {
        PadicScalar {
            field: field.clone(),
            repr: Repr::Zero,
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::from_int(field, 1)
    }

    /// A value known only to be `O(π^k)`.
    pub fn approx_zero(field: &FieldSpec, pi_abs: i64) -> Self {
        PadicScalar {
            field: field.clone(),
            repr: Repr::Approx(pi_abs),
        }
    }

    pub fn from_int(field: &FieldSpec, n: i64) -> Self {
        Self::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: &FieldSpec, n: &BigInt) -> Self {
        Self::from_ratio(field, n, &BigInt::one()).expect("nonzero denominator")
    }

    /// Image of `num/den`, with `den` allowed to be divisible by `p`.
    pub fn from_ratio(field: &FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero(field));
        }
        let p = field.p_big();
        let vn = vp_bigint(num, p);
        let vd = vp_bigint(den, p);
        let num_u = num / field.p_pow(vn);
        let den_u = den / field.p_pow(vd);
        let rel = field.precision_cap();
        let md = field.p_pow(rel.div_ceil(field.e()));
        let u0 = (num_u.mod_floor(&md) * mod_inverse(&den_u.mod_floor(&md), &md)).mod_floor(&md);
        let mut unit = vec![BigInt::zero(); field.e() as usize];
        unit[0] = u0;
        reduce(field, &mut unit, rel);
        let val = (vn as i64 - vd as i64) * field.e() as i64;
        Ok(PadicScalar {
            field: field.clone(),
            repr: Repr::Unit { val, rel, unit },
        })
    }

    /// `embed_rational`: the image of `num/den`.
    pub fn embed_rational(field: &FieldSpec, num: i64, den: i64) -> Result<Self, ArithError> {
        Self::from_ratio(field, &BigInt::from(num), &BigInt::from(den))
    }

    /// The uniformizer.
    pub fn pi(field: &FieldSpec) -> Self {
        Self::pi_power(field, 1)
    }

    /// `π^k`, exact up to the digit cap.
    pub fn pi_power(field: &FieldSpec, k: i64) -> Self {
        let rel = field.precision_cap();
        let mut unit = vec![BigInt::zero(); field.e() as usize];
        unit[0] = BigInt::one();
        reduce(field, &mut unit, rel);
        PadicScalar {
            field: field.clone(),
            repr: Repr::Unit { val: k, rel, unit },
        }
    }

    /// Build from a unit given in the integral basis `1, π, …, π^{e-1}`.
    /// Returns `None` if the coefficients are not a unit.
    pub fn from_unit_coeffs(
        field: &FieldSpec,
        val: i64,
        coeffs: &[BigInt],
        rel: u32,
    ) -> Option<Self> {
        if coeffs.len() != field.e() as usize || rel == 0 {
            return None;
        }
        let rel = rel.min(field.precision_cap());
        let mut unit = coeffs.to_vec();
        reduce(field, &mut unit, rel);
        if (&unit[0] % field.p_big()).is_zero() {
            return None;
        }
        Some(PadicScalar {
            field: field.clone(),
            repr: Repr::Unit { val, rel, unit },
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        !matches!(self.repr, Repr::Unit { .. })
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    /// `true` when precision ran out and the value could not be told apart from zero.
    pub fn is_precision_loss(&self) -> bool {
        matches!(self.repr, Repr::Approx(_))
    }

    /// Valuation in units of `1/e` (so `π` has valuation 1).
    pub fn pi_valuation(&self) -> Option<i64> {
        match self.repr {
            Repr::Unit { val, .. } => Some(val),
            _ => None,
        }
    }

    pub fn valuation(&self) -> Valuation {
        let e = self.field.e() as i64;
        match self.repr {
            Repr::Zero => Valuation::Infinite,
            Repr::Approx(k) => Valuation::AtLeast(Rational64::new(k, e)),
            Repr::Unit { val, .. } => Valuation::Finite(Rational64::new(val, e)),
        }
    }

    pub fn norm(&self) -> Norm {
        Norm::from_valuation(self.field.p(), self.valuation())
    }

    /// Number of known π-adic digits of the unit part.
    pub fn relative_precision(&self) -> Option<u32> {
        match self.repr {
            Repr::Unit { rel, .. } => Some(rel),
            _ => None,
        }
    }

    /// Absolute precision in π-units; `None` for an exact zero.
    pub fn pi_absolute_precision(&self) -> Option<i64> {
        match self.repr {
            Repr::Zero => None,
            Repr::Approx(k) => Some(k),
            Repr::Unit { val, rel, .. } => Some(val + rel as i64),
        }
    }

    /// π-adic digits `d_0, d_1, …` of the unit part, each in `0..p`.
    pub fn unit_digits(&self) -> Vec<u32> {
        let Repr::Unit { rel, unit, .. } = &self.repr else {
            return Vec::new();
        };
        let p = self.field.p_big();
        let mut a = unit.clone();
        let mut out = Vec::with_capacity(*rel as usize);
        for _ in 0..*rel {
            let d = a[0].mod_floor(p);
            a[0] -= &d;
            out.push(d.try_into().expect("digit < p"));
            let low = a.remove(0);
            a.push(low / p);
        }
        out
    }

    /// Coefficients of the unit part in the basis `1, π, …, π^{e-1}`.
    pub fn unit_coeffs(&self) -> Option<&[BigInt]> {
        match &self.repr {
            Repr::Unit { unit, .. } => Some(unit),
            _ => None,
        }
    }

    /// `x / π^{val(x)}`.
    pub fn unit_part(&self) -> Option<PadicScalar> {
        match &self.repr {
            Repr::Unit { rel, unit, .. } => Some(PadicScalar {
                field: self.field.clone(),
                repr: Repr::Unit {
                    val: 0,
                    rel: *rel,
                    unit: unit.clone(),
                },
            }),
            _ => None,
        }
    }

    /// Residue of a unit in `F_p`.
    pub fn residue(&self) -> Option<u32> {
        match &self.repr {
            Repr::Unit { val: 0, unit, .. } => {
                Some(unit[0].mod_floor(self.field.p_big()).try_into().unwrap())
            }
            _ => None,
        }
    }

    /// `true` when the value lies in `Q_p` (no `π^k`, `0 < k < e`, components).
    pub fn is_in_base_field(&self) -> bool {
        match &self.repr {
            Repr::Unit { val, unit, .. } => {
                val % self.field.e() as i64 == 0 && unit[1..].iter().all(|c| c.is_zero())
            }
            _ => true,
        }
    }

    /// Drop digits so that at most `rel` π-adic digits remain.
    pub fn truncate(&self, rel: u32) -> PadicScalar {
        match &self.repr {
            Repr::Unit { val, rel: r, unit } if rel < *r => {
                if rel == 0 {
                    return Self::approx_zero(&self.field, *val);
                }
                let mut u = unit.clone();
                reduce(&self.field, &mut u, rel);
                PadicScalar {
                    field: self.field.clone(),
                    repr: Repr::Unit {
                        val: *val,
                        rel,
                        unit: u,
                    },
                }
            }
            _ => self.clone(),
        }
    }

    pub fn inverse(&self) -> Result<PadicScalar, ArithError> {
        match &self.repr {
            Repr::Zero => Err(ArithError::DivisionByZero),
            Repr::Approx(k) => Err(ArithError::PrecisionLoss {
                bound: Rational64::new(*k, self.field.e() as i64),
            }),
            Repr::Unit { val, rel, unit } => Ok(PadicScalar {
                field: self.field.clone(),
                repr: Repr::Unit {
                    val: -val,
                    rel: *rel,
                    unit: unit_inverse(&self.field, unit, *rel),
                },
            }),
        }
    }

    pub fn checked_div(&self, rhs: &PadicScalar) -> Result<PadicScalar, ArithError> {
        self.check_field(rhs)?;
        let inv = rhs.inverse()?;
        Ok(self.mul_ref(&inv))
    }

    pub fn pow(&self, n: u64) -> PadicScalar {
        let mut acc = PadicScalar::one(&self.field);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// `true` when `self - other` is indistinguishable from zero.
    pub fn eq_to_precision(&self, other: &PadicScalar) -> bool {
        self.sub_ref(other).is_zero()
    }

    /// `true` when `self - other` is certainly divisible by `π^k`, i.e. the two
    /// values share all digits below `π^k`.
    pub fn agrees_to(&self, other: &PadicScalar, pi_abs: i64) -> bool {
        let d = self.sub_ref(other);
        match d.repr {
            Repr::Zero => true,
            Repr::Approx(k) => k >= pi_abs,
            Repr::Unit { val, .. } => val >= pi_abs,
        }
    }

    fn check_field(&self, other: &PadicScalar) -> Result<(), ArithError> {
        if self.field != other.field {
            return Err(ArithError::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &PadicScalar) -> Result<PadicScalar, ArithError> {
        self.check_field(rhs)?;
        Ok(self.add_ref(rhs))
    }

    pub fn try_mul(&self, rhs: &PadicScalar) -> Result<PadicScalar, ArithError> {
        self.check_field(rhs)?;
        Ok(self.mul_ref(rhs))
    }

    fn assert_field(&self, other: &PadicScalar) {
        assert!(
            self.field == other.field,
            "field mismatch: {:?} vs {:?}",
            self.field,
            other.field
        );
    }

    pub(crate) fn add_ref(&self, rhs: &PadicScalar) -> PadicScalar {
        self.assert_field(rhs);
        let field = &self.field;
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Zero, _) => return rhs.clone(),
            (_, Repr::Zero) => return self.clone(),
            (Repr::Approx(a), Repr::Approx(b)) => Repr::Approx(*a.min(b)),
            (Repr::Approx(k), Repr::Unit { val, rel, unit })
            | (Repr::Unit { val, rel, unit }, Repr::Approx(k)) => {
                if *val >= *k {
                    Repr::Approx(*k)
                } else {
                    let r = (*rel as i64).min(k - val) as u32;
                    let mut u = unit.clone();
                    reduce(field, &mut u, r);
                    Repr::Unit {
                        val: *val,
                        rel: r,
                        unit: u,
                    }
                }
            }
            (
                Repr::Unit {
                    val: v1,
                    rel: r1,
                    unit: u1,
                },
                Repr::Unit {
                    val: v2,
                    rel: r2,
                    unit: u2,
                },
            ) => {
                let ((v1, r1, u1), (v2, r2, u2)) = if v1 <= v2 {
                    ((v1, r1, u1), (v2, r2, u2))
                } else {
                    ((v2, r2, u2), (v1, r1, u1))
                };
                let d = v2 - v1;
                let big_r = (*r1 as i64).min(d + *r2 as i64) as u32;
                if d >= big_r as i64 {
                    let mut u = u1.clone();
                    reduce(field, &mut u, big_r);
                    Repr::Unit {
                        val: *v1,
                        rel: big_r,
                        unit: u,
                    }
                } else {
                    let shifted = shift_up(field, u2, d as u32);
                    let mut w: Vec<BigInt> = u1.iter().zip(shifted).map(|(a, b)| a + b).collect();
                    reduce(field, &mut w, big_r);
                    match poly_val(field, &w) {
                        None => Repr::Approx(v1 + big_r as i64),
                        Some(t) => {
                            let t32 = t as u32;
                            let mut u = shift_down(field, &w, t32);
                            reduce(field, &mut u, big_r - t32);
                            Repr::Unit {
                                val: v1 + t,
                                rel: big_r - t32,
                                unit: u,
                            }
                        }
                    }
                }
            }
        };
        PadicScalar {
            field: field.clone(),
            repr,
        }
    }

    pub(crate) fn neg_ref(&self) -> PadicScalar {
        match &self.repr {
            Repr::Unit { val, rel, unit } => {
                let mut u: Vec<BigInt> = unit.iter().map(|c| -c).collect();
                reduce(&self.field, &mut u, *rel);
                PadicScalar {
                    field: self.field.clone(),
                    repr: Repr::Unit {
                        val: *val,
                        rel: *rel,
                        unit: u,
                    },
                }
            }
            _ => self.clone(),
        }
    }

    pub(crate) fn sub_ref(&self, rhs: &PadicScalar) -> PadicScalar {
        self.add_ref(&rhs.neg_ref())
    }

    pub(crate) fn mul_ref(&self, rhs: &PadicScalar) -> PadicScalar {
        self.assert_field(rhs);
        let field = &self.field;
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => Repr::Zero,
            (Repr::Approx(a), Repr::Approx(b)) => Repr::Approx(a + b),
            (Repr::Approx(k), Repr::Unit { val, .. })
            | (Repr::Unit { val, .. }, Repr::Approx(k)) => Repr::Approx(k + val),
            (
                Repr::Unit {
                    val: v1,
                    rel: r1,
                    unit: u1,
                },
                Repr::Unit {
                    val: v2,
                    rel: r2,
                    unit: u2,
                },
            ) => {
                let rel = *r1.min(r2);
                let mut u = mul_poly(field, u1, u2);
                reduce(field, &mut u, rel);
                Repr::Unit {
                    val: v1 + v2,
                    rel,
                    unit: u,
                }
            }
        };
        PadicScalar {
            field: field.clone(),
            repr,
        }
    }
}

impl fmt::Debug for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = if self.field.e() == 1 {
            self.field.p().to_string()
        } else {
            "pi".to_string()
        };
        match &self.repr {
            Repr::Zero => write!(f, "0"),
            Repr::Approx(k) => write!(f, "O({sym}^{k})"),
            Repr::Unit { val, rel, .. } => {
                let digits = self.unit_digits();
                let shown: Vec<String> = digits.iter().take(12).map(|d| d.to_string()).collect();
                let more = if digits.len() > 12 { ".." } else { "" };
                write!(
                    f,
                    "{sym}^{val}*[{}{}] + O({sym}^{})",
                    shown.join(" "),
                    more,
                    val + *rel as i64
                )
            }
        }
    }
}

macro_rules! forward_ops {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<PadicScalar> for PadicScalar {
            type Output = PadicScalar;
            fn $m(self, rhs: PadicScalar) -> PadicScalar {
                self.$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a PadicScalar> for PadicScalar {
            type Output = PadicScalar;
            fn $m(self, rhs: &'a PadicScalar) -> PadicScalar {
                self.$imp(rhs)
            }
        }
        impl<'a, 'b> $tr<&'a PadicScalar> for &'b PadicScalar {
            type Output = PadicScalar;
            fn $m(self, rhs: &'a PadicScalar) -> PadicScalar {
                self.$imp(rhs)
            }
        }
    };
}

forward_ops!(Add, add, add_ref);
forward_ops!(Sub, sub, sub_ref);
forward_ops!(Mul, mul, mul_ref);

impl Neg for PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        self.neg_ref()
    }
}

impl Neg for &PadicScalar {
    type Output = PadicScalar;
    fn neg(self) -> PadicScalar {
        self.neg_ref()
    }
}
