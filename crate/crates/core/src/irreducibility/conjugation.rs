use super::{CaseTag, IrredError};
use crate::padic::{ExactScalar, FieldSpec, Scalar};

/// A `2×2` matrix, row-major.
pub type Mat2<S> = [[S; 2]; 2];

pub fn mat_mul<S: Scalar>(x: &Mat2<S>, y: &Mat2<S>) -> Mat2<S> {
    let entry = |i: usize, j: usize| x[i][0].clone() * &y[0][j] + &(x[i][1].clone() * &y[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

pub fn det<S: Scalar>(x: &Mat2<S>) -> S {
    x[0][0].clone() * &x[1][1] - &(x[0][1].clone() * &x[1][0])
}

pub fn mat_inv<S: Scalar>(x: &Mat2<S>) -> Result<Mat2<S>, IrredError> {
    let d = det(x);
    if d.is_zero() {
        return Err(IrredError::Singular);
    }
    let q = |s: &S| s.try_div(&d).map_err(IrredError::from);
    Ok([
        [q(&x[1][1])?, q(&-x[0][1].clone())?],
        [q(&-x[1][0].clone())?, q(&x[0][0])?],
    ])
}

pub fn mat_from<S: Scalar>(field: &FieldSpec, m: [[i64; 2]; 2]) -> Mat2<S> {
    m.map(|row| row.map(|v| S::from_int_in(field, v)))
}

/// `e = [[0,1],[0,0]]`.
pub fn e_mat<S: Scalar>(field: &FieldSpec) -> Mat2<S> {
    mat_from(field, [[0, 1], [0, 0]])
}

/// `f = [[0,0],[1,0]]`.
pub fn f_mat<S: Scalar>(field: &FieldSpec) -> Mat2<S> {
    mat_from(field, [[0, 0], [1, 0]])
}

/// `z = diag(1, -1)`.
pub fn z_mat<S: Scalar>(field: &FieldSpec) -> Mat2<S> {
    mat_from(field, [[1, 0], [0, -1]])
}

/// `u⁺ = I + a e`.
pub fn u_plus<S: Scalar>(a: &S) -> Mat2<S> {
    let f = a.field();
    [[S::one_in(f), a.clone()], [S::zero_in(f), S::one_in(f)]]
}

/// `u⁻ = I + b f`.
pub fn u_minus<S: Scalar>(b: &S) -> Mat2<S> {
    let f = b.field();
    [[S::one_in(f), S::zero_in(f)], [b.clone(), S::one_in(f)]]
}

/// `Ad(u^{-1})(x) = u^{-1} x u`.
pub fn ad_conjugate<S: Scalar>(u: &Mat2<S>, x: &Mat2<S>) -> Result<Mat2<S>, IrredError> {
    Ok(mat_mul(&mat_mul(&mat_inv(u)?, x), u))
}

/// The unipotent pair `u⁺ = I + a e`, `u⁻ = I + b f` and the level `m_0 + m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationParams {
    pub a: ExactScalar,
    pub b: ExactScalar,
    pub m0m: u32,
}

impl ConjugationParams {
    pub fn new(a: ExactScalar, b: ExactScalar, m0m: u32) -> Self {
        ConjugationParams { a, b, m0m }
    }

    pub fn case_tag(&self) -> CaseTag {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => CaseTag::BZero,
            (true, false) => CaseTag::AZero,
            (false, false) => CaseTag::Both,
        }
    }

    /// Both `a` and `b` lie in `p^{m_0+m} O`.
    pub fn inside_t0r(&self) -> bool {
        let bound = num_rational::Rational64::from_integer(self.m0m as i64);
        self.a.valuation().certainly_at_least(bound) && self.b.valuation().certainly_at_least(bound)
    }
}
