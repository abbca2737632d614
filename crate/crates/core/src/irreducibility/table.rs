use super::{ConjugationParams, IrredError};
use crate::padic::FieldSpec;
use crate::padic::{binomial_scalar, ExactScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `b = 0`: only `c_i`, `i >= 0`, survive.
    BZero,
    /// `a = 0, b ≠ 0`: only `c_i`, `i <= 0`, survive.
    AZero,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Recurrence,
}

/// Free initial data of the table: `c_0`, and `c_{-1}` in the two-sided case.
#[derive(Clone, Debug, PartialEq)]
pub struct Seeds {
    pub c0: ExactScalar,
    pub c_minus1: Option<ExactScalar>,
}

impl Seeds {
    pub fn new(c0: ExactScalar, c_minus1: Option<ExactScalar>) -> Self {
        Seeds { c0, c_minus1 }
    }

    /// `c_0 = 1` (and `c_{-1} = 0`).
    pub fn normalized(field: &FieldSpec) -> Self {
        Seeds {
            c0: ExactScalar::one(field),
            c_minus1: None,
        }
    }
}

/// Coefficients `c_{-N}, …, c_N` of a candidate `v = Σ c_i t^{μ+iα}`.
#[derive(Clone, Debug)]
pub struct IntertwinerTable<S> {
    pub mu: [ExactScalar; 2],
    pub params: ConjugationParams,
    pub case_tag: CaseTag,
    pub provenance: Provenance,
    pub seeds: Seeds,
    pub extent: u32,
    coeffs: Vec<S>,
}

impl<S: Scalar> IntertwinerTable<S> {
    /// `c_i` for `|i| <= extent`.
    pub fn get(&self, i: i64) -> Option<&S> {
        let n = self.extent as i64;
        if i.abs() > n {
            return None;
        }
        Some(&self.coeffs[(i + n) as usize])
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &S)> {
        let n = self.extent as i64;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (k as i64 - n, c))
    }

    /// Replace one coefficient (for defect experiments).
    pub fn with_entry(&self, i: i64, c: S) -> Self {
        let mut out = self.clone();
        let n = self.extent as i64;
        out.coeffs[(i + n) as usize] = c;
        out
    }
}

/// Everything the recurrences need, converted into the working backend once.
struct Ctx<S> {
    mu0: S,
    mu1: S,
    mubar: S,
    a: S,
    b: S,
    /// `b²a - b`
    beta: S,
    field: FieldSpec,
}

impl<S: Scalar> Ctx<S> {
    fn int(&self, n: i64) -> S {
        S::from_int_in(&self.field, n)
    }
}

fn nonzero<S: Scalar>(x: S, what: &'static str, index: i64) -> Result<S, IrredError> {
    if x.is_zero() {
        Err(IrredError::Precondition { what, index })
    } else {
        Ok(x)
    }
}

/// Fill `c_{-N..N}` by the rule appropriate to the case of `(a, b)`.
pub fn build_table<S: Scalar>(
    mu: [&ExactScalar; 2],
    params: &ConjugationParams,
    seeds: &Seeds,
    extent: u32,
) -> Result<IntertwinerTable<S>, IrredError> {
    let prov = match params.case_tag() {
        CaseTag::Both => Provenance::Recurrence,
        _ => Provenance::ClosedForm,
    };
    build_table_with(mu, params, seeds, extent, prov)
}

/// As [`build_table`], choosing between the closed form and the step
/// recurrence for the one-sided cases (the two-sided case has only the
/// recurrence).
pub fn build_table_with<S: Scalar>(
    mu: [&ExactScalar; 2],
    params: &ConjugationParams,
    seeds: &Seeds,
    extent: u32,
    provenance: Provenance,
) -> Result<IntertwinerTable<S>, IrredError> {
    let field = mu[0].field().clone();
    let e = |x: &ExactScalar| S::from_exact(x);
    let ctx = Ctx {
        mu0: e(mu[0]),
        mu1: e(mu[1]),
        mubar: e(&(mu[0] - mu[1])),
        a: e(&params.a),
        b: e(&params.b),
        beta: e(&(&(&params.b * &params.b) * &params.a - &params.b)),
        field: field.clone(),
    };
    let n = extent as i64;
    let case = params.case_tag();
    let c0 = e(&seeds.c0);
    let zero = S::zero_in(&field);
    let mut c = vec![zero.clone(); (2 * n + 1) as usize];
    let idx = |i: i64| (i + n) as usize;
    c[idx(0)] = c0.clone();
    let provenance = if case == CaseTag::Both {
        Provenance::Recurrence
    } else {
        provenance
    };
    match case {
        CaseTag::BZero => {
            if let Some(cm1) = &seeds.c_minus1 {
                if !cm1.is_zero() {
                    return Err(IrredError::InconsistentSeeds(
                        "c_-1 must vanish when b = 0".into(),
                    ));
                }
            }
            for i in 1..=n {
                c[idx(i)] = match provenance {
                    Provenance::ClosedForm => {
                        let mut ai = S::one_in(&field);
                        for _ in 0..i {
                            ai = ai * &ctx.a;
                        }
                        ai * &binomial_scalar(&ctx.mu1, i as u64)? * &c0
                    }
                    _ => {
                        // i c_i = a (μ_1 - i + 1) c_{i-1}
                        let num =
                            ctx.a.clone() * &(ctx.mu1.clone() - &ctx.int(i - 1)) * &c[idx(i - 1)];
                        num.try_div(&ctx.int(i))?
                    }
                };
            }
        }
        CaseTag::AZero => {
            let forced = -(ctx.b.clone() * &ctx.mu0 * &c0);
            if let Some(cm1) = &seeds.c_minus1 {
                if !e(cm1).agrees(&forced) {
                    return Err(IrredError::InconsistentSeeds(
                        "c_-1 must equal -b mu_0 c_0 when a = 0".into(),
                    ));
                }
            }
            for k in 1..=n {
                c[idx(-k)] = match provenance {
                    Provenance::ClosedForm => {
                        let mut nb = S::one_in(&field);
                        for _ in 0..k {
                            nb = nb * &(-ctx.b.clone());
                        }
                        nb * &binomial_scalar(&ctx.mu0, k as u64)? * &c0
                    }
                    _ => {
                        // k c_{-k} = -b (μ_0 - k + 1) c_{-k+1}
                        let num = -(ctx.b.clone()
                            * &(ctx.mu0.clone() - &ctx.int(k - 1))
                            * &c[idx(-k + 1)]);
                        num.try_div(&ctx.int(k))?
                    }
                };
            }
        }
        CaseTag::Both => {
            nonzero(ctx.beta.clone(), "b^2 a - b", 0)?;
            if n >= 1 {
                c[idx(-1)] = seeds
                    .c_minus1
                    .as_ref()
                    .map(e)
                    .unwrap_or_else(|| zero.clone());
            }
            let ab = ctx.a.clone() * &ctx.b;
            for i in 0..n {
                // c_{i+1} = (c_i (ab(μ̄+2i) - i) + a(μ_1-i+1) c_{i-1}) / ((b²a-b)(μ_0+i+1))
                let t1 = c[idx(i)].clone()
                    * &(ab.clone() * &(ctx.mubar.clone() + &ctx.int(2 * i)) - &ctx.int(i));
                let t2 = ctx.a.clone() * &(ctx.mu1.clone() - &ctx.int(i - 1)) * &c[idx(i - 1)];
                let den = nonzero(
                    ctx.beta.clone() * &(ctx.mu0.clone() + &ctx.int(i + 1)),
                    "mu_0 + i + 1",
                    i + 1,
                )?;
                c[idx(i + 1)] = (t1 + t2).try_div(&den)?;
            }
            for k in 2..=n {
                // c_{-k} = ((b²a-b) c_{-k+2} (μ_0-k+2) - (ab(μ̄-2(k-1)) + k-1) c_{-k+1}) / (a(μ_1+k))
                let t1 = ctx.beta.clone() * &c[idx(-k + 2)] * &(ctx.mu0.clone() - &ctx.int(k - 2));
                let t2 = (ab.clone() * &(ctx.mubar.clone() - &ctx.int(2 * (k - 1)))
                    + &ctx.int(k - 1))
                    * &c[idx(-k + 1)];
                let den = nonzero(
                    ctx.a.clone() * &(ctx.mu1.clone() + &ctx.int(k)),
                    "mu_1 + i",
                    k,
                )?;
                c[idx(-k)] = (t1 - t2).try_div(&den)?;
            }
        }
    }
    Ok(IntertwinerTable {
        mu: [mu[0].clone(), mu[1].clone()],
        params: params.clone(),
        case_tag: case,
        provenance,
        seeds: seeds.clone(),
        extent,
        coeffs: c,
    })
}
