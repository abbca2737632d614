use num_rational::Rational64;
use serde_json::json;

use super::{build_table, CaseTag, ConjugationParams, IntertwinerTable, IrredError, Seeds};
use crate::analytic::{convergence_verdict, DivergenceCertificate, RadiusParams, Verdict};
use crate::padic::{ExactScalar, PadicScalar, Valuation};

/// Certificate for one seed choice.
#[derive(Clone, Debug)]
pub struct SeedCertificate {
    pub seeds: Seeds,
    pub certificate: DivergenceCertificate,
}

#[derive(Clone, Debug)]
pub struct CertifyReport {
    pub case_tag: CaseTag,
    pub inside_t0r: bool,
    pub verdict: Verdict,
    /// The certificate that decided `verdict`.
    pub certificate: DivergenceCertificate,
    pub per_seed: Vec<SeedCertificate>,
}

impl CertifyReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut cert = self.certificate.to_json();
        cert["verdict"] = json!(self.verdict.to_string());
        json!({
            "case": format!("{:?}", self.case_tag),
            "inside_t0r": self.inside_t0r,
            "certificate": cert,
            "per_seed": self.per_seed.iter().map(|s| json!({
                "c0": s.seeds.c0.to_expr(),
                "c_minus1": s.seeds.c_minus1.as_ref().map(|c| c.to_expr()),
                "verdict": s.certificate.verdict.to_string(),
                "slope": crate::analytic::slope_string(s.certificate.slope),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Seeds tried for a case. The two-sided space of solutions is spanned by the
/// first two; the others probe combinations where leading terms may cancel.
pub fn seed_family(params: &ConjugationParams) -> Result<Vec<Seeds>, IrredError> {
    let field = params.a.field();
    let one = ExactScalar::one(field);
    let zero = ExactScalar::zero(field);
    Ok(match params.case_tag() {
        CaseTag::Both => vec![
            Seeds::new(one.clone(), Some(zero.clone())),
            Seeds::new(zero, Some(one.clone())),
            Seeds::new(one.clone(), Some(one.clone())),
            Seeds::new(one.clone(), Some(params.a.inverse()?)),
        ],
        _ => vec![Seeds::normalized(field)],
    })
}

/// `val(F_i)` for the factor with `c_i = F_i d_i`, computed exactly from `μ`.
fn conversion_valuations(mu: [&ExactScalar; 2], m0m: u32, n: i64) -> Vec<Option<Rational64>> {
    let field = mu[0].field();
    let mut out = vec![Some(Rational64::from_integer(0)); (2 * n + 1) as usize];
    for sign in [1i64, -1] {
        let base = if sign > 0 { mu[1] } else { mu[0] };
        let mut acc = Some(Rational64::from_integer(0));
        for k in 1..=n {
            let factor = base - &ExactScalar::from_int(field, k - 1);
            acc = match (acc, factor.valuation()) {
                (Some(a), Valuation::Finite(v)) => {
                    Some(a + v + Rational64::from_integer(m0m as i64))
                }
                _ => None,
            };
            out[(sign * k + n) as usize] = acc;
        }
    }
    out
}

fn seed_certificate(
    mu: [&ExactScalar; 2],
    params: &ConjugationParams,
    seeds: &Seeds,
    radius: &RadiusParams,
    n: u64,
    conv: &[Option<Rational64>],
) -> Result<DivergenceCertificate, IrredError> {
    let ni = n as i64;
    let table: IntertwinerTable<PadicScalar> = build_table(mu, params, seeds, n as u32)?;
    let vals: Vec<Valuation> = (-ni..=ni)
        .map(|i| {
            let c = table.get(i).expect("in range").valuation();
            match (c, conv[(i + ni) as usize]) {
                (Valuation::Infinite, _) => Valuation::Infinite,
                (Valuation::Finite(v), Some(f)) => Valuation::Finite(v - f),
                (Valuation::AtLeast(v), Some(f)) => Valuation::AtLeast(v - f),
                (_, None) => Valuation::AtLeast(Rational64::from_integer(i64::MIN / 4)),
            }
        })
        .collect();
    Ok(convergence_verdict(|i| vals[(i + ni) as usize], radius, n))
}

/// Build the coefficient table in capped precision (the digit cap of
/// `radius.field`), convert to `d_i` and decide convergence in the completion.
///
/// In the two-sided case every seed of [`seed_family`] is tried: the verdict
/// is `Diverges` only when all of them diverge and `Converges` as soon as one
/// converges.
pub fn certify_divergence(
    mu: [&ExactScalar; 2],
    params: &ConjugationParams,
    radius: &RadiusParams,
    horizon: u64,
) -> Result<CertifyReport, IrredError> {
    let wf = &radius.field;
    let mu0 = mu[0].with_field(wf)?;
    let mu1 = mu[1].with_field(wf)?;
    let params = ConjugationParams::new(
        params.a.with_field(wf)?,
        params.b.with_field(wf)?,
        params.m0m,
    );
    let mu = [&mu0, &mu1];
    let conv = conversion_valuations(mu, radius.m0m(), horizon as i64);
    let mut per_seed = Vec::new();
    for seeds in seed_family(&params)? {
        let certificate = seed_certificate(mu, &params, &seeds, radius, horizon, &conv)?;
        per_seed.push(SeedCertificate { seeds, certificate });
    }
    let find = |v: Verdict| per_seed.iter().find(|s| s.certificate.verdict == v);
    let (verdict, chosen) = if let Some(s) = find(Verdict::Converges) {
        (Verdict::Converges, s)
    } else if let Some(s) = find(Verdict::Indeterminate) {
        (Verdict::Indeterminate, s)
    } else {
        (Verdict::Diverges, &per_seed[0])
    };
    Ok(CertifyReport {
        case_tag: params.case_tag(),
        inside_t0r: params.inside_t0r(),
        verdict,
        certificate: chosen.certificate.clone(),
        per_seed,
    })
}

/// Whether the torus element `diag(1, t_1)` separates the completions: the
/// map `e^n v ↦ t_1^{-n} e^n v` shifts the valuation of the `n`-th term by
/// `-n·val(t_1)`, so a series converging with margin `val(t_1)/2` per step
/// and starting at valuation `sample_norm_exponent` is sent to a divergent
/// one exactly when `val(t_1) > 0`.
pub fn torus_disjointness(
    t1: &PadicScalar,
    sample_norm_exponent: Rational64,
    radius: &RadiusParams,
    horizon: u64,
) -> Result<bool, IrredError> {
    let tau = match t1.valuation() {
        Valuation::Finite(v) => v,
        other => {
            return Err(IrredError::NotIntegral(format!(
                "t_1 has valuation {other}"
            )))
        }
    };
    if tau < Rational64::from_integer(0) {
        return Err(IrredError::NotIntegral(tau.to_string()));
    }
    if tau == Rational64::from_integer(0) {
        return Ok(false);
    }
    let step = radius.step();
    let sigma = tau / 2;
    let x = -sample_norm_exponent;
    let sample = |shift: Rational64| {
        move |i: i64| {
            if i <= 0 {
                Valuation::Infinite
            } else {
                let k = Rational64::from_integer(i);
                Valuation::Finite(x + (sigma - step - shift) * k)
            }
        }
    };
    let before = convergence_verdict(sample(Rational64::from_integer(0)), radius, horizon);
    let after = convergence_verdict(sample(tau), radius, horizon);
    Ok(before.verdict == Verdict::Converges && after.verdict == Verdict::Diverges)
}

/// Slope change of the term valuations under `e^n v ↦ t_1^{-n} e^n v`.
pub fn torus_slope_shift(t1: &PadicScalar) -> Option<Rational64> {
    t1.valuation().as_finite().map(|v| -v)
}
