//! One function per subcommand, each turning a parsed input item into a
//! report row.

use serde_json::{json, Value};

use super::input::*;
use super::RunConfig;
use crate::analytic::{
    char_binomial, char_exp_log, slope_string, validate_radius, RadiusParams, Verdict,
};
use crate::groups::{
    bruhat_decompose, cartan_representative, h0_vanishing_check, iwahori_factor, ore_witness,
    FiniteLevelMatrix, GroupError, Pbw,
};
use crate::irreducibility::{
    build_table, certify_divergence, mat_from, u_minus, u_plus, verify_intertwiner_equation,
    CaseTag, ConjugationParams, IntertwinerTable, Mat2, Seeds,
};
use crate::padic::{ExactScalar, FieldSpec, PadicScalar};
use crate::weights::{
    check_cuspidality, degree, irreducibility_precheck, weyl_condition, CuspidalModuleSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RowStatus {
    Ok,
    Skipped,
    Error,
    /// An internal invariant failed (nonzero oracle residual, failed
    /// reconstruction, unverified witness).
    Violation,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Skipped => "skipped",
            RowStatus::Error => "error",
            RowStatus::Violation => "violation",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Row {
    pub status: RowStatus,
    pub body: Value,
}

impl Row {
    fn ok(body: Value) -> Self {
        Row {
            status: RowStatus::Ok,
            body,
        }
    }

    fn error(msg: impl ToString) -> Self {
        Row {
            status: RowStatus::Error,
            body: json!({ "error": msg.to_string() }),
        }
    }
}

fn field(p: u32, e: u32, cfg: &RunConfig) -> Result<FieldSpec, String> {
    FieldSpec::new(p, e, cfg.precision).map_err(|e| e.to_string())
}

pub fn module_spec(item: &ModuleSpecIn, cfg: &RunConfig) -> Result<CuspidalModuleSpec, String> {
    let f = field(item.p, item.e, cfg)?;
    let mu = item
        .mu
        .iter()
        .map(|m| m.to_exact(&f))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(n) = item.n {
        if n + 1 != mu.len() {
            return Err(format!("n = {n} but mu has {} entries", mu.len()));
        }
    }
    CuspidalModuleSpec::new(f, mu, item.window_radius).map_err(|e| e.to_string())
}

fn exprs(v: &[ExactScalar]) -> Vec<String> {
    v.iter().map(|x| x.to_expr()).collect()
}

pub fn cuspidality(item: &ModuleSpecIn, cfg: &RunConfig) -> Row {
    let spec = match module_spec(item, cfg) {
        Ok(s) => s,
        Err(e) => return Row::error(e),
    };
    let report = match check_cuspidality(&spec) {
        Ok(r) => r,
        Err(e) => return Row::error(e),
    };
    let mut body = json!({
        "mu": exprs(&spec.mu),
        "cuspidal": report.cuspidal,
        "weyl_condition": weyl_condition(&spec.mu),
    });
    if report.cuspidal {
        match degree(&spec, None) {
            Ok(d) => body["degree"] = json!(d),
            Err(e) => return Row::error(e),
        }
    } else {
        body["failing_root"] = json!(report.failing_root.map(|(i, j)| [i, j]));
        body["failing_weight"] = json!(report.failing_weight.map(|w| w.coords().to_vec()));
    }
    Row::ok(body)
}

/// A certify input after conversion, possibly one random variant of an item.
#[derive(Clone, Debug)]
pub struct CertifyPoint {
    pub mu: [ExactScalar; 2],
    pub params: ConjugationParams,
    pub radius: RadiusParams,
    pub lambda: (i64, i64),
    pub oracle_window: u32,
}

pub fn certify_point(item: &CertifyIn, cfg: &RunConfig) -> Result<CertifyPoint, String> {
    let f = field(item.p, item.e, cfg)?;
    let mu = [item.mu[0].to_exact(&f)?, item.mu[1].to_exact(&f)?];
    let a = item.a.to_exact(&f)?;
    let b = item.b.to_exact(&f)?;
    let lambda_s = parse_ratio(&item.lambda_s)?;
    let radius = RadiusParams::new(f, item.m0, item.m, lambda_s);
    let lambda = item.lambda.map(|l| (l[0], l[1])).unwrap_or((0, 0));
    Ok(CertifyPoint {
        mu,
        params: ConjugationParams::new(a, b, item.m0 + item.m),
        radius,
        lambda,
        oracle_window: item.oracle_window.unwrap_or(10),
    })
}

pub fn certify(pt: &CertifyPoint, cfg: &RunConfig) -> Row {
    let mut body = json!({
        "mu": exprs(&pt.mu),
        "a": pt.params.a.to_expr(),
        "b": pt.params.b.to_expr(),
        "m0m": pt.params.m0m,
        "lambda_s": slope_string(Some(pt.radius.lambda_s)),
    });
    let pre = match irreducibility_precheck(&pt.mu, pt.lambda) {
        Ok(p) => p,
        Err(e) => return Row::error(e),
    };
    body["hypotheses"] = json!(pre
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed }))
        .collect::<Vec<_>>());
    if let Some(fail) = pre.first_failure() {
        body["skipped"] = json!(true);
        body["reason"] = json!(fail.violation());
        return Row {
            status: RowStatus::Skipped,
            body,
        };
    }
    if let Err(v) = validate_radius(&pt.radius) {
        body["skipped"] = json!(true);
        body["reason"] = json!(format!(
            "radius: {}",
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        ));
        return Row {
            status: RowStatus::Skipped,
            body,
        };
    }
    let mut status = RowStatus::Ok;
    let w = pt.oracle_window;
    let seeds = match pt.params.case_tag() {
        CaseTag::Both => Seeds::new(
            ExactScalar::one(pt.mu[0].field()),
            Some(ExactScalar::one(pt.mu[0].field())),
        ),
        _ => Seeds::normalized(pt.mu[0].field()),
    };
    let oracle = build_table::<ExactScalar>([&pt.mu[0], &pt.mu[1]], &pt.params, &seeds, w + 1)
        .and_then(|t: IntertwinerTable<ExactScalar>| verify_intertwiner_equation(&t, w));
    match oracle {
        Ok(r) => {
            if !r.is_zero() {
                status = RowStatus::Violation;
            }
            body["oracle"] = r.to_json();
        }
        Err(e) => return Row::error(e),
    }
    match certify_divergence([&pt.mu[0], &pt.mu[1]], &pt.params, &pt.radius, cfg.horizon) {
        Ok(rep) => {
            body["case"] = json!(format!("{:?}", rep.case_tag));
            body["inside_t0r"] = json!(rep.inside_t0r);
            let c = rep.to_json();
            for key in ["verdict", "slope", "witness", "horizon"] {
                body[key] = c["certificate"][key].clone();
            }
            body["per_seed"] = c["per_seed"].clone();
            let expected = if rep.inside_t0r && rep.case_tag != CaseTag::Both {
                Some(Verdict::Converges)
            } else if !rep.inside_t0r {
                Some(Verdict::Diverges)
            } else {
                None
            };
            body["expected"] = json!(expected.map(|v| v.to_string()));
            body["consistent"] =
                json!(expected.map(|v| v == rep.verdict || rep.verdict == Verdict::Indeterminate));
        }
        Err(e) => return Row::error(e),
    }
    Row { status, body }
}

pub fn decompose(item: &DecomposeIn, cfg: &RunConfig) -> Result<Row, String> {
    let mut ints = [[0i64; 2]; 2];
    for (i, row) in item.matrix.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let v = x
                .to_bigint()
                .map_err(|e| format!("matrix ({i},{j}): {e}"))?;
            ints[i][j] =
                i64::try_from(v).map_err(|_| format!("matrix ({i},{j}): entry too large"))?;
        }
    }
    let mut status = RowStatus::Ok;
    let mut body = json!({ "p": item.p, "level": cfg.level, "matrix": ints.map(|r| r.map(|x| x.to_string())) });
    match FiniteLevelMatrix::new(item.p, cfg.level, ints) {
        Ok(g) => {
            let (_, bruhat) = bruhat_decompose(&g);
            if !bruhat.reconstructs() {
                status = RowStatus::Violation;
            }
            body["bruhat"] = bruhat.to_json();
            body["iwahori"] = match iwahori_factor(&g) {
                Ok(r) => {
                    if !r.reconstructs() {
                        status = RowStatus::Violation;
                    }
                    r.to_json()
                }
                Err(e) => json!({ "skipped": e.to_string() }),
            };
        }
        Err(GroupError::NotInvertible) => {
            body["bruhat"] = json!({ "skipped": "not in GL_2 at this level" });
            body["iwahori"] = json!({ "skipped": "not in GL_2 at this level" });
        }
        Err(e) => return Err(e.to_string()),
    }
    let f = field(item.p, 1, cfg)?;
    let g: Mat2<PadicScalar> = mat_from(&f, ints);
    body["cartan"] = match cartan_representative(&g) {
        Ok(c) => {
            if !c.reconstructs {
                status = RowStatus::Violation;
            }
            c.to_json()
        }
        Err(e) => json!({ "skipped": e.to_string() }),
    };
    Ok(Row { status, body })
}

pub fn char_eval(item: &CharEvalIn, cfg: &RunConfig) -> Row {
    let f = match field(item.p, item.e, cfg) {
        Ok(f) => f,
        Err(e) => return Row::error(e),
    };
    let (mu, x) = match (item.mu.to_exact(&f), item.x.to_exact(&f)) {
        (Ok(m), Ok(x)) => (m.to_padic(), x.to_padic()),
        (Err(e), _) | (_, Err(e)) => return Row::error(e),
    };
    let bin = match char_binomial(&mu, &x, item.terms) {
        Ok(v) => v,
        Err(e) => return Row::error(e),
    };
    let mut body = json!({
        "mu": mu.to_string(),
        "x": x.to_string(),
        "binomial": bin.value.to_string(),
        "terms": bin.terms,
        "tail_bound": slope_string(Some(bin.tail_bound)),
    });
    match char_exp_log(&mu, &x) {
        Ok(v) => {
            body["exp_log"] = json!(v.value.to_string());
            body["agree"] = json!(v.value.eq_to_precision(&bin.value));
        }
        Err(e) => body["exp_log"] = json!({ "skipped": e.to_string() }),
    }
    Row::ok(body)
}

fn conjugator(c: &ConjugatorIn, f: &FieldSpec) -> Result<Mat2<ExactScalar>, String> {
    Ok(match c {
        ConjugatorIn::Named(n) if n == "identity" => mat_from(f, [[1, 0], [0, 1]]),
        ConjugatorIn::Named(n) => return Err(format!("unknown conjugator {n:?}")),
        ConjugatorIn::Upper { a } => u_plus(&a.to_exact(f)?),
        ConjugatorIn::Lower { b } => u_minus(&b.to_exact(f)?),
    })
}

/// Identity, `I + p e`, `I + p f`, `I + e`, `I + f`.
pub fn default_conjugators(f: &FieldSpec) -> Vec<Mat2<ExactScalar>> {
    let p = ExactScalar::from_int(f, f.p() as i64);
    let one = ExactScalar::one(f);
    vec![
        mat_from(f, [[1, 0], [0, 1]]),
        u_plus(&p),
        u_minus(&p),
        u_plus(&one),
        u_minus(&one),
    ]
}

pub fn h0_check(item: &ModuleSpecIn, cfg: &RunConfig) -> Row {
    let spec = match module_spec(item, cfg) {
        Ok(s) => s.shared(),
        Err(e) => return Row::error(e),
    };
    let conj = match &item.conjugators {
        None => default_conjugators(&spec.field),
        Some(list) => match list
            .iter()
            .map(|c| conjugator(c, &spec.field))
            .collect::<Result<Vec<_>, _>>()
        {
            Ok(v) => v,
            Err(e) => return Row::error(e),
        },
    };
    let cusp = match check_cuspidality(&spec) {
        Ok(r) => r.cuspidal,
        Err(e) => return Row::error(e),
    };
    match h0_vanishing_check(&spec, &conj, spec.window_radius) {
        Ok(rep) => {
            let status = if cusp && !rep.passed() {
                RowStatus::Violation
            } else {
                RowStatus::Ok
            };
            let mut body = rep.to_json();
            body["mu"] = json!(exprs(&spec.mu));
            body["cuspidal"] = json!(cusp);
            Row { status, body }
        }
        Err(e) => Row::error(e),
    }
}

pub fn ore(item: &OreIn) -> Row {
    let lambda = match item.s.to_rational() {
        Ok(l) => l,
        Err(e) => return Row::error(e),
    };
    let delta = match pbw_from(&item.delta) {
        Ok(d) => d,
        Err(e) => return Row::error(e),
    };
    let s = Pbw::e().scale(&lambda);
    match ore_witness(&s, &delta) {
        Ok(w) => {
            let status = if w.verified {
                RowStatus::Ok
            } else {
                RowStatus::Violation
            };
            let mut body = w.to_json();
            body["delta_prime_terms"] = w.delta_prime.to_json();
            Row { status, body }
        }
        Err(e @ GroupError::NoWitness { .. }) => Row {
            status: RowStatus::Skipped,
            body: json!({ "no_witness": e.to_string() }),
        },
        Err(e) => Row::error(e),
    }
}

/// `a`, `b` multiplied by random units `r/s` (`1 <= r, s <= 50`, prime to `p`),
/// keeping their valuations.
pub fn random_variant(pt: &CertifyPoint, rng: &mut impl rand::Rng) -> CertifyPoint {
    let f = pt.mu[0].field().clone();
    let p = f.p() as i64;
    let mut unit = || loop {
        let r: i64 = rng.gen_range(1..=50);
        let s: i64 = rng.gen_range(1..=50);
        if r % p != 0 && s % p != 0 {
            return ExactScalar::ratio(&f, r, s).expect("nonzero denominator");
        }
    };
    let a = &pt.params.a * &unit();
    let b = &pt.params.b * &unit();
    CertifyPoint {
        params: ConjugationParams::new(a, b, pt.params.m0m),
        ..pt.clone()
    }
}
