//! JSON input formats.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use serde::Deserialize;
use serde_json::Value;

use crate::groups::Pbw;
use crate::padic::{ExactScalar, FieldSpec};

/// An integer given as a JSON number or a decimal string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum IntLit {
    Int(i64),
    Str(String),
}

impl IntLit {
    pub fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            IntLit::Int(n) => Ok(BigInt::from(*n)),
            IntLit::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| format!("not an integer: {s:?}")),
        }
    }
}

/// A scalar `num/den · π^k`: either `[num, den, k]`, `"num/den"`, or an integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Triple(IntLit, IntLit, i64),
    Int(i64),
    Str(String),
}

impl ScalarLit {
    pub fn to_exact(&self, field: &FieldSpec) -> Result<ExactScalar, String> {
        let (q, k) = match self {
            ScalarLit::Triple(n, d, k) => {
                let d = d.to_bigint()?;
                if d == BigInt::from(0) {
                    return Err("zero denominator".into());
                }
                (BigRational::new(n.to_bigint()?, d), *k)
            }
            other => (other.to_rational()?, 0),
        };
        Ok(ExactScalar::rational_times_pi_power(field, q, k))
    }
}

pub fn parse_ratio(s: &str) -> Result<Rational64, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: i64 = n
        .trim()
        .parse()
        .map_err(|_| format!("bad rational {s:?}"))?;
    let d: i64 = d
        .trim()
        .parse()
        .map_err(|_| format!("bad rational {s:?}"))?;
    if d == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational64::new(n, d))
}

fn one() -> u32 {
    1
}

fn default_window() -> u32 {
    8
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpecIn {
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
    #[serde(default)]
    pub n: Option<usize>,
    pub mu: Vec<ScalarLit>,
    #[serde(default = "default_window")]
    pub window_radius: u32,
    /// Only used by `h0-check`.
    #[serde(default)]
    pub conjugators: Option<Vec<ConjugatorIn>>,
}

/// `"identity"`, `{"a": x}` for `I + x e`, or `{"b": x}` for `I + x f`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ConjugatorIn {
    Named(String),
    Upper { a: ScalarLit },
    Lower { b: ScalarLit },
}

fn default_lambda_s() -> String {
    "1/2".into()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifyIn {
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
    pub mu: [ScalarLit; 2],
    pub a: ScalarLit,
    pub b: ScalarLit,
    #[serde(default = "one")]
    pub m0: u32,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default = "default_lambda_s")]
    pub lambda_s: String,
    #[serde(default)]
    pub lambda: Option<[i64; 2]>,
    #[serde(default)]
    pub oracle_window: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeIn {
    pub p: u32,
    pub matrix: [[IntLit; 2]; 2],
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharEvalIn {
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
    pub mu: ScalarLit,
    pub x: ScalarLit,
    #[serde(default)]
    pub terms: Option<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PbwTermIn {
    #[serde(default)]
    pub f: u32,
    #[serde(default)]
    pub h: u32,
    #[serde(default)]
    pub e: u32,
    pub coeff: ScalarLit,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OreIn {
    /// Coefficient of `e` in `s`.
    #[serde(default = "default_s")]
    pub s: ScalarLit,
    pub delta: Vec<PbwTermIn>,
}

fn default_s() -> ScalarLit {
    ScalarLit::Int(1)
}

impl ScalarLit {
    /// A plain rational; a nonzero power of `π` is rejected.
    pub fn to_rational(&self) -> Result<BigRational, String> {
        let (num, den) = match self {
            ScalarLit::Triple(_, _, k) if *k != 0 => {
                return Err("expected a rational, got a power of pi".into())
            }
            ScalarLit::Triple(n, d, _) => (n.to_bigint()?, d.to_bigint()?),
            ScalarLit::Int(n) => (BigInt::from(*n), BigInt::from(1)),
            ScalarLit::Str(s) => {
                let (n, d) = s.split_once('/').unwrap_or((s.as_str(), "1"));
                let n: BigInt = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad numerator in {s:?}"))?;
                let d: BigInt = d
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad denominator in {s:?}"))?;
                (n, d)
            }
        };
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(num, den))
    }
}

pub fn pbw_from(terms: &[PbwTermIn]) -> Result<Pbw, String> {
    let mut out = Pbw::zero();
    for t in terms {
        out.add_term((t.f, t.h, t.e), t.coeff.to_rational()?);
    }
    Ok(out)
}

/// Items of a spec file: a JSON array, a single object, or for `decompose`
/// an object `{"p": .., "matrices": [..]}`.
pub fn items(doc: Value) -> Vec<Value> {
    match doc {
        Value::Array(v) => v,
        Value::Object(mut m) if m.contains_key("matrices") => {
            let p = m.remove("p").unwrap_or(Value::Null);
            match m.remove("matrices") {
                Some(Value::Array(ms)) => ms
                    .into_iter()
                    .map(|matrix| serde_json::json!({ "p": p.clone(), "matrix": matrix }))
                    .collect(),
                _ => vec![Value::Object(m)],
            }
        }
        other => vec![other],
    }
}
