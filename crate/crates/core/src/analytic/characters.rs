use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use super::AnalyticError;
use crate::padic::{PadicScalar, Valuation};

/// A truncated series value with the certified lower bound on the valuation
/// of everything that was dropped.
#[derive(Clone, Debug)]
pub struct CharValue {
    pub value: PadicScalar,
    /// Index of the last summed term.
    pub terms: u64,
    /// Every omitted term has valuation at least this.
    pub tail_bound: Rational64,
}

fn target(x: &PadicScalar) -> Rational64 {
    let f = x.field();
    Rational64::new(f.precision_cap() as i64, f.e() as i64)
}

fn ceil_div(a: Rational64, b: Rational64) -> i64 {
    (a / b).ceil().to_integer()
}

/// `x - 1` with its valuation, which must be positive.
fn principal_offset(x: &PadicScalar) -> Result<(PadicScalar, Option<Rational64>), AnalyticError> {
    let y = x.clone() - PadicScalar::one(x.field());
    match y.valuation() {
        Valuation::Infinite | Valuation::AtLeast(_) => Ok((y, None)),
        Valuation::Finite(t) if t.is_positive() => Ok((y, Some(t))),
        Valuation::Finite(t) => Err(AnalyticError::OutsideDisc { valuation: t }),
    }
}

fn check_terms(
    requested: Option<u64>,
    needed: i64,
    rate: Rational64,
) -> Result<u64, AnalyticError> {
    let needed = needed.max(0) as u64;
    match requested {
        None => Ok(needed),
        Some(n) if n >= needed => Ok(n),
        Some(n) => Err(AnalyticError::TailNotCertified {
            terms: n,
            needed,
            rate,
        }),
    }
}

/// `x^μ = Σ_n C(μ, n) (x - 1)^n` on `|x - 1| < 1`, with enough terms that the
/// omitted tail is below the working precision.
pub fn char_binomial(
    mu: &PadicScalar,
    x: &PadicScalar,
    terms: Option<u64>,
) -> Result<CharValue, AnalyticError> {
    let field = x.field().clone();
    let big_t = target(x);
    let (y, t) = principal_offset(x)?;
    let Some(t) = t else {
        return Ok(CharValue {
            value: PadicScalar::one(&field),
            terms: 0,
            tail_bound: big_t,
        });
    };
    let inv = Rational64::new(1, field.p() as i64 - 1);
    // Lower bound per term: n·rate. Binomials of elements of Z_p are integral;
    // otherwise val C(μ, n) >= n·min(val μ, 0) - val(n!).
    let rate = match mu.valuation() {
        Valuation::Finite(v) if v >= Rational64::zero() && mu.is_in_base_field() => t,
        Valuation::Finite(v) => t + v.min(Rational64::zero()) - inv,
        _ => t,
    };
    if !rate.is_positive() {
        return Err(AnalyticError::OutsideDisc { valuation: t });
    }
    let n = check_terms(terms, ceil_div(big_t, rate) - 1, rate)?;
    let mut sum = PadicScalar::one(&field);
    let mut coeff = PadicScalar::one(&field);
    let mut ypow = PadicScalar::one(&field);
    for k in 0..n {
        coeff = (coeff * (mu.clone() - PadicScalar::from_int(&field, k as i64)))
            .checked_div(&PadicScalar::from_int(&field, k as i64 + 1))?;
        ypow = ypow * &y;
        sum = sum + coeff.clone() * &ypow;
    }
    Ok(CharValue {
        value: sum,
        terms: n,
        tail_bound: Rational64::from_integer(n as i64 + 1) * rate,
    })
}

fn ceil_log(p: u64, n: u64) -> i64 {
    let mut k = 0;
    let mut pk = 1u64;
    while pk < n {
        pk = pk.saturating_mul(p);
        k += 1;
    }
    k
}

/// `log(x) = Σ (-1)^{n+1} (x-1)^n / n` on `|x - 1| < 1`.
pub fn padic_log(x: &PadicScalar) -> Result<CharValue, AnalyticError> {
    let field = x.field().clone();
    let big_t = target(x);
    let (y, t) = principal_offset(x)?;
    let Some(t) = t else {
        return Ok(CharValue {
            value: PadicScalar::zero(&field),
            terms: 0,
            tail_bound: big_t,
        });
    };
    let p = field.p() as u64;
    // Terms have valuation >= n t - log_p n, increasing once n t >= 2.
    let mut n: u64 = 1;
    loop {
        let next = Rational64::from_integer(n as i64 + 1) * t;
        if next >= Rational64::from_integer(2)
            && next - Rational64::from_integer(ceil_log(p, n + 1)) >= big_t
        {
            break;
        }
        n += 1;
    }
    let mut sum = PadicScalar::zero(&field);
    let mut ypow = PadicScalar::one(&field);
    for k in 1..=n {
        ypow = ypow * &y;
        let term = ypow.checked_div(&PadicScalar::from_int(&field, k as i64))?;
        sum = if k % 2 == 1 { sum + term } else { sum - term };
    }
    let tail =
        Rational64::from_integer(n as i64 + 1) * t - Rational64::from_integer(ceil_log(p, n + 1));
    Ok(CharValue {
        value: sum,
        terms: n,
        tail_bound: tail,
    })
}

/// `exp(z) = Σ z^n / n!` for `val z > 1/(p-1)`.
pub fn padic_exp(z: &PadicScalar) -> Result<CharValue, AnalyticError> {
    let field = z.field().clone();
    let big_t = target(z);
    let inv = Rational64::new(1, field.p() as i64 - 1);
    let u = match z.valuation() {
        Valuation::Infinite | Valuation::AtLeast(_) => {
            return Ok(CharValue {
                value: PadicScalar::one(&field),
                terms: 0,
                tail_bound: big_t,
            });
        }
        Valuation::Finite(u) => u,
    };
    if u <= inv {
        return Err(AnalyticError::OutsideExpDisc { valuation: u });
    }
    let rate = u - inv;
    // val(z^n/n!) >= n (u - 1/(p-1)) + 1/(p-1)
    let n = (ceil_div(big_t - inv, rate) - 1).max(0) as u64;
    let mut sum = PadicScalar::one(&field);
    let mut term = PadicScalar::one(&field);
    for k in 1..=n {
        term = (term * z).checked_div(&PadicScalar::from_int(&field, k as i64))?;
        sum = sum + &term;
    }
    Ok(CharValue {
        value: sum,
        terms: n,
        tail_bound: Rational64::from_integer(n as i64 + 1) * rate + inv,
    })
}

/// `χ_μ(x) = exp(μ log x)`, defined while `val(μ log x) > 1/(p-1)`.
pub fn char_exp_log(mu: &PadicScalar, x: &PadicScalar) -> Result<CharValue, AnalyticError> {
    let l = padic_log(x)?;
    let z = mu.clone() * &l.value;
    let mut out = padic_exp(&z)?;
    out.tail_bound = out
        .tail_bound
        .min(l.tail_bound + mu.valuation().lower_bound().unwrap_or(Rational64::one()));
    Ok(out)
}

/// Decomposition of a unit of `Z_p` as Teichmüller representative times a
/// principal unit.
#[derive(Clone, Debug)]
pub struct UnitSplit {
    pub residue: u32,
    pub teichmuller: PadicScalar,
    pub principal: PadicScalar,
}

pub fn unit_split(x: &PadicScalar) -> Result<UnitSplit, AnalyticError> {
    let field = x.field().clone();
    if field.e() != 1 {
        return Err(AnalyticError::Ramified);
    }
    if x.valuation() != Valuation::finite(0, 1) {
        return Err(AnalyticError::NotUnit);
    }
    let residue = x.residue().expect("unit");
    let p = field.p() as u64;
    let mut w = x.clone();
    for _ in 0..=field.precision_cap() + 1 {
        let next = w.pow(p);
        if next.eq_to_precision(&w) {
            break;
        }
        w = next;
    }
    let principal = x.checked_div(&w)?;
    Ok(UnitSplit {
        residue,
        teichmuller: w,
        principal,
    })
}
