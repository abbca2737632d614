use std::fmt;

use num_rational::{Ratio, Rational64};
use num_traits::{Signed, Zero};
use serde_json::json;

use super::RadiusParams;
use crate::padic::{factorial_valuation, Valuation};

type Q = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Converges,
    Diverges,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Converges => "Converges",
            Verdict::Diverges => "Diverges",
            Verdict::Indeterminate => "Indeterminate",
        };
        f.write_str(s)
    }
}

/// How a side's slope was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeMethod {
    /// Exact fit of `w_k = A k + B val_p(k!) + C` on the whole tail.
    ExactFit,
    /// Secant estimate with a fluctuation band.
    Secant,
    /// No nonzero terms in the tail.
    Vanishing,
    Unresolved,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SideAnalysis {
    /// `+1` for `i > 0` (x-part), `-1` for `i < 0` (y-part).
    pub sign: i64,
    pub verdict: Verdict,
    /// `None` means the tail vanishes (slope `+∞`).
    pub slope: Option<Rational64>,
    pub method: SlopeMethod,
    pub witness: (i64, i64),
}

/// Convergence decision for `Σ d_i` with term norms `|d_i| s^{κ|i|}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivergenceCertificate {
    pub verdict: Verdict,
    /// Asymptotic slope of `val(d_i) + κ λ_s |i|` in `|i|` on the deciding side.
    pub slope: Option<Rational64>,
    pub witness: (i64, i64),
    pub horizon: u64,
    pub sides: Vec<SideAnalysis>,
    pub notes: Vec<String>,
}

pub fn slope_string(s: Option<Rational64>) -> String {
    match s {
        None => "+inf".into(),
        Some(q) => format!("{}/{}", q.numer(), q.denom()),
    }
}

impl DivergenceCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "verdict": self.verdict.to_string(),
            "slope": slope_string(self.slope),
            "witness": [self.witness.0, self.witness.1],
            "horizon": self.horizon,
        })
    }
}

fn q(x: Rational64) -> Q {
    Q::new(*x.numer() as i128, *x.denom() as i128)
}

fn back(x: Q) -> Rational64 {
    Rational64::new(*x.numer() as i64, *x.denom() as i64)
}

fn solve3(rows: [[Q; 4]; 3]) -> Option<[Q; 3]> {
    let mut m = rows;
    for c in 0..3 {
        let piv = (c..3).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, piv);
        let inv = m[c][c].recip();
        for v in m[c].iter_mut() {
            *v *= inv;
        }
        for r in 0..3 {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in 0..4 {
                    let t = m[c][k] * f;
                    m[r][k] -= t;
                }
            }
        }
    }
    Some([m[0][3], m[1][3], m[2][3]])
}

/// Exact fit of `w = A k + B L(k) + C`, `L(k) = val_p(k!)`, verified on every point.
fn exact_fit(p: u32, pts: &[(i64, Q)]) -> Option<(Q, Q, Q)> {
    if pts.len() < 6 {
        return None;
    }
    let lk = |k: i64| q(factorial_valuation(p, k as u64));
    let last = pts.len() - 1;
    let mid_candidates = (1..last).rev().step_by((last / 16).max(1));
    for mid in mid_candidates {
        let rows = [pts[0], pts[mid], pts[last]]
            .map(|(k, w)| [Q::from_integer(k as i128), lk(k), Q::from_integer(1), w]);
        let Some([a, b, c]) = solve3(rows) else {
            continue;
        };
        if pts
            .iter()
            .all(|&(k, w)| a * Q::from_integer(k as i128) + b * lk(k) + c == w)
        {
            return Some((a, b, c));
        }
    }
    None
}

/// Decide one side from `w_k = val(d_{±k}) + κ λ_s k`, `k = 1..=N`.
fn analyze_side(
    sign: i64,
    p: u32,
    horizon: u64,
    w: &[(i64, Valuation)],
    notes: &mut Vec<String>,
) -> SideAnalysis {
    let n = horizon as i64;
    let start = (n / 2).max(1);
    let side = if sign > 0 { "x-part" } else { "y-part" };
    let tail: Vec<&(i64, Valuation)> = w.iter().filter(|(k, _)| *k >= start).collect();
    if let Some((k, _)) = tail
        .iter()
        .find(|(_, v)| matches!(v, Valuation::AtLeast(_)))
    {
        notes.push(format!("{side}: precision exhausted at |i| = {k}"));
        return SideAnalysis {
            sign,
            verdict: Verdict::Indeterminate,
            slope: None,
            method: SlopeMethod::Unresolved,
            witness: (sign * start, sign * n),
        };
    }
    let finite: Vec<(i64, Q)> = tail
        .iter()
        .filter_map(|(k, v)| v.as_finite().map(|x| (*k, q(x))))
        .collect();
    let late_start = 3 * n / 4;
    if finite.iter().all(|(k, _)| *k < late_start) {
        return SideAnalysis {
            sign,
            verdict: Verdict::Converges,
            slope: None,
            method: SlopeMethod::Vanishing,
            witness: (sign * late_start, sign * n),
        };
    }
    // Where the term valuations stop increasing: last index of the running maximum.
    let peak = w
        .iter()
        .filter_map(|(k, v)| v.as_finite().map(|x| (*k, x)))
        .fold(None::<(i64, Rational64)>, |best, (k, x)| match best {
            Some((_, bx)) if bx > x => best,
            _ => Some((k, x)),
        })
        .map(|(k, _)| k)
        .unwrap_or(start);
    let decide = |slope: Q| {
        if slope.is_positive() {
            Verdict::Converges
        } else if slope.is_negative() {
            Verdict::Diverges
        } else {
            Verdict::Indeterminate
        }
    };
    if let Some((a, b, _)) = exact_fit(p, &finite) {
        let slope = a + b / Q::from_integer(p as i128 - 1);
        let verdict = decide(slope);
        let witness = if verdict == Verdict::Diverges {
            (sign * peak, sign * n)
        } else {
            (sign * start, sign * n)
        };
        if verdict == Verdict::Indeterminate {
            notes.push(format!("{side}: exact slope 0"));
        }
        return SideAnalysis {
            sign,
            verdict,
            slope: Some(back(slope)),
            method: SlopeMethod::ExactFit,
            witness,
        };
    }
    let (k1, w1) = finite[0];
    let (k2, w2) = finite[finite.len() - 1];
    let span = Q::from_integer((k2 - k1) as i128);
    let sigma = (w2 - w1) / span;
    let fluct = finite
        .iter()
        .map(|&(k, x)| (x - (w1 + sigma * Q::from_integer((k - k1) as i128))).abs())
        .max()
        .unwrap_or_else(Q::zero);
    let clear = sigma.abs() * span > fluct * Q::from_integer(2);
    let verdict = if clear {
        decide(sigma)
    } else {
        Verdict::Indeterminate
    };
    notes.push(format!(
        "{side}: no exact affine+factorial fit; secant slope {} with fluctuation {}",
        back(sigma),
        back(fluct)
    ));
    let witness = if verdict == Verdict::Diverges {
        (sign * peak, sign * n)
    } else {
        (sign * start, sign * n)
    };
    SideAnalysis {
        sign,
        verdict,
        slope: Some(back(sigma)),
        method: SlopeMethod::Secant,
        witness,
    }
}

/// Decide whether `Σ_i d_i (generator)^{|i|}` lies in the completion, i.e.
/// whether `val(d_i) + κ λ_s |i| → ∞` on both sides, scanning `|i| ≤ horizon`.
pub fn convergence_verdict(
    valseq: impl Fn(i64) -> Valuation,
    params: &RadiusParams,
    horizon: u64,
) -> DivergenceCertificate {
    let p = params.field.p();
    let step = params.step();
    let mut notes = Vec::new();
    if horizon < 50 {
        notes.push(format!("horizon {horizon} is below the minimum of 50"));
    }
    let mut sides = Vec::new();
    for sign in [1i64, -1] {
        let w: Vec<(i64, Valuation)> = (1..=horizon as i64)
            .map(|k| {
                let shift = step * Rational64::from_integer(k);
                let v = match valseq(sign * k) {
                    Valuation::Finite(x) => Valuation::Finite(x + shift),
                    Valuation::AtLeast(x) => Valuation::AtLeast(x + shift),
                    Valuation::Infinite => Valuation::Infinite,
                };
                (k, v)
            })
            .collect();
        sides.push(analyze_side(sign, p, horizon, &w, &mut notes));
    }
    let pick = |v: Verdict| {
        sides
            .iter()
            .filter(|s| s.verdict == v)
            .min_by_key(|s| s.slope.unwrap_or(Rational64::from_integer(i64::MAX)))
    };
    let (verdict, chosen) = if let Some(s) = pick(Verdict::Diverges) {
        (Verdict::Diverges, s)
    } else if let Some(s) = pick(Verdict::Indeterminate) {
        (Verdict::Indeterminate, s)
    } else {
        let s = sides
            .iter()
            .min_by_key(|s| s.slope.unwrap_or(Rational64::from_integer(i64::MAX)))
            .unwrap();
        (Verdict::Converges, s)
    };
    let mut verdict = verdict;
    if horizon < 50 {
        verdict = Verdict::Indeterminate;
    }
    DivergenceCertificate {
        verdict,
        slope: chosen.slope,
        witness: chosen.witness,
        horizon,
        sides: sides.clone(),
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::FieldSpec;

    fn params() -> RadiusParams {
        RadiusParams::new(FieldSpec::qp(5, 20).unwrap(), 1, 1, Rational64::new(1, 2))
    }

    // val(d_i) for d_i = a^i / (i! p^{i m0m}) on i >= 0, zero for i < 0.
    fn family(val_a: Rational64, m0m: i64) -> impl Fn(i64) -> Valuation {
        move |i| {
            if i < 0 {
                Valuation::Infinite
            } else {
                let k = Rational64::from_integer(i);
                Valuation::Finite(
                    k * (val_a - Rational64::from_integer(m0m)) - factorial_valuation(5, i as u64),
                )
            }
        }
    }

    #[test]
    fn geometric_factorial_family() {
        let pr = params();
        let c = convergence_verdict(family(Rational64::from_integer(1), 2), &pr, 500);
        assert_eq!(c.verdict, Verdict::Diverges);
        assert_eq!(c.slope, Some(Rational64::new(-3, 4)));
        let c = convergence_verdict(family(Rational64::from_integer(2), 2), &pr, 500);
        assert_eq!(c.verdict, Verdict::Converges);
        assert_eq!(c.slope, Some(Rational64::new(1, 4)));
        assert_eq!(c.to_json()["slope"], "1/4");
    }

    #[test]
    fn zero_sequence_converges() {
        let c = convergence_verdict(|_| Valuation::Infinite, &params(), 100);
        assert_eq!(c.verdict, Verdict::Converges);
        assert_eq!(c.slope, None);
    }

    #[test]
    fn flat_sequence_is_indeterminate() {
        // w_k = κλ_s k - k/2 = 0 exactly.
        let c = convergence_verdict(
            |i| Valuation::Finite(Rational64::new(-i.abs(), 2)),
            &params(),
            100,
        );
        assert_eq!(c.verdict, Verdict::Indeterminate);
        assert_eq!(c.slope, Some(Rational64::from_integer(0)));
    }
}
