//! Truncated `U(sl_2)` in the PBW basis `f^a h^b e^c`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use super::GroupError;

/// Exponents `(a, b, c)` of `f^a h^b e^c`.
pub type PbwMonomial = (u32, u32, u32);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Pbw {
    terms: BTreeMap<PbwMonomial, BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Pbw {
    pub fn zero() -> Self {
        Pbw::default()
    }

    pub fn one() -> Self {
        Pbw::monomial((0, 0, 0), BigRational::one())
    }

    pub fn monomial(m: PbwMonomial, c: BigRational) -> Self {
        let mut out = Pbw::zero();
        out.add_term(m, c);
        out
    }

    pub fn e() -> Self {
        Pbw::monomial((0, 0, 1), BigRational::one())
    }

    pub fn f() -> Self {
        Pbw::monomial((1, 0, 0), BigRational::one())
    }

    pub fn h() -> Self {
        Pbw::monomial((0, 1, 0), BigRational::one())
    }

    pub fn scalar(c: BigRational) -> Self {
        Pbw::monomial((0, 0, 0), c)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: PbwMonomial) -> BigRational {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total PBW degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b, c)| a + b + c).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Pbw::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    /// `e^k`.
    pub fn e_pow(k: u32) -> Self {
        Pbw::monomial((0, 0, k), BigRational::one())
    }

    fn left_f(&self) -> Self {
        let mut out = Pbw::zero();
        for (&(a, b, c), x) in &self.terms {
            out.add_term((a + 1, b, c), x.clone());
        }
        out
    }

    /// `h f^a = f^a (h - 2a)`.
    fn left_h(&self) -> Self {
        let mut out = Pbw::zero();
        for (&(a, b, c), x) in &self.terms {
            out.add_term((a, b + 1, c), x.clone());
            out.add_term((a, b, c), x * q(-2 * a as i64));
        }
        out
    }

    /// `e f^a = f^a e + a f^{a-1}(h - a + 1)` and `e h^b = (h - 2)^b e`.
    fn left_e(&self) -> Self {
        let mut out = Pbw::zero();
        for (&(a, b, c), x) in &self.terms {
            // f^a (h-2)^b e^{c+1}
            let mut binom = BigInt::one();
            for k in 0..=b {
                let coeff = BigRational::from_integer(binom.clone() * BigInt::from(-2).pow(b - k));
                out.add_term((a, k, c + 1), x * coeff);
                binom = binom * BigInt::from(b - k) / BigInt::from(k + 1);
            }
            if a > 0 {
                let an = q(a as i64);
                out.add_term((a - 1, b + 1, c), x * &an);
                out.add_term((a - 1, b, c), x * &an * q(1 - a as i64));
            }
        }
        out
    }

    /// Product in `U(sl_2)`.
    pub fn mul_ref(&self, rhs: &Pbw) -> Pbw {
        let mut out = Pbw::zero();
        for (&(a, b, c), x) in &self.terms {
            let mut acc = rhs.clone();
            for _ in 0..c {
                acc = acc.left_e();
            }
            for _ in 0..b {
                acc = acc.left_h();
            }
            for _ in 0..a {
                acc = acc.left_f();
            }
            out = &out + &acc.scale(x);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .terms
            .iter()
            .map(|(&(a, b, c), x)| json!({ "f": a, "h": b, "e": c, "coeff": x.to_string() }))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(fm, "0");
        }
        for (k, (&(a, b, c), x)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(fm, " + ")?;
            }
            let mut parts = Vec::new();
            if !x.is_one() || a + b + c == 0 {
                parts.push(x.to_string());
            }
            for (name, p) in [("f", a), ("h", b), ("e", c)] {
                match p {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{p}")),
                }
            }
            write!(fm, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Pbw {
    type Output = Pbw;
    fn add(self, rhs: &Pbw) -> Pbw {
        let mut out = self.clone();
        for (m, x) in &rhs.terms {
            out.add_term(*m, x.clone());
        }
        out
    }
}

impl Sub for &Pbw {
    type Output = Pbw;
    fn sub(self, rhs: &Pbw) -> Pbw {
        let mut out = self.clone();
        for (m, x) in &rhs.terms {
            out.add_term(*m, -x.clone());
        }
        out
    }
}

impl Mul for &Pbw {
    type Output = Pbw;
    fn mul(self, rhs: &Pbw) -> Pbw {
        self.mul_ref(rhs)
    }
}

/// `s δ' = δ s'` with `s' = s^k`.
#[derive(Clone, Debug)]
pub struct OreWitness {
    pub s: Pbw,
    pub delta: Pbw,
    pub delta_prime: Pbw,
    pub k: u32,
    pub s_prime: Pbw,
    pub verified: bool,
}

impl OreWitness {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "s": self.s.to_string(),
            "delta": self.delta.to_string(),
            "delta_prime": self.delta_prime.to_string(),
            "k": self.k,
            "verified": self.verified,
        })
    }
}

fn monomials_up_to(d: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Solve `A x = y` over the rationals; `None` when inconsistent.
fn solve(cols: &[Pbw], rhs: &Pbw) -> Option<Vec<BigRational>> {
    let mut keys: Vec<PbwMonomial> = cols.iter().flat_map(|c| c.terms.keys().copied()).collect();
    keys.extend(rhs.terms.keys().copied());
    keys.sort_unstable();
    keys.dedup();
    let n = cols.len();
    let mut rows: Vec<Vec<BigRational>> = keys
        .iter()
        .map(|k| {
            cols.iter()
                .map(|c| c.coefficient(*k))
                .chain([rhs.coefficient(*k)])
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let fct = rows[i][c].clone();
                for j in 0..=n {
                    let t = &rows[r][j] * &fct;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, col) in pivots {
        x[col] = rows[row][n].clone();
    }
    Some(x)
}

/// Find `δ'` and `s' = s^k`, `k <= deg δ + 1`, with `s δ' = δ s'`, where
/// `s = λ e` is a nonzero multiple of `e`.
pub fn ore_witness(s: &Pbw, delta: &Pbw) -> Result<OreWitness, GroupError> {
    let lambda = s.coefficient((0, 0, 1));
    if lambda.is_zero() || s.terms().count() != 1 {
        return Err(GroupError::NotInN);
    }
    let d = delta.degree().unwrap_or(0);
    if d > 6 {
        return Err(GroupError::DegreeTooLarge(d));
    }
    for k in 1..=d + 1 {
        let s_prime = Pbw::e_pow(k).scale(&num_traits::pow(lambda.clone(), k as usize));
        let target = delta * &s_prime;
        let basis = monomials_up_to(d + k - 1);
        let cols: Vec<Pbw> = basis
            .iter()
            .map(|m| s * &Pbw::monomial(*m, BigRational::one()))
            .collect();
        if let Some(x) = solve(&cols, &target) {
            let mut delta_prime = Pbw::zero();
            for (m, c) in basis.iter().zip(x) {
                delta_prime.add_term(*m, c);
            }
            let verified = &(s * &delta_prime) - &target == Pbw::zero();
            return Ok(OreWitness {
                s: s.clone(),
                delta: delta.clone(),
                delta_prime,
                k,
                s_prime,
                verified,
            });
        }
    }
    Err(GroupError::NoWitness {
        degree: d,
        max_k: d + 1,
    })
}
