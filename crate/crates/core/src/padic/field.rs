use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::ArithError;

/// The field `Q_p(π)` with `π^e = p`, together with the number of π-adic
/// digits every scalar keeps.
///
/// `e = 1` is plain `Q_p`. Cloning is cheap: the table of powers of `p` used
/// for reduction is shared.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    cap: u32,
    pows: Arc<[BigInt]>,
}

impl FieldSpec {
    pub fn new(p: u32, e: u32, precision_cap: u32) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(ArithError::InvalidField(
                "ramification index must be >= 1".into(),
            ));
        }
        if precision_cap == 0 {
            return Err(ArithError::InvalidField(
                "precision cap must be >= 1".into(),
            ));
        }
        // Enough powers to reduce any coefficient of a unit with `cap` digits,
        // plus headroom for the shifts done during addition.
        let top = precision_cap.div_ceil(e) as usize + 2;
        let mut pows = Vec::with_capacity(top + 1);
        let mut acc = BigInt::one();
        let pb = BigInt::from(p);
        for _ in 0..=top {
            pows.push(acc.clone());
            acc *= &pb;
        }
        Ok(FieldSpec {
            p,
            e,
            cap: precision_cap,
            pows: pows.into(),
        })
    }

    /// Unramified `Q_p` with the given digit cap.
    pub fn qp(p: u32, precision_cap: u32) -> Result<Self, ArithError> {
        Self::new(p, 1, precision_cap)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn precision_cap(&self) -> u32 {
        self.cap
    }

    /// Same prime and ramification, different digit cap.
    pub fn with_cap(&self, precision_cap: u32) -> Result<Self, ArithError> {
        Self::new(self.p, self.e, precision_cap)
    }

    pub(crate) fn p_big(&self) -> &BigInt {
        &self.pows[1]
    }

    pub(crate) fn p_pow(&self, k: u32) -> BigInt {
        match self.pows.get(k as usize) {
            Some(v) => v.clone(),
            None => num_traits::pow(self.p_big().clone(), k as usize),
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.cap == other.cap
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec(p={}, e={}, cap={})", self.p, self.e, self.cap)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
