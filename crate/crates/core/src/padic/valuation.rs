use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

/// A valuation normalized so that `val(p) = 1`; values live in `(1/e)·Z`.
///
/// `AtLeast` is what a capped-precision computation reports when a result is
/// indistinguishable from zero: only a lower bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(Rational64),
    AtLeast(Rational64),
    Infinite,
}

impl Valuation {
    pub fn finite(num: i64, den: i64) -> Self {
        Valuation::Finite(Rational64::new(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    pub fn as_finite(&self) -> Option<Rational64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            _ => None,
        }
    }

    /// Best known lower bound; `None` for an exact zero.
    pub fn lower_bound(&self) -> Option<Rational64> {
        match self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }

    /// `true` when the value is certainly `>= bound`.
    pub fn certainly_at_least(&self, bound: Rational64) -> bool {
        match self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => *v >= bound,
            Valuation::Infinite => true,
        }
    }

    /// Valuation of a product.
    pub fn add(self, other: Valuation) -> Valuation {
        use Valuation::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Finite(a), Finite(b)) => Finite(a + b),
            (Finite(a), AtLeast(b)) | (AtLeast(a), Finite(b)) | (AtLeast(a), AtLeast(b)) => {
                AtLeast(a + b)
            }
        }
    }

    pub fn min(self, other: Valuation) -> Valuation {
        match (self.lower_bound(), other.lower_bound()) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) => match a.cmp(&b) {
                Ordering::Less => self,
                Ordering::Greater => other,
                Ordering::Equal => {
                    if self.is_finite() {
                        self
                    } else {
                        other
                    }
                }
            },
        }
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, Valuation::Finite(v) if v.is_integer())
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, ">= {v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// `|x| = p^{-val(x)}`, kept as the exact exponent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    Zero,
    Power {
        p: u32,
        exponent: Rational64,
    },
    /// The value is indistinguishable from zero; its norm is at most `p^exponent`.
    AtMost {
        p: u32,
        exponent: Rational64,
    },
}

impl Norm {
    pub fn from_valuation(p: u32, v: Valuation) -> Norm {
        match v {
            Valuation::Infinite => Norm::Zero,
            Valuation::Finite(x) => Norm::Power { p, exponent: -x },
            Valuation::AtLeast(x) => Norm::AtMost { p, exponent: -x },
        }
    }

    pub fn exponent(&self) -> Option<Rational64> {
        match self {
            Norm::Power { exponent, .. } => Some(*exponent),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Norm::Power { exponent, .. } if exponent.is_zero())
    }

    pub fn lt_one(&self) -> bool {
        match self {
            Norm::Zero => true,
            Norm::Power { exponent, .. } | Norm::AtMost { exponent, .. } => exponent.is_negative(),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Norm::Zero => write!(f, "0"),
            Norm::Power { p, exponent } => write!(f, "{p}^({exponent})"),
            Norm::AtMost { p, exponent } => write!(f, "<= {p}^({exponent})"),
        }
    }
}
