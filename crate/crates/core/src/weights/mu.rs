use num_rational::Rational64;
use num_traits::Zero;

use super::{CuspidalModuleSpec, WeightError};
use crate::padic::{ExactScalar, Valuation};

/// Replace `μ` by `μ + λ` (`n = 1`). The flag reports whether the new spec
/// generates the same module, i.e. whether `λ` lies in the root lattice.
pub fn twist_by_character(
    spec: &CuspidalModuleSpec,
    lambda: (i64, i64),
) -> Result<(CuspidalModuleSpec, bool), WeightError> {
    if spec.n != 1 {
        return Err(WeightError::NotRankOne(spec.n));
    }
    let f = &spec.field;
    let mu = vec![
        spec.mu[0].clone() + &ExactScalar::from_int(f, lambda.0),
        spec.mu[1].clone() + &ExactScalar::from_int(f, lambda.1),
    ];
    let twisted = CuspidalModuleSpec::new(f.clone(), mu, spec.window_radius)?;
    Ok((twisted, lambda.0 + lambda.1 == 0))
}

/// `M^μ = M^ν` exactly when `μ - ν` is an integer vector with zero sum.
pub fn same_module(mu: &[ExactScalar], nu: &[ExactScalar]) -> bool {
    assert_eq!(mu.len(), nu.len(), "length mismatch");
    let mut sum = 0i64;
    for (a, b) in mu.iter().zip(nu) {
        match (a - b).as_i64() {
            Some(k) => sum += k,
            None => return false,
        }
    }
    sum == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// True iff `w(μ) - μ ∉ Z^{n+1}` for every non-identity permutation `w`.
pub fn weyl_condition(mu: &[ExactScalar]) -> bool {
    permutations(mu.len())
        .into_iter()
        .filter(|w| w.iter().enumerate().any(|(i, &j)| i != j))
        .all(|w| {
            w.iter()
                .enumerate()
                .any(|(i, &j)| !(&mu[j] - &mu[i]).is_integer())
        })
}

/// `γ(|μ| ε_0) + τ`, where `γ` projects along `ε_0 + ⋯ + ε_n`.
pub fn central_character_weight(mu: &[ExactScalar], tau: &[ExactScalar]) -> Vec<ExactScalar> {
    assert_eq!(mu.len(), tau.len(), "length mismatch");
    let field = mu[0].field().clone();
    let s = mu.iter().fold(ExactScalar::zero(&field), |acc, m| acc + m);
    let share = s
        .checked_div(&ExactScalar::from_int(&field, mu.len() as i64))
        .expect("nonzero");
    tau.iter()
        .enumerate()
        .map(|(i, t)| {
            let base = if i == 0 { &s - &share } else { -share.clone() };
            base + t
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrecheckReport {
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisCheck {
    /// The negated statement, for reporting a failed check.
    pub fn violation(&self) -> &'static str {
        match self.name {
            HYP_WEYL => "w(mu)-mu in Z^2",
            HYP_NOT_IN_L => "|mu_i| in |L|",
            HYP_DISTINCT => "|mu_0| = |mu_1|",
            HYP_SOME_LE_ONE => "|mu_i| > 1 for all i",
            HYP_SOME_GE_ONE => "|mu_i| < 1 for all i",
            other => other,
        }
    }
}

impl PrecheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&HypothesisCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub const HYP_WEYL: &str = "w(mu)-mu not in Z^2";
pub const HYP_NOT_IN_L: &str = "|mu_i| not in |L|";
pub const HYP_DISTINCT: &str = "|mu_0| != |mu_1|";
pub const HYP_SOME_LE_ONE: &str = "|mu_i| <= 1 for some i";
pub const HYP_SOME_GE_ONE: &str = "|mu_i| >= 1 for some i (lambda_0+lambda_1 != 0)";

/// Evaluate each irreducibility hypothesis for `n = 1`, base field `Q_p`
/// (value group `p^Z`).
pub fn irreducibility_precheck(
    mu: &[ExactScalar],
    lambda: (i64, i64),
) -> Result<PrecheckReport, WeightError> {
    if mu.len() != 2 {
        return Err(WeightError::NotRankOne(mu.len().saturating_sub(1)));
    }
    let v: Vec<Valuation> = mu.iter().map(|m| m.valuation()).collect();
    let show = |x: &Valuation| x.to_string();
    let mut checks = Vec::new();
    checks.push(HypothesisCheck {
        name: HYP_WEYL,
        passed: weyl_condition(mu),
        detail: format!("mu_0 - mu_1 = {}", &mu[0] - &mu[1]),
    });
    let outside = |x: &Valuation| matches!(x, Valuation::Finite(q) if !q.is_integer());
    checks.push(HypothesisCheck {
        name: HYP_NOT_IN_L,
        passed: outside(&v[0]) && outside(&v[1]),
        detail: format!("val(mu_0) = {}, val(mu_1) = {}", show(&v[0]), show(&v[1])),
    });
    checks.push(HypothesisCheck {
        name: HYP_DISTINCT,
        passed: v[0] != v[1],
        detail: format!("val(mu_0) = {}, val(mu_1) = {}", show(&v[0]), show(&v[1])),
    });
    let at_least = |x: &Valuation, b: i64| x.certainly_at_least(Rational64::from_integer(b));
    let le_one = at_least(&v[0], 0) || at_least(&v[1], 0);
    checks.push(HypothesisCheck {
        name: HYP_SOME_LE_ONE,
        passed: le_one,
        detail: "needs val(mu_i) >= 0 for some i".into(),
    });
    let needs_ge = lambda.0 + lambda.1 != 0;
    let ge_one = v
        .iter()
        .any(|x| matches!(x, Valuation::Finite(q) if *q <= Rational64::zero()));
    checks.push(HypothesisCheck {
        name: HYP_SOME_GE_ONE,
        passed: !needs_ge || ge_one,
        detail: if needs_ge {
            "needs val(mu_i) <= 0 for some i".into()
        } else {
            "not required: lambda_0+lambda_1 = 0".into()
        },
    });
    Ok(PrecheckReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::FieldSpec;

    fn q(f: &FieldSpec, a: i64, b: i64) -> ExactScalar {
        ExactScalar::ratio(f, a, b).unwrap()
    }

    #[test]
    fn twist_examples() {
        let f = FieldSpec::qp(5, 10).unwrap();
        let s = CuspidalModuleSpec::rational(f.clone(), &[(1, 2), (1, 3)], 4).unwrap();
        let (t, same) = twist_by_character(&s, (2, -2)).unwrap();
        assert_eq!(t.mu, vec![q(&f, 5, 2), q(&f, -5, 3)]);
        assert!(same);
        let (t, same) = twist_by_character(&s, (1, 1)).unwrap();
        assert_eq!(t.mu, vec![q(&f, 3, 2), q(&f, 4, 3)]);
        assert!(!same);
        assert_eq!(twist_by_character(&s, (0, 0)).unwrap().0, s);
    }

    #[test]
    fn same_module_examples() {
        let f = FieldSpec::qp(5, 10).unwrap();
        let mu = [q(&f, 1, 2), q(&f, 1, 3)];
        assert!(same_module(&mu, &[q(&f, 3, 2), q(&f, -2, 3)]));
        assert!(same_module(&mu, &mu));
        assert!(!same_module(&mu, &[q(&f, 1, 2), q(&f, 4, 3)]));
    }

    #[test]
    fn weyl_examples() {
        let f = FieldSpec::qp(5, 10).unwrap();
        assert!(weyl_condition(&[q(&f, 1, 2), q(&f, 1, 3)]));
        assert!(!weyl_condition(&[q(&f, 1, 2), q(&f, 1, 2)]));
        assert!(!weyl_condition(&[q(&f, 1, 2), q(&f, 5, 2)]));
        assert!(weyl_condition(&[q(&f, 1, 2), q(&f, 1, 3), q(&f, 1, 7)]));
        assert!(!weyl_condition(&[q(&f, 1, 2), q(&f, 1, 3), q(&f, 7, 3)]));
    }

    #[test]
    fn central_character() {
        let f = FieldSpec::qp(5, 10).unwrap();
        let z = [q(&f, 0, 1), q(&f, 0, 1)];
        assert_eq!(
            central_character_weight(&[q(&f, 1, 2), q(&f, -1, 2)], &z),
            z.to_vec()
        );
        let w = central_character_weight(&[q(&f, 1, 2), q(&f, 1, 3)], &z);
        assert_eq!(w, vec![q(&f, 5, 12), q(&f, -5, 12)]);
    }

    #[test]
    fn precheck_examples() {
        let f = FieldSpec::new(5, 2, 20).unwrap();
        let mu = [ExactScalar::pi_power(&f, 1), ExactScalar::pi_power(&f, 3)];
        assert!(irreducibility_precheck(&mu, (0, 0)).unwrap().all_passed());
        let r = irreducibility_precheck(&[q(&f, 1, 2), q(&f, 1, 3)], (0, 0)).unwrap();
        assert_eq!(r.first_failure().unwrap().name, HYP_NOT_IN_L);
        let r = irreducibility_precheck(&[mu[0].clone(), mu[0].clone()], (0, 0)).unwrap();
        assert!(r.checks.iter().any(|c| c.name == HYP_DISTINCT && !c.passed));
        // both norms < 1 and a non-lattice twist: the ">= 1" condition fails
        let r = irreducibility_precheck(&mu, (1, 0)).unwrap();
        assert_eq!(r.first_failure().unwrap().name, HYP_SOME_GE_ONE);
    }
}
