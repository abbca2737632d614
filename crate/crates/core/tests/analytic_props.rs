use num_rational::Rational64;
use proptest::prelude::*;

use padic_cuspidal::analytic::{
    admissible_lambda_window, char_binomial, char_exp_log, convergence_verdict, term_norm,
    validate_radius, RadiusParams, Verdict,
};
use padic_cuspidal::padic::{factorial_valuation, FieldSpec, PadicScalar, Valuation};

const DIGITS: i64 = 25;

fn f() -> FieldSpec {
    FieldSpec::qp(7, 40).unwrap()
}

prop_compose! {
    // 1 + p^2 u
    fn principal()(u in 0i64..1_000_000) -> PadicScalar {
        PadicScalar::from_int(&f(), 1 + 49 * u)
    }
}

prop_compose! {
    fn exponent()(n in -400i64..400, d in 1i64..100) -> PadicScalar {
        let d = if d % 7 == 0 { d + 1 } else { d };
        PadicScalar::embed_rational(&f(), n, d).unwrap()
    }
}

fn chi(mu: &PadicScalar, x: &PadicScalar) -> PadicScalar {
    char_binomial(mu, x, None).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn characters_are_multiplicative(mu in exponent(), x in principal(), y in principal()) {
        let xy = x.clone() * &y;
        prop_assert!(chi(&mu, &xy).agrees_to(&(chi(&mu, &x) * &chi(&mu, &y)), DIGITS));
    }

    #[test]
    fn characters_are_additive_in_mu(mu in exponent(), nu in exponent(), x in principal()) {
        let s = mu.clone() + &nu;
        prop_assert!(chi(&s, &x).agrees_to(&(chi(&mu, &x) * &chi(&nu, &x)), DIGITS));
    }

    #[test]
    fn binomial_agrees_with_exp_log(mu in exponent(), x in principal()) {
        let el = char_exp_log(&mu, &x).unwrap().value;
        prop_assert!(chi(&mu, &x).agrees_to(&el, DIGITS));
    }
}

fn radius(p: u32, e: u32, lambda: Rational64) -> RadiusParams {
    RadiusParams::new(FieldSpec::new(p, e, 20).unwrap(), 1, 1, lambda)
}

proptest! {
    #[test]
    fn term_norm_is_multiplicative_and_decreasing(i in -200i64..200, v1 in -50i64..50, v2 in -50i64..50) {
        let pr = radius(5, 2, Rational64::new(1, 2));
        let n = |i: i64, v: i64| term_norm(i, &Valuation::finite(v, 2), &pr).exponent().unwrap();
        let d2 = Rational64::new(v2, 2);
        prop_assert_eq!(n(i, v1 + v2), n(i, v1) - d2);
        let next = if i >= 0 { i + 1 } else { i - 1 };
        prop_assert!(n(next, 0) < n(i, 0));
    }

    /// `d_i = a^i / (i! p^{i m0m})` converges in the completion exactly when `val(a) >= m0m`.
    #[test]
    fn closed_family_boundary(
        (p, e) in prop::sample::select(vec![(3u32, 1u32), (3, 2), (5, 1), (5, 2), (5, 3), (7, 2), (11, 1), (2, 1)]),
        m0m in 1i64..4,
        offset in -6i64..6,
        t in 1i64..8,
    ) {
        let (lo, hi) = admissible_lambda_window(p, e).unwrap();
        let lambda = lo + (hi - lo) * Rational64::new(t, 8);
        let pr = RadiusParams::new(FieldSpec::new(p, e, 20).unwrap(), 1, (m0m - 1) as u32, lambda);
        prop_assert!(validate_radius(&pr).is_ok());
        let va = Rational64::from_integer(m0m) + Rational64::new(offset, e as i64);
        let vals = move |i: i64| {
            if i < 0 {
                Valuation::Infinite
            } else {
                Valuation::Finite((va - Rational64::from_integer(m0m)) * Rational64::from_integer(i) - factorial_valuation(p, i as u64))
            }
        };
        let c = convergence_verdict(vals, &pr, 500);
        let expected = if offset < 0 { Verdict::Diverges } else { Verdict::Converges };
        prop_assert_eq!(c.verdict, expected, "p={} e={} val(a)={} lambda={}", p, e, va, lambda);
    }
}
