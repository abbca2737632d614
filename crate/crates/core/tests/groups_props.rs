use num_rational::{BigRational, Rational64};
use proptest::prelude::*;

use padic_cuspidal::groups::{
    bruhat_decompose, cartan_representative, h0_vanishing_check, iwahori_factor, ore_witness,
    BruhatCell, FiniteLevelMatrix, Pbw,
};
use padic_cuspidal::irreducibility::{mat_from, u_minus, u_plus, Mat2};
use padic_cuspidal::padic::{ExactScalar, FieldSpec, PadicScalar};
use padic_cuspidal::weights::CuspidalModuleSpec;

fn modulus(p: u32, level: u32) -> i64 {
    (p as i64).pow(level)
}

prop_compose! {
    fn matrix()(p in prop::sample::select(vec![3u32, 5, 7]), level in 1u32..=3)
        (p in Just(p), level in Just(level), e in prop::array::uniform4(0..modulus(p, level)))
        -> Option<FiniteLevelMatrix> {
        FiniteLevelMatrix::new(p, level, [[e[0], e[1]], [e[2], e[3]]]).ok()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bruhat_reconstructs(g in matrix()) {
        let Some(g) = g else { return Ok(()) };
        let (cell, rep) = bruhat_decompose(&g);
        prop_assert!(rep.reconstructs());
        prop_assert!(rep.factors[0].is_iwahori() && rep.factors[2].is_iwahori());
        prop_assert_eq!(cell == BruhatCell::One, g.is_iwahori());
    }

    #[test]
    fn iwahori_round_trip(g in matrix()) {
        let Some(g) = g else { return Ok(()) };
        match iwahori_factor(&g) {
            Ok(rep) => {
                prop_assert!(g.is_iwahori());
                prop_assert!(rep.reconstructs());
                let [[_, b], [c, _]] = rep.representative.entries();
                prop_assert_eq!((b, c), (0, 0));
            }
            Err(_) => prop_assert!(!g.is_iwahori()),
        }
    }

    /// The gap `j` is an invariant: `diag(1, π^j)` conjugated by unipotents keeps it.
    #[test]
    fn cartan_gap_survives_unipotents(j in 0i64..6, x in -40i64..40, y in -40i64..40, m in -2i64..3) {
        let f = FieldSpec::new(5, 2, 60).unwrap();
        let one = PadicScalar::one(&f);
        let pi = |k: i64| PadicScalar::pi_power(&f, k);
        let int = |n: i64| PadicScalar::from_int(&f, n);
        let up = [[one.clone(), int(x)], [PadicScalar::zero(&f), one.clone()]];
        let lo = [[one.clone(), PadicScalar::zero(&f)], [int(y), one.clone()]];
        let d: Mat2<PadicScalar> = [[pi(m), PadicScalar::zero(&f)], [PadicScalar::zero(&f), pi(m + j)]];
        let g = padic_cuspidal::irreducibility::mat_mul(&padic_cuspidal::irreducibility::mat_mul(&up, &d), &lo);
        let c = cartan_representative(&g).unwrap();
        prop_assert_eq!((c.j, c.scale), (j, m));
        prop_assert!(c.reconstructs);
    }
}

fn conjugators(f: &FieldSpec) -> Vec<Mat2<ExactScalar>> {
    let q = |n: i64, d: i64| ExactScalar::ratio(f, n, d).unwrap();
    vec![
        mat_from(f, [[1, 0], [0, 1]]),
        u_plus(&q(5, 1)),
        u_minus(&q(1, 1)),
        u_plus(&q(-2, 7)),
        u_minus(&q(25, 3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// No finite-support invariants when neither `μ_i` nor their difference is an integer;
    /// an integral `μ_i` gives a kernel.
    #[test]
    fn h0_grid(n0 in -30i64..30, d0 in 2i64..9, n1 in -30i64..30, d1 in 2i64..9, k in -4i64..4) {
        let f = FieldSpec::qp(5, 30).unwrap();
        let (r0, r1) = (Rational64::new(n0, d0), Rational64::new(n1, d1));
        prop_assume!(!r0.is_integer() && !r1.is_integer() && !(r0 - r1).is_integer());
        let mu = [(*r0.numer(), *r0.denom()), (*r1.numer(), *r1.denom())];
        let spec = CuspidalModuleSpec::rational(f.clone(), &mu, 8).unwrap().shared();
        prop_assert!(h0_vanishing_check(&spec, &conjugators(&f), 8).unwrap().passed());

        let spec = CuspidalModuleSpec::rational(f.clone(), &[(k, 1), mu[1]], 8).unwrap().shared();
        prop_assert!(h0_vanishing_check(&spec, &conjugators(&f), 8).unwrap().kernel_found());
    }
}

prop_compose! {
    fn pbw()(terms in prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -4i64..=4), 1..4)) -> Pbw {
        let mut p = Pbw::zero();
        for (a, b, c, k) in terms {
            p.add_term((a, b, c), BigRational::from_integer(k.into()));
        }
        p
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ore_witness_solves_the_condition(delta in pbw(), n in 1i64..20, d in 1i64..20) {
        prop_assume!(!delta.is_zero());
        let s = Pbw::e().scale(&BigRational::new(n.into(), d.into()));
        let w = ore_witness(&s, &delta).unwrap();
        prop_assert!(w.verified);
        prop_assert!(w.k <= delta.degree().unwrap() + 1);
        prop_assert_eq!(&s * &w.delta_prime, &delta * &w.s_prime);
    }

    /// A plain power of `e` commutes with `s` so `k = 1` always works.
    #[test]
    fn ore_witness_for_powers_of_e(j in 0u32..5, n in 1i64..20) {
        let s = Pbw::e().scale(&BigRational::from_integer(n.into()));
        let w = ore_witness(&s, &Pbw::e_pow(j)).unwrap();
        prop_assert_eq!(w.k, 1);
        prop_assert_eq!(w.delta_prime, Pbw::e_pow(j));
    }
}
