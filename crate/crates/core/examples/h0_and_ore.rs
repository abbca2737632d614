//! Invariants under conjugated unipotents, and Ore witnesses in U(sl_2).
//!
//! cargo run --example h0_and_ore

use num_rational::BigRational;

use padic_cuspidal::groups::{h0_vanishing_check, ore_witness, Pbw};
use padic_cuspidal::irreducibility::{mat_from, u_minus, u_plus};
use padic_cuspidal::padic::{ExactScalar, FieldSpec};
use padic_cuspidal::weights::CuspidalModuleSpec;

fn main() {
    let f = FieldSpec::qp(5, 30).unwrap();
    let q = |n, d| ExactScalar::ratio(&f, n, d).unwrap();
    let conj = vec![
        mat_from(&f, [[1, 0], [0, 1]]),
        u_plus(&q(5, 1)),
        u_minus(&q(-2, 7)),
    ];

    for mu in [[(1, 2), (1, 3)], [(1, 1), (1, 3)], [(1, 2), (5, 2)]] {
        let spec = CuspidalModuleSpec::rational(f.clone(), &mu, 10)
            .unwrap()
            .shared();
        let rep = h0_vanishing_check(&spec, &conj, 10).unwrap();
        let kernels: Vec<String> = rep
            .entries
            .iter()
            .filter(|e| !e.injective)
            .map(|e| {
                format!(
                    "{:?} after conjugator {} (dim {})",
                    e.generator, e.conjugator, e.kernel_dim
                )
            })
            .collect();
        println!(
            "mu = {mu:?}: all injective = {}  {}",
            rep.passed(),
            kernels.join(", ")
        );
    }

    let s = Pbw::e().scale(&BigRational::new(1.into(), 3.into()));
    let r = |n: i64| BigRational::from_integer(n.into());
    let mut delta = Pbw::zero();
    delta.add_term((2, 1, 0), r(5));
    delta.add_term((0, 3, 0), r(-1));
    let w = ore_witness(&s, &delta).unwrap();
    println!("s = {s}, delta = {delta}");
    println!("  k = {}, s' = {}", w.k, w.s_prime);
    println!("  delta' = {}", w.delta_prime);
    println!("  s delta' == delta s': {}", w.verified);
}
