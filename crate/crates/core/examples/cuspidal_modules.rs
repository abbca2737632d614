//! Cuspidal weight modules of gl_{n+1}: root operators, the torus, cuspidality and degree.
//!
//! cargo run --example cuspidal_modules

use padic_cuspidal::padic::{ExactScalar, FieldSpec};
use padic_cuspidal::weights::{
    apply_root_operator, apply_torus, check_cuspidality, degree, irreducibility_precheck,
    same_module, weyl_condition, CuspidalModuleSpec, LatticePoint, ModuleElement,
};

fn main() {
    let f = FieldSpec::new(5, 2, 30).unwrap();
    let q = |n, d| ExactScalar::ratio(&f, n, d).unwrap();

    // gl_2 with μ = (1/2, 1/3): no integer entries, so every root operator is injective.
    let spec = CuspidalModuleSpec::new(f.clone(), vec![q(1, 2), q(1, 3)], 8)
        .unwrap()
        .shared();
    let rep = check_cuspidality(&spec).unwrap();
    println!(
        "mu = (1/2, 1/3): cuspidal = {}, degree = {}",
        rep.cuspidal,
        degree(&spec, None).unwrap()
    );

    // [e, f] = diag(1, -1) on a two-term element.
    let v = ModuleElement::from_terms(
        &spec,
        [
            (LatticePoint::alpha_multiple(0), q(1, 1)),
            (LatticePoint::alpha_multiple(2), q(-3, 7)),
        ],
    );
    let ef = apply_root_operator(&apply_root_operator(&v, 1, 0), 0, 1);
    let fe = apply_root_operator(&apply_root_operator(&v, 0, 1), 1, 0);
    let h = apply_torus(&v, &[ExactScalar::one(&f), ExactScalar::from_int(&f, -1)]);
    println!("[e,f] v == h v: {}", ef.sub(&fe).agrees(&h));

    // An integer μ_0 kills a weight vector.
    let spec = CuspidalModuleSpec::new(f.clone(), vec![q(1, 1), q(1, 3)], 8).unwrap();
    let rep = check_cuspidality(&spec).unwrap();
    println!(
        "mu = (1, 1/3): cuspidal = {}, root {:?} vanishes at weight {:?}",
        rep.cuspidal,
        rep.failing_root,
        rep.failing_weight.map(|w| w.coords().to_vec())
    );

    // gl_3.
    let spec = CuspidalModuleSpec::new(f.clone(), vec![q(1, 2), q(1, 3), q(-5, 6)], 3).unwrap();
    println!(
        "mu = (1/2, 1/3, -5/6): cuspidal = {}",
        check_cuspidality(&spec).unwrap().cuspidal
    );

    // Shifting by a root gives the same module.
    let mu = [q(1, 2), q(1, 3)];
    let shifted = [mu[0].clone() + &q(2, 1), mu[1].clone() - &q(2, 1)];
    println!(
        "same module after a root shift: {}",
        same_module(&mu, &shifted)
    );
    println!("Weyl condition for (1/2, 1/3): {}", weyl_condition(&mu));

    // The valuation hypotheses used by the irreducibility analysis.
    let mu = [
        q(2, 3) * &ExactScalar::pi_power(&f, -1),
        q(1, 7) * &ExactScalar::pi_power(&f, 1),
    ];
    for c in irreducibility_precheck(&mu, (0, 0)).unwrap().checks {
        println!("  {:<48} {}", c.name, if c.passed { "ok" } else { "fails" });
    }
}
