//! Capped-precision and exact arithmetic in a totally ramified extension of Q_p.
//!
//! cargo run --example padic_arithmetic

use padic_cuspidal::padic::{
    binomial_scalar, factorial_valuation, ExactScalar, FieldSpec, PadicScalar,
};

fn main() {
    // Q_5(π) with π^2 = 5, 12 digits of π-adic precision.
    let f = FieldSpec::new(5, 2, 12).unwrap();
    let pi = PadicScalar::pi_power(&f, 1);
    let third = PadicScalar::embed_rational(&f, 1, 3).unwrap();

    let x = third.clone() + &pi;
    println!("1/3 + π        = {x}");
    println!("val(1/3 + π)   = {}", x.valuation());
    println!(
        "val(π^3 / 25)  = {}",
        (PadicScalar::pi_power(&f, 3) * PadicScalar::embed_rational(&f, 1, 25).unwrap())
            .valuation()
    );

    // A binomial coefficient at a non-integer exponent.
    let c = binomial_scalar(&third, 6).unwrap();
    println!("C(1/3, 6)      = {c}  (val {})", c.valuation());

    // Legendre: val_p(n!) = (n - s_p(n)) / (p - 1).
    for n in [4u64, 5, 24, 25, 125] {
        println!("val_5({n}!) = {}", factorial_valuation(5, n));
    }

    // Exact elements of Q(π) keep the rational coefficients and never round.
    let a = ExactScalar::ratio(&f, 7, 3).unwrap() * &ExactScalar::pi_power(&f, 3);
    let b = ExactScalar::ratio(&f, -2, 9).unwrap();
    let s = a.clone() + &b;
    println!("exact: ({a}) + ({b}) = {s}, val {}", s.valuation());
    println!("       embedded: {}", s.to_padic());
}
