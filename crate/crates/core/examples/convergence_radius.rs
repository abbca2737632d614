//! Radius parameters, term norms and convergence verdicts for Laurent-type sums.
//!
//! cargo run --example convergence_radius

use num_rational::Rational64;

use padic_cuspidal::analytic::{
    admissible_lambda_window, convergence_verdict, slope_string, term_norm, validate_radius,
    RadiusParams,
};
use padic_cuspidal::padic::{factorial_valuation, FieldSpec, Valuation};

fn main() {
    let f = FieldSpec::new(5, 2, 40).unwrap();
    let (lo, hi) = admissible_lambda_window(5, 2).unwrap();
    println!("admissible lambda for p = 5, e = 2: ({lo}, {hi})");

    let good = RadiusParams::new(f.clone(), 1, 1, Rational64::new(1, 2));
    println!("lambda = 1/2: {:?}", validate_radius(&good));
    let bad = RadiusParams::new(f.clone(), 0, 1, Rational64::new(3, 1));
    match validate_radius(&bad) {
        Ok(()) => println!("lambda = 3 accepted"),
        Err(v) => println!(
            "lambda = 3, m0 = 0: {}",
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        ),
    }

    for i in [0i64, 1, 10, -10] {
        println!(
            "|d_{i} e_{i}| for val(d) = 0: {}",
            term_norm(i, &Valuation::finite(0, 1), &good)
        );
    }

    // d_i = a^i / (i! p^{i(m0+m)}) for i >= 0: converges iff val(a) >= m0 + m.
    for va in [
        Rational64::new(3, 2),
        Rational64::from_integer(2),
        Rational64::new(5, 2),
    ] {
        let vals = |i: i64| {
            if i < 0 {
                Valuation::Infinite
            } else {
                Valuation::Finite((va - 2) * i - factorial_valuation(5, i as u64))
            }
        };
        let c = convergence_verdict(vals, &good, 500);
        println!(
            "val(a) = {va}: {} (slope {}, witness {:?})",
            c.verdict,
            slope_string(c.slope),
            c.witness
        );
    }
}
