//! The character x ↦ x^μ on principal units, by the binomial series and by exp(μ log x).
//!
//! cargo run --example characters

use padic_cuspidal::analytic::{char_binomial, char_exp_log, padic_log, unit_split};
use padic_cuspidal::padic::{FieldSpec, PadicScalar};

fn main() {
    let f = FieldSpec::qp(5, 20).unwrap();
    let third = PadicScalar::embed_rational(&f, 1, 3).unwrap();

    for x in [6i64, 26, 1 + 5 * 17, 1 + 125] {
        let x = PadicScalar::from_int(&f, x);
        let b = char_binomial(&third, &x, None).unwrap();
        let e = char_exp_log(&third, &x).unwrap();
        println!("x = {x}");
        println!("  binomial ({} terms): {}", b.terms, b.value);
        println!("  exp-log            : {}", e.value);
        println!("  agree: {}", b.value.eq_to_precision(&e.value));
    }

    // (x^{1/3})^3 = x.
    let x = PadicScalar::from_int(&f, 31);
    let r = char_binomial(&third, &x, None).unwrap().value;
    println!(
        "cube of 31^(1/3) equals 31: {}",
        r.pow(3).eq_to_precision(&x)
    );

    println!(
        "log 6 = {}",
        padic_log(&PadicScalar::from_int(&f, 6)).unwrap().value
    );

    // A general unit splits as a root of unity times a principal unit.
    let u = unit_split(&PadicScalar::from_int(&f, 7)).unwrap();
    println!("7 = ω({}) · {}", u.residue, u.principal);

    // 2 is not a principal unit; the series has no radius there.
    match char_binomial(&third, &PadicScalar::from_int(&f, 2), None) {
        Ok(_) => println!("unexpected value at x = 2"),
        Err(e) => println!("x = 2: {e}"),
    }
}
