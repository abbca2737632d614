//! Coefficient tables of candidate intertwiners and their exact checks.
//!
//! cargo run --example intertwiner_tables

use padic_cuspidal::irreducibility::{
    build_table, build_table_with, linear_solve_table, verify_intertwiner_equation,
    ConjugationParams, IntertwinerTable, Provenance, Seeds,
};
use padic_cuspidal::padic::{ExactScalar, FieldSpec};

fn main() {
    let f = FieldSpec::new(5, 2, 40).unwrap();
    let pq = |n, d, k| ExactScalar::ratio(&f, n, d).unwrap() * &ExactScalar::pi_power(&f, k);
    let mu = [pq(2, 3, -1), pq(1, 7, 1)];
    let mu = [&mu[0], &mu[1]];

    // b = 0: a one-sided closed form.
    let params = ConjugationParams::new(pq(3, 1, 2), ExactScalar::zero(&f), 1);
    let t: IntertwinerTable<ExactScalar> =
        build_table(mu, &params, &Seeds::normalized(&f), 6).unwrap();
    println!("case {:?}, provenance {:?}", t.case_tag, t.provenance);
    for (i, c) in t.entries().filter(|(i, _)| *i >= 0) {
        println!("  c_{i} = {c}  (val {})", c.valuation());
    }
    let rec: IntertwinerTable<ExactScalar> = build_table_with(
        mu,
        &params,
        &Seeds::normalized(&f),
        6,
        Provenance::Recurrence,
    )
    .unwrap();
    println!(
        "  recurrence agrees: {}",
        t.entries().zip(rec.entries()).all(|(x, y)| x == y)
    );

    // a, b both nonzero: a two-sided recurrence from (c_0, c_{-1}).
    let params = ConjugationParams::new(pq(3, 1, 1), pq(-2, 1, 1), 1);
    let seeds = Seeds::new(ExactScalar::one(&f), Some(pq(1, 2, 0)));
    let t: IntertwinerTable<ExactScalar> = build_table(mu, &params, &seeds, 8).unwrap();
    let res = verify_intertwiner_equation(&t, 7).unwrap();
    println!(
        "case {:?}: residual zero on window 7: {}",
        t.case_tag,
        res.is_zero()
    );
    let lin = linear_solve_table(mu, &params, &seeds, 8).unwrap();
    println!(
        "  independent linear solve: rank {}, free {:?}, matches: {}",
        lin.rank,
        lin.free,
        lin.reproduces_table()
    );

    // A perturbed coefficient is caught by the operator check.
    let bad = t.with_entry(3, t.get(3).unwrap().clone() + &ExactScalar::one(&f));
    println!(
        "  perturbed c_3 fails at {:?}",
        verify_intertwiner_equation(&bad, 7)
            .unwrap()
            .nonzero_indices()
    );
}
