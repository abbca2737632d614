//! Bruhat and Iwahori factorizations over Z/p^k, Cartan decompositions over O.
//!
//! cargo run --example decompositions

use padic_cuspidal::groups::{
    bruhat_decompose, cartan_representative, enumerate_gl2, iwahori_factor, mackey_cosets,
    BruhatCell, FiniteLevelMatrix,
};
use padic_cuspidal::padic::{FieldSpec, PadicScalar};

fn main() {
    let g = FiniteLevelMatrix::new(5, 2, [[2, 7], [3, 1]]).unwrap();
    let (cell, rep) = bruhat_decompose(&g);
    println!("Bruhat cell of {:?} mod 25: {cell:?}", g.entries());
    for k in &rep.factors {
        println!("  {:?}", k.entries());
    }
    println!("  reconstructs: {}", rep.reconstructs());

    let h = FiniteLevelMatrix::new(5, 2, [[3, 7], [5, 2]]).unwrap();
    let rep = iwahori_factor(&h).unwrap();
    println!(
        "Iwahori u- t u+ of {:?}: {:?}",
        h.entries(),
        rep.factors.iter().map(|k| k.entries()).collect::<Vec<_>>()
    );

    let all = enumerate_gl2(3, 1).unwrap();
    let big = all
        .iter()
        .filter(|g| bruhat_decompose(g).0 == BruhatCell::W0)
        .count();
    println!("GL_2(F_3): {} elements, {} in the big cell", all.len(), big);

    let f = FieldSpec::new(5, 2, 30).unwrap();
    let x = |n: i64, k: i64| PadicScalar::from_int(&f, n) * PadicScalar::pi_power(&f, k);
    let m = [[x(1, 2), x(3, 1)], [x(2, 3), x(1, 0)]];
    let c = cartan_representative(&m).unwrap();
    println!(
        "Cartan: scale π^{}, gap π^{}, reconstructs {}",
        c.scale, c.j, c.reconstructs
    );

    let cosets: Vec<String> = mackey_cosets(&f, 3).iter().map(|c| c.label()).collect();
    println!("double cosets up to j = 3: {}", cosets.join(", "));
}
