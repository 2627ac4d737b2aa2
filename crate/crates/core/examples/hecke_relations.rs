//! The defining relations of the affine Hecke algebra, checked with
//! exact arithmetic over the rationals and over a prime field.
//!
//! Run with `cargo run --example hecke_relations`.

use hecke_mod_ell::hecke::{
    associativity_failures, bernstein_relation_suite, coxeter_relation_suite, HeckeAlgebra,
};
use hecke_mod_ell::scalar::{Fp, Rat};

fn main() {
    let alg = HeckeAlgebra::new(3, Rat::from_int(3)).unwrap();
    println!("H(3, 3) over the rationals:");
    for check in coxeter_relation_suite(&alg) {
        println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
    }

    // The quadratic relation in explicit form: S_1^2 = (q-1) S_1 + q.
    let s1 = alg.letter(1);
    println!("S_1 * S_1 = {}", s1.mul(&s1));

    // Exact random associativity over a prime field.
    let alg7 = HeckeAlgebra::new(4, Fp::new(7, 3)).unwrap();
    let failures = associativity_failures(&alg7, 500, 1);
    println!("H(4, 3) over F_7: {failures} associativity failures in 500 seeded triples");

    // Relations of the commuting family.
    println!("commuting-family relations for H(3, 3):");
    for check in bernstein_relation_suite(&alg) {
        println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
    }
}
