//! The commuting generator family of the second presentation: explicit
//! elements, the exchange identity, and the central product.
//!
//! Run with `cargo run --example bernstein_family`.

use hecke_mod_ell::hecke::HeckeAlgebra;
use hecke_mod_ell::scalar::Rat;

fn main() {
    let r = 3;
    let alg = HeckeAlgebra::new(r, Rat::from_int(3)).unwrap();

    for i in 1..=r {
        let (x, x_inv) = alg.bernstein_x(i);
        println!("X_{i}      = {x}");
        println!("X_{i}^(-1) = {x_inv}");
    }

    // The exchange identity S_i X_i S_i = q X_{i+1}.
    let (x1, _) = alg.bernstein_x(1);
    let (x2, _) = alg.bernstein_x(2);
    let s1 = alg.letter(1);
    let lhs = s1.mul(&x1).mul(&s1);
    let rhs = x2.scale(alg.q());
    println!("S_1 X_1 S_1 == q X_2: {}", lhs == rhs);

    // Pairwise commutation and the scaled central product.
    let (x3, _) = alg.bernstein_x(3);
    println!("X_1 X_3 == X_3 X_1: {}", x1.mul(&x3) == x3.mul(&x1));
    let prod = x1.mul(&x2).mul(&x3);
    println!("X_1 X_2 X_3 = {prod}");
    let pi = alg.pi();
    println!("product commutes with pi: {}", prod.mul(&pi) == pi.mul(&prod));
}
