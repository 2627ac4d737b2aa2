//! Modules induced from characters of the Laurent subalgebra: the
//! rank-two reducibility locus, swept exhaustively over a prime field,
//! and submodule spinning.
//!
//! Run with `cargo run --example induced_modules`.

use hecke_mod_ell::hecke::HeckeAlgebra;
use hecke_mod_ell::heckemod::{
    find_simple_submodules, induce_from_laurent_char, is_reducible_rank2, LaurentChar,
};
use hecke_mod_ell::scalar::{Field, Fp, Rat};

fn main() {
    // Over the rationals at q = 3 the module from (1, z) is reducible
    // exactly at z = 3 and z = 1/3.
    let alg = HeckeAlgebra::new(2, Rat::from_int(3)).unwrap();
    for z in [Rat::from_int(3), Rat::from_int(2), Rat::from_frac(1, 3)] {
        let verdict = is_reducible_rank2(&alg, &z).unwrap();
        println!("q = 3, z = {z}: reducible = {verdict}");
    }

    // Exhaustive locus over F_7 for every nonzero q.
    println!("\nreducibility locus over F_7:");
    for qv in 1..7 {
        let q = Fp::new(7, qv);
        let alg = HeckeAlgebra::new(2, q).unwrap();
        let mut locus = Vec::new();
        for zv in 1..7 {
            let z = Fp::new(7, zv);
            if is_reducible_rank2(&alg, &z).unwrap() {
                locus.push(zv);
            }
        }
        println!("  q = {qv}: z in {locus:?} (q^-1 = {})", q.inv().unwrap());
    }

    // Submodule spinning on the reducible rank-two module.
    let alg = HeckeAlgebra::new(2, Rat::from_int(3)).unwrap();
    let chi = LaurentChar::new(vec![Rat::from_int(1), Rat::from_int(3)]).unwrap();
    let module = induce_from_laurent_char(&alg, &chi).unwrap();
    let subs = find_simple_submodules(&module).unwrap();
    println!(
        "\nmodule from (1, q): dimension {}, minimal submodules of ranks {:?}",
        module.dim,
        subs.iter().map(|s| s.rows).collect::<Vec<_>>()
    );

    // The six-dimensional module at rank three.
    let alg3 = HeckeAlgebra::new(3, Rat::from_int(3)).unwrap();
    let chi = LaurentChar::new(vec![Rat::from_int(1); 3]).unwrap();
    let module = induce_from_laurent_char(&alg3, &chi).unwrap();
    println!("module from (1,1,1) at rank 3: dimension {}", module.dim);
}
