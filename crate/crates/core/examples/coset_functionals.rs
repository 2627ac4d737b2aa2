//! Free-module structure over parabolic subalgebras: minimal coset
//! representatives, exact decomposition, and the functional rank
//! checks at the finite level.
//!
//! Run with `cargo run --example coset_functionals`.

use hecke_mod_ell::hecke::{decompose_over_subalgebra, HeckeAlgebra};
use hecke_mod_ell::heckemod::coset_functional_report;
use hecke_mod_ell::scalar::Rat;
use hecke_mod_ell::weyl::{min_coset_reps, Composition};

fn main() {
    let r = 3;
    let alpha = Composition::new(vec![2, 1]).unwrap();
    let reps = min_coset_reps(&alpha, r).unwrap();
    println!("minimal coset representatives for alpha = {alpha}:");
    for w in &reps.reps {
        println!("  {w}  (length {})", w.length());
    }
    println!("longest representative: {}", reps.longest);

    // Decompose an element over the subalgebra and recompose it.
    let alg = HeckeAlgebra::new(r, Rat::from_int(3)).unwrap();
    let t = alg.pi().mul(&alg.letter(1)).add(&alg.letter(2));
    let dec = decompose_over_subalgebra(&t, &alpha).unwrap();
    println!("\ndecomposition of Pi*S_1 + S_2 over alpha = {alpha}:");
    for (d, h) in &dec.by_rep {
        println!("  S_[{d}] * ({})", h.to_elem(&alg));
    }
    assert_eq!(dec.recompose(&alg), t);
    println!("recomposition is exact");

    // Functional ranks: both maps must have rank r!.
    for parts in [vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]] {
        let alpha = Composition::new(parts).unwrap();
        let rep = coset_functional_report(&alg, &alpha).unwrap();
        println!(
            "alpha = {alpha}: rank(unit) = {}/{}, rank(longest) = {}/{}, solvable = {}",
            rep.rank_unit, rep.expected, rep.rank_longest, rep.expected, rep.all_solvable
        );
    }
}
