//! Extended affine Weyl group basics: generators, lengths, reduced
//! words, and the breadth-first oracle that validates the closed-form
//! length.
//!
//! Run with `cargo run --example weyl_words`.

use hecke_mod_ell::weyl::{generators, reduced_word, ExtAffineWeylElem, LengthOracle};

fn main() {
    let r = 3;
    let gens = generators(r);

    println!("rank {r} generators:");
    for (i, s) in gens.simple.iter().enumerate() {
        println!("  s_{} = {s}  (length {})", i + 1, s.length());
    }
    let s0 = gens.affine.clone().unwrap();
    println!("  s_0 = {s0}  (length {})", s0.length());
    println!("  pi  = {}  (length {})", gens.pi, gens.pi.length());

    // The unit conjugates the letters cyclically and its r-th power is
    // the central translation.
    let mut p = ExtAffineWeylElem::identity(r);
    for _ in 0..r {
        p = p.mul(&gens.pi);
    }
    println!("pi^{r} = {p}");

    // A basic translation and its canonical word.
    let t = ExtAffineWeylElem::translation(vec![1, 0, 0]);
    let word = reduced_word(&t);
    println!("t_(1,0,0) = {t}, reduced word {word}, length {}", t.length());

    // Compare the closed-form length against breadth-first search on a
    // window of elements.
    let oracle = LengthOracle::new(r, 10);
    let mut checked = 0;
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            for c in -1..=1i64 {
                let w = ExtAffineWeylElem {
                    perm: vec![1, 2, 0],
                    trans: vec![a, b, c],
                };
                if let Some(bfs) = oracle.length(&w) {
                    assert_eq!(bfs, w.length(), "mismatch at {w}");
                    checked += 1;
                }
            }
        }
    }
    println!("closed-form length agrees with BFS on {checked} sampled elements");
}
