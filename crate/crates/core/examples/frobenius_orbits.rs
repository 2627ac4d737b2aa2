//! Character orbit calculus: Frobenius orbits, regularity, reduction
//! mod ell, and the orbit-size factorization.
//!
//! Run with `cargo run --example frobenius_orbits`.

use hecke_mod_ell::charorbits::{
    delta_param, frobenius_orbit, is_regular, is_supercuspidal_param, lifts, orbit_reduction,
    reduce_mod_ell, CharCtx, CharIndex,
};
use num_bigint::BigUint;

fn main() {
    // Characters of the multiplicative group of the field with 256
    // elements over the field with 16: residues mod 255.
    let ctx = CharCtx::from_u64(16, 2);
    let ell = BigUint::from(17u64);
    let chi = CharIndex::from_u64(ctx.clone(), 15).unwrap();

    let orbit = frobenius_orbit(&chi);
    println!(
        "index 15 mod 255: orbit {:?}, size {}, order {}",
        orbit.orbit.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        orbit.size,
        orbit.char_order
    );
    println!("regular: {}", is_regular(&chi));

    let reduced = reduce_mod_ell(&chi, &ell).unwrap();
    println!(
        "reduction mod 17: index {} mod {}",
        reduced.k, reduced.ctx.modulus
    );

    let report = orbit_reduction(&chi, &ell).unwrap();
    println!(
        "orbit sizes: lifted {} = reduced {} * order * 17^{}",
        report.size_lifted,
        report.size_reduced,
        report.ell_exponent.unwrap_or(0)
    );
    println!(
        "stays a full-orbit parameter after reduction: {}",
        is_supercuspidal_param(&chi, &ell).unwrap()
    );
    println!("degree / reduced orbit = {}", delta_param(&chi, &ell).unwrap());

    // Lifts of the trivial reduced character: one per residue mod 17,
    // exactly one of order prime to 17.
    let all = lifts(&reduced, &ell, &ctx).unwrap();
    println!("\nthe trivial character mod 15 has {} lifts mod 255", all.len());
    for lift in all.iter().take(4) {
        println!("  lift {} of order {}", lift.k, lift.char_order());
    }
    println!("  ...");

    // A supercuspidal example: index 3 mod 15 at ell = 3.
    let ctx = CharCtx::from_u64(4, 2);
    let chi = CharIndex::from_u64(ctx, 3).unwrap();
    let ell3 = BigUint::from(3u64);
    println!(
        "\nindex 3 mod 15 at ell = 3: supercuspidal parameter = {}",
        is_supercuspidal_param(&chi, &ell3).unwrap()
    );
}
