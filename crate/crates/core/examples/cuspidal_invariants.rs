//! The full invariant pipeline for cuspidal parameters: orbit sizes on
//! both residue fields, reduction length, banality, reducibility
//! points, and the lift search, on the two built-in worked data.
//!
//! Run with `cargo run --example cuspidal_invariants`.

use hecke_mod_ell::cuspidal::{
    invariants, is_banal, liftability_search, reducibility_points, reduction_length,
    reduction_shape, twist_orbit_identity, Characteristic, TypeDatum,
};
use num_bigint::BigUint;

fn main() {
    // Level-zero parameter of the quaternion division algebra at q = 8:
    // characters mod 63, reduced mod 3.
    println!("== level-zero quaternion datum (q = 8, ell = 3) ==");
    let datum = TypeDatum::new(1, 2, 8, 1, 1, 1, 2, BigUint::from(1u32)).unwrap();
    let lifted = invariants(&datum, &Characteristic::Zero).unwrap();
    println!(
        "lifted side: orbit over base {}, orbit over division field {}, b = {}, s = {}, f = {}, n = {}, q^f = {}",
        lifted.orbit_base,
        lifted.orbit_division,
        lifted.galois_orbit,
        lifted.stabilizer,
        lifted.residue_power,
        lifted.self_twists,
        lifted.q_power
    );
    let reduced = datum.reduce(3).unwrap();
    let red = invariants(&reduced, &Characteristic::Ell(3)).unwrap();
    println!(
        "reduced side: index {} mod {}, b = {}, s = {}, n = {}",
        reduced.chi.k, reduced.chi.ctx.modulus, red.galois_orbit, red.stabilizer, red.self_twists
    );
    let len = reduction_length(&datum, 3).unwrap();
    let shape = reduction_shape(&datum, 3).unwrap();
    println!(
        "reduction length a = {} (twist order {}), shape: twists by exponents {:?}",
        len.length, len.twist_order, shape.twist_exponents
    );
    println!("banal: {}", is_banal(1, 2, 8, 3).unwrap());
    println!(
        "reducibility point q^f = {} (and its inverse)",
        reducibility_points(&datum).unwrap()
    );
    let orbit = twist_orbit_identity(&datum, 3).unwrap();
    println!(
        "twist orbit: card {} computed two ways (base order {})",
        orbit.orbit_card, orbit.base_order
    );

    // Degree-two parameter over the quaternions at q = 4, ell = 17: the
    // order-17 character reduces to the trivial one and admits no lift
    // with matching orbit data.
    println!("\n== degree-two quaternion datum (q = 4, ell = 17) ==");
    let datum = TypeDatum::new(2, 2, 4, 1, 1, 2, 2, BigUint::from(15u32)).unwrap();
    let reduced = datum.reduce(17).unwrap();
    println!(
        "character 15 mod 255 reduces to {} mod {}",
        reduced.chi.k, reduced.chi.ctx.modulus
    );
    let len = reduction_length(&datum, 17).unwrap();
    println!("reduction length a = {}", len.length);
    match liftability_search(&reduced, 17).unwrap() {
        Some(lift) => println!("lift found: {}", lift.k),
        None => println!("no lift reproduces the reduced orbit data"),
    }

    // A supercuspidal reduced parameter lifts: split degree-two datum.
    println!("\n== split degree-two datum (q = 4, ell = 3) ==");
    let datum = TypeDatum::new(2, 1, 4, 1, 1, 2, 1, BigUint::from(3u32)).unwrap();
    let reduced = datum.reduce(3).unwrap();
    match liftability_search(&reduced, 3).unwrap() {
        Some(lift) => println!(
            "unique prime-to-3-order lift: index {} of order {}",
            lift.k,
            lift.char_order()
        ),
        None => println!("no lift"),
    }
}
