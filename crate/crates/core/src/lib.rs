//! Exact-arithmetic affine Hecke algebras of type A and the mod-ell
//! character-orbit calculus attached to cuspidal parameters of inner forms
//! of general linear groups.
//!
//! The crate has three layers:
//!
//! * combinatorics of the extended affine Weyl group `Z^r ⋊ S_r`
//!   ([`weyl`]) and the affine Hecke algebra `H(r, q)` built on it
//!   ([`hecke`]), over exact scalar fields ([`scalar`]);
//! * finite-dimensional right modules over `H(r, q)`: induction from
//!   characters of the Laurent subalgebra, reducibility tests,
//!   submodule spinning, and free-module rank checks ([`heckemod`]);
//! * the finite-field side: multiplicative character orbits under
//!   Frobenius, reduction mod ell ([`charorbits`]), and the integer
//!   invariants attached to a cuspidal parameter — orbit sizes,
//!   self-twist counts, reduction length and liftability ([`cuspidal`]).
//!
//! Everything is computed in exact arithmetic: arbitrary-precision
//! integers for residues and moduli, exact rationals or prime fields for
//! Hecke coefficients. No floating point anywhere.
//!
//! The `examples/` directory carries one runnable example per major
//! capability; `src/main.rs` exposes the same functionality as a small
//! JSON-reporting command line tool.

pub mod arith;
pub mod charorbits;
pub mod cli;
pub mod cuspidal;
pub mod hecke;
pub mod heckemod;
pub mod report;
pub mod scalar;
pub mod weyl;

pub use arith::{ell_adic_split, mult_order, mult_order_mod, EllAdicSplit};
pub use charorbits::{CharCtx, CharIndex, OrbitReport};


pub use scalar::{Field, Fp, Rat};
pub use heckemod::{FinModule, LaurentChar};
pub use weyl::{Composition, ExtAffineWeylElem, ReducedWord};
