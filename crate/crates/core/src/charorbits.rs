//! Multiplicative characters of `F_{Q^n}^*` as residues mod `Q^n - 1`,
//! their Frobenius orbits, and reduction mod ell.
//!
//! A character is never represented by field elements: everything in
//! sight depends only on the residue `k mod Q^n - 1`, with Frobenius
//! acting by multiplication by `Q`. Reduction mod ell is the projection
//! onto the prime-to-ell component of `Z/(Q^n - 1)`, i.e. the index
//! mod `M` where `Q^n - 1 = M * ell^v`.
//!
//! Only generator-independent data is exposed (orbit sets, sizes,
//! orders); no choice of a generator of `F_{Q^n}^*` is ever made.

use crate::arith::{self, ArithError};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("ell = {0} divides the base cardinality")]
    EllDividesBase(BigUint),
    #[error("character index {k} out of range for modulus {modulus}")]
    IndexOutOfRange { k: BigUint, modulus: BigUint },
    #[error("character is not regular (orbit size {size} < degree {degree})")]
    NotRegular { size: u64, degree: u64 },
    #[error("modulus mismatch: reduced modulus {reduced} times ell^v must equal {original}")]
    ModulusMismatch { reduced: BigUint, original: BigUint },
    #[error("internal consistency failure: {0}")]
    TheoremViolation(String),
}

/// Index set for characters of `F_{Q^n}^*`: the base cardinality `Q`, the
/// degree `n`, and the modulus. For a plain context the modulus is
/// `Q^n - 1`; a reduced context keeps `Q` and `n` but overrides the
/// modulus by its prime-to-ell part, so Frobenius still acts by `Q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharCtx {
    pub base_card: BigUint,
    pub degree: u64,
    pub modulus: BigUint,
}

impl CharCtx {
    /// Context of characters of `F_{Q^n}^*`, modulus `Q^n - 1`.
    pub fn new(base_card: BigUint, degree: u64) -> Self {
        assert!(base_card >= BigUint::from(2u32), "base cardinality >= 2");
        assert!(degree >= 1, "degree >= 1");
        let modulus = base_card.pow(degree as u32) - BigUint::one();
        CharCtx {
            base_card,
            degree,
            modulus,
        }
    }

    pub fn from_u64(base_card: u64, degree: u64) -> Self {
        Self::new(BigUint::from(base_card), degree)
    }

    /// Same base and degree with the modulus overridden (reduced context).
    pub fn with_modulus(&self, modulus: BigUint) -> Self {
        CharCtx {
            base_card: self.base_card.clone(),
            degree: self.degree,
            modulus,
        }
    }
}

/// A character encoded as a residue `k` in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharIndex {
    pub ctx: CharCtx,
    pub k: BigUint,
}

impl CharIndex {
    pub fn new(ctx: CharCtx, k: BigUint) -> Result<Self, CharError> {
        if k >= ctx.modulus {
            return Err(CharError::IndexOutOfRange {
                k,
                modulus: ctx.modulus.clone(),
            });
        }
        Ok(CharIndex { ctx, k })
    }

    pub fn from_u64(ctx: CharCtx, k: u64) -> Result<Self, CharError> {
        Self::new(ctx, BigUint::from(k))
    }

    /// Order of the character: `modulus / gcd(k, modulus)`.
    pub fn char_order(&self) -> BigUint {
        if self.ctx.modulus.is_one() {
            return BigUint::one();
        }
        &self.ctx.modulus / self.k.gcd(&self.ctx.modulus)
    }
}

/// Frobenius orbit of a character index: the cycle of `k` under
/// multiplication by the base cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Sorted list of distinct residues in the orbit.
    pub orbit: Vec<BigUint>,
    pub size: u64,
    pub char_order: BigUint,
}

/// Orbit of `k` under multiplication by `multiplier` mod `modulus`.
/// Used with `multiplier = Q` (Frobenius of the base field) and with
/// powers of `Q` (Frobenius of intermediate fields).
pub fn orbit_under(k: &BigUint, multiplier: &BigUint, modulus: &BigUint) -> Vec<BigUint> {
    if modulus.is_one() {
        return vec![BigUint::zero()];
    }
    let start = k % modulus;
    let mut orbit = vec![start.clone()];
    let mut cur = &start * multiplier % modulus;
    while cur != start {
        orbit.push(cur.clone());
        cur = cur * multiplier % modulus;
    }
    orbit.sort();
    orbit
}

/// Orbit size only; avoids storing the orbit.
pub fn orbit_size_under(k: &BigUint, multiplier: &BigUint, modulus: &BigUint) -> u64 {
    if modulus.is_one() {
        return 1;
    }
    let start = k % modulus;
    let mut size = 1u64;
    let mut cur = &start * multiplier % modulus;
    while cur != start {
        size += 1;
        cur = cur * multiplier % modulus;
    }
    size
}

/// Frobenius orbit of `chi` under multiplication by the base cardinality.
pub fn frobenius_orbit(chi: &CharIndex) -> OrbitReport {
    let orbit = orbit_under(&chi.k, &chi.ctx.base_card, &chi.ctx.modulus);
    OrbitReport {
        size: orbit.len() as u64,
        orbit,
        char_order: chi.char_order(),
    }
}

/// A character is regular when its Frobenius orbit has full size `n`;
/// these are the parameters of cuspidal representations over the base.
pub fn is_regular(chi: &CharIndex) -> bool {
    frobenius_orbit(chi).size == chi.ctx.degree
}

/// Projection of the character to the prime-to-ell component: the index
/// `k mod M` in the context whose modulus is `M`, where
/// `modulus = M * ell^v`. Rejects `ell | Q`.
pub fn reduce_mod_ell(chi: &CharIndex, ell: &BigUint) -> Result<CharIndex, CharError> {
    if (&chi.ctx.base_card % ell).is_zero() {
        return Err(CharError::EllDividesBase(ell.clone()));
    }
    let split = arith::ell_adic_split(&chi.ctx.modulus, ell)?;
    let m = split.prime_to_ell;
    let k_red = if m.is_one() {
        BigUint::zero()
    } else {
        &chi.k % &m
    };
    CharIndex::new(chi.ctx.with_modulus(m), k_red)
}

/// Which case of the orbit-size comparison applies after reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionCase {
    /// ell does not divide the character order: sizes agree exactly.
    OrderPrimeToEll,
    /// ell divides the character order: the lifted size factors as
    /// `reduced * order_of(Q^reduced in F_ell) * ell^u`.
    OrderDivisibleByEll,
}

/// Comparison of the Frobenius orbit sizes of a character and of its
/// reduction mod ell, together with the witnessed ell-exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReductionReport {
    pub size_lifted: u64,
    pub size_reduced: u64,
    pub case: ReductionCase,
    /// Witness `u >= 0` in the divisible case; `None` otherwise.
    pub ell_exponent: Option<u32>,
}

/// Verifies the orbit-size factorization under reduction mod ell:
/// either ell is prime to the character order and the sizes agree, or
/// `size_lifted = size_reduced * o_ell(Q^size_reduced) * ell^u` for a
/// witnessed `u >= 0`. A violation is an implementation bug and is
/// reported as a hard error.
pub fn orbit_reduction(chi: &CharIndex, ell: &BigUint) -> Result<OrbitReductionReport, CharError> {
    let f_tilde = frobenius_orbit(chi).size;
    let reduced = reduce_mod_ell(chi, ell)?;
    let f_red = frobenius_orbit(&reduced).size;
    let order = chi.char_order();

    if !(order % ell).is_zero() {
        if f_tilde != f_red {
            return Err(CharError::TheoremViolation(format!(
                "order prime to ell but orbit sizes differ: {f_tilde} vs {f_red}"
            )));
        }
        return Ok(OrbitReductionReport {
            size_lifted: f_tilde,
            size_reduced: f_red,
            case: ReductionCase::OrderPrimeToEll,
            ell_exponent: None,
        });
    }

    let q_pow = chi.ctx.base_card.modpow(&BigUint::from(f_red), ell);
    let o = arith::mult_order_mod(&q_pow, ell)?;
    let base = BigUint::from(f_red) * o;
    let lifted = BigUint::from(f_tilde);
    if (&lifted % &base).is_zero() {
        let mut rest = lifted / base;
        let mut u = 0u32;
        while (&rest % ell).is_zero() {
            rest /= ell;
            u += 1;
        }
        if rest.is_one() {
            return Ok(OrbitReductionReport {
                size_lifted: f_tilde,
                size_reduced: f_red,
                case: ReductionCase::OrderDivisibleByEll,
                ell_exponent: Some(u),
            });
        }
    }
    Err(CharError::TheoremViolation(format!(
        "no exponent u with {f_tilde} = {f_red} * o * ell^u at ell = {ell}"
    )))
}

/// Whether a regular character stays a full-orbit (supercuspidal)
/// parameter after reduction mod ell. Rejects non-regular input.
pub fn is_supercuspidal_param(chi: &CharIndex, ell: &BigUint) -> Result<bool, CharError> {
    let orbit = frobenius_orbit(chi);
    if orbit.size != chi.ctx.degree {
        return Err(CharError::NotRegular {
            size: orbit.size,
            degree: chi.ctx.degree,
        });
    }
    let reduced = reduce_mod_ell(chi, ell)?;
    Ok(frobenius_orbit(&reduced).size == chi.ctx.degree)
}

/// The quotient `degree / (reduced orbit size)` for a regular character.
/// It is 1 exactly in the supercuspidal case, and otherwise of the form
/// `o_ell(Q^reduced_size) * ell^u`; that shape is asserted.
pub fn delta_param(chi: &CharIndex, ell: &BigUint) -> Result<u64, CharError> {
    let orbit = frobenius_orbit(chi);
    if orbit.size != chi.ctx.degree {
        return Err(CharError::NotRegular {
            size: orbit.size,
            degree: chi.ctx.degree,
        });
    }
    let reduced = reduce_mod_ell(chi, ell)?;
    let f_prime = frobenius_orbit(&reduced).size;
    if chi.ctx.degree % f_prime != 0 {
        return Err(CharError::TheoremViolation(format!(
            "reduced orbit size {f_prime} does not divide degree {}",
            chi.ctx.degree
        )));
    }
    let delta = chi.ctx.degree / f_prime;
    if delta != 1 {
        let q_pow = chi.ctx.base_card.modpow(&BigUint::from(f_prime), ell);
        let o = arith::mult_order_mod(&q_pow, ell)?;
        let mut rest = BigUint::from(delta);
        if (&rest % &o).is_zero() {
            rest /= &o;
            while (&rest % ell).is_zero() {
                rest /= ell;
            }
        }
        if !rest.is_one() {
            return Err(CharError::TheoremViolation(format!(
                "delta = {delta} is neither 1 nor o*ell^u at ell = {ell}"
            )));
        }
    }
    Ok(delta)
}

/// All indices in the original context whose reduction equals `reduced`.
/// There are exactly `ell^v` of them, and exactly one has order prime
/// to ell.
pub fn lifts(
    reduced: &CharIndex,
    ell: &BigUint,
    original_ctx: &CharCtx,
) -> Result<Vec<CharIndex>, CharError> {
    let split = arith::ell_adic_split(&original_ctx.modulus, ell)?;
    if split.prime_to_ell != reduced.ctx.modulus {
        return Err(CharError::ModulusMismatch {
            reduced: reduced.ctx.modulus.clone(),
            original: original_ctx.modulus.clone(),
        });
    }
    let m = &split.prime_to_ell;
    let count = ell.pow(split.exponent);
    let mut out = Vec::new();
    let mut t = BigUint::zero();
    while t < count {
        let k = (&reduced.k + m * &t) % &original_ctx.modulus;
        out.push(CharIndex::new(original_ctx.clone(), k)?);
        t += 1u32;
    }
    out.sort();
    Ok(out)
}

/// The unique lift whose order is prime to ell (its `Z/ell^v` component
/// is zero).
pub fn prime_to_ell_lift(
    reduced: &CharIndex,
    ell: &BigUint,
    original_ctx: &CharCtx,
) -> Result<CharIndex, CharError> {
    let all = lifts(reduced, ell, original_ctx)?;
    let mut found = Vec::new();
    for cand in all {
        if !(cand.char_order() % ell).is_zero() {
            found.push(cand);
        }
    }
    if found.len() != 1 {
        return Err(CharError::TheoremViolation(format!(
            "expected exactly one prime-to-ell lift, found {}",
            found.len()
        )));
    }
    Ok(found.into_iter().next().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn chi(q: u64, n: u64, k: u64) -> CharIndex {
        CharIndex::from_u64(CharCtx::from_u64(q, n), k).unwrap()
    }

    #[test]
    fn orbit_examples() {
        // 15 * 16 = 240, 240 * 16 = 3840 = 15 mod 255.
        let r = frobenius_orbit(&chi(16, 2, 15));
        assert_eq!(r.orbit, vec![b(15), b(240)]);
        assert_eq!(r.size, 2);
        assert_eq!(r.char_order, b(17));

        let r = frobenius_orbit(&chi(2, 2, 1));
        assert_eq!(r.orbit, vec![b(1), b(2)]);

        let r = frobenius_orbit(&chi(7, 3, 0));
        assert_eq!(r.orbit, vec![b(0)]);
        assert_eq!(r.size, 1);
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&chi(16, 2, 15)));
        assert!(!is_regular(&chi(4, 2, 0)));
        // 5 * 4 = 20 = 5 mod 15: fixed point.
        assert!(!is_regular(&chi(4, 2, 5)));
    }

    #[test]
    fn reduction_examples() {
        // 255 = 15 * 17, index 15 projects to 0.
        let red = reduce_mod_ell(&chi(16, 2, 15), &b(17)).unwrap();
        assert_eq!(red.k, b(0));
        assert_eq!(red.ctx.modulus, b(15));

        // 63 = 7 * 9, index 9 projects to 2 mod 7.
        let red = reduce_mod_ell(&chi(8, 2, 9), &b(3)).unwrap();
        assert_eq!(red.k, b(2));
        assert_eq!(red.ctx.modulus, b(7));

        let red = reduce_mod_ell(&chi(8, 2, 0), &b(3)).unwrap();
        assert_eq!(red.k, b(0));

        assert_eq!(
            reduce_mod_ell(&chi(4, 2, 1), &b(2)).unwrap_err(),
            CharError::EllDividesBase(b(2))
        );
    }

    #[test]
    fn orbit_reduction_examples() {
        // Full enumeration mod 3: orbit of 1 is {1, 2}; reduced modulus 1.
        let r = orbit_reduction(&chi(2, 2, 1), &b(3)).unwrap();
        assert_eq!((r.size_lifted, r.size_reduced), (2, 1));
        assert_eq!(r.case, ReductionCase::OrderDivisibleByEll);
        assert_eq!(r.ell_exponent, Some(0));

        // 16 = -1 mod 17, so o_17(16) = 2.
        let r = orbit_reduction(&chi(16, 2, 15), &b(17)).unwrap();
        assert_eq!((r.size_lifted, r.size_reduced), (2, 1));
        assert_eq!(r.ell_exponent, Some(0));

        // 17 does not divide 15: injective on orders.
        let r = orbit_reduction(&chi(4, 2, 1), &b(17)).unwrap();
        assert_eq!(r.case, ReductionCase::OrderPrimeToEll);
        assert_eq!((r.size_lifted, r.size_reduced), (2, 2));
    }

    #[test]
    fn supercuspidal_parameters() {
        // Reduced index 3 mod 5 has orbit {3, 2}: full size.
        assert!(is_supercuspidal_param(&chi(4, 2, 3), &b(3)).unwrap());
        assert!(matches!(
            is_supercuspidal_param(&chi(4, 2, 5), &b(3)),
            Err(CharError::NotRegular { .. })
        ));
        assert!(!is_supercuspidal_param(&chi(16, 2, 15), &b(17)).unwrap());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_param(&chi(16, 2, 15), &b(17)).unwrap(), 2);
        assert_eq!(delta_param(&chi(4, 2, 3), &b(3)).unwrap(), 1);
        assert_eq!(delta_param(&chi(2, 2, 1), &b(5)).unwrap(), 1);
    }

    #[test]
    fn lift_enumeration() {
        // Lifts of the trivial character mod 15 into mod 255: multiples of 15.
        let red = CharIndex::from_u64(
            CharCtx::from_u64(16, 2).with_modulus(b(15)),
            0,
        )
        .unwrap();
        let ctx = CharCtx::from_u64(16, 2);
        let all = lifts(&red, &b(17), &ctx).unwrap();
        assert_eq!(all.len(), 17);
        assert!(all.iter().all(|c| (&c.k % b(15)).is_zero()));

        // v = 0: the lift is the character itself.
        let red = chi(4, 2, 7);
        let all = lifts(&red, &b(17), &CharCtx::from_u64(4, 2)).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].k, b(7));

        // CRT enumeration mod 63: lifts of 2 mod 7 are {2,9,...,58}; the
        // unique one of prime-to-3 order is k = 9 (order 7).
        let red = CharIndex::from_u64(
            CharCtx::from_u64(8, 2).with_modulus(b(7)),
            2,
        )
        .unwrap();
        let ctx = CharCtx::from_u64(8, 2);
        let all = lifts(&red, &b(3), &ctx).unwrap();
        assert_eq!(all.len(), 9);
        let special = prime_to_ell_lift(&red, &b(3), &ctx).unwrap();
        assert_eq!(special.k, b(9));
        assert_eq!(special.char_order(), b(7));
    }

    #[test]
    fn supercuspidal_iff_delta_one() {
        // The two characterizations agree on every regular character.
        for (q, n) in [(2u64, 2u64), (4, 2), (8, 2), (2, 3)] {
            for ell in [3u64, 5, 17] {
                if q % ell == 0 {
                    continue;
                }
                let ctx = CharCtx::from_u64(q, n);
                let modulus = ctx.modulus.clone();
                let mut k = BigUint::zero();
                while k < modulus {
                    let c = CharIndex::new(ctx.clone(), k.clone()).unwrap();
                    if is_regular(&c) {
                        let sc = is_supercuspidal_param(&c, &b(ell)).unwrap();
                        let delta = delta_param(&c, &b(ell)).unwrap();
                        assert_eq!(sc, delta == 1, "q={q} n={n} k={k} ell={ell}");
                    }
                    k += 1u32;
                }
            }
        }
    }

    #[test]
    fn reduction_surjective_onto_reduced_indices() {
        // Every index mod M arises as a reduction.
        let ctx = CharCtx::from_u64(8, 2); // modulus 63 = 7 * 9
        let mut seen = std::collections::BTreeSet::new();
        for k in 0..63u64 {
            let c = CharIndex::from_u64(ctx.clone(), k).unwrap();
            let red = reduce_mod_ell(&c, &b(3)).unwrap();
            seen.insert(red.k.to_u64_digits().first().copied().unwrap_or(0));
        }
        assert_eq!(seen.len(), 7);
    }

    #[test]
    fn exhaustive_orbit_reduction_small() {
        for (q, n) in [(2u64, 2u64), (4, 2), (3, 2)] {
            for ell in [5u64, 17] {
                if q % ell == 0 {
                    continue;
                }
                let ctx = CharCtx::from_u64(q, n);
                let modulus = ctx.modulus.clone();
                let mut k = BigUint::zero();
                while k < modulus {
                    let c = CharIndex::new(ctx.clone(), k.clone()).unwrap();
                    orbit_reduction(&c, &b(ell)).unwrap();
                    k += 1u32;
                }
            }
        }
    }

    proptest! {
        // Orbit size equals the multiplicative order of Q modulo
        // modulus/gcd(k, modulus).
        #[test]
        fn orbit_size_is_mult_order(q_idx in 0usize..3, k in 0u64..255) {
            let ctxs = [(16u64, 2u64), (4, 3), (2, 4)];
            let (q, n) = ctxs[q_idx];
            let ctx = CharCtx::from_u64(q, n);
            let k = BigUint::from(k) % &ctx.modulus;
            let c = CharIndex::new(ctx.clone(), k).unwrap();
            let expected = arith::mult_order_mod(&ctx.base_card, &c.char_order()).unwrap();
            prop_assert_eq!(BigUint::from(frobenius_orbit(&c).size), expected);
        }

        // With v = 0 the reduction is the identity on indices.
        #[test]
        fn reduce_identity_when_v_zero(k in 0u64..15) {
            let ctx = CharCtx::from_u64(4, 2); // modulus 15, ell = 17 has v = 0
            let c = CharIndex::from_u64(ctx, k).unwrap();
            let red = reduce_mod_ell(&c, &BigUint::from(17u32)).unwrap();
            prop_assert_eq!(red.k, c.k);
            prop_assert_eq!(red.ctx.modulus, c.ctx.modulus);
        }
    }
}
