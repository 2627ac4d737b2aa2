//! Integer invariants of a cuspidal parameter: Galois orbit sizes of
//! its finite-field character over the two relevant residue fields, the
//! self-twist count, reduction length mod ell, banality, reducibility
//! points, and the lift search.
//!
//! A [`TypeDatum`] carries the numeric parameters `(m, d, q, e, f, m',
//! d')` together with a character index over the residue field of
//! cardinality `q^{f d'}` in degree `m'`. Everything downstream is a
//! function of these integers and of orbit sizes computed in
//! [`crate::charorbits`].

use crate::arith;
use crate::charorbits::{self, CharCtx, CharIndex};
use crate::scalar::Field;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CuspError {
    #[error("parameters must all be at least 1")]
    NonPositive,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("e*f = {ef} does not divide m*d = {md}")]
    RamificationMismatch { ef: u64, md: u64 },
    #[error("m'*d' = {got} but m*d/(e*f) = {expected}")]
    DegreeMismatch { got: u64, expected: u64 },
    #[error("character context does not match the datum parameters")]
    ContextMismatch,
    #[error("ell = {0} divides q")]
    EllDividesQ(u64),
    #[error("character is not regular over its context")]
    NotRegular,
    #[error("internal consistency failure: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Char(#[from] charorbits::CharError),
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
}

/// Coefficient characteristic: zero, or a prime different from the
/// residue characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Characteristic {
    Zero,
    Ell(u64),
}

/// The numeric shadow of a maximal simple type: sizes and degrees plus
/// the character parameter.
///
/// * `m`: size of the group over the division algebra;
/// * `d`: reduced degree of the division algebra over the base field;
/// * `q`: residue cardinality of the base field (a prime power);
/// * `e`, `f`: ramification index and residue degree of the parameter
///   field extension, with `e*f` dividing `m*d`;
/// * `m_prime`, `d_prime`: the complementary size and reduced degree,
///   with `m' d' = m d / (e f)`;
/// * `chi`: character index over the field of cardinality `q^{f d'}` in
///   degree `m'` (possibly with a reduced modulus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDatum {
    pub m: u64,
    pub d: u64,
    pub q: u64,
    pub e: u64,
    pub f: u64,
    pub m_prime: u64,
    pub d_prime: u64,
    pub chi: CharIndex,
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true // n itself is prime
}

impl TypeDatum {
    /// Validates the arithmetic constraints and builds the plain
    /// (unreduced) character context.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        m: u64,
        d: u64,
        q: u64,
        e: u64,
        f: u64,
        m_prime: u64,
        d_prime: u64,
        chi_index: BigUint,
    ) -> Result<Self, CuspError> {
        let ctx = Self::context(q, f, m_prime, d_prime)?;
        Self::check_params(m, d, q, e, f, m_prime, d_prime)?;
        let chi = CharIndex::new(ctx, chi_index)?;
        Ok(TypeDatum {
            m,
            d,
            q,
            e,
            f,
            m_prime,
            d_prime,
            chi,
        })
    }

    fn check_params(
        m: u64,
        d: u64,
        q: u64,
        e: u64,
        f: u64,
        m_prime: u64,
        d_prime: u64,
    ) -> Result<(), CuspError> {
        if [m, d, e, f, m_prime, d_prime].iter().any(|&x| x == 0) {
            return Err(CuspError::NonPositive);
        }
        if !is_prime_power(q) {
            return Err(CuspError::NotPrimePower(q));
        }
        let md = m * d;
        let ef = e * f;
        if md % ef != 0 {
            return Err(CuspError::RamificationMismatch { ef, md });
        }
        if m_prime * d_prime != md / ef {
            return Err(CuspError::DegreeMismatch {
                got: m_prime * d_prime,
                expected: md / ef,
            });
        }
        Ok(())
    }

    /// Context of the datum's characters: base cardinality `q^{f d'}`,
    /// degree `m'`.
    pub fn context(q: u64, f: u64, m_prime: u64, d_prime: u64) -> Result<CharCtx, CuspError> {
        if q < 2 {
            return Err(CuspError::NotPrimePower(q));
        }
        let base = BigUint::from(q).pow((f * d_prime) as u32);
        Ok(CharCtx::new(base, m_prime))
    }

    /// Same parameters with the character replaced by its reduction mod
    /// ell (context modulus overridden by its prime-to-ell part).
    pub fn reduce(&self, ell: u64) -> Result<TypeDatum, CuspError> {
        if self.q % ell == 0 {
            return Err(CuspError::EllDividesQ(ell));
        }
        let reduced = charorbits::reduce_mod_ell(&self.chi, &BigUint::from(ell))?;
        let mut out = self.clone();
        out.chi = reduced;
        Ok(out)
    }

    /// Whether the character has a full Frobenius orbit over the
    /// division-algebra residue field (orbit size `m'`).
    pub fn chi_is_regular(&self) -> bool {
        charorbits::frobenius_orbit(&self.chi).size == self.m_prime
    }
}

/// The integer invariants computed from a datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspInvariants {
    /// Orbit size of the character over the base-parameter residue
    /// field (Frobenius acts by `q^f`).
    pub orbit_base: u64,
    /// Orbit size over the division-algebra residue field (Frobenius
    /// acts by `q^{f d'}`).
    pub orbit_division: u64,
    /// `b`: orbit size under the relative Galois group, the ratio of
    /// the two orbit sizes.
    pub galois_orbit: u64,
    /// `s = d' / b`: order of the stabilizer.
    pub stabilizer: u64,
    /// `f = e m' d'`: the residue-degree invariant.
    pub residue_power: u64,
    /// Valuation of the reduced norm of the uniformizing element:
    /// `residue_power / stabilizer`.
    pub norm_valuation: u64,
    /// `n`: number of unramified self-twists, the prime-to-ell part of
    /// the norm valuation (all of it in characteristic zero).
    pub self_twists: u64,
    /// `u` in `residue_power = self_twists * stabilizer * ell^u`.
    pub ell_exponent: u32,
    /// `q^{residue_power}` as an exact integer.
    pub q_power: BigUint,
}

/// Computes the invariants of a datum in the given coefficient
/// characteristic. The character is used exactly as stored: pass a
/// reduced datum to get the reduced-side invariants.
pub fn invariants(datum: &TypeDatum, chr: &Characteristic) -> Result<CuspInvariants, CuspError> {
    if let Characteristic::Ell(ell) = chr {
        if datum.q % ell == 0 {
            return Err(CuspError::EllDividesQ(*ell));
        }
    }
    let modulus = &datum.chi.ctx.modulus;
    let q_f = BigUint::from(datum.q).pow(datum.f as u32);
    let q_fd = BigUint::from(datum.q).pow((datum.f * datum.d_prime) as u32);
    if datum.chi.ctx.base_card != q_fd {
        return Err(CuspError::ContextMismatch);
    }
    let orbit_base = charorbits::orbit_size_under(&datum.chi.k, &q_f, modulus);
    let orbit_division = charorbits::orbit_size_under(&datum.chi.k, &q_fd, modulus);
    if orbit_base % orbit_division != 0 {
        return Err(CuspError::TheoremViolation(format!(
            "orbit over the division field ({orbit_division}) does not divide orbit over the base ({orbit_base})"
        )));
    }
    let galois_orbit = orbit_base / orbit_division;
    if datum.d_prime % galois_orbit != 0 {
        return Err(CuspError::TheoremViolation(format!(
            "galois orbit {galois_orbit} does not divide d' = {}",
            datum.d_prime
        )));
    }
    let stabilizer = datum.d_prime / galois_orbit;
    let residue_power = datum.e * datum.m_prime * datum.d_prime;
    if residue_power % stabilizer != 0 {
        return Err(CuspError::TheoremViolation(
            "stabilizer does not divide the residue power".into(),
        ));
    }
    let norm_valuation = residue_power / stabilizer;
    let (self_twists, ell_exponent) = match chr {
        Characteristic::Zero => (norm_valuation, 0u32),
        Characteristic::Ell(ell) => {
            let split = arith::ell_adic_split(&BigUint::from(norm_valuation), &BigUint::from(*ell))?;
            (
                split.prime_to_ell.to_u64().expect("desk scale"),
                split.exponent,
            )
        }
    };
    let q_power = BigUint::from(datum.q).pow(residue_power as u32);
    Ok(CuspInvariants {
        orbit_base,
        orbit_division,
        galois_orbit,
        stabilizer,
        residue_power,
        norm_valuation,
        self_twists,
        ell_exponent,
        q_power,
    })
}

/// The number of irreducible pieces after reduction mod ell, with the
/// shape certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLength {
    /// `a`: ratio of the two Galois orbit sizes.
    pub length: u64,
    /// Largest divisor of `a` prime to ell.
    pub prime_to_ell_part: u64,
    /// Multiplicative order of `q^{self_twists}` mod ell on the reduced
    /// side (the order of the twist character).
    pub twist_order: u64,
    /// Witness `u` with `a = twist_order * ell^u` when `a > 1`.
    pub ell_exponent: Option<u32>,
}

/// `a = b(lifted) / b(reduced)`, together with the certified shape:
/// `a` is 1 or `o_ell(q^n) * ell^u` with `n` the reduced-side self-twist
/// count. A shape failure is an implementation bug.
pub fn reduction_length(datum: &TypeDatum, ell: u64) -> Result<ReductionLength, CuspError> {
    if !datum.chi_is_regular() {
        return Err(CuspError::NotRegular);
    }
    let lifted = invariants(datum, &Characteristic::Zero)?;
    let reduced_datum = datum.reduce(ell)?;
    let reduced = invariants(&reduced_datum, &Characteristic::Ell(ell))?;
    if lifted.galois_orbit % reduced.galois_orbit != 0 {
        return Err(CuspError::TheoremViolation(
            "reduced galois orbit does not divide the lifted one".into(),
        ));
    }
    let a = lifted.galois_orbit / reduced.galois_orbit;
    let ell_big = BigUint::from(ell);
    let split = arith::ell_adic_split(&BigUint::from(a), &ell_big)?;
    let prime_to_ell_part = split.prime_to_ell.to_u64().expect("desk scale");
    let q_pow_n = BigUint::from(datum.q).modpow(&BigUint::from(reduced.self_twists), &ell_big);
    let twist_order = arith::mult_order_mod(&q_pow_n, &ell_big)?
        .to_u64()
        .expect("desk scale");
    let ell_exponent = if a == 1 {
        None
    } else {
        if a % twist_order != 0 {
            return Err(CuspError::TheoremViolation(format!(
                "length {a} is not a multiple of the twist order {twist_order}"
            )));
        }
        let mut rest = a / twist_order;
        let mut u = 0u32;
        while rest % ell == 0 {
            rest /= ell;
            u += 1;
        }
        if rest != 1 {
            return Err(CuspError::TheoremViolation(format!(
                "length {a} is not twist_order * ell^u (ell = {ell})"
            )));
        }
        Some(u)
    };
    Ok(ReductionLength {
        length: a,
        prime_to_ell_part,
        twist_order,
        ell_exponent,
    })
}

/// Symbolic shape of the reduction: the list of twist exponents
/// `0..a-1` and the order of the twist character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionShape {
    pub twist_exponents: Vec<u64>,
    pub twist_order: u64,
}

pub fn reduction_shape(datum: &TypeDatum, ell: u64) -> Result<ReductionShape, CuspError> {
    let len = reduction_length(datum, ell)?;
    Ok(ReductionShape {
        twist_exponents: (0..len.length).collect(),
        twist_order: len.twist_order,
    })
}

/// Banality: the multiplicative order of `q^d` mod ell exceeds `m`.
pub fn is_banal(m: u64, d: u64, q: u64, ell: u64) -> Result<bool, CuspError> {
    if q % ell == 0 {
        return Err(CuspError::EllDividesQ(ell));
    }
    let ell_big = BigUint::from(ell);
    let q_pow = BigUint::from(q).modpow(&BigUint::from(d), &ell_big);
    let order = arith::mult_order_mod(&q_pow, &ell_big)?;
    Ok(order > BigUint::from(m))
}

/// Regression oracle: if the reduction splits (`a > 1`) then
/// `q^{residue_power}` must be 1 mod ell. Always true.
pub fn reducible_forces_unit_order(datum: &TypeDatum, ell: u64) -> Result<bool, CuspError> {
    let len = reduction_length(datum, ell)?;
    if len.length <= 1 {
        return Ok(true);
    }
    let lifted = invariants(datum, &Characteristic::Zero)?;
    let ok = lifted.q_power.modpow(&BigUint::one(), &BigUint::from(ell)) == BigUint::one();
    Ok(ok)
}

/// The two quantities that measure the twist orbit on the reduced side,
/// computed by independent formulas: the orbit cardinality
/// `e* / gcd(e*, n s)` and the order of `q^{residue_power}` in the
/// prime field, `e* / gcd(e*, f)`, where `e*` is the order of `q` mod
/// ell. Their equality is a theorem; inequality is a hard failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistOrbitReport {
    pub base_order: u64,
    pub orbit_card: u64,
    pub q_power_order: u64,
}

pub fn twist_orbit_identity(datum: &TypeDatum, ell: u64) -> Result<TwistOrbitReport, CuspError> {
    if datum.q % ell == 0 {
        return Err(CuspError::EllDividesQ(ell));
    }
    let reduced_datum = if datum.chi.ctx.modulus == CharCtx::new(
        datum.chi.ctx.base_card.clone(),
        datum.m_prime,
    )
    .modulus
    {
        datum.reduce(ell)?
    } else {
        datum.clone()
    };
    let inv = invariants(&reduced_datum, &Characteristic::Ell(ell))?;
    let ell_big = BigUint::from(ell);
    let base_order = arith::mult_order_mod(&BigUint::from(datum.q), &ell_big)?
        .to_u64()
        .expect("desk scale");
    let ns = inv.self_twists * inv.stabilizer;
    let orbit_card = base_order / gcd_u64(base_order, ns);
    let q_power_order = base_order / gcd_u64(base_order, inv.residue_power);
    if orbit_card != q_power_order {
        return Err(CuspError::TheoremViolation(format!(
            "twist orbit card {orbit_card} differs from q-power order {q_power_order}"
        )));
    }
    Ok(TwistOrbitReport {
        base_order,
        orbit_card,
        q_power_order,
    })
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    BigUint::from(a).gcd(&BigUint::from(b)).to_u64().unwrap()
}

/// The two reducibility points `q^{residue_power}` and its inverse,
/// as exact integers (numerator of the inverse is 1).
pub fn reducibility_points(datum: &TypeDatum) -> Result<BigUint, CuspError> {
    let chr = Characteristic::Zero;
    let inv = invariants(datum, &chr)?;
    Ok(inv.q_power)
}

/// The reducibility points mapped into a scalar field.
pub fn reducibility_points_in<F: Field>(datum: &TypeDatum, proto: &F) -> Result<(F, F), CuspError> {
    let q_power = reducibility_points(datum)?;
    let v = proto.from_bigint(&BigInt::from(q_power));
    let inv = v.inv().ok_or_else(|| {
        CuspError::TheoremViolation("q-power image is zero in the scalar field".into())
    })?;
    Ok((v, inv))
}

/// Searches the lifts of a reduced character for one that is regular
/// and preserves the Galois orbit size (so the reduction has a single
/// piece). Prefers the unique lift of prime-to-ell order when it
/// qualifies. Returns `None` when no lift works.
pub fn liftability_search(
    reduced_datum: &TypeDatum,
    ell: u64,
) -> Result<Option<CharIndex>, CuspError> {
    if reduced_datum.q % ell == 0 {
        return Err(CuspError::EllDividesQ(ell));
    }
    let reduced_inv = invariants(reduced_datum, &Characteristic::Ell(ell))?;
    let full_ctx = TypeDatum::context(
        reduced_datum.q,
        reduced_datum.f,
        reduced_datum.m_prime,
        reduced_datum.d_prime,
    )?;
    let ell_big = BigUint::from(ell);
    let lifts = charorbits::lifts(&reduced_datum.chi, &ell_big, &full_ctx)?;
    let mut matches: Vec<CharIndex> = Vec::new();
    for cand in lifts {
        let mut datum = reduced_datum.clone();
        datum.chi = cand.clone();
        if !datum.chi_is_regular() {
            continue;
        }
        let lifted_inv = invariants(&datum, &Characteristic::Zero)?;
        if lifted_inv.galois_orbit == reduced_inv.galois_orbit {
            matches.push(cand);
        }
    }
    if matches.is_empty() {
        return Ok(None);
    }
    // Prefer the prime-to-ell-order lift when present.
    if let Some(best) = matches
        .iter()
        .find(|c| !(c.char_order() % &ell_big).is_zero())
    {
        return Ok(Some(best.clone()));
    }
    Ok(Some(matches.into_iter().next().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Level-zero datum on the quaternion side: m=1, d=2, q=8, e=f=1,
    /// m'=1, d'=2, characters mod 63.
    fn quaternion_datum(k: u64) -> TypeDatum {
        TypeDatum::new(1, 2, 8, 1, 1, 1, 2, b(k)).unwrap()
    }

    /// Degree-two datum over the quaternions: m=2, d=2, q=4, e=f=1,
    /// m'=2, d'=2, characters mod 255.
    fn gl2_quaternion_datum(k: u64) -> TypeDatum {
        TypeDatum::new(2, 2, 4, 1, 1, 2, 2, b(k)).unwrap()
    }

    #[test]
    fn datum_validation() {
        assert!(TypeDatum::new(1, 2, 8, 1, 1, 1, 2, b(1)).is_ok());
        assert!(matches!(
            TypeDatum::new(1, 2, 8, 1, 1, 2, 2, b(1)),
            Err(CuspError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            TypeDatum::new(1, 2, 6, 1, 1, 1, 2, b(1)),
            Err(CuspError::NotPrimePower(6))
        ));
        assert!(matches!(
            TypeDatum::new(1, 2, 8, 3, 1, 1, 2, b(1)),
            Err(CuspError::RamificationMismatch { .. })
        ));
    }

    #[test]
    fn quaternion_level0_invariants() {
        // Orbit enumeration mod 63 under *8 and *64.
        let datum = quaternion_datum(1);
        let inv = invariants(&datum, &Characteristic::Zero).unwrap();
        assert_eq!(inv.orbit_base, 2);
        assert_eq!(inv.orbit_division, 1);
        assert_eq!(inv.galois_orbit, 2);
        assert_eq!(inv.stabilizer, 1);
        assert_eq!(inv.residue_power, 2);
        assert_eq!(inv.self_twists, 2);
        assert_eq!(inv.q_power, b(64));

        // Reduced at 3: index 1 mod 7, Frobenius acts trivially.
        let red = datum.reduce(3).unwrap();
        assert_eq!(red.chi.ctx.modulus, b(7));
        assert_eq!(red.chi.k, b(1));
        let inv = invariants(&red, &Characteristic::Ell(3)).unwrap();
        assert_eq!(inv.galois_orbit, 1);
        assert_eq!(inv.stabilizer, 2);
        assert_eq!(inv.residue_power, 2);
        assert_eq!(inv.norm_valuation, 1);
        assert_eq!(inv.self_twists, 1);
    }

    #[test]
    fn degenerate_split_datum() {
        // GL_1 over the base field: everything is 1.
        let datum = TypeDatum::new(1, 1, 3, 1, 1, 1, 1, b(0)).unwrap();
        let inv = invariants(&datum, &Characteristic::Zero).unwrap();
        assert_eq!(inv.galois_orbit, 1);
        assert_eq!(inv.stabilizer, 1);
        assert_eq!(inv.residue_power, 1);
        assert_eq!(inv.self_twists, 1);
        assert_eq!(inv.q_power, b(3));
    }

    #[test]
    fn quaternion_reduction_length() {
        // chi of order 9 mod 63 has a = 2 = o_3(8) * 3^0.
        let datum = quaternion_datum(7); // order 9 character
        let len = reduction_length(&datum, 3).unwrap();
        assert_eq!(len.length, 2);
        assert_eq!(len.twist_order, 2);
        assert_eq!(len.ell_exponent, Some(0));
        let shape = reduction_shape(&datum, 3).unwrap();
        assert_eq!(shape.twist_exponents, vec![0, 1]);

        // A character with trivial Galois orbit has a = 1.
        let datum = quaternion_datum(9); // 9 * 8 = 72 = 9 mod 63: fixed
        let len = reduction_length(&datum, 3).unwrap();
        assert_eq!(len.length, 1);
    }

    #[test]
    fn a_is_one_when_ell_prime_to_order() {
        // ell = 5 does not divide 63, so reduction is injective here.
        let datum = quaternion_datum(1);
        let len = reduction_length(&datum, 5).unwrap();
        assert_eq!(len.length, 1);
    }

    #[test]
    fn gl2_quaternion_reduction_length() {
        // Index 15 mod 255 (order 17): a = 2 at ell = 17.
        let datum = gl2_quaternion_datum(15);
        let inv = invariants(&datum, &Characteristic::Zero).unwrap();
        assert_eq!(inv.orbit_base, 4); // {15, 60, 240, 195} under *4
        assert_eq!(inv.orbit_division, 2); // {15, 240} under *16
        assert_eq!(inv.galois_orbit, 2);
        let red = datum.reduce(17).unwrap();
        assert_eq!(red.chi.k, b(0)); // trivial reduction
        let rinv = invariants(&red, &Characteristic::Ell(17)).unwrap();
        assert_eq!(rinv.galois_orbit, 1);
        let len = reduction_length(&datum, 17).unwrap();
        assert_eq!(len.length, 2);
        let shape = reduction_shape(&datum, 17).unwrap();
        assert_eq!(shape.twist_exponents, vec![0, 1]);
    }

    #[test]
    fn banality_examples() {
        // 64 = 1 mod 3, order 1 <= 1: not banal.
        assert!(!is_banal(1, 2, 8, 3).unwrap());
        // o_5(4) = 2 > 1: banal.
        assert!(is_banal(1, 2, 2, 5).unwrap());
        // 3 = 1 mod 2, order 1 <= 2: not banal.
        assert!(!is_banal(2, 1, 3, 2).unwrap());
    }

    #[test]
    fn order_collapse_oracle() {
        assert!(reducible_forces_unit_order(&quaternion_datum(1), 3).unwrap());
        assert!(reducible_forces_unit_order(&gl2_quaternion_datum(15), 17).unwrap());
        assert!(reducible_forces_unit_order(&quaternion_datum(9), 3).unwrap());
    }

    #[test]
    fn twist_orbit_reports() {
        // Quaternion level-0 datum at ell = 3: e* = o_3(8) = 2,
        // card = 2/gcd(2, 1*2) = 1 = 2/gcd(2, 2).
        let report = twist_orbit_identity(&quaternion_datum(1), 3).unwrap();
        assert_eq!(report.base_order, 2);
        assert_eq!(report.orbit_card, 1);
        assert_eq!(report.q_power_order, 1);

        // Split GL_1: card = order of q mod ell.
        let datum = TypeDatum::new(1, 1, 3, 1, 1, 1, 1, b(0)).unwrap();
        let report = twist_orbit_identity(&datum, 5).unwrap();
        assert_eq!(report.base_order, 4);
        assert_eq!(report.orbit_card, 4);

        // Degree-two quaternion datum at ell = 17: e* = o_17(4) = 4,
        // n = 2, s = 2, f = 4: both formulas give 1.
        let report = twist_orbit_identity(&gl2_quaternion_datum(15), 17).unwrap();
        assert_eq!(report.base_order, 4);
        assert_eq!(report.orbit_card, 1);
    }

    #[test]
    fn reducibility_point_values() {
        use crate::scalar::{Fp, Rat};
        let datum = quaternion_datum(1);
        assert_eq!(reducibility_points(&datum).unwrap(), b(64));
        let (p, p_inv) = reducibility_points_in(&datum, &Rat::from_int(0)).unwrap();
        assert_eq!(p, Rat::from_int(64));
        assert_eq!(p_inv, Rat::from_frac(1, 64));
        // 64 = 1 mod 3: the two points coincide.
        let (p, p_inv) = reducibility_points_in(&datum, &Fp::new(3, 0)).unwrap();
        assert_eq!(p, Fp::new(3, 1));
        assert_eq!(p_inv, Fp::new(3, 1));
        // Split GL_1 at q = 3.
        let datum = TypeDatum::new(1, 1, 3, 1, 1, 1, 1, b(0)).unwrap();
        assert_eq!(reducibility_points(&datum).unwrap(), b(3));
    }

    #[test]
    fn lift_search_supercuspidal_case() {
        // Reduced index 3 mod 5 in the split degree-two context at
        // q = 4: the unique prime-to-3-order lift is k = 3 (order 5).
        let full = TypeDatum::new(2, 1, 4, 1, 1, 2, 1, b(3)).unwrap();
        let reduced = full.reduce(3).unwrap();
        assert_eq!(reduced.chi.ctx.modulus, b(5));
        assert_eq!(reduced.chi.k, b(3));
        let lift = liftability_search(&reduced, 3).unwrap().unwrap();
        assert_eq!(lift.k, b(3));
        assert_eq!(lift.char_order(), b(5));
    }

    #[test]
    fn lift_search_obstructed_case() {
        // The trivial reduced character mod 15 in the degree-two
        // quaternion context: every regular lift doubles the Galois
        // orbit, so no lift preserves it.
        let full = gl2_quaternion_datum(15);
        let reduced = full.reduce(17).unwrap();
        assert_eq!(liftability_search(&reduced, 17).unwrap(), None);
    }

    #[test]
    fn lift_search_trivial_when_no_ell_part() {
        // ell = 17 is prime to 15: the character lifts to itself.
        let full = TypeDatum::new(2, 1, 4, 1, 1, 2, 1, b(3)).unwrap();
        let reduced = full.reduce(17).unwrap();
        let lift = liftability_search(&reduced, 17).unwrap().unwrap();
        assert_eq!(lift.k, b(3));
    }

    #[test]
    fn level0_sweep_all_residues() {
        // Every level-0 parameter mod 63 has trivially-ordered
        // reduction at ell = 3; characters moved by Frobenius have
        // a = 2.
        for k in 0..63u64 {
            let datum = quaternion_datum(k);
            let red = datum.reduce(3).unwrap();
            let rinv = invariants(&red, &Characteristic::Ell(3)).unwrap();
            assert_eq!(rinv.galois_orbit, 1, "k={k}");
            let len = reduction_length(&datum, 3).unwrap();
            if (k * 8) % 63 != k {
                assert_eq!(len.length, 2, "k={k}");
                assert_eq!(len.twist_order, 2, "k={k}");
                assert_eq!(len.ell_exponent, Some(0), "k={k}");
            } else {
                assert_eq!(len.length, 1, "k={k}");
            }
        }
    }
}
