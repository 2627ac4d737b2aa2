//! Elementary modular arithmetic shared by every other module:
//! ell-adic splittings, multiplicative orders, gcd identities.
//!
//! Integers are arbitrary precision throughout; moduli of the form
//! `Q^n - 1` outgrow machine words quickly.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("expected a positive integer, got 0")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("{k} is divisible by {modulus}, no multiplicative order")]
    NotCoprime { k: BigUint, modulus: BigUint },
}

/// `total = prime_to_ell * ell^exponent` with `gcd(prime_to_ell, ell) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllAdicSplit {
    pub total: BigUint,
    pub prime_to_ell: BigUint,
    pub exponent: u32,
    pub ell: BigUint,
}

impl EllAdicSplit {
    /// Recomposes `prime_to_ell * ell^exponent`; must equal `total`.
    pub fn recompose(&self) -> BigUint {
        &self.prime_to_ell * self.ell.pow(self.exponent)
    }
}

/// Trial-division primality check. Inputs at desk scale are small; no
/// attempt is made at large-integer primality proving.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n == &two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2u32;
    }
    true
}

/// Splits `n` as `m * ell^v` with `ell` prime not dividing `m`.
pub fn ell_adic_split(n: &BigUint, ell: &BigUint) -> Result<EllAdicSplit, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if !is_prime(ell) {
        return Err(ArithError::NotPrime(ell.clone()));
    }
    let mut m = n.clone();
    let mut v = 0u32;
    while (&m % ell).is_zero() {
        m /= ell;
        v += 1;
    }
    Ok(EllAdicSplit {
        total: n.clone(),
        prime_to_ell: m,
        exponent: v,
        ell: ell.clone(),
    })
}

/// Order of `k` in `(Z/m)^*` for any modulus `m >= 1`, by direct powering.
/// Requires `gcd(k, m) = 1`. The order for `m = 1` is 1.
pub fn mult_order_mod(k: &BigUint, modulus: &BigUint) -> Result<BigUint, ArithError> {
    if modulus.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if modulus.is_one() {
        return Ok(BigUint::one());
    }
    let k_red = k % modulus;
    if k_red.gcd(modulus) != BigUint::one() {
        return Err(ArithError::NotCoprime {
            k: k.clone(),
            modulus: modulus.clone(),
        });
    }
    let mut acc = k_red.clone();
    let mut t = BigUint::one();
    while !acc.is_one() {
        acc = acc * &k_red % modulus;
        t += 1u32;
    }
    Ok(t)
}

/// Order of `k` in `F_ell^*` for a prime `ell` not dividing `k`.
pub fn mult_order(k: &BigUint, ell: &BigUint) -> Result<BigUint, ArithError> {
    if !is_prime(ell) {
        return Err(ArithError::NotPrime(ell.clone()));
    }
    mult_order_mod(k, ell)
}

/// Checks the identity `gcd(e, n*gcd(e, s)) = gcd(e, n*s)`. This always
/// holds; the function exists as a regression oracle for the sweep tests.
pub fn check_gcd_identity(e: &BigUint, n: &BigUint, s: &BigUint) -> bool {
    let lhs = e.gcd(&(n * e.gcd(s)));
    let rhs = e.gcd(&(n * s));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn split_examples() {
        // Oracle: trial division by hand. 63 = 7 * 3^2, 255 = 15 * 17.
        let s = ell_adic_split(&b(63), &b(3)).unwrap();
        assert_eq!((s.prime_to_ell.clone(), s.exponent), (b(7), 2));
        let s = ell_adic_split(&b(255), &b(17)).unwrap();
        assert_eq!((s.prime_to_ell.clone(), s.exponent), (b(15), 1));
        let s = ell_adic_split(&b(10), &b(3)).unwrap();
        assert_eq!((s.prime_to_ell.clone(), s.exponent), (b(10), 0));
    }

    #[test]
    fn split_rejects_bad_input() {
        assert_eq!(
            ell_adic_split(&b(0), &b(3)).unwrap_err(),
            ArithError::ZeroInput
        );
        assert!(matches!(
            ell_adic_split(&b(12), &b(6)).unwrap_err(),
            ArithError::NotPrime(_)
        ));
    }

    #[test]
    fn orders() {
        // 2^2 = 4 = 1 mod 3; 4^4 = 256 = 1 mod 17 and no smaller power works.
        assert_eq!(mult_order(&b(2), &b(3)).unwrap(), b(2));
        assert_eq!(mult_order(&b(4), &b(17)).unwrap(), b(4));
        assert_eq!(mult_order(&b(1), &b(11)).unwrap(), b(1));
        assert!(mult_order(&b(6), &b(3)).is_err());
        assert_eq!(mult_order_mod(&b(5), &b(1)).unwrap(), b(1));
        assert_eq!(mult_order_mod(&b(2), &b(7)).unwrap(), b(3));
    }

    #[test]
    fn gcd_identity_examples() {
        assert!(check_gcd_identity(&b(6), &b(2), &b(3)));
        assert_eq!(b(6).gcd(&(b(2) * b(6).gcd(&b(3)))), b(6));
        assert!(check_gcd_identity(&b(1), &b(9), &b(4)));
        assert!(check_gcd_identity(&b(4), &b(2), &b(2)));
        assert_eq!(b(4).gcd(&(b(2) * b(4).gcd(&b(2)))), b(4));
    }

    #[test]
    fn gcd_identity_small_sweep() {
        for e in 1u64..=25 {
            for n in 1u64..=25 {
                for s in 1u64..=25 {
                    assert!(check_gcd_identity(&b(e), &b(n), &b(s)));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn split_recomposes(n in 1u64..100_000, ell_idx in 0usize..4) {
            let ells = [2u64, 3, 5, 17];
            let s = ell_adic_split(&b(n), &b(ells[ell_idx])).unwrap();
            prop_assert_eq!(s.recompose(), b(n));
            prop_assert_eq!(s.prime_to_ell.gcd(&s.ell), BigUint::one());
        }

        #[test]
        fn order_divides_ell_minus_one(k in 1u64..500, ell_idx in 0usize..4) {
            let ells = [3u64, 5, 17, 101];
            let ell = ells[ell_idx];
            if k % ell != 0 {
                let t = mult_order(&b(k), &b(ell)).unwrap();
                prop_assert!((b(ell - 1) % t).is_zero());
            }
        }
    }
}
