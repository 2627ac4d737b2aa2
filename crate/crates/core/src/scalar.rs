//! Exact scalar fields for Hecke coefficients: arbitrary-precision
//! rationals and prime fields `F_ell`.
//!
//! Equality is exact everywhere. A [`Field`] value knows its own field,
//! so mixing elements of different prime fields panics instead of
//! silently producing garbage.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An element of an exact field, with just enough structure for linear
/// algebra and Hecke multiplication.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Image of an arbitrary integer in this field (`self` supplies the field).
    fn from_bigint(&self, n: &BigInt) -> Self;

    fn from_i64(&self, n: i64) -> Self {
        self.from_bigint(&BigInt::from(n))
    }

    /// `self^n` for `n` possibly negative; panics on `0^(-n)`.
    fn pow_i64(&self, n: i64) -> Self {
        let base = if n < 0 {
            self.inv().expect("inverting zero")
        } else {
            self.clone()
        };
        let mut acc = self.one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero(&self) -> Self {
        Rat(BigRational::zero())
    }
    fn one(&self) -> Self {
        Rat(BigRational::one())
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }
    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_bigint(&self, n: &BigInt) -> Self {
        Rat(BigRational::from(n.clone()))
    }
}

/// Element of the prime field with `p` elements, stored as the canonical
/// residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct Fp {
    pub p: u64,
    pub val: u64,
}

impl Fp {
    pub fn new(p: u64, val: i64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let m = p as i64;
        let v = ((val % m) + m) % m;
        Fp { p, val: v as u64 }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed prime fields");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { p: self.p, val: 0 }
    }
    fn one(&self) -> Self {
        Fp { p: self.p, val: 1 }
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        Fp {
            p: self.p,
            val: (self.val + other.val) % self.p,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Fp {
            p: self.p,
            val: (self.val + self.p - other.val) % self.p,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let prod = (self.val as u128 * other.val as u128) % self.p as u128;
        Fp {
            p: self.p,
            val: prod as u64,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.val == 0 {
            return None;
        }
        // p is prime in all uses, so Fermat powering suffices.
        let mut result: u128 = 1;
        let mut base = self.val as u128;
        let mut e = self.p - 2;
        let m = self.p as u128;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Some(Fp {
            p: self.p,
            val: result as u64,
        })
    }
    fn neg(&self) -> Self {
        Fp {
            p: self.p,
            val: (self.p - self.val) % self.p,
        }
    }
    fn is_zero(&self) -> bool {
        self.val == 0
    }
    fn from_bigint(&self, n: &BigInt) -> Self {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        let digits = r.to_u64_digits().1;
        let val = digits.first().copied().unwrap_or(0);
        Fp { p: self.p, val }
    }
}
