//! Exact arithmetic in `Z/mZ`.
//!
//! Residues are always kept in the canonical range `[0, m)`. Products of
//! residues modulo `m >= 2^32` go through `u128`, so any modulus that fits
//! in a `u64` is safe.

use std::fmt;

use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    /// The modulus `n^2 + 1` attached to the `n x n` sequential matrix.
    pub fn for_side(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSide);
        }
        let n = n as u64;
        n.checked_mul(n)
            .and_then(|sq| sq.checked_add(1))
            .ok_or(Error::Overflow)
            .and_then(Modulus::new)
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    #[inline]
    pub fn reduce(self, x: i128) -> Residue {
        reduce(x, self)
    }

    #[inline]
    pub fn zero(self) -> Residue {
        Residue { value: 0, modulus: self }
    }

    #[inline]
    pub fn one(self) -> Residue {
        Residue { value: 1, modulus: self }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Canonical element of `Z/mZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

#[allow(clippy::should_implement_trait)]
impl Residue {
    /// Builds a residue from a value already known to be canonical.
    pub fn new(value: u64, modulus: Modulus) -> Result<Self> {
        if value >= modulus.get() {
            return Err(Error::NotCanonical { value, modulus: modulus.get() });
        }
        Ok(Residue { value, modulus })
    }

    #[inline]
    pub(crate) fn new_unchecked(value: u64, modulus: Modulus) -> Self {
        debug_assert!(value < modulus.get());
        Residue { value, modulus }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn check_same(self, other: Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(())
    }

    pub fn add(self, other: Residue) -> Result<Residue> {
        self.check_same(other)?;
        let m = self.modulus.get() as u128;
        let v = (self.value as u128 + other.value as u128) % m;
        Ok(Residue::new_unchecked(v as u64, self.modulus))
    }

    pub fn neg(self) -> Residue {
        if self.value == 0 {
            self
        } else {
            Residue::new_unchecked(self.modulus.get() - self.value, self.modulus)
        }
    }

    pub fn mul(self, other: Residue) -> Result<Residue> {
        self.check_same(other)?;
        Ok(Residue::new_unchecked(mul_raw(self.value, other.value, self.modulus), self.modulus))
    }

    /// Square-and-multiply. `pow(0, 0)` is `1` by the empty-product convention.
    pub fn pow(self, mut e: u64) -> Residue {
        let m = self.modulus;
        let mut base = self.value;
        let mut acc = 1 % m.get();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_raw(acc, base, m);
            }
            base = mul_raw(base, base, m);
            e >>= 1;
        }
        Residue::new_unchecked(acc, m)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

#[inline]
pub(crate) fn mul_raw(a: u64, b: u64, m: Modulus) -> u64 {
    let m = m.get();
    if m <= u32::MAX as u64 {
        // both factors are below 2^32, so the product fits in a u64
        (a * b) % m
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

/// The unique `r` in `[0, m)` with `r = x (mod m)`.
pub fn reduce(x: i128, m: Modulus) -> Residue {
    let r = x.rem_euclid(m.get() as i128);
    Residue::new_unchecked(r as u64, m)
}

pub fn mul(a: Residue, b: Residue) -> Result<Residue> {
    a.mul(b)
}

pub fn pow(a: Residue, e: u64) -> Residue {
    a.pow(e)
}

/// Greatest common divisor; `gcd(x, 0) = x`. Both arguments zero is an error.
pub fn gcd(x: u64, y: u64) -> Result<u64> {
    if x == 0 && y == 0 {
        return Err(Error::GcdZeroZero);
    }
    Ok(gcd_raw(x, y))
}

#[inline]
pub(crate) fn gcd_raw(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn r(v: i128, md: u64) -> Residue {
        reduce(v, m(md))
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(r(17, 17).value(), 0);
        assert_eq!(r(-1, 17).value(), 16);
        assert_eq!(r(37, 17).value(), 3);
        assert_eq!(r(-35, 17).value(), 16);
    }

    #[test]
    fn modulus_bounds() {
        assert!(matches!(Modulus::new(0), Err(Error::InvalidModulus(0))));
        assert!(matches!(Modulus::new(1), Err(Error::InvalidModulus(1))));
        assert_eq!(Modulus::for_side(4).unwrap().get(), 17);
        assert_eq!(Modulus::for_side(1).unwrap().get(), 2);
        assert!(Modulus::for_side(0).is_err());
        assert!(matches!(Modulus::for_side(usize::MAX), Err(Error::Overflow)));
    }

    #[test]
    fn residue_must_be_canonical() {
        assert!(Residue::new(17, m(17)).is_err());
        assert_eq!(Residue::new(16, m(17)).unwrap().value(), 16);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(mul(r(4, 17), r(13, 17)).unwrap().value(), 1);
        assert_eq!(mul(r(0, 17), r(9, 17)).unwrap().value(), 0);
        assert_eq!(mul(r(16, 17), r(16, 17)).unwrap().value(), 1);
    }

    #[test]
    fn mul_mismatch_is_error() {
        let err = mul(r(2, 17), r(2, 19)).unwrap_err();
        assert!(matches!(err, Error::ModulusMismatch { left: 17, right: 19 }));
        assert!(r(2, 17).add(r(2, 19)).is_err());
    }

    #[test]
    fn mul_no_overflow_for_large_modulus() {
        // n = 46341 gives m just over 2^31
        let md = Modulus::for_side(46_341).unwrap();
        let a = md.reduce(md.get() as i128 - 1);
        assert_eq!(a.mul(a).unwrap().value(), 1);
        let edge = m(u32::MAX as u64);
        let c = edge.reduce(-1);
        assert_eq!(c.mul(c).unwrap().value(), 1);
        let big = m(u64::MAX);
        let b = big.reduce(-1);
        assert_eq!(b.mul(b).unwrap().value(), 1);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(5, 65).unwrap(), 5);
        assert_eq!(gcd(1, 65).unwrap(), 1);
        assert_eq!(gcd(36, 65).unwrap(), 1);
        assert_eq!(gcd(7, 0).unwrap(), 7);
        assert_eq!(gcd(0, 7).unwrap(), 7);
        assert!(matches!(gcd(0, 0), Err(Error::GcdZeroZero)));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pow(r(3, 17), 8).value(), 16);
        assert_eq!(pow(r(5, 17), 1).value(), 5);
        assert_eq!(pow(r(0, 17), 0).value(), 1);
        assert_eq!(pow(r(1, 2), 0).value(), 1);
    }

    #[test]
    fn negation() {
        assert_eq!(r(0, 17).neg().value(), 0);
        assert_eq!(r(1, 17).neg().value(), 16);
    }

    proptest! {
        #[test]
        fn mul_is_associative_commutative(md in 2u64..5000, a: u64, b: u64, c: u64) {
            let md = m(md);
            let (a, b, c) = (md.reduce(a as i128), md.reduce(b as i128), md.reduce(c as i128));
            prop_assert_eq!(a.mul(b.mul(c)?)?, a.mul(b)?.mul(c)?);
            prop_assert_eq!(a.mul(b)?, b.mul(a)?);
            prop_assert_eq!(a.mul(md.one())?, a);
        }

        #[test]
        fn reduce_is_periodic(md in 2u64..1_000_000, x in -1_000_000_000i64..1_000_000_000, k in -1000i64..1000) {
            let md = m(md);
            let shifted = x as i128 + k as i128 * md.get() as i128;
            prop_assert_eq!(reduce(shifted, md), reduce(x as i128, md));
        }

        #[test]
        fn pow_adds_exponents(md in 2u64..100_000, a: u64, e1 in 0u64..500, e2 in 0u64..500) {
            let md = m(md);
            let a = md.reduce(a as i128);
            prop_assert_eq!(a.pow(e1 + e2), a.pow(e1).mul(a.pow(e2))?);
        }
    }
}
