//! Completely multiplicative sign maps `Z/mZ -> {-1, 0, +1}`.
//!
//! The Jacobi symbol is computed by the binary reciprocity algorithm and never
//! factors the modulus. [`legendre_euler`] and [`qr_bruteforce`] are kept as
//! independent oracles for it.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::modring::{gcd_raw, Modulus, Residue};
use crate::seqmatrix::{DihedralElement, ResidueMatrix, SquareGrid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Sign {
    Minus = -1,
    Zero = 0,
    Plus = 1,
}

impl Sign {
    #[inline]
    pub fn to_i8(self) -> i8 {
        self as i8
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Minus),
            0 => Some(Sign::Zero),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    /// `(-1)^k`.
    pub fn parity(k: u64) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        // i8 product of two values in {-1, 0, 1} stays in range
        Sign::from_i8(self.to_i8() * rhs.to_i8()).unwrap()
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-1",
            Sign::Zero => "0",
            Sign::Plus => "+1",
        })
    }
}

/// Image of a residue matrix under a sign map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    grid: SquareGrid<Sign>,
}

impl SignMatrix {
    pub fn from_grid(grid: SquareGrid<Sign>) -> Self {
        SignMatrix { grid }
    }

    pub fn from_rows(rows: Vec<Vec<Sign>>) -> Result<Self> {
        Ok(SignMatrix { grid: SquareGrid::from_rows(rows)? })
    }

    pub fn side(&self) -> usize {
        self.grid.side()
    }

    pub fn grid(&self) -> &SquareGrid<Sign> {
        &self.grid
    }

    /// 1-indexed; panics outside `1..=n`.
    pub fn entry(&self, i: usize, j: usize) -> Sign {
        self.grid.get(i, j).expect("position outside the matrix")
    }

    pub fn apply(&self, sigma: DihedralElement) -> Self {
        SignMatrix { grid: self.grid.apply(sigma) }
    }

    pub fn scale(&self, s: Sign) -> Self {
        SignMatrix { grid: self.grid.map(|v| v * s) }
    }
}

/// A map `phi: Z/mZ -> {-1, 0, +1}` expected to be completely multiplicative.
pub trait MultiplicativeMap {
    fn modulus(&self) -> Modulus;

    fn eval(&self, a: Residue) -> Sign;
}

/// `a -> (a/m)` for a fixed odd `m >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobiMap {
    modulus: Modulus,
}

impl JacobiMap {
    pub fn new(m: Modulus) -> Result<Self> {
        check_jacobi_modulus(m.get())?;
        Ok(JacobiMap { modulus: m })
    }
}

impl MultiplicativeMap for JacobiMap {
    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn eval(&self, a: Residue) -> Sign {
        debug_assert_eq!(a.modulus(), self.modulus);
        jacobi_reduced(a.value(), self.modulus.get())
    }
}

/// `1` on units of `Z/mZ`, `0` elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitIndicator {
    modulus: Modulus,
}

impl UnitIndicator {
    pub fn new(m: Modulus) -> Self {
        UnitIndicator { modulus: m }
    }
}

impl MultiplicativeMap for UnitIndicator {
    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn eval(&self, a: Residue) -> Sign {
        if gcd_raw(a.value(), self.modulus.get()) == 1 {
            Sign::Plus
        } else {
            Sign::Zero
        }
    }
}

/// A sign map given by a closure.
pub struct FnMap<F> {
    modulus: Modulus,
    f: F,
}

impl<F: Fn(Residue) -> Sign> FnMap<F> {
    pub fn new(modulus: Modulus, f: F) -> Self {
        FnMap { modulus, f }
    }
}

impl<F: Fn(Residue) -> Sign> MultiplicativeMap for FnMap<F> {
    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn eval(&self, a: Residue) -> Sign {
        (self.f)(a)
    }
}

/// Checks `phi(ab) = phi(a) phi(b)` over every pair; O(m^2).
pub fn is_completely_multiplicative(phi: &dyn MultiplicativeMap) -> bool {
    let m = phi.modulus();
    let values: Vec<Sign> = (0..m.get()).map(|a| phi.eval(Residue::new_unchecked(a, m))).collect();
    (0..m.get()).all(|a| {
        (0..m.get()).all(|b| {
            let ab = crate::modring::mul_raw(a, b, m) as usize;
            values[ab] == values[a as usize] * values[b as usize]
        })
    })
}

fn check_jacobi_modulus(m: u64) -> Result<()> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenModulus(m));
    }
    if m < 3 {
        return Err(Error::ModulusTooSmall(m));
    }
    Ok(())
}

/// The Jacobi symbol `(a/m)` for odd `m >= 3`.
pub fn jacobi(a: i64, m: u64) -> Result<Sign> {
    check_jacobi_modulus(m)?;
    let a = (a as i128).rem_euclid(m as i128) as u64;
    Ok(jacobi_reduced(a, m))
}

/// Binary reciprocity loop; expects `m` odd and `a < m`.
pub(crate) fn jacobi_reduced(mut a: u64, mut m: u64) -> Sign {
    let mut negate = false;
    loop {
        a %= m;
        if a == 0 {
            return if m == 1 { flip(negate) } else { Sign::Zero };
        }
        let twos = a.trailing_zeros();
        a >>= twos;
        // (2/m) = -1 iff m = 3, 5 (mod 8)
        if twos % 2 == 1 && matches!(m % 8, 3 | 5) {
            negate = !negate;
        }
        if a == 1 {
            return flip(negate);
        }
        // both odd: reciprocity flips iff both are 3 (mod 4)
        if a % 4 == 3 && m % 4 == 3 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut m);
    }
}

#[inline]
fn flip(negate: bool) -> Sign {
    if negate {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Trial division, for desk-scale inputs.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Legendre symbol by Euler's criterion `a^((p-1)/2) mod p`.
pub fn legendre_euler(a: i64, p: u64) -> Result<Sign> {
    if p == 1 {
        return Err(Error::ModulusTooSmall(p));
    }
    if p.is_multiple_of(2) {
        return Err(Error::EvenModulus(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = Modulus::new(p)?;
    let r = m.reduce(a as i128);
    if r.value() == 0 {
        return Ok(Sign::Zero);
    }
    let e = r.pow((p - 1) / 2).value();
    if e == 1 {
        Ok(Sign::Plus)
    } else {
        debug_assert_eq!(e, p - 1);
        Ok(Sign::Minus)
    }
}

/// Whether `x^2 = a (mod m)` has a solution, by exhaustive search.
pub fn qr_bruteforce(a: Residue) -> bool {
    let m = a.modulus();
    (0..m.get()).any(|x| crate::modring::mul_raw(x, x, m) == a.value())
}

/// `table[a]` is `true` iff `a` is a square modulo `m`; one pass over all `x`.
pub fn squares_table(m: Modulus) -> Vec<bool> {
    let mut table = vec![false; m.get() as usize];
    for x in 0..m.get() {
        table[crate::modring::mul_raw(x, x, m) as usize] = true;
    }
    table
}

/// Entrywise image `phi(A)`.
pub fn apply_map(phi: &dyn MultiplicativeMap, a: &ResidueMatrix) -> Result<SignMatrix> {
    let m = a.modulus();
    if phi.modulus() != m {
        return Err(Error::ModulusMismatch { left: phi.modulus().get(), right: m.get() });
    }
    Ok(SignMatrix { grid: a.grid().map(|v| phi.eval(Residue::new_unchecked(v, m))) })
}

/// `phi(rho(Q_n)) = phi(n) phi(Q_n)`, together with `sigma(phi(Q_n)) = phi(sigma(Q_n))`
/// for every dihedral element.
pub fn check_corollary(phi: &dyn MultiplicativeMap, n: usize) -> Result<bool> {
    let q = ResidueMatrix::sequential(n)?;
    let image = apply_map(phi, &q)?;
    let phi_n = phi.eval(q.modulus().reduce(n as i128));
    if apply_map(phi, &q.apply(DihedralElement::Rho))? != image.scale(phi_n) {
        return Ok(false);
    }
    for sigma in DihedralElement::ALL {
        if image.apply(sigma) != apply_map(phi, &q.apply(sigma))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_even(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroSide);
    }
    if n % 2 == 1 {
        return Err(Error::OddSide(n));
    }
    Ok(())
}

/// Expected sign `s` in `(rho(Q_n)/m) = s (Q_n/m)`: `+1` for `n = 0 (mod 4)`,
/// `-1` for `n = 2 (mod 4)`.
pub fn rotation_sign(n: usize) -> Result<Sign> {
    require_even(n)?;
    Ok(if n.is_multiple_of(4) { Sign::Plus } else { Sign::Minus })
}

/// Jacobi sign matrix of `Q_n` for even `n`.
pub fn jacobi_matrix(n: usize) -> Result<SignMatrix> {
    require_even(n)?;
    let q = ResidueMatrix::sequential(n)?;
    apply_map(&JacobiMap::new(q.modulus())?, &q)
}

pub fn check_jacobi_theorem(n: usize) -> Result<bool> {
    let s = rotation_sign(n)?;
    let q = ResidueMatrix::sequential(n)?;
    let phi = JacobiMap::new(q.modulus())?;
    let base = apply_map(&phi, &q)?;
    Ok(apply_map(&phi, &q.apply(DihedralElement::Rho))? == base.scale(s))
}

/// `(a/m) = (-a/m)` for all `a` and `(-1/m) = +1`, with `m = n^2 + 1`.
pub fn check_basic_symmetry(n: usize) -> Result<bool> {
    require_even(n)?;
    let m = Modulus::for_side(n)?.get();
    if jacobi(-1, m)? != Sign::Plus {
        return Ok(false);
    }
    Ok((1..m).all(|a| jacobi_reduced(a, m) == jacobi_reduced(m - a, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    /// Jacobi symbol from its definition: factor `m` by trial division and
    /// multiply Euler-criterion Legendre symbols.
    fn jacobi_by_factoring(a: i64, mut m: u64) -> Sign {
        let mut acc = Sign::Plus;
        let mut p = 3;
        while m > 1 {
            if p * p > m {
                p = m;
            }
            while m.is_multiple_of(p) {
                acc = acc * legendre_euler(a, p).unwrap();
                m /= p;
            }
            p += 2;
        }
        acc
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(3, 17).unwrap(), Sign::Minus);
        assert_eq!(jacobi(1, 17).unwrap(), Sign::Plus);
        assert_eq!(jacobi(1, 65).unwrap(), Sign::Plus);
        assert_eq!(jacobi(5, 65).unwrap(), Sign::Zero);
        assert_eq!(jacobi(16, 17).unwrap(), Sign::Plus);
        assert_eq!(jacobi(-1, 17).unwrap(), Sign::Plus);
        assert_eq!(jacobi(2, 9).unwrap(), Sign::Plus);
        assert_eq!(jacobi(1001, 9907).unwrap(), Sign::Minus);
        assert_eq!(jacobi(2, 15).unwrap(), Sign::Plus);
        assert_eq!(jacobi(3, 45).unwrap(), Sign::Zero);
    }

    #[test]
    fn jacobi_domain_errors() {
        assert!(matches!(jacobi(3, 16), Err(Error::EvenModulus(16))));
        assert!(matches!(jacobi(3, 1), Err(Error::ModulusTooSmall(1))));
        assert!(matches!(jacobi(3, 0), Err(Error::EvenModulus(0))));
        assert!(JacobiMap::new(md(10)).is_err());
    }

    #[test]
    fn jacobi_matches_factored_definition() {
        for m in (3..400u64).step_by(2) {
            for a in -5..(m as i64 + 5) {
                assert_eq!(jacobi(a, m).unwrap(), jacobi_by_factoring(a, m), "({a}/{m})");
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_euler(2, 17).unwrap(), Sign::Plus);
        assert_eq!(legendre_euler(17, 17).unwrap(), Sign::Zero);
        assert_eq!(legendre_euler(3, 17).unwrap(), Sign::Minus);
        assert!(matches!(legendre_euler(3, 1), Err(Error::ModulusTooSmall(1))));
        assert!(matches!(legendre_euler(3, 18), Err(Error::EvenModulus(18))));
        assert!(matches!(legendre_euler(3, 15), Err(Error::NotPrime(15))));
    }

    #[test]
    fn bruteforce_examples() {
        let m17 = md(17);
        assert!(qr_bruteforce(m17.reduce(-1)));
        assert!(qr_bruteforce(m17.zero()));
        assert!(!qr_bruteforce(m17.reduce(3)));
        let squares: Vec<u64> = (1..17).filter(|&a| qr_bruteforce(m17.reduce(a as i128))).collect();
        assert_eq!(squares, vec![1, 2, 4, 8, 9, 13, 15, 16]);
        let table = squares_table(m17);
        assert!((0..17).all(|a| table[a as usize] == qr_bruteforce(m17.reduce(a as i128))));
    }

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Zero, Sign::Zero);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::parity(9), Sign::Minus);
        assert_eq!(Sign::from_i8(2), None);
    }

    #[test]
    fn maps_are_completely_multiplicative() {
        for m in [3u64, 9, 15, 17, 21, 25, 45] {
            assert!(is_completely_multiplicative(&JacobiMap::new(md(m)).unwrap()));
        }
        for m in [2u64, 10, 12, 17, 26] {
            assert!(is_completely_multiplicative(&UnitIndicator::new(md(m))));
        }
        let bogus = FnMap::new(md(17), |a: Residue| if a.value() == 3 { Sign::Minus } else { Sign::Plus });
        assert!(!is_completely_multiplicative(&bogus));
    }

    #[test]
    fn small_sign_matrices() {
        let q1 = ResidueMatrix::sequential(1).unwrap();
        let img = apply_map(&UnitIndicator::new(q1.modulus()), &q1).unwrap();
        assert_eq!(img.entry(1, 1), Sign::Plus);
        let q2 = jacobi_matrix(2).unwrap();
        let flat: Vec<i8> = q2.grid().cells().iter().map(|s| s.to_i8()).collect();
        assert_eq!(flat, vec![1, -1, -1, 1]);
    }

    #[test]
    fn apply_map_checks_modulus() {
        let q4 = ResidueMatrix::sequential(4).unwrap();
        let phi = JacobiMap::new(md(37)).unwrap();
        assert!(matches!(apply_map(&phi, &q4), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn corollary_holds() {
        for n in (2..=20).step_by(2) {
            let m = Modulus::for_side(n).unwrap();
            assert!(check_corollary(&JacobiMap::new(m).unwrap(), n).unwrap(), "n = {n}");
        }
        for n in 1..=20 {
            let m = Modulus::for_side(n).unwrap();
            assert!(check_corollary(&UnitIndicator::new(m), n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn corollary_rejects_non_multiplicative_map() {
        // sign flip only at 4 breaks phi(4 * 1) = phi(4) phi(1) relations on Q_4
        let m = Modulus::for_side(4).unwrap();
        let bogus = FnMap::new(m, |a: Residue| if a.value() == 4 { Sign::Minus } else { Sign::Plus });
        assert!(!check_corollary(&bogus, 4).unwrap());
    }

    #[test]
    fn jacobi_theorem_small() {
        assert_eq!(rotation_sign(4).unwrap(), Sign::Plus);
        assert_eq!(rotation_sign(6).unwrap(), Sign::Minus);
        assert_eq!(rotation_sign(2).unwrap(), Sign::Minus);
        for n in [2, 4, 6, 8, 10, 12] {
            assert!(check_jacobi_theorem(n).unwrap());
        }
        assert!(matches!(check_jacobi_theorem(5), Err(Error::OddSide(5))));
        assert!(matches!(check_jacobi_theorem(0), Err(Error::ZeroSide)));
    }

    #[test]
    fn q4_symbol_matrix_fixed_by_all_rotations() {
        let s = jacobi_matrix(4).unwrap();
        for k in [DihedralElement::Rho, DihedralElement::Rho2, DihedralElement::Rho3] {
            assert_eq!(s.apply(k), s);
        }
        let s6 = jacobi_matrix(6).unwrap();
        assert_eq!(s6.apply(DihedralElement::Rho), s6.scale(Sign::Minus));
    }

    #[test]
    fn centro_symmetry() {
        for n in (2..=30).step_by(2) {
            let s = jacobi_matrix(n).unwrap();
            assert_eq!(s.apply(DihedralElement::Rho2), s);
        }
    }

    #[test]
    fn basic_symmetry() {
        assert!(check_basic_symmetry(4).unwrap());
        assert!(check_basic_symmetry(8).unwrap());
        assert!(matches!(check_basic_symmetry(3), Err(Error::OddSide(3))));
        // m = 7 is not of the form n^2 + 1 and -1 is not a square there
        assert_eq!(jacobi(-1, 7).unwrap(), Sign::Minus);
    }
}
