//! Polynomials over prime fields `F_p` and over residue fields
//! `F_phi = F_p[x]/(phi)`, with squarefree / distinct-degree / equal-degree
//! factorization.

mod factor;
mod poly;

use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};

pub use factor::{
    distinct_degree_factorization, equal_degree_factorization, factor, factor_with_seed,
    is_irreducible, squarefree_decomposition,
};
pub use poly::Poly;

/// Default seed for the equal-degree splitting step.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_0f_0e_7a11;

/// Seed used by [`factor`]: `MONTES_LITE_SEED` when set to an integer,
/// otherwise [`DEFAULT_FACTOR_SEED`].
pub fn default_seed() -> u64 {
    static SEED: OnceLock<u64> = OnceLock::new();
    *SEED.get_or_init(|| {
        std::env::var("MONTES_LITE_SEED")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_FACTOR_SEED)
    })
}

/// A finite field, viewed as a context object that performs arithmetic on
/// plain element values.
pub trait FiniteField: Clone + fmt::Debug + PartialEq + Eq + Hash {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Ord + Hash;

    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn extension_degree(&self) -> usize;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_u64(&self, n: u64) -> Self::Elem;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Renders an element; the flag says whether it needs parentheses when
    /// used as a coefficient.
    fn render(&self, a: &Self::Elem) -> (String, bool);

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.extension_degree() as u32)
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The unique `b` with `b^p = a`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        let k = self.extension_degree() as u32;
        if k == 1 {
            return a.clone();
        }
        self.pow(a, &BigUint::from(self.characteristic()).pow(k - 1))
    }
}

/// The prime field `F_p`, elements held as residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be a prime below `2^32`; only `p >= 2` is checked here.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 {
            return Err(Error::Domain(format!("unsupported field characteristic {p}")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn extension_degree(&self) -> usize {
        1
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (g, x, _) = crate::arith::ext_gcd(*a as i128, self.p as i128);
        debug_assert_eq!(g, 1);
        Some(x.rem_euclid(self.p as i128) as u64)
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn render(&self, a: &u64) -> (String, bool) {
        (a.to_string(), false)
    }
}

pub type FpPoly = Poly<PrimeField>;
pub type FqPoly = Poly<FqField>;

/// `F_p[x]/(phi)` for a monic irreducible `phi`. Elements are the reduced
/// representatives of degree below `deg phi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqField {
    modulus: Arc<FpPoly>,
}

impl FqField {
    /// Checks that the modulus is monic and irreducible.
    pub fn new(modulus: FpPoly) -> Result<Self> {
        if !modulus.is_monic() {
            return Err(Error::Domain(format!("modulus {modulus} is not monic")));
        }
        if !is_irreducible(&modulus)? {
            return Err(Error::Domain(format!("modulus {modulus} is reducible")));
        }
        Ok(Self::new_unchecked(modulus))
    }

    /// For moduli already known to be monic irreducible (e.g. factor output).
    pub fn new_unchecked(modulus: FpPoly) -> Self {
        debug_assert!(modulus.is_monic());
        FqField {
            modulus: Arc::new(modulus),
        }
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn base(&self) -> PrimeField {
        *self.modulus.field()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn reduce(&self, a: &FpPoly) -> FpPoly {
        a.rem(&self.modulus).expect("modulus is nonzero")
    }

    /// The class of `x`.
    pub fn generator(&self) -> FpPoly {
        self.reduce(&FpPoly::x(self.base()))
    }
}

impl FiniteField for FqField {
    type Elem = FpPoly;

    fn characteristic(&self) -> u64 {
        self.base().p()
    }
    fn extension_degree(&self) -> usize {
        self.degree()
    }
    fn zero(&self) -> FpPoly {
        FpPoly::zero(self.base())
    }
    fn one(&self) -> FpPoly {
        FpPoly::one(self.base())
    }
    fn is_zero(&self, a: &FpPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a + b
    }
    fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a - b
    }
    fn neg(&self, a: &FpPoly) -> FpPoly {
        -a
    }
    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.reduce(&(a * b))
    }
    fn inv(&self, a: &FpPoly) -> Option<FpPoly> {
        a.inverse_mod(&self.modulus)
    }
    fn from_u64(&self, n: u64) -> FpPoly {
        FpPoly::constant(self.base(), n)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FpPoly {
        let base = self.base();
        let coeffs = (0..self.degree()).map(|_| base.random(rng)).collect();
        FpPoly::new(base, coeffs)
    }
    fn render(&self, a: &FpPoly) -> (String, bool) {
        let atomic = a.degree().unwrap_or(0) == 0 || a.coeffs().iter().filter(|c| **c != 0).count() == 1;
        (a.to_string(), !atomic)
    }
    fn is_one(&self, a: &FpPoly) -> bool {
        a.is_one()
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree() as u32)
    }
}

impl FqPoly {
    /// Lifts an `F_p` polynomial coefficientwise into `F_phi`.
    pub fn from_base(field: &FqField, f: &FpPoly) -> Self {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|&c| FpPoly::constant(field.base(), c))
            .collect();
        Poly::new(field.clone(), coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fq_inverse_and_generator() {
        let f2 = PrimeField::new(2).unwrap();
        let phi = FpPoly::from_i64(f2, &[1, 1, 1]);
        let k = FqField::new(phi).unwrap();
        let x = k.generator();
        let x2 = k.mul(&x, &x);
        // x^2 = x + 1 in F_4
        assert_eq!(x2, FpPoly::from_i64(f2, &[1, 1]));
        assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
        assert_eq!(k.pow(&x, &BigUint::from(3u32)), k.one());
        assert_eq!(k.pth_root(&x2), x);
    }

    #[test]
    fn reducible_modulus_rejected() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(FqField::new(FpPoly::from_i64(f3, &[-1, 0, 1])).is_err());
        assert!(FqField::new(FpPoly::from_i64(f3, &[1, 0, 2])).is_err());
    }
}
