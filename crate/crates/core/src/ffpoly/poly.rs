use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use super::{FiniteField, PrimeField};
use crate::error::{Error, Result};

/// Dense univariate polynomial over a finite field, coefficients stored from
/// the constant term upward. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<K: FiniteField> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: FiniteField> Poly<K> {
    pub fn new(field: K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: K) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: K) -> Self {
        let one = field.one();
        Poly::new(field, vec![one])
    }

    pub fn x(field: K) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Poly::new(field, coeffs)
    }

    pub fn monomial(field: K, c: K::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(field, coeffs)
    }

    pub fn from_elem(field: K, c: K::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_u64(i as u64)))
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn eval(&self, at: &K::Elem) -> K::Elem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, at), c)
        })
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let k = &self.field;
        let lead_inv = k.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(k.clone()), self.clone()));
        }
        let mut quot = vec![k.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if k.is_zero(&rem[i]) {
                continue;
            }
            let q = k.mul(&rem[i], &lead_inv);
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = k.sub(&rem[idx], &k.mul(&q, dc));
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Poly::new(k.clone(), quot), Poly::new(k.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of an exact division; panics in debug builds if the
    /// remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd(0, 0) is undefined".into()));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(g, s)` with `g = gcd(self, m)` monic and `s * self = g (mod m)`.
    pub fn gcd_ext_left(&self, m: &Self) -> Result<(Self, Self)> {
        let k = self.field.clone();
        let (mut r0, mut r1) = (self.rem(m)?, m.clone());
        let (mut s0, mut s1) = (Poly::one(k.clone()), Poly::zero(k.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.is_zero() {
            return Err(Error::Domain("gcd(0, 0) is undefined".into()));
        }
        let inv = k.inv(r0.leading().unwrap()).unwrap();
        Ok((r0.scale(&inv), s0.scale(&inv)))
    }

    /// Inverse modulo `m`, if `gcd(self, m) = 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        if self.rem(m).ok()?.is_zero() {
            return None;
        }
        let (g, s) = self.gcd_ext_left(m).ok()?;
        g.is_one().then(|| s.rem(m).unwrap())
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m).expect("nonzero modulus")
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Poly::one(self.field.clone()).rem(m).unwrap();
        let base = self.rem(m).unwrap();
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.field.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `g` with `g^p = self`, when every exponent present is a multiple of `p`.
    pub fn pth_root(&self) -> Option<Self> {
        let p = self.field.characteristic() as usize;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() / p + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                coeffs.push(self.field.pth_root(c));
            } else if !self.field.is_zero(c) {
                return None;
            }
        }
        Some(Poly::new(self.field.clone(), coeffs))
    }

    /// Renders with the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let (text, compound) = self.field.render(c);
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let body = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&text);
            } else if self.field.is_one(c) {
                out.push_str(&body);
            } else if compound {
                out.push_str(&format!("({text})*{body}"));
            } else if text.contains(char::is_alphabetic) {
                out.push_str(&format!("{text}*{body}"));
            } else {
                out.push_str(&format!("{text}{body}"));
            }
        }
        out
    }
}

impl Poly<PrimeField> {
    /// Convenience constructor from signed integers, constant term first.
    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.reduce_i64(c)).collect();
        Poly::new(field, coeffs)
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Poly::new(field, vec![c % field.p()])
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }
}

impl<K: FiniteField> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // coefficients of extension-field polynomials are polynomials in x
        let var = if self.field.extension_degree() == 1 { "x" } else { "y" };
        f.write_str(&self.render(var))
    }
}

/// Canonical order: ascending degree, then coefficients compared from the
/// leading term downward.
impl<K: FiniteField> Ord for Poly<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<K: FiniteField> PartialOrd for Poly<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: FiniteField> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let k = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => k.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(k.clone(), coeffs)
    }
}

impl<K: FiniteField> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        self + &(-rhs)
    }
}

impl<K: FiniteField> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }
}

impl<K: FiniteField> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        let k = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(k.clone());
        }
        let mut coeffs = vec![k.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = k.add(&coeffs[i + j], &k.mul(a, b));
            }
        }
        Poly::new(k.clone(), coeffs)
    }
}
