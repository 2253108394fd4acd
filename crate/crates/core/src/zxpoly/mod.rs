//! Integer polynomials: parsing and printing, reduction mod p, phi-adic
//! expansions and exact discriminants.

mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{canonical_residue, vp_min, Valuation};
use crate::error::{Error, Result};
use crate::ffpoly::{FpPoly, PrimeField};

pub use parse::parse_poly;

/// Dense polynomial over `Z`, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZxPoly {
    coeffs: Vec<BigInt>,
}

impl ZxPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZxPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZxPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZxPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZxPoly::from_i64(&[1])
    }

    pub fn x() -> Self {
        ZxPoly::from_i64(&[0, 1])
    }

    /// `x^n - m`.
    pub fn pure(n: usize, m: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -m.clone();
        coeffs[n] = BigInt::one();
        ZxPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        ZxPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Minimum p-adic valuation of the coefficients.
    pub fn vp(&self, p: u64) -> Valuation {
        vp_min(p, &self.coeffs)
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Self {
        ZxPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    /// Euclidean division by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &ZxPoly) -> Result<(ZxPoly, ZxPoly)> {
        if !divisor.is_monic() {
            return Err(Error::Domain(format!("divisor {divisor} is not monic")));
        }
        let dd = divisor.degree().unwrap();
        if self.coeffs.len() <= dd {
            return Ok((ZxPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = std::mem::take(&mut rem[i]);
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                if !c.is_zero() {
                    rem[i - dd + j] -= &q * c;
                }
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((ZxPoly::new(quot), ZxPoly::new(rem)))
    }

    /// Coefficientwise least nonnegative residues mod `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<FpPoly> {
        let field = PrimeField::new(p)?;
        Ok(FpPoly::new(
            field,
            self.coeffs.iter().map(|c| canonical_residue(c, p)).collect(),
        ))
    }

    /// The lift with coefficients in `0..p`.
    pub fn lift(f: &FpPoly) -> Self {
        ZxPoly::new(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }
}

impl fmt::Display for ZxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &ZxPoly {
    type Output = ZxPoly;
    fn add(self, rhs: &ZxPoly) -> ZxPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZxPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZxPoly {
    type Output = ZxPoly;
    fn sub(self, rhs: &ZxPoly) -> ZxPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZxPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &ZxPoly {
    type Output = ZxPoly;
    fn neg(self) -> ZxPoly {
        ZxPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ZxPoly {
    type Output = ZxPoly;
    fn mul(self, rhs: &ZxPoly) -> ZxPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZxPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ZxPoly::new(out)
    }
}

/// `F = sum a_i(x) phi(x)^i` with `deg a_i < deg phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiExpansion {
    phi: ZxPoly,
    terms: Vec<ZxPoly>,
}

impl PhiExpansion {
    pub fn phi(&self) -> &ZxPoly {
        &self.phi
    }

    /// `a_0, ..., a_l`; zero terms are kept in place.
    pub fn terms(&self) -> &[ZxPoly] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> Option<&ZxPoly> {
        self.terms.get(i)
    }

    /// Index of the last term.
    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Horner evaluation of `sum a_i phi^i`.
    pub fn reconstruct(&self) -> ZxPoly {
        self.terms
            .iter()
            .rev()
            .fold(ZxPoly::zero(), |acc, a| &(&acc * &self.phi) + a)
    }
}

/// Expansion by repeated Euclidean division by `phi`.
pub fn phi_expand(f: &ZxPoly, phi: &ZxPoly) -> Result<PhiExpansion> {
    if !phi.is_monic() {
        return Err(Error::Domain(format!("phi = {phi} is not monic")));
    }
    if phi.degree() == Some(0) {
        return Err(Error::Domain("phi must have positive degree".into()));
    }
    if f.is_zero() {
        return Err(Error::Domain("cannot expand the zero polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut cur = f.clone();
    while !cur.is_zero() {
        let (q, r) = cur.div_rem_monic(phi)?;
        terms.push(r);
        cur = q;
    }
    Ok(PhiExpansion {
        phi: phi.clone(),
        terms,
    })
}

/// Determinant by fraction-free Gaussian elimination with row pivoting.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// `Res(f, g)` as the determinant of the Sylvester matrix (rows of `f` first).
pub fn resultant(f: &ZxPoly, g: &ZxPoly) -> BigInt {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let size = n + m;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_determinant(rows)
}

/// `disc(F) = (-1)^(n(n-1)/2) Res(F, F')` for monic `F` of degree at least 2.
pub fn discriminant(f: &ZxPoly) -> Result<BigInt> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::Domain("discriminant needs degree at least 2".into()));
    }
    if !f.is_monic() {
        return Err(Error::Domain(format!("{f} is not monic")));
    }
    let res = resultant(f, &f.derivative());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(c: &[i64]) -> ZxPoly {
        ZxPoly::from_i64(c)
    }

    #[test]
    fn expansion_examples() {
        let f = parse_poly("x^3 - 5").unwrap();
        let e = phi_expand(&f, &ZxPoly::x()).unwrap();
        assert_eq!(e.terms(), &[z(&[-5]), z(&[]), z(&[]), z(&[1])]);

        let f = parse_poly("x^4 + 1").unwrap();
        let e = phi_expand(&f, &z(&[1, 0, 1])).unwrap();
        assert_eq!(e.terms(), &[z(&[2]), z(&[-2]), z(&[1])]);
        // (x^2+1)^2 - 2(x^2+1) + 2 = x^4 + 1
        assert_eq!(e.reconstruct(), f);

        let e = phi_expand(&f, &z(&[1, 1])).unwrap();
        assert_eq!(e.terms(), &[z(&[2]), z(&[-4]), z(&[6]), z(&[-4]), z(&[1])]);
        assert_eq!(e.reconstruct(), f);

        assert!(matches!(phi_expand(&f, &z(&[1, 2])), Err(Error::Domain(_))));
    }

    #[test]
    fn reduction_examples() {
        let f = parse_poly("x^30 - 7").unwrap();
        let r2 = f.reduce_mod_p(2).unwrap();
        assert_eq!(r2.coeffs()[0], 1);
        assert_eq!(r2.degree(), Some(30));
        let r7 = f.reduce_mod_p(7).unwrap();
        assert_eq!(r7.coeffs().iter().filter(|&&c| c != 0).count(), 1);
        let r = parse_poly("x^4 + 1").unwrap().reduce_mod_p(2).unwrap();
        let fs = crate::ffpoly::factor(&r).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 4);
        assert_eq!(fs[0].0.to_string(), "x + 1");
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&parse_poly("x^2 - 7").unwrap()).unwrap(), BigInt::from(28));
        assert_eq!(discriminant(&parse_poly("x^2 + 3").unwrap()).unwrap(), BigInt::from(-12));
        assert_eq!(discriminant(&parse_poly("x^3 - 2").unwrap()).unwrap(), BigInt::from(-108));
        assert!(discriminant(&parse_poly("x + 1").unwrap()).is_err());
    }

    #[test]
    fn direct_sylvester_for_cubic() {
        // x^3 - 2 and 3x^2, expanded by cofactors on the 5x5 matrix
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 0, 0, -2, 0],
            vec![0, 1, 0, 0, -2],
            vec![3, 0, 0, 0, 0],
            vec![0, 3, 0, 0, 0],
            vec![0, 0, 3, 0, 0],
        ];
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * det(&minor)
                })
                .sum()
        }
        let res = det(&rows);
        // n = 3: (-1)^3 Res
        assert_eq!(-res, -108);
        assert_eq!(resultant(&parse_poly("x^3-2").unwrap(), &parse_poly("3x^2").unwrap()), BigInt::from(res));
    }

    #[test]
    fn pure_discriminant_closed_form() {
        for n in [6usize, 10, 15, 30] {
            for m in [2i64, -2, 3, -3, 7, -7, 10, -10] {
                let f = ZxPoly::pure(n, &BigInt::from(m));
                let d = discriminant(&f).unwrap();
                let want = BigInt::from(n).pow(n as u32) * BigInt::from(m.abs()).pow(n as u32 - 1);
                assert_eq!(d.abs(), want, "n={n} m={m}");
            }
        }
    }

    fn arb_zx(max_deg: usize, bound: i64) -> impl Strategy<Value = ZxPoly> {
        prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| ZxPoly::from_i64(&c))
    }

    fn arb_monic(min_deg: usize, max_deg: usize, bound: i64) -> impl Strategy<Value = ZxPoly> {
        prop::collection::vec(-bound..=bound, min_deg..=max_deg).prop_map(|mut c| {
            c.push(1);
            ZxPoly::from_i64(&c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn expansion_reconstructs(f in arb_zx(64, 1000).prop_filter("nonzero", |f| !f.is_zero()), phi in arb_monic(1, 4, 9)) {
            let e = phi_expand(&f, &phi).unwrap();
            let dphi = phi.degree().unwrap();
            for a in e.terms() {
                prop_assert!(a.degree().is_none_or(|d| d < dphi));
            }
            prop_assert!(!e.terms().last().unwrap().is_zero());
            prop_assert_eq!(e.reconstruct(), f);
        }

        #[test]
        fn print_parse_round_trip(f in arb_zx(40, 1_000_000)) {
            let text = f.to_string();
            prop_assert_eq!(parse_poly(&text).unwrap(), f);
        }
    }
}
