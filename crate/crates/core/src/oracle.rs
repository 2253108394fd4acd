//! Brute-force reference implementations used to cross-check the engine.
//!
//! Nothing here calls into the polynomial, polygon or factoring code: the
//! oracles work on plain coefficient vectors with schoolbook arithmetic, and
//! only convert to [`FpPoly`] at the boundary.

use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ffpoly::{FpPoly, PrimeField};

/// Largest `p^f` that the enumerator will walk through.
pub const ENUMERATION_BUDGET: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub subject: String,
    pub agreed: bool,
    pub counterexample: Option<String>,
}

impl OracleReport {
    /// Runs `agrees` on every case and keeps the first failure.
    pub fn check<T: Debug>(
        subject: impl Into<String>,
        cases: impl IntoIterator<Item = T>,
        mut agrees: impl FnMut(&T) -> bool,
    ) -> Self {
        let subject = subject.into();
        for case in cases {
            if !agrees(&case) {
                return OracleReport { subject, agreed: false, counterexample: Some(format!("{case:?}")) };
            }
        }
        OracleReport { subject, agreed: true, counterexample: None }
    }
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
type Raw = Vec<u64>;

fn trim(mut a: Raw) -> Raw {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue")
}

fn divrem(a: &Raw, b: &Raw, p: u64) -> (Raw, Raw) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inverse_mod(*b.last().unwrap(), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1] * lead_inv % p;
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p * p - c * bi % p) % p;
        }
    }
    (trim(q), trim(r))
}

fn is_prime_small(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn decode(index: u64, p: u64, f: u32) -> Raw {
    let mut c = Vec::with_capacity(f as usize + 1);
    let mut k = index;
    for _ in 0..f {
        c.push(k % p);
        k /= p;
    }
    c.push(1);
    c
}

fn encode(a: &Raw, p: u64) -> u64 {
    // monic of degree f: drop the leading 1
    a[..a.len() - 1].iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn schoolbook_mul(a: &Raw, b: &Raw, p: u64) -> Raw {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

type Cache = Mutex<HashMap<(u64, u32), Arc<Vec<Raw>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monic irreducibles of degree `f` by sieving out every product of a
/// lower-degree irreducible with an arbitrary monic cofactor.
fn irreducibles_raw(p: u64, f: u32) -> Arc<Vec<Raw>> {
    if let Some(hit) = cache().lock().unwrap().get(&(p, f)) {
        return hit.clone();
    }
    let total = p.pow(f) as usize;
    let mut reducible = vec![false; total];
    for d in 1..=f / 2 {
        let small = irreducibles_raw(p, d);
        let rest = f - d;
        for g in small.iter() {
            for k in 0..p.pow(rest) {
                let h = decode(k, p, rest);
                reducible[encode(&schoolbook_mul(g, &h, p), p) as usize] = true;
            }
        }
    }
    let out: Arc<Vec<Raw>> = Arc::new(
        (0..total as u64)
            .filter(|&k| !reducible[k as usize])
            .map(|k| decode(k, p, f))
            .collect(),
    );
    cache().lock().unwrap().insert((p, f), out.clone());
    out
}

fn to_fp(a: &Raw, p: u64) -> FpPoly {
    FpPoly::new(PrimeField::new(p).unwrap(), a.clone())
}

/// All monic irreducible polynomials of degree `f` over `F_p`, in canonical
/// order. Any prime is accepted as long as `p^f` stays within
/// [`ENUMERATION_BUDGET`].
pub fn enumerate_monic_irreducibles(p: u64, f: u32) -> Result<Vec<FpPoly>> {
    if !is_prime_small(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if f == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    match p.checked_pow(f) {
        Some(q) if q <= ENUMERATION_BUDGET => {}
        _ => {
            return Err(Error::Range(format!(
                "{p}^{f} exceeds the enumeration budget {ENUMERATION_BUDGET}"
            )))
        }
    }
    Ok(irreducibles_raw(p, f).iter().map(|a| to_fp(a, p)).collect())
}

/// Largest degree whose irreducibles fit in the enumeration budget.
pub fn trial_degree_limit(p: u64) -> u32 {
    let mut k = 0;
    while p.pow(k + 1) <= ENUMERATION_BUDGET {
        k += 1;
    }
    k
}

/// Factorization by trial division against enumerated irreducibles. Fails
/// when a cofactor cannot be certified irreducible within budget.
pub fn factor_by_trial(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    let p = f.p();
    let coeffs: Raw = trim(f.coeffs().to_vec());
    if coeffs.len() < 2 {
        return Err(Error::Domain("cannot factor a constant or zero polynomial".into()));
    }
    let inv = inverse_mod(*coeffs.last().unwrap(), p);
    let mut rest: Raw = coeffs.iter().map(|c| c * inv % p).collect();
    let limit = trial_degree_limit(p);
    let mut found: Vec<(Raw, usize)> = Vec::new();
    let mut d = 1;
    while 2 * d < rest.len() as u32 {
        if d > limit {
            return Err(Error::Range(format!(
                "cofactor of degree {} over F_{p} needs irreducibles of degree {d}",
                rest.len() - 1
            )));
        }
        for g in irreducibles_raw(p, d).iter() {
            let mut k = 0;
            loop {
                let (q, r) = divrem(&rest, g, p);
                if !r.is_empty() {
                    break;
                }
                rest = q;
                k += 1;
            }
            if k > 0 {
                found.push((g.clone(), k));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        found.push((rest, 1));
    }
    // ascending degree, then leading coefficient downward
    found.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
    Ok(found.into_iter().map(|(g, k)| (to_fp(&g, p), k)).collect())
}

/// Integer points `(i, y)`, `i >= 1`, `y >= 1`, on or below the polygon
/// through `vertices`, by scanning the whole bounding box.
pub fn lattice_count_naive(vertices: &[(u64, u64)]) -> u64 {
    if vertices.len() < 2 {
        return 0;
    }
    let x_lo = vertices[0].0;
    let x_hi = vertices[vertices.len() - 1].0;
    let y_hi = vertices.iter().map(|v| v.1).max().unwrap();
    let mut count = 0;
    for i in x_lo.max(1)..=x_hi {
        for y in 1..=y_hi {
            // on or below the segment covering column i
            let below = vertices.windows(2).any(|w| {
                let (x0, y0) = (w[0].0 as i128, w[0].1 as i128);
                let (x1, y1) = (w[1].0 as i128, w[1].1 as i128);
                let (i, y) = (i as i128, y as i128);
                x0 <= i && i <= x1 && (y - y0) * (x1 - x0) <= (y1 - y0) * (i - x0)
            });
            if below {
                count += 1;
            }
        }
    }
    count
}

/// `v_p(C(p^r, j))` for `j = 1 .. p^r - 1`, from the binomial coefficients
/// themselves.
pub fn binomial_valuations_direct(p: u64, r: u32) -> Vec<u64> {
    let n = p.pow(r);
    let big_p = BigUint::from(p);
    let mut c = BigUint::one();
    let mut out = Vec::with_capacity(n as usize);
    for j in 1..n {
        c = c * BigUint::from(n - j + 1) / BigUint::from(j);
        let mut v = 0;
        let mut x = c.clone();
        while (&x % &big_p).is_zero() {
            x /= &big_p;
            v += 1;
        }
        out.push(v);
    }
    out
}

#[derive(Clone)]
struct Frac {
    num: BigInt,
    den: BigInt,
}

impl Frac {
    fn int(n: BigInt) -> Self {
        Frac { num: n, den: BigInt::one() }
    }

    fn norm(num: BigInt, den: BigInt) -> Self {
        let g = num_integer::Integer::gcd(&num, &den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Frac { num, den }
    }

    fn sub_mul(&self, a: &Frac, b: &Frac) -> Frac {
        let num = &self.num * &a.den * &b.den - &a.num * &b.num * &self.den;
        Frac::norm(num, &self.den * &a.den * &b.den)
    }

    fn div(&self, o: &Frac) -> Frac {
        Frac::norm(&self.num * &o.den, &self.den * &o.num)
    }
}

/// Discriminant `(-1)^(n(n-1)/2) Res(F, F') / lc` of an integer polynomial
/// (coefficients low first), by Gaussian elimination over the rationals on
/// the Sylvester matrix. Cubic cost in the degree; for small inputs only.
pub fn discriminant_rational(coeffs: &[i64]) -> BigInt {
    let n = coeffs.len() - 1;
    let f: Vec<BigInt> = coeffs.iter().rev().map(|&c| BigInt::from(c)).collect();
    let df: Vec<BigInt> = (0..n).map(|k| BigInt::from(coeffs[n - k]) * BigInt::from((n - k) as i64)).collect();
    let size = 2 * n - 1;
    let mut rows: Vec<Vec<Frac>> = Vec::with_capacity(size);
    for r in 0..n - 1 {
        let mut row = vec![Frac::int(BigInt::zero()); size];
        for (k, c) in f.iter().enumerate() {
            row[r + k] = Frac::int(c.clone());
        }
        rows.push(row);
    }
    for r in 0..n {
        let mut row = vec![Frac::int(BigInt::zero()); size];
        for (k, c) in df.iter().enumerate() {
            row[r + k] = Frac::int(c.clone());
        }
        rows.push(row);
    }
    let mut det = Frac::int(BigInt::one());
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !rows[r][col].num.is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            rows.swap(piv, col);
            det.num = -det.num;
        }
        let pivot = rows[col][col].clone();
        det = Frac::norm(&det.num * &pivot.num, &det.den * &pivot.den);
        for r in col + 1..size {
            if rows[r][col].num.is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&pivot);
            for c in col..size {
                let updated = rows[r][c].sub_mul(&factor, &rows[col][c]);
                rows[r][c] = updated;
            }
        }
    }
    assert!(det.den.is_one(), "determinant of an integer matrix");
    let lead = BigInt::from(coeffs[n]);
    let sign = if (n * (n - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    det.num * sign / lead
}
