//! Exact integer utilities: p-adic valuations, factorization with a bounded
//! effort budget, square-free testing and irreducible-polynomial counts.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Trial division bound used before falling back to Pollard-Brent.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Total number of Pollard-Brent iterations allowed per factorization.
pub const RHO_ITERATION_BUDGET: u64 = 1 << 22;

const RHO_SEED: u64 = 0x6d6f_6e74_6573;

/// A p-adic valuation; `Infinity` is the valuation of zero and compares
/// greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinity
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Largest `k` with `p^k | n`, or `Infinity` for `n = 0`.
///
/// `p` must be a prime (at least `2`); primality is the caller's business.
pub fn vp(p: u64, n: &BigInt) -> Valuation {
    assert!(p >= 2, "valuation base must be at least 2");
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let mut k = 0;
    let mut cur = n.magnitude().clone();
    // Strip p^(2^j) chunks first so large valuations stay cheap.
    let mut powers = vec![BigUint::from(p)];
    loop {
        let next = powers.last().unwrap() * powers.last().unwrap();
        if next.bits() > cur.bits() {
            break;
        }
        powers.push(next);
    }
    for (j, pw) in powers.iter().enumerate().rev() {
        loop {
            let (q, r) = cur.div_rem(pw);
            if !r.is_zero() {
                break;
            }
            cur = q;
            k += 1u64 << j;
        }
    }
    Valuation::Finite(k)
}

pub fn vp_i64(p: u64, n: i64) -> Valuation {
    vp(p, &BigInt::from(n))
}

/// Valuation of a polynomial's coefficient list: the minimum over its
/// nonzero coefficients (`Infinity` for the zero polynomial).
pub fn vp_min<'a>(p: u64, coeffs: impl IntoIterator<Item = &'a BigInt>) -> Valuation {
    coeffs
        .into_iter()
        .map(|c| vp(p, c))
        .min()
        .unwrap_or(Valuation::Infinity)
}

/// `v_p(C(p^r, j)) = r - v_p(j)` for `1 <= j <= p^r - 1`.
pub fn vp_binomial(p: u64, r: u32, j: u64) -> Result<u64> {
    let pr = p
        .checked_pow(r)
        .ok_or_else(|| Error::Range(format!("{p}^{r} does not fit in 64 bits")))?;
    if r == 0 || j == 0 || j >= pr {
        return Err(Error::Range(format!("j = {j} outside 1..{p}^{r}-1")));
    }
    let vj = vp(p, &BigInt::from(j)).finite().unwrap();
    Ok(u64::from(r) - vj)
}

/// Least nonnegative residue of `m` modulo `modulus`.
pub fn canonical_residue(m: &BigInt, modulus: u64) -> u64 {
    assert!(modulus >= 2, "modulus must be at least 2");
    m.mod_floor(&BigInt::from(modulus)).to_u64().unwrap()
}

pub fn canonical_residue_i64(m: i64, modulus: u64) -> u64 {
    canonical_residue(&BigInt::from(m), modulus)
}

/// `sign * prod p_i^{e_i}` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub prime_powers: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    /// Builds a factorization from a prime list, merging repeats. Each entry
    /// must pass the probable-prime test.
    pub fn from_primes(sign: i8, primes: &[BigUint]) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Input("sign must be +1 or -1".into()));
        }
        let mut sorted = primes.to_vec();
        sorted.sort();
        let mut prime_powers: Vec<(BigUint, u32)> = Vec::new();
        for q in sorted {
            if !is_probable_prime(&q) {
                return Err(Error::Input(format!("{q} is not prime")));
            }
            match prime_powers.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => prime_powers.push((q, 1)),
            }
        }
        Ok(FactoredInteger { sign, prime_powers })
    }

    pub fn value(&self) -> BigInt {
        let mag: BigUint = self
            .prime_powers
            .iter()
            .map(|(q, e)| q.pow(*e))
            .product();
        if self.sign < 0 {
            -BigInt::from(mag)
        } else {
            BigInt::from(mag)
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.prime_powers.iter().all(|(_, e)| *e == 1)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.prime_powers.iter().map(|(q, _)| q)
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_DIVISION_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter_map(|(k, &b)| b.then_some(k as u64))
            .collect()
    })
}

/// Miller-Rabin with the first twenty prime bases. Deterministic for
/// `n < 3.3 * 10^24`, probabilistic (and never observed wrong) above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u64; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    if *n < BigUint::from(2u32) {
        return false;
    }
    for &b in &BASES {
        let bb = BigUint::from(b);
        if *n == bb {
            return true;
        }
        if (n % &bb).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'outer: for &b in &BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Pollard-Brent; returns a nontrivial factor or `None` when the shared
/// iteration budget runs out.
fn pollard_brent(n: &BigUint, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigUint> {
    let one = BigUint::one();
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    while *budget > 0 {
        let c = rng.gen_biguint_range(&one, n);
        let mut y = rng.gen_biguint_range(&one, n);
        let m = 128u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let f = |v: &BigUint| (v * v + &c) % n;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                let steps = m.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += steps;
                *budget = budget.saturating_sub(steps);
                if *budget == 0 && g == one {
                    return None;
                }
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
    }
    None
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>, rng: &mut ChaCha8Rng, budget: &mut u64) -> bool {
    if n.is_one() {
        return true;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return true;
    }
    if is_perfect_square(&n) {
        let r = n.sqrt();
        let mut sub = Vec::new();
        if !split_into(r, &mut sub, rng, budget) {
            return false;
        }
        out.extend(sub.iter().cloned());
        out.extend(sub);
        return true;
    }
    match pollard_brent(&n, rng, budget) {
        Some(d) => {
            let other = &n / &d;
            split_into(d, out, rng, budget) && split_into(other, out, rng, budget)
        }
        None => false,
    }
}

/// Full factorization of a nonzero integer: trial division up to
/// [`TRIAL_DIVISION_BOUND`], then Pollard-Brent with a fixed seed and a
/// bounded iteration budget.
pub fn factor_integer(n: &BigInt) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();

    for &q in small_primes() {
        if let Some(r) = rest.to_u64() {
            if q.saturating_mul(q) > r {
                break;
            }
        }
        let qb = BigUint::from(q);
        while (&rest % &qb).is_zero() {
            rest /= &qb;
            primes.push(qb.clone());
        }
        if rest.is_one() {
            break;
        }
    }

    if !rest.is_one() {
        let bound = BigUint::from(TRIAL_DIVISION_BOUND);
        if rest <= &bound * &bound || is_probable_prime(&rest) {
            // No factor below the bound, so what is left is prime.
            primes.push(rest);
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
            let mut budget = RHO_ITERATION_BUDGET;
            if !split_into(rest, &mut primes, &mut rng, &mut budget) {
                return Err(Error::FactoringBudgetExceeded(n.to_string()));
            }
        }
    }
    primes.sort();
    let mut prime_powers: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match prime_powers.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => prime_powers.push((q, 1)),
        }
    }
    Ok(FactoredInteger { sign, prime_powers })
}

/// Square-freeness by full factorization. Requires `|n| >= 2`.
pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    if n.abs() < BigInt::from(2) {
        return Err(Error::Domain(format!("is_squarefree needs |n| >= 2, got {n}")));
    }
    Ok(factor_integer(n)?.is_squarefree())
}

pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1);
    let mut n = n;
    let mut mu = 1i8;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return 0;
            }
            mu = -mu;
        }
        q += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of monic irreducible polynomials of degree `f` over `F_p`:
/// `(1/f) * sum_{d | f} mu(d) p^(f/d)`.
pub fn monic_irreducible_count(p: u64, f: u64) -> BigUint {
    assert!(f >= 1, "degree must be positive");
    let pb = BigInt::from(p);
    let mut total = BigInt::zero();
    for d in (1..=f).filter(|d| f.is_multiple_of(*d)) {
        let term = pb.pow((f / d) as u32);
        match mobius(d) {
            1 => total += term,
            -1 => total -= term,
            _ => {}
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(f));
    debug_assert!(r.is_zero());
    q.to_biguint().unwrap()
}

/// Extended Euclid on `i128`: returns `(g, x, y)` with `a x + b y = g`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(vp(2, &big(8)), Valuation::Finite(3));
        assert_eq!(vp(3, &big(-18)), Valuation::Finite(2));
        assert_eq!(vp(5, &big(0)), Valuation::Infinity);
        assert_eq!(vp(7, &big(7i64.pow(20) * 3)), Valuation::Finite(20));
        assert!(Valuation::Infinity > Valuation::Finite(u64::MAX));
    }

    #[test]
    fn binomial_valuation_examples() {
        assert_eq!(vp_binomial(2, 3, 4).unwrap(), 1);
        // C(8, 4) = 70 = 2 * 35
        assert_eq!(vp(2, &big(70)), Valuation::Finite(1));
        assert_eq!(vp_binomial(5, 2, 1).unwrap(), 2);
        assert!(matches!(vp_binomial(2, 3, 8), Err(Error::Range(_))));
        assert!(matches!(vp_binomial(2, 3, 0), Err(Error::Range(_))));
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&big(30)).unwrap());
        assert!(!is_squarefree(&big(12)).unwrap());
        assert!(is_squarefree(&big(-7)).unwrap());
        assert!(is_squarefree(&big(1)).is_err());
    }

    #[test]
    fn squarefree_matches_divisor_scan() {
        let naive = |n: i64| {
            let n = n.abs();
            let mut d = 2;
            while d * d <= n {
                if n % (d * d) == 0 {
                    return false;
                }
                d += 1;
            }
            true
        };
        for n in (2..3000).chain(999_000..1_000_000) {
            assert_eq!(is_squarefree(&big(n)).unwrap(), naive(n), "n = {n}");
            assert_eq!(is_squarefree(&big(-n)).unwrap(), naive(n), "n = -{n}");
        }
    }

    #[test]
    fn factors_past_trial_bound() {
        // two primes just above 10^6 and a square of one
        let p1 = 1_000_003i64;
        let p2 = 1_000_033i64;
        let f = factor_integer(&(big(p1) * big(p2) * big(6))).unwrap();
        assert_eq!(f.value(), big(p1) * big(p2) * big(6));
        assert!(f.is_squarefree());
        assert!(!is_squarefree(&(big(p1) * big(p1) * big(5))).unwrap());
        let huge = BigInt::from(2u64.pow(61) - 1) * BigInt::from(1_000_000_007u64);
        let f = factor_integer(&huge).unwrap();
        assert_eq!(f.prime_powers.len(), 2);
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(monic_irreducible_count(2, 2), BigUint::from(1u32));
        assert_eq!(monic_irreducible_count(5, 2), BigUint::from(10u32));
        assert_eq!(monic_irreducible_count(3, 1), BigUint::from(3u32));
        assert_eq!(monic_irreducible_count(3, 2), BigUint::from(3u32));
    }

    #[test]
    fn necklace_identity() {
        for p in [2u64, 3, 5, 7] {
            for f in 1..=6u64 {
                let sum: BigUint = (1..=f)
                    .filter(|d| f % d == 0)
                    .map(|d| monic_irreducible_count(p, d) * d)
                    .sum();
                assert_eq!(sum, BigUint::from(p).pow(f as u32), "p={p} f={f}");
            }
        }
    }

    #[test]
    fn residues() {
        assert_eq!(canonical_residue_i64(-7, 4), 1);
        assert_eq!(canonical_residue_i64(82, 625), 82);
        assert_eq!(canonical_residue_i64(-82, 625), 543);
    }

    #[test]
    fn binomial_valuation_exhaustive_small() {
        for p in [2u64, 3, 5] {
            for r in 1..=3u32 {
                let pr = p.pow(r);
                let mut c = BigInt::one();
                for j in 1..pr {
                    c = c * BigInt::from(pr - j + 1) / BigInt::from(j);
                    assert_eq!(
                        Valuation::Finite(vp_binomial(p, r, j).unwrap()),
                        vp(p, &c)
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn valuation_is_multiplicative(a in 1i64..1_000_000_000, b in -1_000_000_000i64..-1, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
            let lhs = vp(p, &(big(a) * big(b))).finite().unwrap();
            let rhs = vp(p, &big(a)).finite().unwrap() + vp(p, &big(b)).finite().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn factorization_reconstructs(n in 2i64..i64::MAX) {
            let f = factor_integer(&big(n)).unwrap();
            prop_assert_eq!(f.value(), big(n));
        }
    }
}
