use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{default_seed, FiniteField, Poly};
use crate::error::{Error, Result};

/// Irreducibility over the coefficient field: `gcd(x^(q^i) - x, f) = 1` for
/// every `i <= deg f / 2`.
pub fn is_irreducible<K: FiniteField>(f: &Poly<K>) -> Result<bool> {
    let n = f
        .degree()
        .ok_or_else(|| Error::Domain("irreducibility of the zero polynomial".into()))?;
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let q = f.field().order();
    let x = Poly::x(f.field().clone());
    let mut h = x.rem(f)?;
    for _ in 0..n / 2 {
        h = h.pow_mod(&q, f);
        if !f.gcd(&(&h - &x))?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, k)` with the
/// `g` squarefree, pairwise coprime and `f = prod g^k`.
pub fn squarefree_decomposition<K: FiniteField>(f: &Poly<K>) -> Vec<(Poly<K>, usize)> {
    let p = f.field().characteristic() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        let root = f.pth_root().expect("zero derivative implies a p-th power");
        for (g, k) in squarefree_decomposition(&root) {
            out.push((g, k * p));
        }
        return out;
    }
    let mut c = f.gcd(&df).unwrap();
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c).unwrap();
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.exact_div(&y);
        w = y;
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root().expect("remaining cofactor is a p-th power");
        for (g, k) in squarefree_decomposition(&root) {
            out.push((g, k * p));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into `(g_d, d)` where `g_d` is the
/// product of all its irreducible factors of degree `d`.
pub fn distinct_degree_factorization<K: FiniteField>(f: &Poly<K>) -> Vec<(Poly<K>, usize)> {
    let q = f.field().order();
    let x = Poly::x(f.field().clone());
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest).unwrap();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&q, &rest);
        let g = rest.gcd(&(&h - &x)).unwrap();
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest).unwrap();
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Cantor-Zassenhaus splitting of a monic squarefree `f` whose irreducible
/// factors all have degree `d`.
pub fn equal_degree_factorization<K: FiniteField>(
    f: &Poly<K>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly<K>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let p = field.characteristic();
    let q = field.order();
    let qd = q.pow(d as u32);
    loop {
        let coeffs: Vec<K::Elem> = (0..n).map(|_| field.random(rng)).collect();
        let a = Poly::new(field.clone(), coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace down to F_2
            let steps = d * field.extension_degree();
            let mut term = a.rem(f).unwrap();
            let mut acc = term.clone();
            for _ in 1..steps {
                term = term.mul_mod(&term, f);
                acc = &acc + &term;
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) >> 1;
            &a.pow_mod(&e, f) - &Poly::one(field.clone())
        };
        if b.is_zero() {
            continue;
        }
        let g = f.gcd(&b).unwrap();
        let gd = g.degree().unwrap();
        if gd > 0 && gd < n {
            let mut out = equal_degree_factorization(&g, d, rng);
            out.extend(equal_degree_factorization(&f.exact_div(&g), d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducible factors with
/// multiplicities, in canonical order. The leading coefficient is dropped.
pub fn factor<K: FiniteField>(f: &Poly<K>) -> Result<Vec<(Poly<K>, usize)>> {
    factor_with_seed(f, default_seed())
}

pub fn factor_with_seed<K: FiniteField>(f: &Poly<K>, seed: u64) -> Result<Vec<(Poly<K>, usize)>> {
    match f.degree() {
        None => return Err(Error::Domain("cannot factor the zero polynomial".into())),
        Some(0) => return Err(Error::Domain("cannot factor a constant".into())),
        _ => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (sqf, k) in squarefree_decomposition(&f.monic()) {
        for (block, d) in distinct_degree_factorization(&sqf) {
            for g in equal_degree_factorization(&block, d, &mut rng) {
                out.push((g, k));
            }
        }
    }
    out.sort();
    Ok(out)
}
