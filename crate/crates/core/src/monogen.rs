//! Pure fields `K = Q(alpha)`, `alpha^n = m`, `n = 2^u 3^v 5^t`: maximality
//! of `Z[alpha]`, prime common index divisors and monogenicity verdicts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{canonical_residue, factor_integer, monic_irreducible_count, vp, FactoredInteger, Valuation};
use crate::error::{Error, Result};
use crate::ffpoly::{default_seed, is_irreducible};
use crate::ore::{analyze_prime, ideal_count_lower_bound, is_p_maximal, OreReport};
use crate::polygon::lower_hull;
use crate::zxpoly::ZxPoly;

/// Largest degree for which `classify` runs the polygon engine.
pub const ENGINE_DEGREE_LIMIT: u64 = 2000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    u: u32,
    v: u32,
    t: u32,
    m: BigInt,
    n: u64,
    factorization: FactoredInteger,
}

fn degree_of(u: u32, v: u32, t: u32) -> Result<u64> {
    if u == 0 || v == 0 || t == 0 {
        return Err(Error::Domain(format!("u, v, t must be positive (got {u}, {v}, {t})")));
    }
    2u64.checked_pow(u)
        .and_then(|a| 3u64.checked_pow(v).and_then(|b| a.checked_mul(b)))
        .and_then(|ab| 5u64.checked_pow(t).and_then(|c| ab.checked_mul(c)))
        .ok_or_else(|| Error::Range(format!("2^{u} 3^{v} 5^{t} does not fit in 64 bits")))
}

impl FieldSpec {
    /// Validates the parameters and factors `m` to check square-freeness.
    pub fn new(u: u32, v: u32, t: u32, m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        check_m(&m)?;
        let n = degree_of(u, v, t)?;
        let factorization = factor_integer(&m)?;
        Self::assemble(u, v, t, m, n, factorization)
    }

    /// Uses a caller-supplied factorization of `m` instead of factoring.
    pub fn with_factorization(u: u32, v: u32, t: u32, factorization: FactoredInteger) -> Result<Self> {
        let m = factorization.value();
        check_m(&m)?;
        let n = degree_of(u, v, t)?;
        Self::assemble(u, v, t, m, n, factorization)
    }

    fn assemble(u: u32, v: u32, t: u32, m: BigInt, n: u64, factorization: FactoredInteger) -> Result<Self> {
        if let Some((q, _)) = factorization.prime_powers.iter().find(|(_, k)| *k >= 2) {
            return Err(Error::Domain(format!("m = {m} is not square-free ({q}^2 divides it)")));
        }
        Ok(FieldSpec { u, v, t, m, n, factorization })
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &FactoredInteger {
        &self.factorization
    }

    /// Primes dividing `m`, ascending.
    pub fn primes_of_m(&self) -> Vec<u64> {
        self.factorization
            .primes()
            .filter_map(|q| q.to_u64())
            .collect()
    }

    /// `x^n - m`.
    pub fn polynomial(&self) -> Result<ZxPoly> {
        if self.n > ENGINE_DEGREE_LIMIT {
            return Err(Error::Range(format!(
                "degree {} exceeds the engine limit {ENGINE_DEGREE_LIMIT}",
                self.n
            )));
        }
        Ok(ZxPoly::pure(self.n as usize, &self.m))
    }

    /// Exponent of `p` in `n` for `p` in {2, 3, 5}.
    pub fn exponent_of(&self, p: u64) -> Option<u32> {
        match p {
            2 => Some(self.u),
            3 => Some(self.v),
            5 => Some(self.t),
            _ => None,
        }
    }

    fn residue(&self, modulus: u64) -> u64 {
        canonical_residue(&self.m, modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.m.is_negative() { '+' } else { '-' };
        write!(f, "x^{} {sign} {} [u={}, v={}, t={}]", self.n, self.m.abs(), self.u, self.v, self.t)
    }
}

fn check_m(m: &BigInt) -> Result<()> {
    if m.is_zero() || m.abs().is_one() {
        return Err(Error::Domain(format!("m must not be 0 or +-1 (got {m})")));
    }
    Ok(())
}

/// Which reading of the ambiguous rule conditions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Proof,
    Theorem,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Proof => "proof",
            Variant::Theorem => "theorem",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proof" => Ok(Variant::Proof),
            "theorem" => Ok(Variant::Theorem),
            _ => Err(Error::Input(format!("unknown variant '{s}' (expected proof or theorem)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    /// Witness found by the polygon engine with no matching congruence rule.
    Engine,
}

impl Rule {
    pub const TABLE: [Rule; 8] = [
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R6,
        Rule::R7,
        Rule::R8,
    ];

    /// Prime, residue degree and claimed lower bound for `P_f`.
    pub fn claim(self) -> Option<(u64, u64, u64)> {
        Some(match self {
            Rule::R1 => (2, 2, 2),
            Rule::R2 => (3, 1, 4),
            Rule::R3 => (3, 2, 4),
            Rule::R4 => (3, 2, 4),
            Rule::R5 => (5, 1, 6),
            Rule::R6 => (5, 1, 8),
            Rule::R7 => (5, 2, 12),
            Rule::R8 => (5, 2, 12),
            Rule::Engine => return None,
        })
    }

    pub fn prime(self) -> Option<u64> {
        self.claim().map(|c| c.0)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Engine => f.write_str("engine"),
            r => write!(f, "{r:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    CongruenceRule,
    PolygonEngine,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::CongruenceRule => "congruence-rule",
            Source::PolygonEngine => "polygon-engine",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleHit {
    pub rule: Rule,
    pub p: u64,
    pub f: u64,
    pub pf_bound: u64,
    pub nf: u64,
    pub source: Source,
    /// The engine's report at `p` was regular and showed no `P_f > N_f`,
    /// so the congruence claim is contradicted.
    pub refuted: bool,
}

impl RuleHit {
    fn from_table(rule: Rule) -> Self {
        let (p, f, pf_bound) = rule.claim().expect("table rule");
        RuleHit {
            rule,
            p,
            f,
            pf_bound,
            nf: small_count(p, f),
            source: Source::CongruenceRule,
            refuted: false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.rule.to_string(),
            "p": self.p,
            "f": self.f,
            "P_f_bound": self.pf_bound,
            "N_f": self.nf,
            "source": self.source,
            "refuted": self.refuted,
        })
    }
}

fn small_count(p: u64, f: u64) -> u64 {
    monic_irreducible_count(p, f).to_u64().unwrap_or(u64::MAX)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    MaximalMonogenic,
    NonMonogenic,
    NotMaximalUndecided,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub witnesses: Vec<RuleHit>,
    pub maximal: bool,
    pub variant: Variant,
    /// Whether the polygon engine ran (it is skipped above the degree limit).
    pub engine_ran: bool,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "rules": self.witnesses.iter().map(RuleHit::to_json).collect::<Vec<_>>(),
            "maximal": self.maximal,
            "variant": self.variant,
        })
    }

    /// First engine-certified witness, or the first rule hit.
    pub fn primary_witness(&self) -> Option<&RuleHit> {
        self.witnesses
            .iter()
            .find(|w| w.source == Source::PolygonEngine)
            .or_else(|| self.witnesses.first())
    }
}

/// Congruence test for `Z[alpha] = Z_K`.
pub fn classify_maximality(spec: &FieldSpec) -> bool {
    spec.residue(4) != 1
        && !matches!(spec.residue(9), 1 | 8)
        && !matches!(spec.residue(25), 1 | 24 | 7 | 18)
}

/// The same question answered by the polygon engine at every prime that can
/// divide the index.
pub fn engine_maximality(spec: &FieldSpec) -> Result<bool> {
    let f = spec.polynomial()?;
    let mut primes = vec![2u64, 3, 5];
    primes.extend(spec.primes_of_m());
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        if !is_p_maximal(&f, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn u_twice_odd(u: u32) -> bool {
    u % 4 == 2
}

/// Congruence rules matched by the spec.
pub fn rule_table(spec: &FieldSpec, variant: Variant) -> Vec<RuleHit> {
    let (u, v, t) = (spec.u, spec.v, spec.t);
    let r4 = spec.residue(4);
    let r9 = spec.residue(9);
    let r25 = spec.residue(25);
    let pm1 = |modulus: u64| {
        let r = spec.residue(modulus);
        r == 1 || r == modulus - 1
    };
    let matched = |rule: Rule| match (rule, variant) {
        (Rule::R1, _) => r4 == 1,
        (Rule::R2, _) => r9 == 1,
        (Rule::R3, _) => r9 == 8 && u_twice_odd(u),
        (Rule::R4, Variant::Proof) => u == 1 && pm1(81) && v >= 3,
        (Rule::R4, Variant::Theorem) => u == 1 && spec.residue(27) == 26 && v >= 3,
        (Rule::R5, _) => u == 1 && pm1(125) && t >= 2,
        (Rule::R6, Variant::Proof) => r25 == 1 && u >= 2,
        (Rule::R6, Variant::Theorem) => r25 == 1 && u_twice_odd(u),
        (Rule::R7, _) => r25 == 24 && u_twice_odd(u),
        (Rule::R8, _) => u == 1 && v == 1 && matches!(spec.residue(625), 82 | 543) && t >= 3,
        (Rule::Engine, _) => false,
    };
    Rule::TABLE
        .iter()
        .copied()
        .filter(|&r| matched(r))
        .map(RuleHit::from_table)
        .collect()
}

/// Index-divisor witnesses read off an Ore report: every residue degree `f`
/// with more guaranteed ideals than monic irreducibles of degree `f`.
pub fn report_witnesses(report: &OreReport) -> Vec<RuleHit> {
    report
        .guaranteed_degrees()
        .into_iter()
        .filter_map(|f| {
            let bound = ideal_count_lower_bound(report, f);
            let nf = small_count(report.p, f);
            (bound > nf).then_some(RuleHit {
                rule: Rule::Engine,
                p: report.p,
                f,
                pf_bound: bound,
                nf,
                source: Source::PolygonEngine,
                refuted: false,
            })
        })
        .collect()
}

/// Classifies the field, combining the congruence rules with engine
/// witnesses at 2, 3 and 5.
pub fn classify(spec: &FieldSpec, variant: Variant) -> Result<Verdict> {
    let maximal = classify_maximality(spec);
    let engine_ok = spec.n <= ENGINE_DEGREE_LIMIT;
    if cfg!(debug_assertions) && engine_ok {
        confirm_prime_of_m(spec)?;
    }
    if maximal {
        return Ok(Verdict {
            kind: VerdictKind::MaximalMonogenic,
            witnesses: Vec::new(),
            maximal,
            variant,
            engine_ran: false,
        });
    }
    let mut hits = rule_table(spec, variant);
    let mut extra = Vec::new();
    if engine_ok {
        let f = spec.polynomial()?;
        for p in [2u64, 3, 5] {
            let report = analyze_prime(&f, p)?;
            let found = report_witnesses(&report);
            let mut used = vec![false; found.len()];
            for hit in hits.iter_mut().filter(|h| h.p == p) {
                let pick = found
                    .iter()
                    .position(|w| w.f == hit.f)
                    .or_else(|| (!found.is_empty()).then_some(0));
                match pick {
                    Some(k) => {
                        used[k] = true;
                        hit.f = found[k].f;
                        hit.pf_bound = found[k].pf_bound;
                        hit.nf = found[k].nf;
                        hit.source = Source::PolygonEngine;
                    }
                    None => hit.refuted = report.regular,
                }
            }
            extra.extend(found.into_iter().zip(used).filter(|(_, u)| !u).map(|(w, _)| w));
        }
    }
    hits.extend(extra);
    let kind = if hits.is_empty() {
        VerdictKind::NotMaximalUndecided
    } else {
        VerdictKind::NonMonogenic
    };
    Ok(Verdict { kind, witnesses: hits, maximal, variant, engine_ran: engine_ok })
}

/// At a prime dividing a square-free `m` the polygon is one side of height
/// 1; checked for one prime per call in debug builds.
fn confirm_prime_of_m(spec: &FieldSpec) -> Result<()> {
    let primes = spec.primes_of_m();
    if primes.is_empty() {
        return Ok(());
    }
    let mix = default_seed() ^ canonical_residue(&spec.m, 1_000_003);
    let q = primes[(mix % primes.len() as u64) as usize];
    let f = spec.polynomial()?;
    debug_assert!(is_p_maximal(&f, q)?, "{spec}: index divisible by {q}");
    Ok(())
}

/// Predicted principal polygon of `x^n - m` at `p`, not dividing `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapePrediction {
    /// The vertex set is determined.
    Exact(Vec<(u64, u64)>),
    /// The polygon is the hull of `(0, V)` and `tail` for some `V >= min_leftmost`.
    LowerBounded { tail: Vec<(u64, u64)>, min_leftmost: u64 },
}

impl ShapePrediction {
    /// Whether observed principal vertices conform to the prediction.
    pub fn matches(&self, observed: &[(u64, u64)]) -> bool {
        match self {
            ShapePrediction::Exact(vs) => vs == observed,
            ShapePrediction::LowerBounded { tail, min_leftmost } => match observed.first() {
                Some(&(0, big_v)) if big_v >= *min_leftmost => {
                    let mut pts = vec![(0, big_v)];
                    pts.extend(tail.iter().copied());
                    lower_hull(&pts) == observed
                }
                _ => false,
            },
        }
    }
}

fn pth_tail(p: u64, r: u32) -> Vec<(u64, u64)> {
    (0..=r).map(|j| (p.pow(j), (r - j) as u64)).collect()
}

/// Shape of the principal `phi`-polygon of `x^n - m` at `p` in {2, 3, 5},
/// for `phi` reducing to an irreducible factor of `x^(n/p^r) - m`.
pub fn predicted_pure_polygon(p: u64, spec: &FieldSpec, phi: &ZxPoly) -> Result<ShapePrediction> {
    let r = spec
        .exponent_of(p)
        .ok_or_else(|| Error::Domain(format!("p = {p} is not one of 2, 3, 5")))?;
    if canonical_residue(&spec.m, p) == 0 {
        return Err(Error::Domain(format!("p = {p} divides m = {}", spec.m)));
    }
    let cofactor = spec.n / p.pow(r);
    let phi_bar = phi.reduce_mod_p(p)?;
    let base = ZxPoly::pure(cofactor as usize, &spec.m).reduce_mod_p(p)?;
    if !phi.is_monic() || !is_irreducible(&phi_bar)? || !base.rem(&phi_bar)?.is_zero() {
        return Err(Error::Precondition(format!(
            "{phi} must reduce to a monic irreducible factor of x^{cofactor} - m mod {p}"
        )));
    }
    let w = vp(p, &(spec.m.pow(p as u32 - 1) - BigInt::one()))
        .finite()
        .expect("p does not divide m, so m^(p-1) = 1 only for m = +-1");
    let tail = pth_tail(p, r);
    if w <= r as u64 {
        let v = match vp(p, &(spec.m.pow(p as u32) - &spec.m)) {
            Valuation::Finite(v) => v,
            Valuation::Infinity => unreachable!("m^p = m forces m in {{0, 1, -1}}"),
        };
        let mut pts = vec![(0, v)];
        pts.extend(tail.iter().copied());
        Ok(ShapePrediction::Exact(lower_hull(&pts)))
    } else {
        Ok(ShapePrediction::LowerBounded { tail, min_leftmost: r as u64 + 1 })
    }
}

/// Bezout certificate `(x, y)` with `s x - n y = 1` and `0 < x <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bezout {
    pub x: u64,
    pub y: u64,
}

/// `x^n - a^s` with `gcd(s, 30) = 1` generates the same field as `x^n - a`
/// through `theta = alpha^x / a^y`; returns the spec of the latter.
pub fn reduce_exponent(a: impl Into<BigInt>, s: u64, u: u32, v: u32, t: u32) -> Result<(FieldSpec, Bezout)> {
    if s == 0 || num_integer::gcd(s, 30) != 1 {
        return Err(Error::Precondition(format!("s = {s} must be positive and coprime to 30")));
    }
    let spec = FieldSpec::new(u, v, t, a)?;
    let n = spec.n;
    if s >= n {
        return Err(Error::Precondition(format!("s = {s} must be below n = {n}")));
    }
    let (g, inv, _) = crate::arith::ext_gcd(s as i128, n as i128);
    debug_assert_eq!(g, 1);
    let x = inv.rem_euclid(n as i128) as u64;
    let x = if x == 0 { n } else { x };
    let y = ((s as u128 * x as u128 - 1) / n as u128) as u64;
    Ok((spec, Bezout { x, y }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::build_polygon;
    use crate::zxpoly::{parse_poly, phi_expand};

    fn spec(u: u32, v: u32, t: u32, m: i64) -> FieldSpec {
        FieldSpec::new(u, v, t, m).unwrap()
    }

    fn ids(hits: &[RuleHit]) -> Vec<Rule> {
        hits.iter().map(|h| h.rule).collect()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(spec(1, 1, 1, 2).n(), 30);
        assert!(matches!(FieldSpec::new(1, 1, 1, 12), Err(Error::Domain(_))));
        assert!(matches!(FieldSpec::new(1, 1, 1, 1), Err(Error::Domain(_))));
        assert!(matches!(FieldSpec::new(1, 1, 1, -1), Err(Error::Domain(_))));
        assert!(matches!(FieldSpec::new(1, 1, 1, 0), Err(Error::Domain(_))));
        assert!(matches!(FieldSpec::new(0, 1, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(FieldSpec::new(40, 40, 40, 2), Err(Error::Range(_))));
        assert_eq!(spec(1, 1, 1, -30).primes_of_m(), vec![2, 3, 5]);
    }

    #[test]
    fn maximality_examples() {
        assert!(classify_maximality(&spec(1, 1, 1, 2)));
        assert!(!classify_maximality(&spec(1, 1, 1, 5)));
        assert!(!classify_maximality(&spec(1, 1, 1, 26)));
        assert!(!classify_maximality(&spec(1, 1, 1, 7)));
        for m in [2, 5, 26, 7, -7, 10, 17, 35, -3] {
            let s = spec(1, 1, 1, m);
            assert_eq!(classify_maximality(&s), engine_maximality(&s).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn rule_examples() {
        assert_eq!(ids(&rule_table(&spec(1, 1, 1, 5), Variant::Proof)), vec![Rule::R1]);
        assert_eq!(ids(&rule_table(&spec(1, 1, 1, 10), Variant::Proof)), vec![Rule::R2]);
        // 26 = -1 mod 9 as well as 1 mod 25, and u = 2 = 2 * 1
        assert_eq!(
            ids(&rule_table(&spec(2, 1, 1, 26), Variant::Proof)),
            vec![Rule::R3, Rule::R6]
        );
        assert_eq!(ids(&rule_table(&spec(4, 1, 1, 26), Variant::Proof)), vec![Rule::R6]);
        assert!(rule_table(&spec(4, 1, 1, 26), Variant::Theorem).is_empty());
        // 323 = -1 mod 81, 3 mod 4
        assert_eq!(ids(&rule_table(&spec(1, 3, 1, 323), Variant::Proof)), vec![Rule::R4]);
        // 161 = -1 mod 81 but also 1 mod 4
        assert_eq!(ids(&rule_table(&spec(1, 3, 1, 161), Variant::Proof)), vec![Rule::R1, Rule::R4]);
        // 82 = 1 mod 81 but not -1 mod 27
        assert!(ids(&rule_table(&spec(1, 3, 1, 82), Variant::Proof)).contains(&Rule::R4));
        assert!(!ids(&rule_table(&spec(1, 3, 1, 82), Variant::Theorem)).contains(&Rule::R4));
        assert!(ids(&rule_table(&spec(1, 3, 1, 53), Variant::Theorem)).contains(&Rule::R4));
    }

    #[test]
    fn classify_examples() {
        let v = classify(&spec(1, 1, 1, 2), Variant::Proof).unwrap();
        assert_eq!(v.kind, VerdictKind::MaximalMonogenic);
        assert!(v.witnesses.is_empty());

        let v = classify(&spec(1, 1, 1, -7), Variant::Proof).unwrap();
        assert_eq!(v.kind, VerdictKind::NonMonogenic);
        let w = v.witnesses.iter().find(|w| w.rule == Rule::R1).unwrap();
        assert_eq!((w.p, w.f, w.nf), (2, 2, 1));
        assert_eq!(w.source, Source::PolygonEngine);
        assert!(w.pf_bound > w.nf);

        let v = classify(&spec(1, 2, 1, 35), Variant::Proof).unwrap();
        assert_eq!(v.kind, VerdictKind::NotMaximalUndecided);
        assert!(!v.maximal);
    }

    #[test]
    fn verdict_json_shape() {
        let v = classify(&spec(1, 1, 1, 5), Variant::Proof).unwrap().to_json();
        assert_eq!(v["kind"], "NonMonogenic");
        assert_eq!(v["maximal"], false);
        assert_eq!(v["variant"], "proof");
        assert_eq!(v["rules"][0]["id"], "R1");
        assert_eq!(v["rules"][0]["source"], "polygon-engine");
        for key in ["p", "f", "P_f_bound", "N_f"] {
            assert!(v["rules"][0][key].is_u64(), "{key}");
        }
    }

    #[test]
    fn predicted_polygon_examples() {
        // m = -7, p = 2: leftmost bound branch, observed (0,3),(1,1),(2,0)
        let s = spec(1, 1, 1, -7);
        let phi = parse_poly("x^2 + x + 1").unwrap();
        let pred = predicted_pure_polygon(2, &s, &phi).unwrap();
        assert!(matches!(pred, ShapePrediction::LowerBounded { min_leftmost: 2, .. }));
        let exp = phi_expand(&s.polynomial().unwrap(), &phi).unwrap();
        let observed = build_polygon(&exp, 2).unwrap().principal_part().vertices();
        assert!(pred.matches(&observed));

        // m = 2, p = 3: one side (0,1) -> (3^r, 0)
        let base = ZxPoly::pure(10, &BigInt::from(2)).reduce_mod_p(3).unwrap();
        let phi = ZxPoly::lift(&crate::ffpoly::factor(&base).unwrap()[0].0);
        for v in 1..=2 {
            let s = spec(1, v, 1, 2);
            let pred = predicted_pure_polygon(3, &s, &phi).unwrap();
            assert_eq!(pred, ShapePrediction::Exact(vec![(0, 1), (3u64.pow(v), 0)]));
        }

        // 7^4 - 1 = 2400 has v_5 = 2 > t = 1
        let s = spec(1, 1, 1, 7);
        let phi = ZxPoly::from_i64(&[-2, 0, 1]);
        let pred = predicted_pure_polygon(5, &s, &phi);
        // x^2 - 2 divides x^6 + 2, not x^6 - 7 = x^6 - 2, mod 5
        assert!(matches!(pred, Err(Error::Precondition(_))));
        let base = ZxPoly::pure(6, &BigInt::from(7)).reduce_mod_p(5).unwrap();
        let (g, _) = crate::ffpoly::factor(&base).unwrap()[0].clone();
        let pred = predicted_pure_polygon(5, &s, &ZxPoly::lift(&g)).unwrap();
        assert!(matches!(pred, ShapePrediction::LowerBounded { min_leftmost: 2, .. }));

        assert!(matches!(
            predicted_pure_polygon(2, &spec(1, 1, 1, 6), &parse_poly("x + 1").unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exponent_reduction() {
        let (s, b) = reduce_exponent(2, 7, 1, 1, 1).unwrap();
        assert_eq!(s.m(), &BigInt::from(2));
        assert_eq!(b, Bezout { x: 13, y: 3 });
        let (_, b) = reduce_exponent(3, 1, 1, 1, 1).unwrap();
        assert_eq!(b, Bezout { x: 1, y: 0 });
        let (s, b) = reduce_exponent(5, 11, 1, 1, 1).unwrap();
        assert_eq!(11 * b.x - 30 * b.y, 1);
        assert_eq!(classify(&s, Variant::Proof).unwrap().kind, VerdictKind::NonMonogenic);
        assert!(matches!(reduce_exponent(2, 6, 1, 1, 1), Err(Error::Precondition(_))));
        assert!(matches!(reduce_exponent(2, 31, 1, 1, 1), Err(Error::Precondition(_))));
        for s in (1..180u64).filter(|s| num_integer::gcd(*s, 30) == 1) {
            let (spec, b) = reduce_exponent(-6, s, 2, 2, 1).unwrap();
            let n = spec.n() as i128;
            assert!(b.x > 0 && b.x as i128 <= n);
            assert_eq!(s as i128 * b.x as i128 - n * b.y as i128, 1);
        }
    }
}
