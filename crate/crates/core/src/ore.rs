//! Per-prime analysis of a monic integer polynomial through first-order
//! Newton polygons.
//!
//! For each irreducible factor `phi_i` of `F mod p` (with multiplicity
//! `l_i`) the report carries the principal `phi_i`-polygon, the residual
//! polynomial of each of its sides and the factorization of that residual
//! polynomial over `F_p[x]/(phi_i)`. When every residual factor is simple the
//! report is *regular*: the index valuation then equals the sum of the
//! `phi_i`-indices and the ideal list is the full decomposition of `p`.

use serde_json::{json, Value};

use crate::arith::Valuation;
use crate::error::{Error, Result};
use crate::ffpoly::{factor, FqField, FqPoly};
use crate::polygon::{
    build_polygon_unchecked, phi_index, residual_polynomial_in, NewtonPolygon, ResidualPolynomial,
    Side,
};
use crate::zxpoly::{phi_expand, ZxPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSite {
    /// Canonical lift of the irreducible factor (coefficients in `0..p`).
    pub phi: ZxPoly,
    pub multiplicity: usize,
    pub residue_field: FqField,
}

impl FactorSite {
    pub fn deg_phi(&self) -> u64 {
        self.residue_field.degree() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideAnalysis {
    pub side: Side,
    pub residual: ResidualPolynomial,
    pub residual_factors: Vec<(FqPoly, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiteReport {
    pub site: FactorSite,
    /// `None` for simple factors, which need no expansion.
    pub principal: Option<NewtonPolygon>,
    pub analyses: Vec<SideAnalysis>,
    pub index: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub site: usize,
    pub side: usize,
    pub factor: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdealDatum {
    pub e: u64,
    pub f: u64,
    pub provenance: Provenance,
    pub guaranteed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreReport {
    pub p: u64,
    pub degree: usize,
    pub sites: Vec<SiteReport>,
    pub index_lower_bound: u64,
    pub regular: bool,
    pub ideals: Vec<IdealDatum>,
}

fn check_input(f: &ZxPoly) -> Result<()> {
    match f.degree() {
        None | Some(0) => Err(Error::Domain("polynomial must have degree at least 1".into())),
        _ if !f.is_monic() => Err(Error::Domain(format!("{f} is not monic"))),
        _ => Ok(()),
    }
}

fn sites_of(f: &ZxPoly, p: u64) -> Result<Vec<(FactorSite, ZxPoly)>> {
    let reduced = f.reduce_mod_p(p)?;
    Ok(factor(&reduced)?
        .into_iter()
        .map(|(g, l)| {
            let phi = ZxPoly::lift(&g);
            let site = FactorSite {
                phi: phi.clone(),
                multiplicity: l,
                residue_field: FqField::new_unchecked(g),
            };
            (site, phi)
        })
        .collect())
}

fn divisible_by(f: &ZxPoly, phi: &ZxPoly) -> Error {
    Error::Precondition(format!("{phi} divides {f} over the integers"))
}

/// Ore analysis of a monic `F` at the prime `p`.
///
/// Irreducibility of `F` over the rationals is the caller's business, except
/// that a factor `phi` dividing `F` exactly is rejected.
pub fn analyze_prime(f: &ZxPoly, p: u64) -> Result<OreReport> {
    check_input(f)?;
    let mut sites = Vec::new();
    let mut ideals = Vec::new();
    for (i, (site, phi)) in sites_of(f, p)?.into_iter().enumerate() {
        let deg_phi = site.deg_phi();
        if site.multiplicity == 1 {
            ideals.push(IdealDatum {
                e: 1,
                f: deg_phi,
                provenance: Provenance { site: i, side: 0, factor: 0 },
                guaranteed: true,
            });
            sites.push(SiteReport { site, principal: None, analyses: Vec::new(), index: 0 });
            continue;
        }
        let exp = phi_expand(f, &phi)?;
        if exp.term(0).is_none_or(|a| a.is_zero()) {
            return Err(divisible_by(f, &phi));
        }
        let principal = build_polygon_unchecked(&exp, p).principal_part();
        let index = phi_index(&principal, deg_phi);
        let mut analyses = Vec::new();
        for (j, side) in principal.sides().iter().enumerate() {
            let residual = residual_polynomial_in(side, &exp, &site.residue_field)?;
            let residual_factors = factor(&residual.poly)?;
            for (s, (psi, a)) in residual_factors.iter().enumerate() {
                ideals.push(IdealDatum {
                    e: side.ramification(),
                    f: deg_phi * psi.degree().unwrap() as u64,
                    provenance: Provenance { site: i, side: j, factor: s },
                    guaranteed: *a == 1,
                });
            }
            analyses.push(SideAnalysis { side: *side, residual, residual_factors });
        }
        sites.push(SiteReport { site, principal: Some(principal), analyses, index });
    }
    let regular = ideals.iter().all(|d| d.guaranteed);
    Ok(OreReport {
        p,
        degree: f.degree().unwrap(),
        index_lower_bound: sites.iter().map(|s| s.index).sum(),
        sites,
        regular,
        ideals,
    })
}

/// Whether `p` does not divide the index of `Z[alpha]`, i.e. the sum of the
/// `phi`-indices vanishes.
///
/// A repeated factor has index 0 exactly when `v_p(F mod phi) = 1`, because
/// every other point left of `(l, 0)` has ordinate at least 1; so one
/// division per repeated factor suffices.
pub fn is_p_maximal(f: &ZxPoly, p: u64) -> Result<bool> {
    check_input(f)?;
    for (site, phi) in sites_of(f, p)? {
        if site.multiplicity == 1 {
            continue;
        }
        let (_, a0) = f.div_rem_monic(&phi)?;
        match a0.vp(p) {
            Valuation::Finite(1) => continue,
            Valuation::Finite(_) => return Ok(false),
            Valuation::Infinity => return Err(divisible_by(f, &phi)),
        }
    }
    Ok(true)
}

/// Number of guaranteed ideals of residue degree `f`: a certified lower
/// bound for the number of primes above `p` with that residue degree.
pub fn ideal_count_lower_bound(report: &OreReport, f: u64) -> u64 {
    report.ideals.iter().filter(|d| d.guaranteed && d.f == f).count() as u64
}

impl OreReport {
    /// Residue degrees that occur among guaranteed ideals, ascending.
    pub fn guaranteed_degrees(&self) -> Vec<u64> {
        let mut fs: Vec<u64> = self.ideals.iter().filter(|d| d.guaranteed).map(|d| d.f).collect();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    pub fn to_json(&self) -> Value {
        let sites: Vec<Value> = self
            .sites
            .iter()
            .map(|s| {
                let sides: Vec<Value> = s
                    .analyses
                    .iter()
                    .map(|a| {
                        let factors: Vec<Value> = a
                            .residual_factors
                            .iter()
                            .map(|(psi, k)| json!({ "psi": psi.to_string(), "a": k }))
                            .collect();
                        json!({
                            "slope": a.side.slope_text(),
                            "length": a.side.length,
                            "height": a.side.height,
                            "degree": a.side.degree,
                            "residual": a.residual.poly.to_string(),
                            "factors": factors,
                        })
                    })
                    .collect();
                json!({
                    "phi": s.site.phi.to_string(),
                    "l": s.site.multiplicity,
                    "sides": sides,
                    "ind": s.index,
                })
            })
            .collect();
        let ideals: Vec<Value> = self
            .ideals
            .iter()
            .map(|d| json!({ "e": d.e, "f": d.f, "guaranteed": d.guaranteed }))
            .collect();
        json!({
            "p": self.p,
            "sites": sites,
            "index_lower_bound": self.index_lower_bound,
            "regular": self.regular,
            "ideals": ideals,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::vp;
    use crate::zxpoly::{discriminant, parse_poly};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(s: &str) -> ZxPoly {
        parse_poly(s).unwrap()
    }

    fn e_f_sum(r: &OreReport) -> u64 {
        r.ideals.iter().map(|d| d.e * d.f).sum()
    }

    #[test]
    fn prime_dividing_m() {
        let r = analyze_prime(&poly("x^30 - 7"), 7).unwrap();
        assert!(r.regular);
        assert_eq!(r.index_lower_bound, 0);
        assert_eq!(r.ideals.len(), 1);
        assert_eq!((r.ideals[0].e, r.ideals[0].f), (30, 1));
        assert!(is_p_maximal(&poly("x^30 - 7"), 7).unwrap());
    }

    #[test]
    fn minus_seven_at_two() {
        let f = poly("x^30 + 7");
        let r = analyze_prime(&f, 2).unwrap();
        assert!(r.regular);
        assert_eq!(r.sites.len(), 5);
        let quad = r
            .sites
            .iter()
            .find(|s| s.site.phi == poly("x^2 + x + 1"))
            .unwrap();
        assert_eq!(quad.site.multiplicity, 2);
        assert_eq!(
            quad.principal.as_ref().unwrap().vertices(),
            vec![(0, 3), (1, 1), (2, 0)]
        );
        assert_eq!(quad.index, 2);
        assert_eq!(ideal_count_lower_bound(&r, 2), 2);
        assert!(ideal_count_lower_bound(&r, 2) > 1);
        assert_eq!(e_f_sum(&r), 30);
        assert!(!is_p_maximal(&f, 2).unwrap());
    }

    #[test]
    fn u_two_gives_three_quadratic_ideals() {
        let r = analyze_prime(&poly("x^60 + 7"), 2).unwrap();
        let quad = r
            .sites
            .iter()
            .find(|s| s.site.phi == poly("x^2 + x + 1"))
            .unwrap();
        assert_eq!(
            quad.principal.as_ref().unwrap().vertices(),
            vec![(0, 3), (2, 1), (4, 0)]
        );
        let first = &quad.analyses[0];
        assert_eq!(first.residual.poly.degree(), Some(2));
        assert_eq!(first.residual_factors.len(), 2);
        assert!(first.residual_factors.iter().all(|(g, a)| g.degree() == Some(1) && *a == 1));
        let quad_index = r.sites.iter().position(|s| s.site.phi == quad.site.phi).unwrap();
        let from_quad = r
            .ideals
            .iter()
            .filter(|d| d.provenance.site == quad_index && d.guaranteed && d.f == 2)
            .count();
        assert_eq!(from_quad, 3);
        assert!(ideal_count_lower_bound(&r, 2) >= 3);
    }

    #[test]
    fn maximality_examples() {
        assert!(is_p_maximal(&poly("x^30 - 2"), 2).unwrap());
        assert!(!is_p_maximal(&poly("x^30 - 5"), 2).unwrap());
        assert!(is_p_maximal(&poly("x^30 - 7"), 11).unwrap());
        let r = analyze_prime(&poly("x^30 - 7"), 11).unwrap();
        assert!(r.regular);
        assert!(r.sites.iter().all(|s| s.site.multiplicity == 1));
        assert_eq!(r.ideals.len(), r.sites.len());
    }

    #[test]
    fn exact_factor_rejected() {
        let f = poly("x^4 + 2x^3 + x^2");
        assert!(matches!(analyze_prime(&f, 2), Err(Error::Precondition(_))));
        assert!(matches!(is_p_maximal(&f, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn constants_rejected() {
        assert!(matches!(analyze_prime(&poly("7"), 2), Err(Error::Domain(_))));
        assert!(matches!(analyze_prime(&poly("2x^2 + 1"), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn random_reports_satisfy_fundamental_identity_and_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut regular = 0;
        for case in 0..100 {
            let p = [2u64, 3, 5][case % 3];
            let n = rng.gen_range(2..=30usize);
            // bias coefficients toward multiples of p to get ramified sites
            let mut c: Vec<i64> = (0..n)
                .map(|_| {
                    let k: i64 = rng.gen_range(-6..=6);
                    if rng.gen_bool(0.6) { k * p as i64 } else { k }
                })
                .collect();
            c.push(1);
            let f = ZxPoly::from_i64(&c);
            let r = match analyze_prime(&f, p) {
                Err(Error::Precondition(_)) => {
                    assert!(is_p_maximal(&f, p).is_err());
                    continue;
                }
                r => r.unwrap(),
            };
            assert_eq!(r, analyze_prime(&f, p).unwrap());
            assert_eq!(is_p_maximal(&f, p).unwrap(), r.index_lower_bound == 0, "{f} at {p}");
            if r.regular {
                regular += 1;
                assert_eq!(e_f_sum(&r), n as u64, "{f} at {p}");
                let d = discriminant(&f).unwrap();
                if let Some(vd) = vp(p, &d).finite() {
                    assert!(vd >= 2 * r.index_lower_bound, "{f} at {p}");
                }
            }
            if r.index_lower_bound == 0 {
                // Dedekind case: one ideal per factor, e = l, f = deg phi
                assert_eq!(r.ideals.len(), r.sites.len());
                for (d, s) in r.ideals.iter().zip(&r.sites) {
                    assert_eq!(d.e, s.site.multiplicity as u64);
                    assert_eq!(d.f, s.site.deg_phi());
                }
            }
        }
        assert!(regular > 50);
    }

    #[test]
    fn json_shape() {
        let r = analyze_prime(&poly("x^30 + 7"), 2).unwrap();
        let v = r.to_json();
        assert_eq!(v["p"], 2);
        assert_eq!(v["regular"], true);
        let site = v["sites"]
            .as_array()
            .unwrap()
            .iter()
            .find(|s| s["phi"] == "x^2 + x + 1")
            .unwrap();
        assert_eq!(site["l"], 2);
        assert_eq!(site["ind"], 2);
        assert_eq!(site["sides"][0]["slope"], "-2/1");
        assert_eq!(site["sides"][1]["slope"], "-1/1");
        assert_eq!(v["ideals"].as_array().unwrap().len(), r.ideals.len());
    }
}
