//! phi-Newton polygons of an integer polynomial with respect to a prime:
//! the lower convex hull of `(i, v_p(a_i))`, its principal part, residual
//! polynomials attached to sides, and the phi-index.

mod render;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::Valuation;
use crate::error::{Error, Result};
use crate::ffpoly::{is_irreducible, FiniteField, FqField, FqPoly};
use crate::zxpoly::PhiExpansion;

pub use render::{render_ascii, render_svg};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonPoint {
    pub abscissa: u64,
    pub ordinate: Valuation,
}

/// A side of slope `-h/e` (`gcd(h, e) = 1`), with `length = e d` and
/// `height = h d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Side {
    pub start: (u64, u64),
    pub end: (u64, u64),
    pub length: u64,
    pub height: u64,
    pub slope_num: u64,
    pub slope_den: u64,
    pub degree: u64,
}

impl Side {
    /// Side joining two hull vertices, left to right, with nonincreasing
    /// ordinate.
    pub fn between(start: (u64, u64), end: (u64, u64)) -> Self {
        assert!(end.0 > start.0, "sides run left to right");
        assert!(end.1 <= start.1, "sides of a monic polygon never rise");
        let length = end.0 - start.0;
        let height = start.1 - end.1;
        let degree = length.gcd(&height);
        Side {
            start,
            end,
            length,
            height,
            slope_num: height / degree,
            slope_den: length / degree,
            degree,
        }
    }

    /// Ramification index `e` of the side.
    pub fn ramification(&self) -> u64 {
        self.slope_den
    }

    pub fn is_principal(&self) -> bool {
        self.height > 0
    }

    /// `-h/e` as text.
    pub fn slope_text(&self) -> String {
        if self.height == 0 {
            "0".to_string()
        } else {
            format!("-{}/{}", self.slope_num, self.slope_den)
        }
    }

    /// Whether the lattice point `(i, y)` is on the side's supporting line.
    pub fn contains(&self, i: u64, y: u64) -> bool {
        if i < self.start.0 || i > self.end.0 {
            return false;
        }
        let lhs = (y as i128 - self.start.1 as i128) * self.length as i128;
        let rhs = -(self.height as i128) * (i as i128 - self.start.0 as i128);
        lhs == rhs
    }

    /// `floor` of the side's ordinate above column `i` (inside its range).
    pub fn floor_at(&self, i: u64) -> i128 {
        let num = self.start.1 as i128 * self.length as i128
            - self.height as i128 * (i as i128 - self.start.0 as i128);
        Integer::div_floor(&num, &(self.length as i128))
    }
}

/// Lower convex hull of points sorted by strictly increasing abscissa, by a
/// monotone-chain sweep. Collinear interior points are dropped.
pub fn lower_hull(points: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let cross = |o: (u64, u64), a: (u64, u64), b: (u64, u64)| {
        (a.0 as i128 - o.0 as i128) * (b.1 as i128 - o.1 as i128)
            - (a.1 as i128 - o.1 as i128) * (b.0 as i128 - o.0 as i128)
    };
    let mut hull: Vec<(u64, u64)> = Vec::with_capacity(points.len());
    for &pt in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
            hull.pop();
        }
        hull.push(pt);
    }
    hull
}

/// Sides from a list of hull vertices.
pub fn sides_from_vertices(vertices: &[(u64, u64)]) -> Vec<Side> {
    vertices
        .windows(2)
        .map(|w| Side::between(w[0], w[1]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    p: u64,
    points: Vec<PolygonPoint>,
    sides: Vec<Side>,
    /// Single vertex when the polygon has no sides.
    origin: Option<(u64, u64)>,
}

impl NewtonPolygon {
    /// Polygon of an arbitrary point cloud (used for predictions and tests).
    pub fn from_points(p: u64, points: Vec<PolygonPoint>) -> Self {
        let finite: Vec<(u64, u64)> = points
            .iter()
            .filter_map(|pt| pt.ordinate.finite().map(|y| (pt.abscissa, y)))
            .collect();
        let hull = lower_hull(&finite);
        let origin = hull.first().copied();
        NewtonPolygon {
            p,
            points,
            sides: sides_from_vertices(&hull),
            origin,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn points(&self) -> &[PolygonPoint] {
        &self.points
    }

    /// Sides by increasing slope.
    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn vertices(&self) -> Vec<(u64, u64)> {
        match self.sides.first() {
            None => self.origin.into_iter().collect(),
            Some(first) => std::iter::once(first.start)
                .chain(self.sides.iter().map(|s| s.end))
                .collect(),
        }
    }

    /// The sides of negative slope.
    pub fn principal_part(&self) -> NewtonPolygon {
        let sides: Vec<Side> = self.sides.iter().copied().filter(Side::is_principal).collect();
        NewtonPolygon {
            p: self.p,
            points: self.points.clone(),
            origin: self.origin,
            sides,
        }
    }

    /// Total length (abscissa span).
    pub fn length(&self) -> u64 {
        self.sides.iter().map(|s| s.length).sum()
    }

    pub fn height(&self) -> u64 {
        self.sides.iter().map(|s| s.height).sum()
    }

    /// Lattice points `(i, y)` with `i >= 1`, `y >= 1` on or below the
    /// polygon, column by column.
    pub fn lattice_points_below(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let (Some(first), Some(last)) = (self.sides.first(), self.sides.last()) else {
            return out;
        };
        for i in first.start.0.max(1)..=last.end.0 {
            let side = self
                .sides
                .iter()
                .find(|s| s.start.0 <= i && i <= s.end.0)
                .unwrap();
            let top = side.floor_at(i);
            for y in 1..=top.max(0) as u64 {
                out.push((i, y));
            }
        }
        out
    }

    fn count_below(&self) -> u64 {
        let (Some(first), Some(last)) = (self.sides.first(), self.sides.last()) else {
            return 0;
        };
        let mut count = 0u64;
        let mut k = 0;
        for i in first.start.0.max(1)..=last.end.0 {
            while self.sides[k].end.0 < i {
                k += 1;
            }
            count += self.sides[k].floor_at(i).max(0) as u64;
        }
        count
    }
}

/// Newton polygon of a phi-expansion with respect to `p`. Checks that the
/// reduction of phi is irreducible.
pub fn build_polygon(exp: &PhiExpansion, p: u64) -> Result<NewtonPolygon> {
    let phi_bar = exp.phi().reduce_mod_p(p)?;
    if !is_irreducible(&phi_bar)? {
        return Err(Error::Precondition(format!(
            "phi = {} is reducible modulo {p}",
            exp.phi()
        )));
    }
    Ok(build_polygon_unchecked(exp, p))
}

pub(crate) fn build_polygon_unchecked(exp: &PhiExpansion, p: u64) -> NewtonPolygon {
    let points = exp
        .terms()
        .iter()
        .enumerate()
        .map(|(i, a)| PolygonPoint {
            abscissa: i as u64,
            ordinate: a.vp(p),
        })
        .collect();
    NewtonPolygon::from_points(p, points)
}

/// `deg_phi` times the number of lattice points with `i >= 1`, `y >= 1` on
/// or below the principal polygon.
pub fn phi_index(principal: &NewtonPolygon, deg_phi: u64) -> u64 {
    deg_phi * principal.count_below()
}

/// Residual polynomial of `F` attached to a principal side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualPolynomial {
    pub side: Side,
    pub poly: FqPoly,
}

/// `F_S(y) = sum t_k y^k` with `t_k` the class of `a_{s+ke} / p^{u_s - kh}`
/// in `F_phi` when that point lies on the side and `0` otherwise.
pub fn residual_polynomial(side: &Side, exp: &PhiExpansion, p: u64) -> Result<ResidualPolynomial> {
    let phi_bar = exp.phi().reduce_mod_p(p)?;
    let field = FqField::new(phi_bar)?;
    residual_polynomial_in(side, exp, &field)
}

pub fn residual_polynomial_in(
    side: &Side,
    exp: &PhiExpansion,
    field: &FqField,
) -> Result<ResidualPolynomial> {
    if !side.is_principal() {
        return Err(Error::Domain(format!(
            "side {:?}->{:?} has slope 0 and is not in the principal part",
            side.start, side.end
        )));
    }
    let p = field.characteristic();
    let mut coeffs = Vec::with_capacity(side.degree as usize + 1);
    for k in 0..=side.degree {
        let idx = (side.start.0 + k * side.slope_den) as usize;
        let y = side.start.1 - k * side.slope_num;
        let t = match exp.term(idx) {
            Some(a) if a.vp(p) == Valuation::Finite(y) => {
                let unit = a.div_exact_scalar(&BigInt::from(p).pow(y as u32));
                field.reduce(&unit.reduce_mod_p(p)?)
            }
            Some(_) => field.zero(),
            None => {
                return Err(Error::Domain(format!(
                    "side reaches abscissa {idx} beyond the expansion"
                )))
            }
        };
        coeffs.push(t);
    }
    let poly = FqPoly::new(field.clone(), coeffs);
    debug_assert_eq!(poly.degree(), Some(side.degree as usize));
    Ok(ResidualPolynomial { side: *side, poly })
}
