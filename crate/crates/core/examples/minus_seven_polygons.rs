//! The x^2 + x + 1 polygon of x^30 + 7 at 2, and its u = 2 sibling x^60 + 7.

use montes_lite::ore::analyze_prime;
use montes_lite::polygon::{build_polygon, phi_index, render_ascii, residual_polynomial};
use montes_lite::zxpoly::{parse_poly, phi_expand};

fn main() -> montes_lite::Result<()> {
    let phi = parse_poly("x^2 + x + 1")?;
    for text in ["x^30 + 7", "x^60 + 7"] {
        let f = parse_poly(text)?;
        let exp = phi_expand(&f, &phi)?;
        let principal = build_polygon(&exp, 2)?.principal_part();
        println!("F = {f}, phi = {phi}, p = 2");
        print!("{}", render_ascii(&principal, 2));
        for (j, side) in principal.sides().iter().enumerate() {
            let r = residual_polynomial(side, &exp, 2)?;
            println!("residual of side {}: {}", j + 1, r.poly);
        }
        let report = analyze_prime(&f, 2)?;
        let quadratic = report.ideals.iter().filter(|d| d.guaranteed && d.f == 2).count();
        println!(
            "ind_phi = {}, regular = {}, primes of residue degree 2 >= {quadratic}\n",
            phi_index(&principal, 2),
            report.regular
        );
    }
    Ok(())
}
