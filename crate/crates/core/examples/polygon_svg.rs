//! Write SVG drawings of the principal polygons of a polynomial at a prime.
//!
//! cargo run --example polygon_svg -- "x^60 + 7" 2 out_dir

use std::path::PathBuf;

use montes_lite::ore::analyze_prime;
use montes_lite::polygon::render_svg;
use montes_lite::zxpoly::parse_poly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = args.first().cloned().unwrap_or_else(|| "x^60 + 7".into());
    let p: u64 = args.get(1).map_or(Ok(2), |s| s.parse())?;
    let dir = args.get(2).map_or_else(std::env::temp_dir, PathBuf::from);
    let report = analyze_prime(&parse_poly(&text)?, p)?;
    for (i, site) in report.sites.iter().enumerate() {
        let Some(principal) = &site.principal else { continue };
        let path = dir.join(format!("polygon_{p}_{i}.svg"));
        std::fs::write(&path, render_svg(principal, site.site.deg_phi()))?;
        println!("phi = {}: {} sides, ind = {} -> {}", site.site.phi, principal.sides().len(), site.index, path.display());
    }
    Ok(())
}
