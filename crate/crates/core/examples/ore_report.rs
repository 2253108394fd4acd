//! Full per-prime report (sites, sides, residual factors, ideals) as JSON.
//!
//! cargo run --example ore_report -- "x^30 + 7" 2

use montes_lite::ore::analyze_prime;
use montes_lite::zxpoly::parse_poly;

fn main() -> montes_lite::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (text, p) = match args.as_slice() {
        [f, p] => (f.clone(), p.parse().expect("prime")),
        _ => ("x^30 + 7".to_string(), 2),
    };
    let report = analyze_prime(&parse_poly(&text)?, p)?;
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    for d in &report.ideals {
        let tag = if d.guaranteed { "" } else { "  (not certified)" };
        println!("e = {}, f = {}{tag}", d.e, d.f);
    }
    Ok(())
}
