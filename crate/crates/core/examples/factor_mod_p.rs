//! Factor polynomials over F_p and compare irreducible counts with enumeration.
//!
//! cargo run --example factor_mod_p -- "x^12 + 1" 5

use montes_lite::arith::monic_irreducible_count;
use montes_lite::ffpoly::factor;
use montes_lite::oracle::enumerate_monic_irreducibles;
use montes_lite::zxpoly::parse_poly;

fn main() -> montes_lite::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let jobs: Vec<(String, u64)> = if args.len() == 2 {
        vec![(args[0].clone(), args[1].parse().expect("prime"))]
    } else {
        ["x^12 + 1", "x^6 - 2", "x^6 + 2"].iter().map(|s| (s.to_string(), 5)).collect()
    };
    for (text, p) in jobs {
        let f = parse_poly(&text)?.reduce_mod_p(p)?;
        let parts: Vec<String> = factor(&f)?
            .iter()
            .map(|(g, k)| if *k == 1 { format!("({g})") } else { format!("({g})^{k}") })
            .collect();
        println!("{text} = {} mod {p}", parts.join(" "));
    }
    println!("\np  f  N_f  enumerated");
    for p in [2u64, 3, 5] {
        for f in 1..=3u32 {
            let listed = enumerate_monic_irreducibles(p, f)?.len();
            println!("{p}  {f}  {:<3}  {listed}", monic_irreducible_count(p, f as u64));
        }
    }
    Ok(())
}
