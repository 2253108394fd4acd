//! Classify a handful of pure fields and show the evidence behind each verdict.
//!
//! cargo run --example classify_field -- [u v t m]

use montes_lite::monogen::{classify, FieldSpec, Variant};

fn main() -> montes_lite::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let cases: Vec<(u32, u32, u32, i64)> = if args.len() == 4 {
        vec![(args[0] as u32, args[1] as u32, args[2] as u32, args[3])]
    } else {
        vec![(1, 1, 1, 2), (1, 1, 1, -7), (1, 1, 1, 10), (1, 2, 1, 35), (2, 1, 1, 26)]
    };
    for (u, v, t, m) in cases {
        let spec = FieldSpec::new(u, v, t, m)?;
        let verdict = classify(&spec, Variant::Proof)?;
        println!("{spec}: {}", verdict.kind);
        for w in &verdict.witnesses {
            let note = if w.refuted { " (refuted by the engine)" } else { "" };
            println!(
                "  {} at p = {}: P_{} >= {} > N_{} = {} [{}]{note}",
                w.rule, w.p, w.f, w.pf_bound, w.f, w.nf, w.source
            );
        }
    }
    Ok(())
}
