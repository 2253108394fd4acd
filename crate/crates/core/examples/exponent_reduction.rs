//! Reduce x^s - a (s coprime to 30) to a field of the form x^(2^u 3^v 5^t) - m.

use montes_lite::monogen::{classify, reduce_exponent, Variant};

fn main() -> montes_lite::Result<()> {
    for (a, s) in [(2i64, 7u64), (5, 11), (-7, 13), (10, 29)] {
        let (spec, b) = reduce_exponent(a, s, 1, 1, 1)?;
        let verdict = classify(&spec, Variant::Proof)?;
        println!(
            "a = {a}, s = {s}: {s}*{} - {}*{} = 1, field {spec}, {}",
            b.x,
            spec.n(),
            b.y,
            verdict.kind
        );
    }
    Ok(())
}
