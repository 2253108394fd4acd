//! Sweep m over a range and tabulate the verdicts, as `montes-lite scan` does.

use montes_lite::cli::{scan, ScanParams};
use montes_lite::monogen::Variant;

fn main() -> montes_lite::Result<()> {
    let params = ScanParams { m_from: -60, m_to: 60, u: 1, v: 1, t: 1, workers: Some(4), variant: Variant::Proof };
    let outcome = scan(&params)?;
    print!("{}", outcome.csv());
    eprintln!("{}", outcome.summary());
    Ok(())
}
