//! Runs the ring-level checks for a few primes, one from each residue class
//! modulo 16.
//!
//! cargo run --release --example lemma_report
//! CYCLO4_EXPANSION_CAP=20 cargo run --release --example lemma_report

use cyclo4::verification::{full_report, ReportOptions};

fn main() -> cyclo4::Result<()> {
    let opts = ReportOptions::from_env()?;
    for p in [3, 5, 7, 17, 31, 41] {
        let report = full_report(p, &opts)?;
        println!("p = {p}: {}", if report.passed() { "ok" } else { "FAILED" });
        print!("{report}");
        println!();
    }
    Ok(())
}
