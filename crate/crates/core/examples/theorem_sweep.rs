//! Compares Reeds–Sloane with the closed form for every odd prime up to a
//! bound and writes CSV to stdout.
//!
//! cargo run --release --example theorem_sweep -- 499 > sweep.csv

use cyclo4::commands::{cmd_sweep, Format};

fn main() -> cyclo4::Result<()> {
    let to: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(199);
    let sweep = cmd_sweep(3, to, Format::Csv)?;
    print!("{}", sweep.body);
    eprintln!("{}", sweep.summary());
    if sweep.mismatches() > 0 {
        std::process::exit(2);
    }
    Ok(())
}
