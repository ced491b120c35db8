//! Linear complexity three ways: Reeds–Sloane, exhaustive search and the
//! closed form by residue class.
//!
//! cargo run --release --example linear_complexity

use cyclo4::{
    brute_force_minimal, classify_prime, reeds_sloane, theorem_lc, verify_connection,
    QuaternarySequence, Z4Poly,
};

fn main() -> cyclo4::Result<()> {
    for p in [3, 5, 7, 17, 31, 41] {
        let s = QuaternarySequence::generate(p)?;
        let rs = reeds_sloane(s.values())?;
        println!(
            "p = {p:>2} ({:>9}): lc = {:>2}, closed form {:>2}, C(X) = {}",
            classify_prime(p)?,
            rs.lc,
            theorem_lc(p)?,
            rs.connection
        );
    }

    // exhaustive search is exponential in lc; keep p small
    for p in [3, 5, 7] {
        let s = QuaternarySequence::generate(p)?;
        let bf = brute_force_minimal(s.values(), s.period())?;
        println!("p = {p}: brute force lc = {}, first witness {}", bf.lc, bf.connection);
    }

    let s = QuaternarySequence::generate(7)?;
    let c = Z4Poly::from_ints(&[1, 0, 1, 1, 3]);
    println!("{c} annihilates seq(7): {}", verify_connection(s.values(), &c)?);
    Ok(())
}
