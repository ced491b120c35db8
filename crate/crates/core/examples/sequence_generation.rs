//! Periods of the quaternary sequence and their generating polynomials.
//!
//! cargo run --example sequence_generation

use cyclo4::sequence::ClassSums;
use cyclo4::{GeneralizedCyclotomy, QuaternarySequence};

fn main() -> cyclo4::Result<()> {
    for p in [3, 5, 7, 11, 13] {
        let s = QuaternarySequence::generate(p)?;
        println!("p = {p:>2}: {s}");
    }

    // S(X) = 2X^p + S1(X) + 2T0(X) + 3T1(X)
    let c = GeneralizedCyclotomy::new(5)?;
    let sums = ClassSums::new(&c);
    let s = QuaternarySequence::from_classes(&c);
    println!("S1 = {}", sums.s1);
    println!("S(X) = {}", s.generating_polynomial());
    assert_eq!(sums.assemble(5), s.generating_polynomial());
    Ok(())
}
