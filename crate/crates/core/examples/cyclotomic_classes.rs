//! The generalized cyclotomic classes modulo 2p and their cyclotomic numbers.
//!
//! cargo run --example cyclotomic_classes -- 13

use cyclo4::GeneralizedCyclotomy;

fn main() -> cyclo4::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(13);
    let c = GeneralizedCyclotomy::new(p)?;

    println!("p = {p}, g = {}", c.generator());
    for i in 0..2 {
        println!("D{i} = {:?}", c.d(i));
        println!("E{i} = {:?}", c.e(i));
    }

    let labels: Vec<String> = (0..c.modulus()).map(|v| c.class_of(v).to_string()).collect();
    println!("labels: {}", labels.join(" "));

    for i in 0..2 {
        for j in 0..2 {
            println!("[{i},{j}] = {}", c.cyclotomic_number(i, j));
        }
    }
    Ok(())
}
