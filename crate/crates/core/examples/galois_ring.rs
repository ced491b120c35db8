//! Arithmetic in GR(4^r, 4) and the element γ of order 2p.
//!
//! cargo run --example galois_ring -- 7

use cyclo4::galois::{lift_irreducible, ord2_mod_p, Gf2Poly};
use cyclo4::{find_gamma, GaloisRing, Residue4};

fn main() -> cyclo4::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);

    let r = ord2_mod_p(p)?;
    let h = Gf2Poly::smallest_irreducible(r);
    let f = lift_irreducible(&h)?;
    println!("p = {p}, r = ord_p(2) = {r}");
    println!("h = {h} over GF(2), lifted f = {f} over Z_4");

    let ring = GaloisRing::new(f)?;
    println!("{} units", ring.unit_group_order());

    let x = ring.generator();
    let y = &x + &ring.constant(Residue4::TWO);
    println!("(X+2)·X = {}", &y * &x);
    println!("2·2 = {}", ring.constant(Residue4::TWO).scale(Residue4::TWO));
    println!("X^(2^r - 1) = {}", x.pow((1 << r) - 1));

    let inv = x.inverse()?;
    assert!((&x * &inv).is_one());
    println!("X^-1 = {inv}");

    let pair = find_gamma(&ring, p)?;
    let order = pair.gamma.multiplicative_order(2 * p)?;
    println!("β = {}", pair.beta);
    println!("γ = 3β = {} has order {order}", pair.gamma);
    Ok(())
}
