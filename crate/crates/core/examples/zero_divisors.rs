//! Over Z_4 a polynomial can vanish at every 2p-th root of unity without
//! being divisible by X^2p − 1.
//!
//! cargo run --example zero_divisors

use cyclo4::verification::{zero_divisor_polynomial, Context};
use cyclo4::Z4Poly;

fn main() -> cyclo4::Result<()> {
    let p = 5;
    let ctx = Context::new(p)?;
    let n = 2 * p as usize;
    let guard = zero_divisor_polynomial(p);
    println!("P(X) = {guard}");

    let roots = (0..n).filter(|&j| ctx.powers.eval(&guard, j).is_zero()).count();
    println!("P(γ^j) = 0 for {roots} of {n} values of j");

    let (q, rem) = guard.div_rem(&Z4Poly::cyclic_modulus(n))?;
    println!("P = ({q})(X^{n} - 1) + {rem}");
    assert!(!rem.is_zero());

    // 2 is a zero divisor, so the root-by-root argument breaks down
    let two = ctx.ring.constant(cyclo4::Residue4::TWO);
    println!("2·2 = {}", &two * &two);
    Ok(())
}
