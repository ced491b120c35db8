//! Closed-form linear complexity by residue class of `p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::require_odd_prime;
use crate::error::Result;

/// The residue class of `p` that decides the linear complexity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResidueClass {
    /// `p ≡ 3 (mod 8)`
    ThreeMod8,
    /// `p ≡ 5 ≡ −3 (mod 8)`
    FiveMod8,
    /// `p ≡ 1 (mod 16)`
    OneMod16,
    /// `p ≡ 15 ≡ −1 (mod 16)`
    FifteenMod16,
    /// `p ≡ 9 (mod 16)`
    NineMod16,
    /// `p ≡ 7 ≡ −9 (mod 16)`
    SevenMod16,
}

impl ResidueClass {
    pub const ALL: [ResidueClass; 6] = [
        ResidueClass::ThreeMod8,
        ResidueClass::FiveMod8,
        ResidueClass::OneMod16,
        ResidueClass::FifteenMod16,
        ResidueClass::NineMod16,
        ResidueClass::SevenMod16,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ResidueClass::ThreeMod8 => "3 mod 8",
            ResidueClass::FiveMod8 => "5 mod 8",
            ResidueClass::OneMod16 => "1 mod 16",
            ResidueClass::FifteenMod16 => "15 mod 16",
            ResidueClass::NineMod16 => "9 mod 16",
            ResidueClass::SevenMod16 => "7 mod 16",
        }
    }

    /// True for `p ≡ ±1 (mod 8)`, i.e. when 2 is a square modulo `p`.
    pub fn two_is_square(self) -> bool {
        !matches!(self, ResidueClass::ThreeMod8 | ResidueClass::FiveMod8)
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_prime(p: u64) -> Result<ResidueClass> {
    let p = require_odd_prime(p)?;
    Ok(match (p % 8, p % 16) {
        (3, _) => ResidueClass::ThreeMod8,
        (5, _) => ResidueClass::FiveMod8,
        (_, 1) => ResidueClass::OneMod16,
        (_, 15) => ResidueClass::FifteenMod16,
        (_, 9) => ResidueClass::NineMod16,
        (_, 7) => ResidueClass::SevenMod16,
        _ => unreachable!("odd p"),
    })
}

/// Linear complexity of the period-`2p` sequence predicted from the
/// residue class of `p`.
pub fn theorem_lc(p: u64) -> Result<u64> {
    Ok(match classify_prime(p)? {
        ResidueClass::FiveMod8 => 2 * p,
        ResidueClass::ThreeMod8 => 2 * p - 1,
        ResidueClass::FifteenMod16 => p,
        ResidueClass::OneMod16 => p + 1,
        ResidueClass::SevenMod16 => (p + 1) / 2,
        ResidueClass::NineMod16 => (p + 3) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn classification_examples() {
        assert_eq!(classify_prime(41), Ok(ResidueClass::NineMod16));
        assert_eq!(classify_prime(31), Ok(ResidueClass::FifteenMod16));
        assert_eq!(classify_prime(5), Ok(ResidueClass::FiveMod8));
        assert_eq!(classify_prime(3), Ok(ResidueClass::ThreeMod8));
        assert_eq!(classify_prime(17), Ok(ResidueClass::OneMod16));
        assert_eq!(classify_prime(7), Ok(ResidueClass::SevenMod16));
        assert_eq!(classify_prime(2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(theorem_lc(17), Ok(18));
        assert_eq!(theorem_lc(31), Ok(31));
        assert_eq!(theorem_lc(41), Ok(22));
        assert_eq!(theorem_lc(3), Ok(5));
        assert_eq!(theorem_lc(5), Ok(10));
        assert_eq!(theorem_lc(7), Ok(4));
        assert!(theorem_lc(2).is_err());
    }
}
