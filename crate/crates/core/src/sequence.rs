//! The period-`2p` quaternary sequence over Z_4 built from the generalized
//! cyclotomic classes:
//!
//! | index            | value |
//! |------------------|-------|
//! | `0` or `D0`      | 0     |
//! | `D1`             | 1     |
//! | `p` or `E0`      | 2     |
//! | `E1`             | 3     |

use std::fmt;

use crate::cyclotomy::{ClassLabel, GeneralizedCyclotomy};
use crate::error::Result;
use crate::poly::Z4Poly;
use crate::ring::Residue4;

/// One full period of the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternarySequence {
    p: u64,
    values: Vec<Residue4>,
}

fn value_of(label: ClassLabel) -> Residue4 {
    match label {
        ClassLabel::Zero | ClassLabel::D0 => Residue4::ZERO,
        ClassLabel::D1 => Residue4::ONE,
        ClassLabel::P | ClassLabel::E0 => Residue4::TWO,
        ClassLabel::E1 => Residue4::THREE,
    }
}

impl QuaternarySequence {
    pub fn generate(p: u64) -> Result<Self> {
        Ok(Self::from_classes(&GeneralizedCyclotomy::new(p)?))
    }

    pub fn from_classes(c: &GeneralizedCyclotomy) -> Self {
        let values = (0..c.modulus()).map(|u| value_of(c.class_of(u))).collect();
        Self { p: c.p(), values }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Residue4] {
        &self.values
    }

    /// `S(X) = s_0 + s_1 X + … + s_(2p−1) X^(2p−1)`.
    pub fn generating_polynomial(&self) -> Z4Poly {
        Z4Poly::new(self.values.clone())
    }
}

impl fmt::Display for QuaternarySequence {
    /// The period as a run of digits, e.g. `002231`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Indicator polynomials `S_i(X) = Σ_{u∈D_i} X^u` and
/// `T_i(X) = Σ_{u∈E_i} X^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSums {
    pub s0: Z4Poly,
    pub s1: Z4Poly,
    pub t0: Z4Poly,
    pub t1: Z4Poly,
}

fn indicator(set: &[u64], len: usize) -> Z4Poly {
    let mut coeffs = vec![Residue4::ZERO; len];
    for &u in set {
        coeffs[u as usize] = Residue4::ONE;
    }
    Z4Poly::new(coeffs)
}

impl ClassSums {
    pub fn new(c: &GeneralizedCyclotomy) -> Self {
        let n = c.modulus() as usize;
        Self {
            s0: indicator(c.d(0), n),
            s1: indicator(c.d(1), n),
            t0: indicator(c.e(0), n),
            t1: indicator(c.e(1), n),
        }
    }

    /// `2X^p + S_1 + 2T_0 + 3T_1`.
    pub fn assemble(&self, p: u64) -> Z4Poly {
        let two = Residue4::TWO;
        Z4Poly::monomial(two, p as usize)
            .poly_add(&self.s1)
            .poly_add(&self.t0.scale(&two))
            .poly_add(&self.t1.scale(&Residue4::THREE))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(p: u64) -> String {
        QuaternarySequence::generate(p).unwrap().to_string()
    }

    #[test]
    fn listed_periods() {
        assert_eq!(digits(3), "002231");
        assert_eq!(digits(5), "0021323120");
        assert_eq!(digits(7), "00212132203031");
    }

    #[test]
    fn generating_polynomial_examples() {
        let s3 = QuaternarySequence::generate(3).unwrap();
        assert_eq!(s3.generating_polynomial(), Z4Poly::from_ints(&[0, 0, 2, 2, 3, 1]));
        let s5 = QuaternarySequence::generate(5).unwrap();
        assert_eq!(s5.generating_polynomial().coeff(4), Some(&Residue4::THREE));
        assert!(Z4Poly::new(vec![Residue4::ZERO; 6]).is_zero());
    }

    #[test]
    fn class_sums_for_three() {
        let c = GeneralizedCyclotomy::new(3).unwrap();
        let sums = ClassSums::new(&c);
        assert_eq!(sums.s0, Z4Poly::from_ints(&[0, 1]));
        assert_eq!(sums.s1, Z4Poly::from_ints(&[0, 0, 0, 0, 0, 1]));
        assert_eq!(sums.t0, Z4Poly::from_ints(&[0, 0, 1]));
        assert_eq!(sums.t1, Z4Poly::from_ints(&[0, 0, 0, 0, 1]));
        let s = QuaternarySequence::from_classes(&c);
        assert_eq!(sums.assemble(3), s.generating_polynomial());
    }
}
