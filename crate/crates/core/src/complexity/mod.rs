//! Linear complexity of periodic sequences over Z_4.
//!
//! For a sequence of period `N` with generating polynomial `S(X)`, the
//! linear complexity is the least degree of a connection polynomial
//! `C(X) = 1 + c_1 X + … + c_L X^L` with `S(X)·C(X) ≡ 0 (mod X^N − 1)`.

pub mod reeds_sloane;
mod theorem;

use serde::{Deserialize, Serialize};

pub use theorem::{classify_prime, theorem_lc, ResidueClass};

use crate::error::{Error, Result};
use crate::poly::{Degree, Z4Poly};
use crate::ring::Residue4;

/// A linear complexity together with a witness connection polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfsrResult {
    pub lc: usize,
    pub connection: Z4Poly,
}

/// Wire form of an [`LfsrResult`]: coefficients constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LfsrRecord {
    pub connection: Vec<u8>,
    pub lc: usize,
}

impl From<&LfsrResult> for LfsrRecord {
    fn from(r: &LfsrResult) -> Self {
        Self { connection: r.connection.to_u8_vec(), lc: r.lc }
    }
}

/// True iff `S(X)·C(X) ≡ 0 (mod X^N − 1)` where `N` is the period length.
///
/// `C` must have constant term 1.
pub fn verify_connection(period: &[Residue4], connection: &Z4Poly) -> Result<bool> {
    if connection.coeff(0) != Some(&Residue4::ONE) {
        return Err(Error::BadConnectionPolynomial);
    }
    if period.is_empty() {
        return Err(Error::InvalidArgument("empty period".into()));
    }
    let s = Z4Poly::new(period.to_vec());
    Ok(s.poly_mul(connection).mod_cyclic(period.len()).is_zero())
}

/// Linear complexity by Reeds–Sloane synthesis over two tiled periods.
///
/// Any register that reproduces `2N` terms while having length at most
/// `N` reproduces the whole periodic sequence, so the synthesized
/// connection polynomial is a cyclic annihilator of minimal degree.
pub fn reeds_sloane(period: &[Residue4]) -> Result<LfsrResult> {
    let n = period.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty period".into()));
    }
    let tiled: Vec<u64> = period.iter().chain(period).map(|v| v.value() as u64).collect();
    let syn = reeds_sloane::synthesize(&tiled, 2, 2);
    let connection = Z4Poly::new(syn.connection.iter().map(|&c| Residue4::new(c as u8)).collect());
    if connection.degree() != Degree::Finite(syn.length) || !verify_connection(period, &connection)?
    {
        return Err(Error::Internal(format!(
            "synthesized register of length {} does not annihilate the period",
            syn.length
        )));
    }
    Ok(LfsrResult { lc: syn.length, connection })
}

/// Exhaustive search for a minimal connection polynomial.
///
/// Degrees are tried in increasing order; within a degree `L`, the vectors
/// `(c_1, …, c_L)` with `c_L ≠ 0` are visited in lexicographic order and
/// the first annihilator is returned. Exponential in the answer.
pub fn brute_force_minimal(period: &[Residue4], degree_cap: usize) -> Result<LfsrResult> {
    let n = period.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty period".into()));
    }
    let s: Vec<u8> = period.iter().map(|v| v.value()).collect();
    if s.iter().all(|&v| v == 0) {
        return Ok(LfsrResult { lc: 0, connection: Z4Poly::from_ints(&[1]) });
    }
    // row k of the cyclic product: Σ_i c_i s_{(k−i) mod n}
    let annihilates = |c: &[u8]| {
        (0..n).all(|k| {
            let mut acc = 0u8;
            for (i, &ci) in c.iter().enumerate() {
                acc = acc.wrapping_add(ci.wrapping_mul(s[(k + n * (i / n + 1) - i) % n]));
            }
            acc & 3 == 0
        })
    };
    for l in 1..=degree_cap {
        let mut c = vec![0u8; l + 1];
        c[0] = 1;
        c[l] = 1;
        loop {
            if annihilates(&c) {
                let connection = Z4Poly::new(c.iter().map(|&v| Residue4::new(v)).collect());
                return Ok(LfsrResult { lc: l, connection });
            }
            // odometer over c_1..c_L, c_L fastest, c_L skipping 0
            let mut i = l;
            loop {
                if i == 0 {
                    break;
                }
                if c[i] < 3 {
                    c[i] += 1;
                    break;
                }
                c[i] = if i == l { 1 } else { 0 };
                i -= 1;
            }
            if i == 0 {
                break;
            }
        }
    }
    Err(Error::DegreeCapExceeded(degree_cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::QuaternarySequence;

    fn period(p: u64) -> Vec<Residue4> {
        QuaternarySequence::generate(p).unwrap().values().to_vec()
    }

    fn seq(v: &[u8]) -> Vec<Residue4> {
        v.iter().map(|&x| Residue4::new(x)).collect()
    }

    #[test]
    fn verify_examples() {
        let c5 = Z4Poly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3]);
        assert_eq!(verify_connection(&period(5), &c5), Ok(true));
        assert_eq!(verify_connection(&period(3), &Z4Poly::from_ints(&[1])), Ok(false));
        let c7 = Z4Poly::from_ints(&[1, 0, 1, 1, 3]);
        assert_eq!(verify_connection(&period(7), &c7), Ok(true));
        assert_eq!(
            verify_connection(&period(7), &Z4Poly::from_ints(&[3, 1])),
            Err(Error::BadConnectionPolynomial)
        );
    }

    #[test]
    fn reeds_sloane_examples() {
        assert_eq!(reeds_sloane(&period(3)).unwrap().lc, 5);
        assert_eq!(reeds_sloane(&period(5)).unwrap().lc, 10);
        let zero = reeds_sloane(&seq(&[0; 6])).unwrap();
        assert_eq!((zero.lc, zero.connection), (0, Z4Poly::from_ints(&[1])));
    }

    #[test]
    fn brute_force_examples() {
        let b3 = brute_force_minimal(&period(3), 6).unwrap();
        assert_eq!(b3.lc, 5);
        assert!(verify_connection(&period(3), &b3.connection).unwrap());

        // constant 2s: both 1+X and 1+3X annihilate; 1+X comes first
        let twos = seq(&[2; 8]);
        let b = brute_force_minimal(&twos, 8).unwrap();
        assert_eq!(b.lc, 1);
        assert!(verify_connection(&twos, &b.connection).unwrap());
        assert!(verify_connection(&twos, &Z4Poly::from_ints(&[1, 3])).unwrap());

        let impulse = seq(&[1, 0, 0, 0]);
        let b = brute_force_minimal(&impulse, 4).unwrap();
        assert_eq!((b.lc, b.connection), (4, Z4Poly::from_ints(&[1, 0, 0, 0, 3])));
    }

    #[test]
    fn brute_force_cap() {
        assert_eq!(brute_force_minimal(&seq(&[1, 0, 0, 0]), 3), Err(Error::DegreeCapExceeded(3)));
    }

    #[test]
    fn reeds_sloane_matches_brute_force_on_short_periods() {
        // every period of length <= 4 over Z_4
        for n in 1..=4usize {
            for code in 0..4u32.pow(n as u32) {
                let s: Vec<Residue4> =
                    (0..n).map(|i| Residue4::new((code >> (2 * i)) as u8)).collect();
                let rs = reeds_sloane(&s).unwrap();
                let bf = brute_force_minimal(&s, n).unwrap();
                assert_eq!(rs.lc, bf.lc, "{s:?}");
            }
        }
    }
}
