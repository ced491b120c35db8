//! Quaternary cyclotomic sequences of period `2p` over Z_4 and their
//! linear complexity.
//!
//! The crate builds the generalized cyclotomic classes modulo `2p`, the
//! sequence they define over Z_4, and computes its linear complexity three
//! ways: Reeds–Sloane synthesis, exhaustive search, and the closed form by
//! residue class of `p`. The [`verification`] module checks the algebra
//! behind the closed form inside the Galois ring GR(4^r, 4).

pub mod arith;
pub mod commands;
pub mod complexity;
pub mod cyclotomy;
pub mod error;
pub mod galois;
pub mod poly;
pub mod ring;
pub mod sequence;
pub mod verification;

pub use complexity::{
    brute_force_minimal, classify_prime, reeds_sloane, theorem_lc, verify_connection, LfsrResult,
    ResidueClass,
};
pub use cyclotomy::{ClassLabel, GeneralizedCyclotomy};
pub use error::{Error, Result};
pub use galois::{find_gamma, GaloisRing, GrElement};
pub use poly::{Degree, Polynomial, Z4Poly};
pub use ring::{CoeffRing, Residue4};
pub use sequence::QuaternarySequence;
