//! The residue ring Z_4 and the coefficient-ring abstraction shared by
//! Z_4[X] and GR(4^r,4)[X].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// The operations polynomial code needs from its coefficient ring.
///
/// `zero_like`/`one_like` take a receiver because some rings (Galois rings)
/// need a context to build their constants.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_unit(&self) -> bool;
    /// `None` when `self` is not a unit.
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

/// An element of Z_4 = {0, 1, 2, 3}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
#[repr(transparent)]
pub struct Residue4(u8);

impl Residue4 {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    pub const TWO: Self = Self(2);
    pub const THREE: Self = Self(3);

    /// All four residues in increasing order.
    pub const ALL: [Self; 4] = [Self::ZERO, Self::ONE, Self::TWO, Self::THREE];

    /// Reduces `v` modulo 4.
    #[inline]
    pub const fn new(v: u8) -> Self {
        Self(v & 3)
    }

    /// Reduces a signed integer modulo 4 into {0,1,2,3}.
    #[inline]
    pub const fn from_i64(v: i64) -> Self {
        Self(v.rem_euclid(4) as u8)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// Units are self-inverse in Z_4: 1·1 = 3·3 = 1.
    #[inline]
    pub const fn inverse(self) -> Option<Self> {
        if self.is_unit() {
            Some(self)
        } else {
            None
        }
    }
}

impl TryFrom<u8> for Residue4 {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, Self::Error> {
        if v < 4 {
            Ok(Self(v))
        } else {
            Err(format!("{v} is not a residue modulo 4"))
        }
    }
}

impl From<Residue4> for u8 {
    fn from(r: Residue4) -> u8 {
        r.0
    }
}

impl fmt::Debug for Residue4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Residue4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Residue4 {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self((self.0 + rhs.0) & 3)
    }
}

impl Sub for Residue4 {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self((self.0 + 4 - rhs.0) & 3)
    }
}

impl Mul for Residue4 {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self((self.0 * rhs.0) & 3)
    }
}

impl Neg for Residue4 {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self((4 - self.0) & 3)
    }
}

impl AddAssign for Residue4 {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for Residue4 {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for Residue4 {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl CoeffRing for Residue4 {
    fn zero_like(&self) -> Self {
        Self::ZERO
    }
    fn one_like(&self) -> Self {
        Self::ONE
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
    fn is_unit(&self) -> bool {
        Residue4::is_unit(*self)
    }
    fn inverse(&self) -> Option<Self> {
        Residue4::inverse(*self)
    }
}
