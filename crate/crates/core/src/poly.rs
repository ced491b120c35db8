//! Dense univariate polynomials over a [`CoeffRing`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, Residue4};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial stored as its coefficient vector, constant term first.
///
/// The top stored coefficient is always nonzero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

/// Polynomials over Z_4.
pub type Z4Poly = Polynomial<Residue4>;

impl<R: CoeffRing> Polynomial<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c·X^n`.
    pub fn monomial(c: R, n: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// The linear factor `X − root`.
    pub fn linear_factor(root: &R) -> Self {
        Self::new(vec![root.neg(), root.one_like()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(CoeffRing::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn poly_add(&self, rhs: &Self) -> Self {
        let (long, short) =
            if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(s);
        }
        Self::new(coeffs)
    }

    pub fn poly_neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(CoeffRing::neg).collect())
    }

    pub fn poly_sub(&self, rhs: &Self) -> Self {
        self.poly_add(&rhs.poly_neg())
    }

    /// Schoolbook product. Over Z_4 the degree may drop below
    /// `deg a + deg b` when both leading coefficients are zero divisors.
    pub fn poly_mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Remainder modulo `X^n − 1`: the coefficient of `X^i` is folded onto
    /// `X^(i mod n)`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn mod_cyclic(&self, n: usize) -> Self {
        assert!(n >= 1, "cyclic modulus X^n - 1 needs n >= 1");
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % n] = out[i % n].add(c);
        }
        Self::new(out)
    }

    /// Long division by a divisor with unit leading coefficient.
    ///
    /// Returns `(q, r)` with `self = d·q + r` and `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let lead = d.leading().ok_or(Error::DivisionByZero)?;
        let inv = lead.inverse().ok_or(Error::NonUnitLeadingCoefficient)?;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let zero = inv.zero_like();
        let mut quot = vec![zero; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = rem[k].sub(&q.mul(dc));
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Horner evaluation at a point of the same ring.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Applies a ring map coefficient-wise.
    pub fn map<S: CoeffRing>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Z4Poly {
    /// Builds a polynomial from integer coefficients, constant term first,
    /// reducing each modulo 4.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Residue4::from_i64(c)).collect())
    }

    /// `X^n − 1`.
    pub fn cyclic_modulus(n: usize) -> Self {
        let mut coeffs = vec![Residue4::ZERO; n + 1];
        coeffs[0] = Residue4::THREE;
        coeffs[n] = Residue4::ONE;
        Self::new(coeffs)
    }

    /// Coefficients as plain integers, constant term first.
    pub fn to_u8_vec(&self) -> Vec<u8> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }
}

impl<R: CoeffRing> Add for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: Self) -> Polynomial<R> {
        self.poly_add(rhs)
    }
}

impl<R: CoeffRing> Sub for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: Self) -> Polynomial<R> {
        self.poly_sub(rhs)
    }
}

impl<R: CoeffRing> Mul for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: Self) -> Polynomial<R> {
        self.poly_mul(rhs)
    }
}

impl<R: CoeffRing> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        self.poly_neg()
    }
}

impl<R: fmt::Debug> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

impl fmt::Display for Z4Poly {
    /// Renders as `1 + 3X^10`, constant term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.value() == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => f.write_str("X")?,
                (1, v) => write!(f, "{v}X")?,
                (i, 1) => write!(f, "X^{i}")?,
                (i, v) => write!(f, "{v}X^{i}")?,
            }
        }
        Ok(())
    }
}
