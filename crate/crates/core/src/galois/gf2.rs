//! Polynomials over the two-element field, packed into 64-bit words.

use std::fmt;

use crate::arith::factorize;

/// A polynomial over GF(2); bit `i` is the coefficient of `X^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(1)
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::from_word(2)
    }

    /// From a packed word: `0b1011` is `X^3 + X + 1`.
    pub fn from_word(w: u64) -> Self {
        let mut p = Self { words: vec![w] };
        p.trim();
        p
    }

    /// From the exponents of the nonzero terms.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    /// From 0/1 coefficients, constant term first.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b {
                p.flip(i);
            }
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some(64 * (self.words.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn bit(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % 64);
        self.trim();
    }

    /// Coefficients as booleans, constant term first, `degree + 1` long.
    pub fn to_bits(&self) -> Vec<bool> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.bit(i)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.words.len().max(rhs.words.len());
        let mut words = vec![0u64; n];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ rhs.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    fn shl(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (s / 64, s % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut acc = Self::zero();
        if let Some(d) = rhs.degree() {
            for i in 0..=d {
                if rhs.bit(i) {
                    acc = acc.add(&self.shl(i));
                }
            }
        }
        acc
    }

    /// Remainder modulo a nonzero `m`.
    pub fn rem(&self, m: &Self) -> Self {
        let dm = m.degree().expect("remainder by the zero polynomial");
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dm {
                break;
            }
            r = r.add(&m.shl(dr - dm));
        }
        r
    }

    pub fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        self.mul(rhs).rem(m)
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's test: `f` of degree `n` is irreducible iff `X^(2^n) ≡ X`
    /// and `gcd(X^(2^(n/q)) − X, f) = 1` for every prime `q | n`.
    pub fn is_irreducible_rabin(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        let x = Self::x().rem(self);
        // frob[k] = X^(2^k) mod f
        let mut frob = Vec::with_capacity(n + 1);
        let mut cur = x.clone();
        frob.push(cur.clone());
        for _ in 0..n {
            cur = cur.mul_mod(&cur, self);
            frob.push(cur.clone());
        }
        if frob[n] != x {
            return false;
        }
        factorize(n as u64).iter().all(|&(q, _)| {
            let h = frob[n / q as usize].add(&x);
            self.gcd(&h).is_one()
        })
    }

    /// Exhaustive trial division by every polynomial of degree `1..=n/2`.
    /// Only sensible for small degrees.
    pub fn is_irreducible_trial(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        assert!(n <= 62, "trial division is limited to small degrees");
        (1..=n / 2)
            .all(|d| (1u64 << d..1u64 << (d + 1)).all(|w| !self.rem(&Self::from_word(w)).is_zero()))
    }

    /// Irreducibility: trial division up to degree 16, Rabin's test above.
    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            Some(d) if d <= 16 => self.is_irreducible_trial(),
            _ => self.is_irreducible_rabin(),
        }
    }

    /// The smallest irreducible polynomial of degree `r` with nonzero
    /// constant term, ordering polynomials by their coefficients read
    /// high-to-low as a binary number.
    pub fn smallest_irreducible(r: usize) -> Self {
        assert!(r >= 1);
        // lower r bits run through 1, 3, 5, ... (constant term set)
        let mut low: Vec<bool> = vec![false; r];
        low[0] = true;
        loop {
            let mut bits = low.clone();
            bits.push(true);
            let cand = Self::from_bits(&bits);
            if cand.is_irreducible() {
                return cand;
            }
            // increment the binary counter formed by bits 1..r
            let mut i = 1;
            while i < r && low[i] {
                low[i] = false;
                i += 1;
            }
            assert!(i < r, "no irreducible polynomial of degree {r}");
            low[i] = true;
        }
    }
}

impl fmt::Display for Gf2Poly {
    /// Highest degree first, e.g. `X^3 + X + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let terms: Vec<String> = (0..=d)
            .rev()
            .filter(|&i| self.bit(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "X".to_string(),
                i => format!("X^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_display() {
        let h = Gf2Poly::from_word(0b1011);
        assert_eq!(h.degree(), Some(3));
        assert_eq!(h.to_string(), "X^3 + X + 1");
        let big = Gf2Poly::from_exponents(&[130, 1, 0]);
        assert_eq!(big.degree(), Some(130));
        assert_eq!(Gf2Poly::zero().degree(), None);
    }

    #[test]
    fn multiplication_and_remainder() {
        // (X+1)^2 = X^2 + 1 over GF(2)
        let a = Gf2Poly::from_word(0b11);
        assert_eq!(a.mul(&a), Gf2Poly::from_word(0b101));
        let f = Gf2Poly::from_word(0b1011);
        let prod = f.mul(&Gf2Poly::from_word(0b110));
        assert!(prod.rem(&f).is_zero());
        let wide = Gf2Poly::from_exponents(&[70, 3]).mul(&Gf2Poly::from_exponents(&[64, 0]));
        assert_eq!(wide, Gf2Poly::from_exponents(&[134, 70, 67, 3]));
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for w in 2u64..(1 << 11) {
            let f = Gf2Poly::from_word(w);
            assert_eq!(f.is_irreducible_rabin(), f.is_irreducible_trial(), "{f}");
        }
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of irreducible polynomials of degree n over GF(2)
        let expected = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99];
        for (n, &count) in (1..=10).zip(&expected) {
            let got = (1u64 << n..1u64 << (n + 1))
                .filter(|&w| Gf2Poly::from_word(w).is_irreducible())
                .count();
            assert_eq!(got, count, "degree {n}");
        }
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(Gf2Poly::smallest_irreducible(2), Gf2Poly::from_word(0b111));
        assert_eq!(Gf2Poly::smallest_irreducible(3), Gf2Poly::from_word(0b1011));
        assert_eq!(Gf2Poly::smallest_irreducible(4), Gf2Poly::from_word(0b10011));
        assert_eq!(Gf2Poly::smallest_irreducible(8), Gf2Poly::from_word(0x11b));
        let big = Gf2Poly::smallest_irreducible(100);
        assert_eq!(big.degree(), Some(100));
        assert!(big.is_irreducible_rabin());
    }
}
