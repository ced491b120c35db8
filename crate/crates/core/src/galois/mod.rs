//! The Galois ring GR(4^r, 4) = Z_4[X]/(f) for a basic irreducible `f`.
//!
//! Elements are coordinate vectors over Z_4 of length `r`. Coordinate
//! arithmetic runs in wrapping `u8`; since 4 divides 256 the result is
//! exact modulo 4 after masking.

mod gf2;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

pub use gf2::Gf2Poly;

use crate::arith::{factorize, multiplicative_order_mod, require_odd_prime};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Z4Poly};
use crate::ring::{CoeffRing, Residue4};

/// Order of 2 modulo the odd prime `p`.
pub fn ord2_mod_p(p: u64) -> Result<usize> {
    let p = require_odd_prime(p)?;
    let r = multiplicative_order_mod(2, p).ok_or(Error::NotOddPrime(p))?;
    Ok(r as usize)
}

/// Lifts an irreducible `h` over GF(2) to the basic irreducible `f` over
/// Z_4 defined by `f(X²) = (−1)^r h(X) h(−X)`.
///
/// The roots of `f` are the Teichmüller lifts of the roots of `h`, so `f`
/// divides `X^(2^r − 1) − 1`.
pub fn lift_irreducible(h: &Gf2Poly) -> Result<Z4Poly> {
    if !h.is_irreducible() {
        return Err(Error::Reducible(h.to_string()));
    }
    let r = h.degree().expect("irreducible polynomials are nonzero");
    let bits = h.to_bits();
    let plus = Z4Poly::new(bits.iter().map(|&b| Residue4::new(b as u8)).collect());
    let minus = Z4Poly::new(
        bits.iter()
            .enumerate()
            .map(|(i, &b)| {
                let c = Residue4::new(b as u8);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    );
    let mut prod = plus.poly_mul(&minus);
    if r % 2 == 1 {
        prod = prod.poly_neg();
    }
    let coeffs = prod.coeffs();
    let f: Vec<Residue4> =
        (0..=r).map(|i| coeffs.get(2 * i).copied().unwrap_or(Residue4::ZERO)).collect();
    debug_assert!(coeffs.iter().skip(1).step_by(2).all(|c| c.value() == 0));
    Ok(Z4Poly::new(f))
}

struct RingData {
    degree: usize,
    modulus: Z4Poly,
    // low coefficients f_0..f_{r-1} of the monic modulus
    low: Vec<u8>,
}

/// A Galois ring of characteristic 4. Cheap to clone.
#[derive(Clone)]
pub struct GaloisRing(Arc<RingData>);

impl GaloisRing {
    /// Builds `Z_4[X]/(modulus)`. The modulus must be monic with an
    /// irreducible reduction modulo 2.
    pub fn new(modulus: Z4Poly) -> Result<Self> {
        let r = modulus
            .degree()
            .finite()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidArgument("modulus must have degree >= 1".into()))?;
        if modulus.leading() != Some(&Residue4::ONE) {
            return Err(Error::InvalidArgument("modulus must be monic".into()));
        }
        let reduced = reduce_mod2(&modulus);
        if !reduced.is_irreducible() {
            return Err(Error::Reducible(reduced.to_string()));
        }
        let low = modulus.coeffs()[..r].iter().map(|c| c.value()).collect();
        Ok(Self(Arc::new(RingData { degree: r, modulus, low })))
    }

    /// The ring used for the prime `p`: degree `r = ord_p(2)`, modulus the
    /// lift of the smallest irreducible of degree `r`.
    pub fn for_prime(p: u64) -> Result<Self> {
        let r = ord2_mod_p(p)?;
        let h = Gf2Poly::smallest_irreducible(r);
        Self::new(lift_irreducible(&h)?)
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn modulus(&self) -> &Z4Poly {
        &self.0.modulus
    }

    /// Number of units, `2^r (2^r − 1)`.
    pub fn unit_group_order(&self) -> BigUint {
        let r = self.degree();
        (BigUint::one() << r) * ((BigUint::one() << r) - 1u32)
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn zero(&self) -> GrElement {
        self.constant(Residue4::ZERO)
    }

    pub fn one(&self) -> GrElement {
        self.constant(Residue4::ONE)
    }

    /// The image of a Z_4 constant.
    pub fn constant(&self, c: Residue4) -> GrElement {
        let mut coords = vec![Residue4::ZERO; self.degree()];
        coords[0] = c;
        GrElement { ring: self.clone(), coords }
    }

    /// The residue class of `X`.
    pub fn generator(&self) -> GrElement {
        self.reduce(&Z4Poly::monomial(Residue4::ONE, 1))
    }

    /// An element from coordinates; missing high coordinates are zero.
    pub fn element(&self, coords: &[Residue4]) -> Result<GrElement> {
        if coords.len() > self.degree() {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for a ring of degree {}",
                coords.len(),
                self.degree()
            )));
        }
        let mut c = coords.to_vec();
        c.resize(self.degree(), Residue4::ZERO);
        Ok(GrElement { ring: self.clone(), coords: c })
    }

    /// The residue class of an arbitrary Z_4 polynomial.
    pub fn reduce(&self, a: &Z4Poly) -> GrElement {
        let (_, rem) = a.div_rem(self.modulus()).expect("modulus is monic");
        let mut coords = rem.into_coeffs();
        coords.resize(self.degree(), Residue4::ZERO);
        GrElement { ring: self.clone(), coords }
    }

    /// Candidate units in the deterministic order `X, X+1, X+2, …`: the
    /// `k`-th candidate has base-4 digits of `k + 4` as coordinates.
    fn candidate(&self, k: u64) -> Option<GrElement> {
        let mut n = k + 4;
        let mut coords = vec![Residue4::ZERO; self.degree()];
        for c in coords.iter_mut() {
            *c = Residue4::new((n & 3) as u8);
            n >>= 2;
        }
        (n == 0).then(|| GrElement { ring: self.clone(), coords })
    }

    fn mul_coords(&self, a: &[Residue4], b: &[Residue4]) -> Vec<Residue4> {
        let r = self.degree();
        let mut t = vec![0u8; 2 * r - 1];
        for (i, x) in a.iter().enumerate() {
            let x = x.value();
            if x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                t[i + j] = t[i + j].wrapping_add(x.wrapping_mul(y.value()));
            }
        }
        let low = &self.0.low;
        for i in (r..2 * r - 1).rev() {
            let c = t[i] & 3;
            if c == 0 {
                continue;
            }
            for (j, f) in low.iter().enumerate() {
                t[i - r + j] = t[i - r + j].wrapping_sub(c.wrapping_mul(*f));
            }
        }
        t.truncate(r);
        t.into_iter().map(Residue4::new).collect()
    }

    /// Evaluates a Z_4 polynomial at `point` by Horner's rule.
    pub fn eval(&self, a: &Z4Poly, point: &GrElement) -> Result<GrElement> {
        self.check(&point.ring)?;
        let mut acc = self.zero();
        for c in a.coeffs().iter().rev() {
            acc = acc.mul_unchecked(point);
            acc.coords[0] += *c;
        }
        Ok(acc)
    }
}

impl fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR(4^{}, 4) mod {}", self.degree(), self.modulus())
    }
}

impl PartialEq for GaloisRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

fn reduce_mod2(a: &Z4Poly) -> Gf2Poly {
    Gf2Poly::from_bits(&a.coeffs().iter().map(|c| c.value() & 1 == 1).collect::<Vec<_>>())
}

/// An element of a [`GaloisRing`].
#[derive(Clone)]
pub struct GrElement {
    ring: GaloisRing,
    coords: Vec<Residue4>,
}

impl GrElement {
    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    /// Coordinates in the basis `1, X, …, X^(r−1)`.
    pub fn coords(&self) -> &[Residue4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.value() == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0] == Residue4::ONE && self.coords[1..].iter().all(|c| c.value() == 0)
    }

    /// A unit iff the reduction modulo 2 is nonzero in the residue field.
    pub fn is_unit(&self) -> bool {
        self.coords.iter().any(|c| c.value() & 1 == 1)
    }

    /// `Some(c)` when the element is the image of `c ∈ Z_4`.
    pub fn as_base(&self) -> Option<Residue4> {
        self.coords[1..].iter().all(|c| c.value() == 0).then_some(self.coords[0])
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.ring.check(&rhs.ring)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.ring.check(&rhs.ring)?;
        Ok(self.add_unchecked(&rhs.negate()))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.ring.check(&rhs.ring)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn add_unchecked(&self, rhs: &Self) -> Self {
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| *a + *b).collect();
        Self { ring: self.ring.clone(), coords }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let coords = self.ring.mul_coords(&self.coords, &rhs.coords);
        Self { ring: self.ring.clone(), coords }
    }

    pub fn negate(&self) -> Self {
        let coords = self.coords.iter().map(|c| -*c).collect();
        Self { ring: self.ring.clone(), coords }
    }

    /// Multiplication by a Z_4 scalar.
    pub fn scale(&self, c: Residue4) -> Self {
        let coords = self.coords.iter().map(|x| *x * c).collect();
        Self { ring: self.ring.clone(), coords }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn pow_big(&self, e: &BigUint) -> Self {
        let mut acc = self.ring.one();
        for i in (0..e.bits()).rev() {
            acc = acc.mul_unchecked(&acc);
            if e.bit(i) {
                acc = acc.mul_unchecked(self);
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        Ok(self.pow_big(&(self.ring.unit_group_order() - 1u32)))
    }

    /// The least `k ≥ 1` with `x^k = 1`, given a multiple `bound` of the
    /// order. Descends through the prime factors of `bound`.
    pub fn multiplicative_order(&self, bound: u64) -> Result<u64> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        if bound == 0 || !self.pow(bound).is_one() {
            return Err(Error::OrderBoundTooSmall(bound));
        }
        let mut ord = bound;
        for (q, _) in factorize(bound) {
            while ord % q == 0 && self.pow(ord / q).is_one() {
                ord /= q;
            }
        }
        Ok(ord)
    }

    /// `[x^0, x^1, …, x^(n−1)]`, one multiplication per entry.
    pub fn powers(&self, n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n);
        let mut cur = self.ring.one();
        for _ in 0..n {
            let next = cur.mul_unchecked(self);
            out.push(cur);
            cur = next;
        }
        out
    }
}

impl PartialEq for GrElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coords == other.coords
    }
}

impl Eq for GrElement {}

impl fmt::Debug for GrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GrElement {
    /// The residue representative as a polynomial in `ξ`, the class of `X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.value() != 0)
            .map(|(i, c)| match (i, c.value()) {
                (0, v) => format!("{v}"),
                (1, 1) => "ξ".to_string(),
                (1, v) => format!("{v}ξ"),
                (i, 1) => format!("ξ^{i}"),
                (i, v) => format!("{v}ξ^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Operator forms panic when the operands come from different rings; use
/// the `try_*` methods to get an error instead.
impl Add for &GrElement {
    type Output = GrElement;
    fn add(self, rhs: Self) -> GrElement {
        self.try_add(rhs).expect("mixed-ring addition")
    }
}

impl Sub for &GrElement {
    type Output = GrElement;
    fn sub(self, rhs: Self) -> GrElement {
        self.try_sub(rhs).expect("mixed-ring subtraction")
    }
}

impl Mul for &GrElement {
    type Output = GrElement;
    fn mul(self, rhs: Self) -> GrElement {
        self.try_mul(rhs).expect("mixed-ring multiplication")
    }
}

impl Neg for &GrElement {
    type Output = GrElement;
    fn neg(self) -> GrElement {
        self.negate()
    }
}

impl CoeffRing for GrElement {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }
    fn one_like(&self) -> Self {
        self.ring.one()
    }
    fn is_zero(&self) -> bool {
        GrElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_unit(&self) -> bool {
        GrElement::is_unit(self)
    }
    fn inverse(&self) -> Option<Self> {
        GrElement::inverse(self).ok()
    }
}

/// Polynomials with Galois-ring coefficients.
pub type GrPoly = Polynomial<GrElement>;

/// Embeds a Z_4 polynomial into `ring[X]`.
pub fn embed_poly(ring: &GaloisRing, a: &Z4Poly) -> GrPoly {
    a.map(|c| ring.constant(*c))
}

/// `β` of order `p` and `γ = 3β` of order `2p`.
#[derive(Clone, Debug)]
pub struct GammaPair {
    pub beta: GrElement,
    pub gamma: GrElement,
}

/// Finds `β` of multiplicative order `p` by raising the candidates
/// `X, X+1, X+2, …` to `2^r (2^r − 1)/p` and taking the first result
/// different from 1, then sets `γ = 3β`.
pub fn find_gamma(ring: &GaloisRing, p: u64) -> Result<GammaPair> {
    let p = require_odd_prime(p)?;
    let r = ring.degree();
    let mersenne = (BigUint::one() << r) - 1u32;
    if (&mersenne % p) != BigUint::default() {
        return Err(Error::InvalidArgument(format!("{p} does not divide 2^{r} - 1")));
    }
    let cofactor = mersenne / p;
    let mut k = 0u64;
    while let Some(u) = ring.candidate(k) {
        k += 1;
        if !u.is_unit() {
            continue;
        }
        let mut t = u;
        for _ in 0..r {
            t = t.mul_unchecked(&t);
        }
        let beta = t.pow_big(&cofactor);
        if beta.is_one() {
            continue;
        }
        let gamma = beta.scale(Residue4::THREE);
        if !beta.pow(p).is_one() || gamma.pow(p) != ring.constant(Residue4::THREE) {
            return Err(Error::Internal(format!(
                "candidate {beta} fails the order-{p} postcondition"
            )));
        }
        return Ok(GammaPair { beta, gamma });
    }
    Err(Error::Internal(format!("no element of order {p} found")))
}

/// Cached powers `γ^0 … γ^(n−1)` of an element of order dividing `n`.
#[derive(Clone, Debug)]
pub struct PowerTable {
    powers: Vec<GrElement>,
}

impl PowerTable {
    pub fn new(base: &GrElement, n: usize) -> Self {
        Self { powers: base.powers(n) }
    }

    pub fn period(&self) -> usize {
        self.powers.len()
    }

    /// `γ^v`, with `v` taken modulo the period.
    pub fn get(&self, v: usize) -> &GrElement {
        &self.powers[v % self.powers.len()]
    }

    /// `Σ_u a_u γ^(u·v)`: evaluation of a Z_4 polynomial at `γ^v` using
    /// only additions of cached powers.
    pub fn eval(&self, a: &Z4Poly, v: usize) -> GrElement {
        let n = self.powers.len();
        let r = self.powers[0].ring.degree();
        let mut acc = vec![0u8; r];
        for (u, c) in a.coeffs().iter().enumerate() {
            if c.value() == 0 {
                continue;
            }
            let g = &self.powers[(u % n) * (v % n) % n];
            for (x, y) in acc.iter_mut().zip(&g.coords) {
                *x = x.wrapping_add(c.value().wrapping_mul(y.value()));
            }
        }
        GrElement {
            ring: self.powers[0].ring.clone(),
            coords: acc.into_iter().map(Residue4::new).collect(),
        }
    }

    /// `Σ_{u ∈ set} γ^(u·v)`.
    pub fn sum_over(&self, set: &[u64], v: usize) -> GrElement {
        let n = self.powers.len();
        let ring = &self.powers[0].ring;
        let mut acc = ring.zero();
        for &u in set {
            acc = acc.add_unchecked(&self.powers[(u as usize % n) * (v % n) % n]);
        }
        acc
    }
}
