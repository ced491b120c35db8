//! Generalized cyclotomic classes modulo `2p`.
//!
//! With `g` odd and primitive modulo both `p` and `2p`, the classes are
//! `D0 = ⟨g²⟩`, `D1 = g·D0` (odd residues other than `p`) and
//! `E_i = 2·D_i` (even residues other than 0). Together with `{0, p}` they
//! partition `Z_2p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{multiplicative_order_mod, pow_mod, require_odd_prime};
use crate::error::{Error, Result};

/// The block of the partition of `Z_2p` containing a residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    Zero,
    P,
    D0,
    D1,
    E0,
    E1,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::Zero => "Zero",
            ClassLabel::P => "P",
            ClassLabel::D0 => "D0",
            ClassLabel::D1 => "D1",
            ClassLabel::E0 => "E0",
            ClassLabel::E1 => "E1",
        })
    }
}

fn is_common_primitive_root(g: u64, p: u64) -> bool {
    g % 2 == 1
        && multiplicative_order_mod(g, p) == Some(p - 1)
        && multiplicative_order_mod(g, 2 * p) == Some(p - 1)
}

/// The smallest odd `g ≥ 3` that is a primitive root modulo `p` and `2p`.
pub fn find_common_primitive_root(p: u64) -> Result<u64> {
    primitive_root_above(p, 1)
}

/// The smallest odd common primitive root strictly greater than `after`.
pub fn primitive_root_above(p: u64, after: u64) -> Result<u64> {
    let p = require_odd_prime(p)?;
    let start = if after % 2 == 0 { after + 1 } else { after + 2 };
    (start.max(3)..)
        .step_by(2)
        .take(4 * p as usize)
        .find(|&g| is_common_primitive_root(g, p))
        .ok_or_else(|| Error::Internal(format!("no common primitive root found for {p}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedCyclotomy {
    p: u64,
    g: u64,
    d0: Vec<u64>,
    d1: Vec<u64>,
    e0: Vec<u64>,
    e1: Vec<u64>,
    labels: Vec<ClassLabel>,
}

impl GeneralizedCyclotomy {
    /// Classes for the prime `p` using the smallest common primitive root.
    pub fn new(p: u64) -> Result<Self> {
        let g = find_common_primitive_root(p)?;
        Self::with_generator(p, g)
    }

    /// Classes generated by a caller-chosen common primitive root `g`.
    pub fn with_generator(p: u64, g: u64) -> Result<Self> {
        let p = require_odd_prime(p)?;
        if !is_common_primitive_root(g, p) {
            return Err(Error::InvalidArgument(format!(
                "{g} is not an odd primitive root modulo {p} and {}",
                2 * p
            )));
        }
        let n = 2 * p;
        let half = (p - 1) / 2;
        let d0: Vec<u64> = (0..half).map(|k| pow_mod(g, 2 * k, n)).collect();
        let d1: Vec<u64> = (0..half).map(|k| pow_mod(g, 2 * k + 1, n)).collect();
        let e0: Vec<u64> = d0.iter().map(|u| 2 * u % n).collect();
        let e1: Vec<u64> = d1.iter().map(|u| 2 * u % n).collect();

        let mut labels = vec![ClassLabel::Zero; n as usize];
        labels[p as usize] = ClassLabel::P;
        for (set, label) in [
            (&d0, ClassLabel::D0),
            (&d1, ClassLabel::D1),
            (&e0, ClassLabel::E0),
            (&e1, ClassLabel::E1),
        ] {
            for &u in set {
                labels[u as usize] = label;
            }
        }
        let sorted = |mut v: Vec<u64>| {
            v.sort_unstable();
            v
        };
        Ok(Self { p, g, d0: sorted(d0), d1: sorted(d1), e0: sorted(e0), e1: sorted(e1), labels })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The period `2p`.
    pub fn modulus(&self) -> u64 {
        2 * self.p
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    /// `D_i` as a sorted list; `i` is taken modulo 2.
    pub fn d(&self, i: usize) -> &[u64] {
        if i % 2 == 0 {
            &self.d0
        } else {
            &self.d1
        }
    }

    /// `E_i` as a sorted list; `i` is taken modulo 2.
    pub fn e(&self, i: usize) -> &[u64] {
        if i % 2 == 0 {
            &self.e0
        } else {
            &self.e1
        }
    }

    /// The partition block containing `v`.
    ///
    /// # Panics
    /// If `v >= 2p`.
    pub fn class_of(&self, v: u64) -> ClassLabel {
        self.labels[v as usize]
    }

    /// `[i, j] = |(1 + D_i) ∩ E_j|`.
    pub fn cyclotomic_number(&self, i: usize, j: usize) -> usize {
        let n = self.modulus();
        let target = if j % 2 == 0 { ClassLabel::E0 } else { ClassLabel::E1 };
        self.d(i).iter().filter(|&&u| self.class_of((u + 1) % n) == target).count()
    }
}
