//! Shift-register synthesis over `Z_(q^e)` for a prime `q`.
//!
//! This is the Reeds–Sloane generalization of Berlekamp–Massey to residue
//! rings of prime-power order. Because the ring has zero divisors, a single
//! running pair `(a, b)` is not enough: the algorithm carries one pair per
//! level `η = 0..e` with `a_η ≡ q^η (mod X)`, and repairs a discrepancy
//! `q^u·t` (`t` a unit) at level `η` using the saved pair of level
//! `e − 1 − u`. The level-0 pair is the answer.
//!
//! For a finite sequence `s_0 … s_(n−1)` with generating power series
//! `S(X)`, the result satisfies `a(X)·S(X) ≡ b(X) (mod X^n)` with
//! `a(0) = 1` and minimal `L = max(deg a, 1 + deg b)`.

/// Output of [`synthesize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesis {
    /// Connection polynomial `a`, constant term first, trimmed; `a[0] = 1`.
    pub connection: Vec<u64>,
    /// The polynomial `b`, trimmed (possibly empty).
    pub remainder: Vec<u64>,
    /// Register length `max(deg a, 1 + deg b)`.
    pub length: usize,
}

struct Zq {
    prime: u64,
    exp: u32,
    modulus: u64,
}

impl Zq {
    fn pow_q(&self, k: u32) -> u64 {
        self.prime.pow(k)
    }

    /// Writes a nonzero `d` as `q^u · t` with `t` a unit; zero maps to `(1, e)`.
    fn split(&self, d: u64) -> (u64, u32) {
        if d == 0 {
            return (1, self.exp);
        }
        let (mut t, mut u) = (d, 0);
        while t % self.prime == 0 {
            t /= self.prime;
            u += 1;
        }
        (t, u)
    }

    fn inverse(&self, a: u64) -> u64 {
        // extended Euclid on (a, modulus)
        let (mut r0, mut r1) = (self.modulus as i128, (a % self.modulus) as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "{a} is not a unit");
        s0.rem_euclid(self.modulus as i128) as u64
    }
}

fn degree(v: &[u64]) -> Option<usize> {
    v.len().checked_sub(1)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn register_length(a: &[u64], b: &[u64]) -> isize {
    let da = degree(a).map_or(isize::MIN / 2, |d| d as isize);
    let db = degree(b).map_or(-1, |d| d as isize);
    da.max(db + 1)
}

/// `target -= coef · X^shift · src` over `Z_m`.
fn sub_shifted(target: &mut Vec<u64>, src: &[u64], coef: u64, shift: usize, m: u64) {
    if src.is_empty() || coef == 0 {
        return;
    }
    if target.len() < src.len() + shift {
        target.resize(src.len() + shift, 0);
    }
    for (i, &c) in src.iter().enumerate() {
        let t = &mut target[i + shift];
        *t = (*t + m - coef * c % m) % m;
    }
    trim(target);
}

/// Minimal shift register for `seq` over `Z_(prime^exp)`.
///
/// Terms of `seq` must already be reduced modulo `prime^exp`.
///
/// # Panics
/// If `exp == 0` or `prime^exp` overflows 32 bits.
pub fn synthesize(seq: &[u64], prime: u64, exp: u32) -> Synthesis {
    assert!(exp >= 1);
    let modulus = prime.checked_pow(exp).filter(|&m| m < 1 << 32).expect("modulus too large");
    let zq = Zq { prime, exp, modulus };
    let e = exp as usize;

    if seq.is_empty() {
        return Synthesis { connection: vec![1], remainder: Vec::new(), length: 0 };
    }
    debug_assert!(seq.iter().all(|&s| s < modulus));

    let s0 = seq[0];
    // current pairs (step k) and next pairs (step k+1), one per level
    let mut a: Vec<Vec<u64>> = (0..e).map(|h| vec![zq.pow_q(h as u32)]).collect();
    let mut b: Vec<Vec<u64>> = vec![Vec::new(); e];
    let mut a_next = a.clone();
    let mut b_next: Vec<Vec<u64>> = (0..e)
        .map(|h| {
            let mut v = vec![s0 * zq.pow_q(h as u32) % modulus];
            trim(&mut v);
            v
        })
        .collect();
    // discrepancy of each level as (unit part, q-adic valuation)
    let mut unit = vec![1u64; e];
    let mut val = vec![0u32; e];
    for h in 0..e {
        (unit[h], val[h]) = zq.split(s0 * zq.pow_q(h as u32) % modulus);
    }
    // saved pairs used to cancel later discrepancies
    let mut a_saved: Vec<Vec<u64>> = vec![Vec::new(); e];
    let mut b_saved: Vec<Vec<u64>> = vec![Vec::new(); e];
    let mut unit_saved = vec![1u64; e];
    let mut val_saved = vec![0u32; e];
    let mut step_saved = vec![0usize; e];

    for k in 1..seq.len() {
        for g in 0..e {
            if register_length(&a_next[g], &b_next[g]) > register_length(&a[g], &b[g]) {
                let h = e - 1 - val[g] as usize;
                a_saved[g] = a[h].clone();
                b_saved[g] = b[h].clone();
                unit_saved[g] = unit[h];
                val_saved[g] = val[h];
                step_saved[g] = k - 1;
            }
        }
        a.clone_from(&a_next);
        b.clone_from(&b_next);

        for h in 0..e {
            let d = a[h]
                .iter()
                .take(k + 1)
                .enumerate()
                .fold(0u64, |acc, (i, &c)| (acc + c * seq[k - i]) % modulus);
            (unit[h], val[h]) = zq.split(d);
            if d == 0 {
                continue;
            }
            let g = e - 1 - val[h] as usize;
            if register_length(&a[g], &b[g]) == 0 {
                if b_next[h].len() < k + 1 {
                    b_next[h].resize(k + 1, 0);
                }
                b_next[h][k] = (b_next[h][k] + d) % modulus;
                trim(&mut b_next[h]);
            } else {
                debug_assert!(val[h] >= val_saved[g]);
                let coef = unit[h] * zq.inverse(unit_saved[g]) % modulus
                    * zq.pow_q(val[h] - val_saved[g])
                    % modulus;
                let shift = k - step_saved[g];
                sub_shifted(&mut a_next[h], &a_saved[g], coef, shift, modulus);
                sub_shifted(&mut b_next[h], &b_saved[g], coef, shift, modulus);
            }
        }
    }

    let length = register_length(&a_next[0], &b_next[0]);
    Synthesis {
        connection: a_next.swap_remove(0),
        remainder: b_next.swap_remove(0),
        length: length.max(0) as usize,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Shortest recurrence `s_k + Σ c_i s_(k−i) = 0` (`L ≤ k < n`) by
    /// exhaustive search over all coefficient vectors.
    fn brute_length(seq: &[u64], m: u64) -> usize {
        let n = seq.len();
        for l in 0..=n {
            let mut c = vec![0u64; l];
            loop {
                let ok = (l..n).all(|k| {
                    let mut acc = seq[k];
                    for i in 1..=l {
                        acc += c[i - 1] * seq[k - i];
                    }
                    acc % m == 0
                });
                if ok {
                    return l;
                }
                let mut i = 0;
                while i < l && c[i] == m - 1 {
                    c[i] = 0;
                    i += 1;
                }
                if i == l {
                    break;
                }
                c[i] += 1;
            }
        }
        unreachable!("length n always works")
    }

    fn check_pair(seq: &[u64], m: u64, out: &Synthesis) {
        assert_eq!(out.connection[0], 1);
        let n = seq.len();
        for k in 0..n {
            let lhs = out
                .connection
                .iter()
                .take(k + 1)
                .enumerate()
                .fold(0, |acc, (i, &c)| (acc + c * seq[k - i]) % m);
            let rhs = out.remainder.get(k).copied().unwrap_or(0);
            assert_eq!(lhs, rhs, "a·S ≢ b at X^{k} for {seq:?}");
        }
        assert!(out.connection.len() <= out.length + 1);
        assert!(out.remainder.len() <= out.length);
    }

    fn lcg(state: &mut u64) -> u64 {
        *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *state >> 33
    }

    fn exhaustive_check(prime: u64, exp: u32, max_len: usize, trials: usize) {
        let m = prime.pow(exp);
        let mut state = 0x5eed ^ m;
        for t in 0..trials {
            let n = 1 + t % max_len;
            let seq: Vec<u64> = (0..n).map(|_| lcg(&mut state) % m).collect();
            let out = synthesize(&seq, prime, exp);
            check_pair(&seq, m, &out);
            assert_eq!(out.length, brute_length(&seq, m), "{seq:?} mod {m}");
        }
    }

    #[test]
    fn minimal_over_z4() {
        exhaustive_check(2, 2, 9, 600);
    }

    #[test]
    fn minimal_over_z4_biased_to_zero_divisors() {
        // sequences drawn from {0, 2} plus sparse units stress the levels
        let mut state = 17u64;
        for t in 0..400 {
            let n = 1 + t % 9;
            let seq: Vec<u64> = (0..n)
                .map(|_| match lcg(&mut state) % 6 {
                    0 => 1,
                    1 => 3,
                    2 | 3 => 2,
                    _ => 0,
                })
                .collect();
            let out = synthesize(&seq, 2, 2);
            check_pair(&seq, 4, &out);
            assert_eq!(out.length, brute_length(&seq, 4), "{seq:?}");
        }
    }

    #[test]
    fn minimal_over_z8_and_z9() {
        exhaustive_check(2, 3, 6, 250);
        exhaustive_check(3, 2, 6, 250);
    }

    #[test]
    fn field_case_matches_berlekamp_massey() {
        exhaustive_check(2, 1, 12, 300);
        exhaustive_check(5, 1, 6, 200);
    }

    #[test]
    fn degenerate_inputs() {
        let z = synthesize(&[0, 0, 0, 0], 2, 2);
        assert_eq!((z.connection, z.length), (vec![1], 0));
        let e = synthesize(&[], 2, 2);
        assert_eq!(e.length, 0);
        // a lone 2 needs a register of length 1
        assert_eq!(synthesize(&[2], 2, 2).length, 1);
    }
}
