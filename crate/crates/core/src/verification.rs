//! Mechanical checks of the algebra behind the closed-form linear
//! complexity, carried out in GR(4^r, 4) with an element `γ` of order `2p`.
//!
//! Each check produces one [`CheckResult`]; [`full_report`] runs every
//! check that applies to `p` and renders one line per check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complexity::{
    classify_prime, reeds_sloane, theorem_lc, verify_connection, ResidueClass,
};
use crate::cyclotomy::GeneralizedCyclotomy;
use crate::error::{Error, Result};
use crate::galois::{embed_poly, find_gamma, GaloisRing, GrElement, GrPoly, PowerTable};
use crate::poly::{Polynomial, Z4Poly};
use crate::ring::Residue4;
use crate::sequence::{ClassSums, QuaternarySequence};

/// Default largest `p` for which the `Γ`/`Λ` products are expanded.
pub const DEFAULT_EXPANSION_CAP: u64 = 61;

/// Environment variable overriding [`DEFAULT_EXPANSION_CAP`].
pub const EXPANSION_CAP_ENV: &str = "CYCLO4_EXPANSION_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// Products and `p`-shifts of the classes land in the expected classes.
    ClassRelations,
    /// `[0,0]` and `[0,1]` match their closed forms.
    CyclotomicNumbers,
    /// `S = 2X^p + S1 + 2T0 + 3T1`, `S0(γ) + S1(γ) = 1`, `T_i(γ) = S_i(γ²)`.
    ClassSums,
    /// `S0(γ)² = S0(γ) + c` with `c` fixed by `p mod 8`.
    S0Quadratic,
    /// The value of the unit `S0(γ)` by `p mod 16`.
    S0Value,
    /// The table of `S(γ^v)` over the partition of `Z_2p`.
    EvaluationTable,
    /// `γ^a − γ^b` is a unit whenever `a ≢ b (mod p)`.
    DistinctRoots,
    /// `(X+1)Γ0Γ1 = X^p + 1` and `(X−1)Λ0Λ1 = X^p − 1`.
    Factorization,
    /// `Γ_j`, `Λ_j` have Z_4 coefficients when `p ≡ ±1 (mod 8)`.
    Integrality,
    /// The explicit minimal connection polynomial annihilates the sequence.
    Witness,
    /// `X^2p − 1 + 2(X^p + 1)` vanishes at every `γ^j` but is not a multiple of `X^2p − 1`.
    ZeroDivisorGuard,
    /// Reeds–Sloane agrees with the closed form.
    LinearComplexity,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::ClassRelations,
        CheckId::CyclotomicNumbers,
        CheckId::ClassSums,
        CheckId::S0Quadratic,
        CheckId::S0Value,
        CheckId::EvaluationTable,
        CheckId::DistinctRoots,
        CheckId::Factorization,
        CheckId::Integrality,
        CheckId::Witness,
        CheckId::ZeroDivisorGuard,
        CheckId::LinearComplexity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::ClassRelations => "class-relations",
            CheckId::CyclotomicNumbers => "cyclotomic-numbers",
            CheckId::ClassSums => "class-sums",
            CheckId::S0Quadratic => "s0-quadratic",
            CheckId::S0Value => "s0-value",
            CheckId::EvaluationTable => "evaluation-table",
            CheckId::DistinctRoots => "distinct-roots",
            CheckId::Factorization => "factorization",
            CheckId::Integrality => "integrality",
            CheckId::Witness => "witness",
            CheckId::ZeroDivisorGuard => "zero-divisor-guard",
            CheckId::LinearComplexity => "linear-complexity",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub detail: String,
    pub id: CheckId,
    pub status: Status,
}

impl CheckResult {
    fn from_failures(id: CheckId, failures: Vec<String>, ok_detail: impl Into<String>) -> Self {
        if failures.is_empty() {
            Self { id, status: Status::Pass, detail: ok_detail.into() }
        } else {
            let shown: Vec<_> = failures.iter().take(3).cloned().collect();
            let more = failures.len().saturating_sub(3);
            let mut detail = shown.join("; ");
            if more > 0 {
                detail.push_str(&format!("; and {more} more"));
            }
            Self { id, status: Status::Fail, detail }
        }
    }

    fn skip(id: CheckId, detail: impl Into<String>) -> Self {
        Self { id, status: Status::Skip, detail: detail.into() }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.id, self.status, self.detail)
    }
}

/// All checks run for one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub checks: Vec<CheckResult>,
    pub p: u64,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: CheckId) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An element `γ` of order `2p` for which `S0(γ)` is a unit.
#[derive(Clone, Debug)]
pub struct NormalizedGamma {
    pub gamma: GrElement,
    /// `Some(v)` when the original `γ` was replaced by `γ^v`, `v ∈ D1`.
    pub replaced_by: Option<u64>,
}

/// Since `S0(γ) + S1(γ) = 1`, one of the two sums is a unit. Keeps `γ` if
/// `S0(γ)` is a unit; otherwise switches to `γ^v` for the smallest
/// `v ∈ D1`, which swaps the roles of `S0` and `S1`.
pub fn normalize_gamma(c: &GeneralizedCyclotomy, gamma: &GrElement) -> Result<NormalizedGamma> {
    let n = c.modulus() as usize;
    let s0 = PowerTable::new(gamma, n).sum_over(c.d(0), 1);
    if s0.is_unit() {
        return Ok(NormalizedGamma { gamma: gamma.clone(), replaced_by: None });
    }
    let v = c.d(1)[0];
    let swapped = gamma.pow(v);
    let s0 = PowerTable::new(&swapped, n).sum_over(c.d(0), 1);
    if !s0.is_unit() {
        return Err(Error::Internal("neither S0(γ) nor S1(γ) is a unit".into()));
    }
    Ok(NormalizedGamma { gamma: swapped, replaced_by: Some(v) })
}

/// Everything the ring-level checks share for one prime.
pub struct Context {
    pub p: u64,
    pub class: ResidueClass,
    pub classes: GeneralizedCyclotomy,
    pub sequence: QuaternarySequence,
    pub ring: GaloisRing,
    pub gamma: NormalizedGamma,
    pub powers: PowerTable,
}

impl Context {
    pub fn new(p: u64) -> Result<Self> {
        let class = classify_prime(p)?;
        let classes = GeneralizedCyclotomy::new(p)?;
        let sequence = QuaternarySequence::from_classes(&classes);
        let ring = GaloisRing::for_prime(p)?;
        let pair = find_gamma(&ring, p)?;
        let gamma = normalize_gamma(&classes, &pair.gamma)?;
        let powers = PowerTable::new(&gamma.gamma, 2 * p as usize);
        Ok(Self { p, class, classes, sequence, ring, gamma, powers })
    }

    /// `S0(γ)` for the normalized `γ`.
    pub fn s0(&self) -> GrElement {
        self.powers.sum_over(self.classes.d(0), 1)
    }

    fn constant(&self, v: i64) -> GrElement {
        self.ring.constant(Residue4::from_i64(v))
    }
}

fn set(v: impl IntoIterator<Item = u64>) -> BTreeSet<u64> {
    v.into_iter().collect()
}

/// Partition invariants and the multiplicative and shift relations among
/// `D0, D1, E0, E1`.
pub fn check_class_relations(c: &GeneralizedCyclotomy) -> CheckResult {
    let p = c.p();
    let n = c.modulus();
    let half = ((p - 1) / 2) as usize;
    let two_square = p % 8 == 1 || p % 8 == 7;
    let flip = usize::from(!two_square);
    let d = |i: usize| set(c.d(i).iter().copied());
    let e = |i: usize| set(c.e(i).iter().copied());
    let mut fails = Vec::new();

    for i in 0..2 {
        if c.d(i).len() != half || c.e(i).len() != half {
            fails.push(format!("class {i} has the wrong size"));
        }
        if e(i) != set(c.d(i).iter().map(|u| 2 * u % n)) {
            fails.push(format!("E{i} != 2·D{i}"));
        }
    }
    let odd = set((1..n).step_by(2).filter(|&u| u != p));
    let even = set((2..n).step_by(2));
    if &d(0) | &d(1) != odd || !d(0).is_disjoint(&d(1)) {
        fails.push("D0 ∪ D1 is not the odd residues without p".into());
    }
    if &e(0) | &e(1) != even || !e(0).is_disjoint(&e(1)) {
        fails.push("E0 ∪ E1 is not the nonzero even residues".into());
    }
    let d0 = d(0);
    if c.d(0).iter().any(|a| c.d(0).iter().any(|b| !d0.contains(&(a * b % n)))) {
        fails.push("D0 is not closed under multiplication".into());
    }

    let times = |v: u64, s: &[u64]| set(s.iter().map(|u| v * u % n));
    let shift = |s: &[u64]| set(s.iter().map(|u| (u + p) % n));
    for i in 0..2 {
        for j in 0..2 {
            for &v in c.d(i) {
                if times(v, c.d(j)) != d(i + j) {
                    fails.push(format!("{v}·D{j} != D{}", (i + j) % 2));
                }
                if times(v, c.e(j)) != e(i + j) {
                    fails.push(format!("{v}·E{j} != E{}", (i + j) % 2));
                }
            }
            for &v in c.e(i) {
                if times(v, c.d(j)) != e(i + j) {
                    fails.push(format!("{v}·D{j} != E{}", (i + j) % 2));
                }
                if times(v, c.e(j)) != e(i + j + flip) {
                    fails.push(format!("{v}·E{j} != E{}", (i + j + flip) % 2));
                }
            }
        }
        if shift(c.e(i)) != d(i + flip) {
            fails.push(format!("E{i} + p != D{}", (i + flip) % 2));
        }
        if shift(c.d(i)) != e(i + flip) {
            fails.push(format!("D{i} + p != E{}", (i + flip) % 2));
        }
        if two_square {
            let split = set(c.d(i).iter().map(|&u| if u < p { u + p } else { u - p }));
            if split != e(i) {
                fails.push(format!("{{u ± p : u ∈ D{i}}} != E{i}"));
            }
        }
    }
    let detail = if two_square {
        "partition, products, p-shifts and u±p split hold"
    } else {
        "partition, products and p-shifts hold (shift swaps the class index)"
    };
    CheckResult::from_failures(CheckId::ClassRelations, fails, detail)
}

/// Closed forms of `[0,0]` and `[0,1]` by `p mod 8`.
pub fn cyclotomic_number_closed_form(p: u64) -> (u64, u64) {
    match p % 8 {
        1 => ((p - 5) / 4, (p - 1) / 4),
        7 => ((p - 3) / 4, (p + 1) / 4),
        5 => ((p - 1) / 4, (p - 5) / 4),
        3 => ((p + 1) / 4, (p - 3) / 4),
        _ => unreachable!("odd prime"),
    }
}

pub fn check_cyclotomic_numbers(c: &GeneralizedCyclotomy) -> CheckResult {
    let (n00, n01) = (c.cyclotomic_number(0, 0) as u64, c.cyclotomic_number(0, 1) as u64);
    let expected = cyclotomic_number_closed_form(c.p());
    let mut fails = Vec::new();
    if (n00, n01) != expected {
        fails.push(format!("[0,0],[0,1] = {n00},{n01}, expected {},{}", expected.0, expected.1));
    }
    CheckResult::from_failures(
        CheckId::CyclotomicNumbers,
        fails,
        format!("[0,0]={n00} [0,1]={n01}"),
    )
}

pub fn check_class_sums(ctx: &Context) -> CheckResult {
    let p = ctx.p;
    let sums = ClassSums::new(&ctx.classes);
    let mut fails = Vec::new();
    if sums.assemble(p) != ctx.sequence.generating_polynomial() {
        fails.push("S(X) != 2X^p + S1 + 2T0 + 3T1".into());
    }
    let s0 = ctx.s0();
    let s1 = ctx.powers.sum_over(ctx.classes.d(1), 1);
    if !(&s0 + &s1).is_one() {
        fails.push(format!("S0(γ) + S1(γ) = {} != 1", &s0 + &s1));
    }
    for (i, t) in [&sums.t0, &sums.t1].into_iter().enumerate() {
        let s_at_square = ctx.powers.sum_over(ctx.classes.d(i), 2);
        if ctx.powers.eval(t, 1) != s_at_square {
            fails.push(format!("T{i}(γ) != S{i}(γ²)"));
        }
    }
    CheckResult::from_failures(CheckId::ClassSums, fails, "S0(γ)+S1(γ)=1, T_i(γ)=S_i(γ²)")
}

/// The constant `c` in `S0(γ)² = S0(γ) + c`, reduced modulo 4: `(p−1)/4`
/// for `p ≡ 1, 5 (mod 8)` and `−(p+1)/4` for `p ≡ 3, 7 (mod 8)`.
pub fn s0_quadratic_constant(p: u64) -> Residue4 {
    let p = p as i64;
    match p % 8 {
        1 | 5 => Residue4::from_i64((p - 1) / 4),
        3 | 7 => Residue4::from_i64(-(p + 1) / 4),
        _ => unreachable!("odd prime"),
    }
}

pub fn check_s0_quadratic(ctx: &Context) -> CheckResult {
    let s0 = ctx.s0();
    let c = s0_quadratic_constant(ctx.p);
    let lhs = &s0 * &s0;
    let rhs = &s0 + &ctx.ring.constant(c);
    let fails =
        if lhs == rhs { Vec::new() } else { vec![format!("S0² = {lhs}, S0 + {c} = {rhs}")] };
    CheckResult::from_failures(CheckId::S0Quadratic, fails, format!("S0(γ)² = S0(γ) + {c}"))
}

pub fn check_s0_value(ctx: &Context) -> CheckResult {
    let s0 = ctx.s0();
    let rho_eq = |x: &GrElement| {
        let v = &(&(x * x) + &x.scale(Residue4::THREE)) + &ctx.constant(3);
        v.is_zero()
    };
    let (ok, expected) = match ctx.p % 16 {
        1 | 15 => (s0.as_base() == Some(Residue4::ONE), "1"),
        7 | 9 => (s0.as_base() == Some(Residue4::THREE), "3"),
        5 | 11 => (rho_eq(&s0), "ρ with ρ²+3ρ+3=0"),
        3 | 13 => (rho_eq(&(&s0 - &ctx.constant(2))), "2+ρ with ρ²+3ρ+3=0"),
        _ => unreachable!("odd prime"),
    };
    let mut fails = Vec::new();
    if !s0.is_unit() {
        fails.push(format!("S0(γ) = {s0} is not a unit"));
    }
    if !ok {
        fails.push(format!("S0(γ) = {s0}, expected {expected}"));
    }
    CheckResult::from_failures(CheckId::S0Value, fails, format!("S0(γ) = {expected}"))
}

pub fn check_evaluation_table(ctx: &Context) -> CheckResult {
    let p = ctx.p;
    let s = ctx.sequence.generating_polynomial();
    let s0 = ctx.s0();
    let mut fails = Vec::new();
    let mut expect = |v: u64, value: GrElement, what: &str| {
        let got = ctx.powers.eval(&s, v as usize);
        if got != value {
            fails.push(format!("S(γ^{v}) = {got}, expected {what} = {value}"));
        }
    };
    expect(0, ctx.constant(p as i64 + 1), "p+1");
    expect(p, ctx.constant(2), "2");

    let two_s0 = s0.scale(Residue4::TWO);
    if ctx.class.two_is_square() {
        for i in 0..2 {
            for &v in ctx.classes.d(i) {
                expect(v, ctx.constant(0), "0");
            }
        }
        for &v in ctx.classes.e(0) {
            expect(v, &ctx.constant(2) - &two_s0, "2−2S0");
        }
        for &v in ctx.classes.e(1) {
            expect(v, two_s0.clone(), "2S0");
        }
    } else {
        for &v in ctx.classes.d(0) {
            expect(v, &ctx.constant(1) - &two_s0, "1−2S0");
        }
        for &v in ctx.classes.d(1) {
            expect(v, &ctx.constant(-1) + &two_s0, "−1+2S0");
        }
        for i in 0..2 {
            for &v in ctx.classes.e(i) {
                expect(v, ctx.constant(3), "3");
            }
        }
        for v in (1..2 * p).filter(|&v| v != p) {
            let got = ctx.powers.eval(&s, v as usize);
            if !got.is_unit() {
                fails.push(format!("S(γ^{v}) = {got} is not a unit"));
            }
        }
    }
    let detail = if ctx.class.two_is_square() {
        "S(γ^v): p+1 at 0, 2 at p, 0 on D0∪D1∪E0, 2 on E1"
    } else {
        "S(γ^v): p+1 at 0, 2 at p, 1−2S0 on D0, −1+2S0 on D1, 3 on E0∪E1"
    };
    CheckResult::from_failures(CheckId::EvaluationTable, fails, detail)
}

pub fn check_distinct_roots(ctx: &Context) -> CheckResult {
    let n = 2 * ctx.p as usize;
    let mut fails = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if (b - a) as u64 % ctx.p == 0 {
                continue;
            }
            let diff = ctx.powers.get(a) - ctx.powers.get(b);
            if !diff.is_unit() {
                fails.push(format!("γ^{a} − γ^{b} is not a unit"));
            }
        }
    }
    CheckResult::from_failures(
        CheckId::DistinctRoots,
        fails,
        "γ^a − γ^b is a unit for a ≢ b (mod p)",
    )
}

/// `Γ_0, Γ_1, Λ_0, Λ_1` expanded in `GR[X]`.
pub struct RootProducts {
    pub gamma: [GrPoly; 2],
    pub lambda: [GrPoly; 2],
}

fn root_product(ctx: &Context, set: &[u64]) -> GrPoly {
    set.iter().fold(Polynomial::constant(ctx.ring.one()), |acc, &v| {
        acc.poly_mul(&Polynomial::linear_factor(ctx.powers.get(v as usize)))
    })
}

pub fn root_products(ctx: &Context) -> RootProducts {
    let c = &ctx.classes;
    RootProducts {
        gamma: [root_product(ctx, c.d(0)), root_product(ctx, c.d(1))],
        lambda: [root_product(ctx, c.e(0)), root_product(ctx, c.e(1))],
    }
}

fn to_base(a: &GrPoly) -> Option<Z4Poly> {
    a.coeffs().iter().map(GrElement::as_base).collect::<Option<Vec<_>>>().map(Z4Poly::new)
}

/// The connection polynomial of minimal degree built from the root
/// products, or from `X^2p − 1` when `p ≡ ±3 (mod 8)`.
pub fn explicit_witness(ctx: &Context, products: Option<&RootProducts>) -> Option<Z4Poly> {
    let p = ctx.p as usize;
    let one_minus =
        |k: usize| Z4Poly::from_ints(&[1]).poly_sub(&Z4Poly::monomial(Residue4::ONE, k));
    match ctx.class {
        ResidueClass::FiveMod8 => Some(one_minus(2 * p)),
        // (X^2p − 1)/(X − 1) = 1 + X + … + X^(2p−1)
        ResidueClass::ThreeMod8 => Some(Z4Poly::new(vec![Residue4::ONE; 2 * p])),
        _ => {
            let pr = products?;
            let l0 = to_base(&pr.lambda[0])?;
            let l1 = to_base(&pr.lambda[1])?;
            let x_plus_1 = Z4Poly::from_ints(&[1, 1]);
            let x2_minus_1 = Z4Poly::from_ints(&[-1, 0, 1]);
            let w = match ctx.class {
                ResidueClass::FifteenMod16 => x_plus_1.poly_mul(&l0).poly_mul(&l1),
                ResidueClass::OneMod16 => x2_minus_1.poly_mul(&l0).poly_mul(&l1),
                ResidueClass::SevenMod16 => x_plus_1.poly_mul(&l1),
                ResidueClass::NineMod16 => x2_minus_1.poly_mul(&l1),
                _ => unreachable!(),
            };
            // normalize the constant term to 1
            let c0 = *w.coeff(0)?;
            Some(w.scale(&c0.inverse()?))
        }
    }
}

/// Factorization, integrality and explicit-witness checks; skipped above
/// `cap` because the products cost `O(p² r²)`.
pub fn check_factorizations(ctx: &Context, cap: u64) -> Vec<CheckResult> {
    let p = ctx.p;
    if p > cap {
        let why = format!("p = {p} exceeds expansion cap {cap}");
        let mut out = vec![
            CheckResult::skip(CheckId::Factorization, why.clone()),
            CheckResult::skip(CheckId::Integrality, why.clone()),
        ];
        out.push(if ctx.class.two_is_square() {
            CheckResult::skip(CheckId::Witness, why)
        } else {
            check_witness(ctx, None)
        });
        return out;
    }
    let pr = root_products(ctx);
    let ring = &ctx.ring;
    let mut fails = Vec::new();

    let x_plus_1 = embed_poly(ring, &Z4Poly::from_ints(&[1, 1]));
    let x_minus_1 = embed_poly(ring, &Z4Poly::from_ints(&[-1, 1]));
    let mut xp_plus = vec![0i64; p as usize + 1];
    xp_plus[0] = 1;
    xp_plus[p as usize] = 1;
    let mut xp_minus = xp_plus.clone();
    xp_minus[0] = -1;
    let lhs = x_plus_1.poly_mul(&pr.gamma[0]).poly_mul(&pr.gamma[1]);
    if lhs != embed_poly(ring, &Z4Poly::from_ints(&xp_plus)) {
        fails.push("(X+1)Γ0Γ1 != X^p + 1".to_string());
    }
    let lhs = x_minus_1.poly_mul(&pr.lambda[0]).poly_mul(&pr.lambda[1]);
    if lhs != embed_poly(ring, &Z4Poly::from_ints(&xp_minus)) {
        fails.push("(X−1)Λ0Λ1 != X^p − 1".to_string());
    }
    let factorization = CheckResult::from_failures(
        CheckId::Factorization,
        fails,
        "(X+1)Γ0Γ1 = X^p+1, (X−1)Λ0Λ1 = X^p−1",
    );

    let integrality = if ctx.class.two_is_square() {
        let names = ["Γ0", "Γ1", "Λ0", "Λ1"];
        let polys = [&pr.gamma[0], &pr.gamma[1], &pr.lambda[0], &pr.lambda[1]];
        let fails = names
            .iter()
            .zip(polys)
            .filter(|(_, q)| to_base(q).is_none())
            .map(|(n, _)| format!("{n} has a coefficient outside Z_4"))
            .collect();
        CheckResult::from_failures(CheckId::Integrality, fails, "Γ0, Γ1, Λ0, Λ1 ∈ Z_4[X]")
    } else {
        CheckResult::skip(CheckId::Integrality, "only asserted for p ≡ ±1 (mod 8)")
    };

    vec![factorization, integrality, check_witness(ctx, Some(&pr))]
}

fn check_witness(ctx: &Context, products: Option<&RootProducts>) -> CheckResult {
    let Some(w) = explicit_witness(ctx, products) else {
        return CheckResult::from_failures(
            CheckId::Witness,
            vec!["could not build the witness over Z_4".into()],
            "",
        );
    };
    let expected = theorem_lc(ctx.p).expect("validated prime") as usize;
    let mut fails = Vec::new();
    if w.degree().finite() != Some(expected) {
        fails.push(format!("witness degree {} != {expected}", w.degree()));
    }
    match verify_connection(ctx.sequence.values(), &w) {
        Ok(true) => {}
        Ok(false) => fails.push("witness does not annihilate S(X)".into()),
        Err(e) => fails.push(e.to_string()),
    }
    CheckResult::from_failures(
        CheckId::Witness,
        fails,
        format!("degree-{expected} connection polynomial annihilates S(X)"),
    )
}

/// `P = X^2p − 1 + 2(X^p + 1)` has every `γ^j` as a root, yet
/// `X^2p − 1` does not divide it.
pub fn check_zero_divisor_guard(ctx: &Context) -> CheckResult {
    let n = 2 * ctx.p as usize;
    let guard = zero_divisor_polynomial(ctx.p);
    let mut fails: Vec<String> = (0..n)
        .filter(|&j| !ctx.powers.eval(&guard, j).is_zero())
        .map(|j| format!("P(γ^{j}) != 0"))
        .collect();
    match guard.div_rem(&Z4Poly::cyclic_modulus(n)) {
        Ok((_, rem)) if !rem.is_zero() => {}
        Ok(_) => fails.push("X^2p − 1 divides P".into()),
        Err(e) => fails.push(e.to_string()),
    }
    CheckResult::from_failures(
        CheckId::ZeroDivisorGuard,
        fails,
        "P vanishes at all γ^j, remainder mod X^2p−1 is 2X^p+2",
    )
}

/// `X^2p − 1 + 2(X^p + 1)`.
pub fn zero_divisor_polynomial(p: u64) -> Z4Poly {
    let p = p as usize;
    let mut c = vec![0i64; 2 * p + 1];
    c[0] = -1 + 2;
    c[p] = 2;
    c[2 * p] = 1;
    Z4Poly::from_ints(&c)
}

pub fn check_linear_complexity(ctx: &Context) -> CheckResult {
    let expected = theorem_lc(ctx.p).expect("validated prime") as usize;
    let got = reeds_sloane(ctx.sequence.values());
    let fails = match &got {
        Ok(r) if r.lc == expected => Vec::new(),
        Ok(r) => vec![format!("Reeds–Sloane {} != closed form {expected}", r.lc)],
        Err(e) => vec![e.to_string()],
    };
    CheckResult::from_failures(
        CheckId::LinearComplexity,
        fails,
        format!("Reeds–Sloane {expected} = closed form {expected} ({})", ctx.class),
    )
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub expansion_cap: u64,
    /// When set, only these checks are run.
    pub only: Option<BTreeSet<CheckId>>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { expansion_cap: DEFAULT_EXPANSION_CAP, only: None }
    }
}

impl ReportOptions {
    /// Defaults, with the expansion cap taken from the environment if set.
    pub fn from_env() -> Result<Self> {
        let mut opts = Self::default();
        if let Ok(v) = std::env::var(EXPANSION_CAP_ENV) {
            opts.expansion_cap = v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{EXPANSION_CAP_ENV}={v} is not an integer"))
            })?;
        }
        Ok(opts)
    }

    fn wants(&self, id: CheckId) -> bool {
        self.only.as_ref().map_or(true, |s| s.contains(&id))
    }
}

/// Runs every applicable check for `p`.
pub fn full_report(p: u64, opts: &ReportOptions) -> Result<LemmaReport> {
    let ctx = Context::new(p)?;
    let mut checks = Vec::new();
    let w = |id| opts.wants(id);
    if w(CheckId::ClassRelations) {
        checks.push(check_class_relations(&ctx.classes));
    }
    if w(CheckId::CyclotomicNumbers) {
        checks.push(check_cyclotomic_numbers(&ctx.classes));
    }
    if w(CheckId::ClassSums) {
        checks.push(check_class_sums(&ctx));
    }
    if w(CheckId::S0Quadratic) {
        checks.push(check_s0_quadratic(&ctx));
    }
    if w(CheckId::S0Value) {
        checks.push(check_s0_value(&ctx));
    }
    if w(CheckId::EvaluationTable) {
        checks.push(check_evaluation_table(&ctx));
    }
    if w(CheckId::DistinctRoots) {
        checks.push(check_distinct_roots(&ctx));
    }
    if w(CheckId::Factorization) || w(CheckId::Integrality) || w(CheckId::Witness) {
        checks
            .extend(check_factorizations(&ctx, opts.expansion_cap).into_iter().filter(|c| w(c.id)));
    }
    if w(CheckId::ZeroDivisorGuard) {
        checks.push(check_zero_divisor_guard(&ctx));
    }
    if w(CheckId::LinearComplexity) {
        checks.push(check_linear_complexity(&ctx));
    }
    Ok(LemmaReport { checks, p })
}
