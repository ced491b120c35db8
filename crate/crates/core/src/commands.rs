//! The subcommands of the `cyclo4` binary as plain functions returning
//! rendered output, so they can be tested without spawning a process.
//!
//! JSON output is compact, has keys in sorted order and ends with a
//! newline; parsing it and re-serializing reproduces it byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{odd_primes_in, require_odd_prime};
use crate::complexity::{
    brute_force_minimal, classify_prime, reeds_sloane, theorem_lc, LfsrResult,
};
use crate::cyclotomy::GeneralizedCyclotomy;
use crate::error::{Error, Result};
use crate::galois::ord2_mod_p;
use crate::sequence::QuaternarySequence;
use crate::verification::{full_report, CheckId, ReportOptions};

/// Exact header of the sweep CSV.
pub const CSV_HEADER: &str = "p,residue_class,r,lc_theorem,lc_reeds_sloane,match,elapsed_ms";

/// Largest `p` for which `lc --method brute` runs without `--force`.
pub const BRUTE_FORCE_LIMIT: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    ReedsSloane,
    Brute,
    Theorem,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ReedsSloane => "reeds-sloane",
            Method::Brute => "brute",
            Method::Theorem => "theorem",
        }
    }
}

/// Rendered output of a command. `failed` is set when a check or a
/// comparison did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub failed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, failed: false }
    }
}

fn unsupported(cmd: &str, format: Format) -> Error {
    Error::InvalidArgument(format!("`{cmd}` does not support --format {format:?}").to_lowercase())
}

/// Compact JSON plus a trailing newline.
pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesRecord {
    #[serde(rename = "D0")]
    pub d0: Vec<u64>,
    #[serde(rename = "D1")]
    pub d1: Vec<u64>,
    #[serde(rename = "E0")]
    pub e0: Vec<u64>,
    #[serde(rename = "E1")]
    pub e1: Vec<u64>,
    pub g: u64,
    pub p: u64,
}

fn list(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(","))
}

pub fn cmd_classes(p: u64, format: Format) -> Result<Output> {
    let c = GeneralizedCyclotomy::new(p)?;
    let rec = ClassesRecord {
        d0: c.d(0).to_vec(),
        d1: c.d(1).to_vec(),
        e0: c.e(0).to_vec(),
        e1: c.e(1).to_vec(),
        g: c.generator(),
        p,
    };
    let body = match format {
        Format::Json => to_json_line(&rec)?,
        Format::Text => format!(
            "p={}\ng={}\nD0={}\nD1={}\nE0={}\nE1={}\n",
            rec.p,
            rec.g,
            list(&rec.d0),
            list(&rec.d1),
            list(&rec.e0),
            list(&rec.e1)
        ),
        Format::Csv => return Err(unsupported("classes", format)),
    };
    Ok(Output::ok(body))
}

pub fn cmd_seq(p: u64, format: Format) -> Result<Output> {
    let s = QuaternarySequence::generate(p)?;
    let body = match format {
        Format::Text => format!("{s}\n"),
        Format::Json => {
            let v: Vec<u8> = s.values().iter().map(|x| x.value()).collect();
            to_json_line(&v)?
        }
        Format::Csv => return Err(unsupported("seq", format)),
    };
    Ok(Output::ok(body))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<Vec<u8>>,
    pub lc: u64,
    pub method: String,
    pub p: u64,
    pub residue_class: String,
}

pub fn cmd_lc(p: u64, method: Method, force: bool, format: Format) -> Result<Output> {
    let p = require_odd_prime(p)?;
    let class = classify_prime(p)?;
    let witness = |r: LfsrResult| (r.lc as u64, Some(r.connection.to_u8_vec()));
    let (lc, connection) = match method {
        Method::Theorem => (theorem_lc(p)?, None),
        Method::ReedsSloane => witness(reeds_sloane(QuaternarySequence::generate(p)?.values())?),
        Method::Brute => {
            if p > BRUTE_FORCE_LIMIT && !force {
                return Err(Error::InvalidArgument(format!(
                    "brute force is exponential; p = {p} > {BRUTE_FORCE_LIMIT} needs --force"
                )));
            }
            let s = QuaternarySequence::generate(p)?;
            witness(brute_force_minimal(s.values(), s.period())?)
        }
    };
    let rec = LcRecord {
        connection,
        lc,
        method: method.name().to_string(),
        p,
        residue_class: class.label().to_string(),
    };
    let body = match format {
        Format::Json => to_json_line(&rec)?,
        Format::Text => {
            let mut s = format!("{lc}\n");
            if let Some(c) = &rec.connection {
                let items: Vec<String> = c.iter().map(u8::to_string).collect();
                writeln!(s, "{}", items.join(",")).unwrap();
            }
            s
        }
        Format::Csv => return Err(unsupported("lc", format)),
    };
    Ok(Output::ok(body))
}

/// Parses a comma-separated list of check names.
pub fn parse_check_filter(spec: &str) -> Result<BTreeSet<CheckId>> {
    spec.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
}

pub fn cmd_verify(
    p: u64,
    filter: Option<&str>,
    opts: &ReportOptions,
    format: Format,
) -> Result<Output> {
    let mut opts = opts.clone();
    if let Some(f) = filter {
        opts.only = Some(parse_check_filter(f)?);
    }
    let report = full_report(p, &opts)?;
    let body = match format {
        Format::Text => report.to_string(),
        Format::Json => to_json_line(&report)?,
        Format::Csv => return Err(unsupported("verify", format)),
    };
    Ok(Output { body, failed: !report.passed() })
}

/// One row of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub elapsed_ms: u64,
    pub lc_reeds_sloane: u64,
    pub lc_theorem: u64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub p: u64,
    pub r: u64,
    pub residue_class: String,
}

impl SweepRecord {
    pub fn compute(p: u64) -> Result<Self> {
        let start = Instant::now();
        let class = classify_prime(p)?;
        let r = ord2_mod_p(p)? as u64;
        let lc_theorem = theorem_lc(p)?;
        let lc_reeds_sloane = reeds_sloane(QuaternarySequence::generate(p)?.values())?.lc as u64;
        Ok(Self {
            elapsed_ms: start.elapsed().as_millis() as u64,
            lc_reeds_sloane,
            lc_theorem,
            matches: lc_theorem == lc_reeds_sloane,
            p,
            r,
            residue_class: class.label().to_string(),
        })
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.p,
            self.residue_class,
            self.r,
            self.lc_theorem,
            self.lc_reeds_sloane,
            self.matches,
            self.elapsed_ms
        )
    }
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub records: Vec<SweepRecord>,
    /// The rendered records.
    pub body: String,
}

impl Sweep {
    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.matches).count()
    }

    pub fn summary(&self) -> String {
        format!("{} primes, {} mismatches", self.records.len(), self.mismatches())
    }
}

/// Linear complexity by Reeds–Sloane and by closed form for every odd
/// prime in `[from, to]`, computed in parallel and listed by ascending `p`.
pub fn cmd_sweep(from: u64, to: u64, format: Format) -> Result<Sweep> {
    if from < 3 || from > to {
        return Err(Error::InvalidArgument(format!(
            "need 3 <= from <= to, got from = {from}, to = {to}"
        )));
    }
    let records = odd_primes_in(from, to)
        .into_par_iter()
        .map(SweepRecord::compute)
        .collect::<Result<Vec<_>>>()?;
    let body = match format {
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for r in &records {
                writeln!(s, "{}", r.csv_row()).unwrap();
            }
            s
        }
        Format::Json => to_json_line(&records)?,
        Format::Text => return Err(unsupported("sweep", format)),
    };
    Ok(Sweep { records, body })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) -> String {
        let v: serde_json::Value = serde_json::from_str(s).unwrap();
        to_json_line(&v).unwrap()
    }

    #[test]
    fn classes_output() {
        let j = cmd_classes(5, Format::Json).unwrap().body;
        assert!(j.contains("\"D0\":[1,9]"), "{j}");
        assert_eq!(roundtrip(&j), j);
        assert!(cmd_classes(3, Format::Text).unwrap().body.contains("D1=[5]"));
        assert_eq!(cmd_classes(4, Format::Text), Err(Error::NotOddPrime(4)));
    }

    #[test]
    fn seq_output() {
        assert_eq!(cmd_seq(3, Format::Text).unwrap().body, "002231\n");
        assert_eq!(cmd_seq(5, Format::Text).unwrap().body, "0021323120\n");
        assert_eq!(cmd_seq(7, Format::Json).unwrap().body, "[0,0,2,1,2,1,3,2,2,0,3,0,3,1]\n");
    }

    #[test]
    fn lc_output() {
        assert_eq!(cmd_lc(41, Method::Theorem, false, Format::Text).unwrap().body, "22\n");
        assert!(cmd_lc(31, Method::ReedsSloane, false, Format::Text)
            .unwrap()
            .body
            .starts_with("31\n"));
        let j = cmd_lc(3, Method::Brute, false, Format::Json).unwrap().body;
        let rec: LcRecord = serde_json::from_str(&j).unwrap();
        assert_eq!((rec.lc, rec.connection.unwrap().len()), (5, 6));
        assert_eq!(roundtrip(&j), j);
        assert!(matches!(
            cmd_lc(11, Method::Brute, false, Format::Text),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn verify_output() {
        let out = cmd_verify(7, None, &ReportOptions::default(), Format::Text).unwrap();
        assert!(!out.failed);
        assert!(out.body.lines().all(|l| l.contains(" PASS ") || l.contains(" SKIP ")));
        let two =
            cmd_verify(7, Some("s0-quadratic,s0-value"), &ReportOptions::default(), Format::Text)
                .unwrap();
        assert_eq!(two.body.lines().count(), 2);
        assert!(cmd_verify(7, Some("bogus"), &ReportOptions::default(), Format::Text).is_err());
        assert!(cmd_verify(2, None, &ReportOptions::default(), Format::Text).is_err());
        let j = cmd_verify(5, None, &ReportOptions::default(), Format::Json).unwrap().body;
        assert_eq!(roundtrip(&j), j);
    }

    #[test]
    fn sweep_output() {
        let s = cmd_sweep(3, 50, Format::Csv).unwrap();
        assert_eq!(s.records.len(), 14);
        assert_eq!(s.mismatches(), 0);
        assert_eq!(s.body.lines().next(), Some(CSV_HEADER));
        let r17 = s.records.iter().find(|r| r.p == 17).unwrap();
        assert_eq!((r17.lc_theorem, r17.matches), (18, true));
        let ps: Vec<u64> = s.records.iter().map(|r| r.p).collect();
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        assert!(cmd_sweep(10, 3, Format::Csv).is_err());
        let j = cmd_sweep(3, 20, Format::Json).unwrap().body;
        assert_eq!(roundtrip(&j), j);
    }
}
