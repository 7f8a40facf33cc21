//! Batch verification over parameter ranges.
//!
//! Each parameter value is checked independently. Parallel runs collect
//! per-parameter outcomes in parameter order, so the merged report does not
//! depend on the worker count.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modring::{gcd_raw, Modulus};
use crate::multfunc::{self, JacobiMap};
use crate::seqmatrix;
use crate::zolotarev;

/// At most this many failing parameters are listed in a report.
pub const MAX_LISTED_FAILURES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Theorem1,
    Table,
    Corollary,
    JacobiTheorem,
    BasicSymmetry,
    Lemma,
    Cycles,
    Zolotarev,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem1,
        Check::Table,
        Check::Corollary,
        Check::JacobiTheorem,
        Check::BasicSymmetry,
        Check::Lemma,
        Check::Cycles,
        Check::Zolotarev,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Table => "table",
            Check::Corollary => "corollary",
            Check::JacobiTheorem => "jacobi-theorem",
            Check::BasicSymmetry => "basic-symmetry",
            Check::Lemma => "lemma",
            Check::Cycles => "cycles",
            Check::Zolotarev => "zolotarev",
        }
    }

    /// Checks whose parameter must be even; odd values are skipped.
    pub fn even_only(self) -> bool {
        !matches!(self, Check::Theorem1 | Check::Table | Check::Zolotarev)
    }

    /// Name of the swept parameter: `n` for matrix sides, `m` for moduli.
    pub fn parameter(self) -> &'static str {
        match self {
            Check::Zolotarev => "m",
            _ => "n",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Inclusive parameter range, written `lo..hi`, `lo..=hi` or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamRange {
    pub start: u64,
    pub end: u64,
}

impl ParamRange {
    pub fn new(start: u64, end: u64) -> Result<Self> {
        if start == 0 || end < start {
            return Err(Error::InvalidRange(format!("{start}..{end}")));
        }
        Ok(ParamRange { start, end })
    }

    pub fn iter(self) -> RangeInclusive<u64> {
        self.start..=self.end
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(s.to_string());
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                ParamRange::new(num(lo)?, num(hi)?)
            }
            None => {
                let v = num(s)?;
                ParamRange::new(v, v)
            }
        }
    }
}

/// A failing parameter: `{"n": 6}` or `{"m": 9, "a": 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum FailingCase {
    Side { n: u64 },
    Unit { m: u64, a: u64 },
}

impl fmt::Display for FailingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailingCase::Side { n } => write!(f, "n={n}"),
            FailingCase::Unit { m, a } => write!(f, "m={m} a={a}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Outcome {
    cases: u64,
    skipped: u64,
    failures: Vec<FailingCase>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub parameter: String,
    pub range: ParamRange,
    pub cases: u64,
    pub skipped: u64,
    pub failure_count: u64,
    /// Smallest failing parameters, capped at [`MAX_LISTED_FAILURES`].
    pub failures: Vec<FailingCase>,
    pub wall_time_s: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Same report with the wall-time field zeroed.
    pub fn without_timing(&self) -> Self {
        VerificationReport { wall_time_s: 0.0, ..self.clone() }
    }

    pub fn to_text(&self) -> String {
        let listed: Vec<String> = self.failures.iter().map(ToString::to_string).collect();
        format!(
            "check: {}\nrange: {}={}\ncases: {}\nskipped: {}\nfailures: {}\nfailing: [{}]\nwall_time_s: {:.3}\nresult: {}\n",
            self.check,
            self.parameter,
            self.range,
            self.cases,
            self.skipped,
            self.failure_count,
            listed.join(", "),
            self.wall_time_s,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report json is always serializable");
        s.push('\n');
        s
    }
}

fn side(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Overflow)
}

fn single(ok: bool, n: u64) -> Outcome {
    Outcome { cases: 1, skipped: 0, failures: if ok { vec![] } else { vec![FailingCase::Side { n }] } }
}

fn evaluate(check: Check, p: u64) -> Result<Outcome> {
    if check.even_only() && p % 2 == 1 {
        return Ok(Outcome { cases: 0, skipped: 1, failures: vec![] });
    }
    let outcome = match check {
        Check::Theorem1 => single(seqmatrix::check_theorem1(side(p)?)?, p),
        Check::Table => single(seqmatrix::check_value_table(side(p)?)?, p),
        Check::Corollary => {
            let n = side(p)?;
            let phi = JacobiMap::new(Modulus::for_side(n)?)?;
            single(multfunc::check_corollary(&phi, n)?, p)
        }
        Check::JacobiTheorem => single(multfunc::check_jacobi_theorem(side(p)?)?, p),
        Check::BasicSymmetry => single(multfunc::check_basic_symmetry(side(p)?)?, p),
        Check::Lemma => single(zolotarev::check_lemma(side(p)?)?, p),
        Check::Cycles => single(zolotarev::check_cycle_structure(side(p)?)?, p),
        Check::Zolotarev => {
            let m = p;
            if m < 3 || m.is_multiple_of(2) {
                return Ok(Outcome { cases: 0, skipped: 1, failures: vec![] });
            }
            let mut out = Outcome::default();
            for a in (1..m).filter(|&a| gcd_raw(a, m) == 1) {
                out.cases += 1;
                if !zolotarev::check_zolotarev(a as i64, m)? {
                    out.failures.push(FailingCase::Unit { m, a });
                }
            }
            out
        }
    };
    Ok(outcome)
}

/// Folds outcomes in parameter order; keeps the first failures up to the cap.
fn merge(outcomes: Vec<Outcome>) -> (Outcome, u64) {
    let mut total = Outcome::default();
    let mut failure_count = 0u64;
    for outcome in outcomes {
        total.cases += outcome.cases;
        total.skipped += outcome.skipped;
        failure_count += outcome.failures.len() as u64;
        let room = MAX_LISTED_FAILURES - total.failures.len();
        total.failures.extend(outcome.failures.into_iter().take(room));
    }
    (total, failure_count)
}

/// Runs `check` over every parameter in `range` on `workers` threads.
pub fn run_check(check: Check, range: ParamRange, workers: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let params: Vec<u64> = range.iter().collect();
    let outcomes: Vec<Result<Outcome>> = if workers <= 1 {
        params.iter().map(|&p| evaluate(check, p)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Unsupported(format!("cannot start worker pool: {e}")))?;
        pool.install(|| params.par_iter().map(|&p| evaluate(check, p)).collect())
    };

    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    let (total, failure_count) = merge(outcomes);
    if total.cases == 0 {
        return Err(Error::EmptyRange(format!("{check} over {range}")));
    }
    Ok(VerificationReport {
        check: check.name().to_string(),
        parameter: check.parameter().to_string(),
        range,
        cases: total.cases,
        skipped: total.skipped,
        failure_count,
        failures: total.failures,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}
