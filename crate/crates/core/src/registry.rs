//! Declarative registry of congruence checks with a sweep driver.
//!
//! Each entry binds one congruence statement about primes `5k + r` (or a
//! fixed modulus, or plain integers) to an executable check with its
//! applicability hypothesis and default parameter ranges. The sweep driver
//! runs selected checks over every qualifying target up to a bound and
//! assembles a deterministic report; a result contradicting its recorded
//! expectation is an anomaly. Exactly one entry, `p0.1-general`, is
//! expected to fail: direct computation refutes that identity, and the
//! registry documents the counterexample instead of hiding it.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{
    addmod, classify_prime, is_prime, mulmod, powmod, primes_up_to, submod, PrimeClass,
};
use crate::binomial::{check_binom_next_row, check_binom_odd_row, verify_odd_entries};
use crate::error::{Error, Result};
use crate::fib::{fib_exact, fib_neg, fib_residues, FibMethod};
use crate::pisano::{
    half_period_zero_check, is_period_with, minimal_period, third_period_check,
    verify_period_tail, HalfPeriodOutcome, ThirdPeriodOutcome,
};
use crate::verdict::RangeOutcome;

/// Hard cap on sweep bounds.
pub const SWEEP_MAX_BOUND: u64 = 1_000_000;
/// Hard cap on the auxiliary `m` range.
pub const AUX_M_MAX: u64 = 100;

/// Verdict of one check instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

/// What a healthy run should produce for a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Expectation {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FALSIFIED")]
    Falsified,
}

/// Witness values keyed by name, printed as decimal strings so that
/// arbitrarily large integers survive serialization intact.
pub type Witness = BTreeMap<String, String>;

/// One theorem instance's verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    /// Modulus the instance ran against; 0 for exact integer checks.
    pub modulus: u64,
    /// Effective auxiliary parameter ranges.
    pub params: BTreeMap<String, u64>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

/// Pass/fail/skip counts for one check id.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

/// Aggregated sweep output. Serialization is canonical: struct fields in
/// declaration order, maps sorted by key, no timestamps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub bound: u64,
    pub filter: Vec<String>,
    pub results: Vec<CheckResult>,
    pub summary: BTreeMap<String, Tally>,
    pub anomalies: Vec<CheckResult>,
}

impl Report {
    /// True when no result contradicts its expectation.
    pub fn is_clean(&self) -> bool {
        self.anomalies.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Bounds for the auxiliary indices various statements quantify over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxRanges {
    /// Range of the multiplier `m` in the `F_{5mk}` family.
    pub m_lo: u64,
    pub m_hi: u64,
    /// Range of `n` in the divisibility family `F_{n(5k+3)}`.
    pub n_lo: u64,
    pub n_hi: u64,
    /// Range of the free residue `r` in `F_{m(5k+r)}`.
    pub r_lo: u64,
    pub r_hi: u64,
}

impl Default for AuxRanges {
    fn default() -> Self {
        Self {
            m_lo: 2,
            m_hi: 20,
            n_lo: 1,
            n_hi: 30,
            r_lo: 1,
            r_hi: 6,
        }
    }
}

/// Which targets a check sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Primes whose residue class mod 5 lies in the given set.
    Classes(&'static [u64]),
    /// A single fixed modulus.
    FixedModulus(u64),
    /// No modulus at all: exact integer statements.
    Global,
}

pub(crate) struct RunCtx<'a> {
    pc: Option<&'a PrimeClass>,
    ranges: &'a AuxRanges,
    method: FibMethod,
}

struct Outcome {
    verdict: Verdict,
    params: BTreeMap<String, u64>,
    witness: Option<Witness>,
}

impl Outcome {
    fn pass() -> Self {
        Self {
            verdict: Verdict::Pass,
            params: BTreeMap::new(),
            witness: None,
        }
    }

    fn skipped() -> Self {
        Self {
            verdict: Verdict::Skipped,
            params: BTreeMap::new(),
            witness: None,
        }
    }

    fn scalar(lhs: u64, rhs: u64) -> Self {
        let mut w = Witness::new();
        w.insert("left".into(), lhs.to_string());
        w.insert("right".into(), rhs.to_string());
        Self {
            verdict: if lhs == rhs {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            params: BTreeMap::new(),
            witness: Some(w),
        }
    }

    fn with_params(mut self, params: &[(&str, u64)]) -> Self {
        for (k, v) in params {
            self.params.insert((*k).into(), *v);
        }
        self
    }

    fn from_range(outcome: RangeOutcome, param: &str) -> Self {
        match outcome.failure {
            None => Self::pass(),
            Some(f) => {
                let mut w = Witness::new();
                w.insert(param.into(), f.param.to_string());
                w.insert("left".into(), f.lhs.to_string());
                w.insert("right".into(), f.rhs.to_string());
                Self {
                    verdict: Verdict::Fail,
                    params: BTreeMap::new(),
                    witness: Some(w),
                }
            }
        }
    }
}

type Runner = fn(&RunCtx) -> Result<Outcome>;

/// One registered statement.
pub struct TheoremCheck {
    pub id: &'static str,
    /// The congruence in plain notation, for reports and docs.
    pub statement: &'static str,
    pub expected: Expectation,
    pub scope: Scope,
    runner: Runner,
}

fn pc_of<'a>(ctx: &'a RunCtx) -> &'a PrimeClass {
    ctx.pc.expect("prime-scoped check invoked without a prime")
}

fn fib_at(ctx: &RunCtx, n: u64, m: u64) -> Result<u64> {
    Ok(ctx.method.pair(n, m)?.f_n)
}

fn effective_m(ctx: &RunCtx) -> (u64, u64) {
    (ctx.ranges.m_lo.max(2), ctx.ranges.m_hi)
}

/// Walks `m = 2, 3, ...` keeping the three geometric-sum accumulators the
/// `F_{5mk}` family is phrased in:
///
/// - `S(m) = 3^(m-1) + sum_{i<m} 3^(m-1-i) F_{3i-1}`  (S(m+1) = 3 S(m) + F_{3m-1})
/// - `T(m) =          sum_{i<m} 3^(m-1-i) F_{3i}`     (T(m+1) = 3 T(m) + F_{3m})
/// - `U(m) = 3^(m-1) + sum_{i<m} 3^(m-1-i) F_{3i+1}`  (U(m+1) = 3 U(m) + F_{3m+1})
struct MFamily<'a> {
    p: u64,
    fibv: &'a [u64],
    m: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub pow3: u64, // 3^m mod p
}

impl<'a> MFamily<'a> {
    fn new(p: u64, fibv: &'a [u64]) -> Self {
        // Values at m = 1.
        Self {
            p,
            fibv,
            m: 1,
            s: 1 % p,
            t: 0,
            u: 1 % p,
            pow3: 3 % p,
        }
    }

    fn advance_to(&mut self, m: u64) {
        while self.m < m {
            let i = self.m as usize;
            self.s = addmod(mulmod(3, self.s, self.p), self.fibv[3 * i - 1], self.p);
            self.t = addmod(mulmod(3, self.t, self.p), self.fibv[3 * i], self.p);
            self.u = addmod(mulmod(3, self.u, self.p), self.fibv[3 * i + 1], self.p);
            self.pow3 = mulmod(3, self.pow3, self.p);
            self.m += 1;
        }
    }
}

fn m_family_witness(m: u64, lhs: u64, rhs: u64, part: &str) -> Outcome {
    let mut w = Witness::new();
    w.insert("m".into(), m.to_string());
    w.insert("left".into(), lhs.to_string());
    w.insert("right".into(), rhs.to_string());
    if !part.is_empty() {
        w.insert("part".into(), part.to_string());
    }
    Outcome {
        verdict: Verdict::Fail,
        params: BTreeMap::new(),
        witness: Some(w),
    }
}

// ---------------------------------------------------------------------------
// Runners: scalar congruences at a prime.
// ---------------------------------------------------------------------------

fn run_p4_1(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    Ok(Outcome::scalar(fib_at(ctx, pc.p, pc.p)?, pc.p - 1))
}

fn run_p4_2(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    Ok(Outcome::scalar(fib_at(ctx, 5 * pc.k + 1, pc.p)?, 1))
}

fn run_p4_3(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    Ok(Outcome::scalar(fib_at(ctx, 5 * pc.k, pc.p)?, pc.p - 2))
}

fn run_t1_4(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    Ok(Outcome::scalar(
        powmod(5, (5 * pc.k).div_ceil(2), pc.p),
        pc.p - 1,
    ))
}

fn run_t17(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.p == 2 {
        return Ok(Outcome::skipped());
    }
    let rhs = if matches!(pc.r, 1 | 4) { 1 } else { pc.p - 1 };
    Ok(Outcome::scalar(powmod(5 % pc.p, (pc.p - 1) / 2, pc.p), rhs))
}

fn run_p51(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let fp = fib_at(ctx, pc.p, pc.p)?;
    let power = powmod(5, (pc.p - 1) / 2, pc.p);
    let class_value = if matches!(pc.r, 1 | 4) { 1 } else { pc.p - 1 };
    let mut w = Witness::new();
    w.insert("F_p".into(), fp.to_string());
    w.insert("power".into(), power.to_string());
    w.insert("class".into(), class_value.to_string());
    Ok(Outcome {
        verdict: if fp == power && power == class_value {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        params: BTreeMap::new(),
        witness: Some(w),
    })
}

fn run_c52(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let rhs = if matches!(pc.r, 1 | 4) { 1 % pc.p } else { pc.p - 1 };
    Ok(Outcome::scalar(fib_at(ctx, pc.p, pc.p)?, rhs))
}

fn run_p52(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let rhs = if matches!(pc.r, 1 | 4) { 0 } else { 1 };
    Ok(Outcome::scalar(fib_at(ctx, pc.p - 1, pc.p)?, rhs))
}

fn run_p53(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let rhs = if matches!(pc.r, 1 | 4) { 1 } else { pc.p - 2 };
    Ok(Outcome::scalar(fib_at(ctx, pc.p - 2, pc.p)?, rhs))
}

fn run_p54(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let rhs = if matches!(pc.r, 1 | 4) { 1 } else { 0 };
    Ok(Outcome::scalar(fib_at(ctx, pc.p + 1, pc.p)?, rhs))
}

fn run_p55(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let rhs = if matches!(pc.r, 1 | 4) { 2 } else { pc.p - 1 };
    Ok(Outcome::scalar(fib_at(ctx, pc.p + 2, pc.p)?, rhs))
}

fn run_c32(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.p <= 5 {
        return Ok(Outcome::skipped());
    }
    Ok(Outcome::scalar(fib_at(ctx, pc.p, 2)?, 1))
}

// ---------------------------------------------------------------------------
// Runners: the m-indexed family modulo 5k + 2.
// ---------------------------------------------------------------------------

fn m_family_scan(
    ctx: &RunCtx,
    mut body: impl FnMut(&RunCtx, &PrimeClass, &MFamily, u64) -> Result<Option<Outcome>>,
) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let (m_lo, m_hi) = effective_m(ctx);
    let fibv = fib_residues(pc.p, (3 * m_hi + 6) as usize);
    let mut fam = MFamily::new(pc.p, &fibv);
    for m in m_lo..=m_hi {
        fam.advance_to(m);
        if let Some(outcome) = body(ctx, pc, &fam, m)? {
            return Ok(outcome.with_params(&[("m_lo", m_lo), ("m_hi", m_hi)]));
        }
    }
    Ok(Outcome::pass().with_params(&[("m_lo", m_lo), ("m_hi", m_hi)]))
}

fn run_p0_3(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |ctx, pc, fam, m| {
        let lhs = fib_at(ctx, 3 * m, pc.p)?;
        let rhs = mulmod(2, fam.s, pc.p);
        Ok((lhs != rhs).then(|| m_family_witness(m, lhs, rhs, "")))
    })
}

fn run_t0_4(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |ctx, pc, fam, m| {
        let p = pc.p;
        let lhs1 = fib_at(ctx, 5 * m * pc.k, p)?;
        let rhs1 = mulmod(5 * pc.k % p, fam.s, p);
        if lhs1 != rhs1 {
            return Ok(Some(m_family_witness(m, lhs1, rhs1, "F(5mk)")));
        }
        let lhs2 = fib_at(ctx, 5 * m * pc.k + 1, p)?;
        let rhs2 = fam.fibv[(3 * m - 1) as usize];
        if lhs2 != rhs2 {
            return Ok(Some(m_family_witness(m, lhs2, rhs2, "F(5mk+1)")));
        }
        Ok(None)
    })
}

fn run_t0_4_cor(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |ctx, pc, fam, m| {
        let p = pc.p;
        let f3m1 = fam.fibv[(3 * m - 1) as usize];
        let five_ks = mulmod(5 * pc.k % p, fam.s, p);
        let cases: [(u64, u64, &str); 3] = [
            (5 * m * pc.k + 2, addmod(f3m1, five_ks, p), "F(5mk+2)"),
            (
                5 * m * pc.k + 3,
                addmod(mulmod(2, f3m1, p), five_ks, p),
                "F(5mk+3)",
            ),
            (
                5 * m * pc.k + 4,
                addmod(mulmod(3, f3m1, p), mulmod(2, five_ks, p), p),
                "F(5mk+4)",
            ),
        ];
        for (index, rhs, part) in cases {
            let lhs = fib_at(ctx, index, p)?;
            if lhs != rhs {
                return Ok(Some(m_family_witness(m, lhs, rhs, part)));
            }
        }
        Ok(None)
    })
}

fn mr_family_scan(
    ctx: &RunCtx,
    mut sides: impl FnMut(&RunCtx, &PrimeClass, &MFamily, u64, u64) -> Result<(u64, u64)>,
) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let (m_lo, m_hi) = effective_m(ctx);
    let (r_lo, r_hi) = (ctx.ranges.r_lo, ctx.ranges.r_hi);
    let params = [
        ("m_lo", m_lo),
        ("m_hi", m_hi),
        ("r_lo", r_lo),
        ("r_hi", r_hi),
    ];
    let fibv = fib_residues(pc.p, (3 * m_hi + 6).max(m_hi * r_hi + 2) as usize);
    let mut fam = MFamily::new(pc.p, &fibv);
    for m in m_lo..=m_hi {
        fam.advance_to(m);
        for rr in r_lo..=r_hi {
            let (lhs, rhs) = sides(ctx, pc, &fam, m, rr)?;
            if lhs != rhs {
                let mut out = m_family_witness(m, lhs, rhs, "");
                if let Some(w) = out.witness.as_mut() {
                    w.insert("r".into(), rr.to_string());
                }
                return Ok(out.with_params(&params));
            }
        }
    }
    Ok(Outcome::pass().with_params(&params))
}

fn run_t0_6(ctx: &RunCtx) -> Result<Outcome> {
    mr_family_scan(ctx, |ctx, pc, fam, m, rr| {
        let p = pc.p;
        let lhs = fib_at(ctx, m * (5 * pc.k + rr), p)?;
        let rhs = addmod(
            mulmod(fam.fibv[(m * rr) as usize], fam.fibv[(3 * m - 1) as usize], p),
            mulmod(5 * pc.k % p, mulmod(fam.fibv[(m * rr - 1) as usize], fam.s, p), p),
            p,
        );
        Ok((lhs, rhs))
    })
}

fn run_t0_6_rem(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |ctx, pc, _, m| {
        let lhs = fib_at(ctx, m * (5 * pc.k + 3), pc.p)?;
        Ok((lhs != 0).then(|| m_family_witness(m, lhs, 0, "")))
    })
}

fn run_c0_8(ctx: &RunCtx) -> Result<Outcome> {
    mr_family_scan(ctx, |ctx, pc, fam, m, rr| {
        let p = pc.p;
        let lhs = fib_at(ctx, m * (5 * pc.k + rr), p)?;
        let rhs = submod(
            mulmod(fam.fibv[(m * rr) as usize], fam.fibv[(3 * m - 1) as usize], p),
            mulmod(fam.fibv[(m * rr - 1) as usize], fam.fibv[(3 * m) as usize], p),
            p,
        );
        Ok((lhs, rhs))
    })
}

fn run_c0_10(ctx: &RunCtx) -> Result<Outcome> {
    mr_family_scan(ctx, |ctx, pc, fam, m, rr| {
        let p = pc.p;
        let lhs = fib_at(ctx, m * (5 * pc.k + rr), p)?;
        let rhs = submod(
            mulmod(fam.fibv[(m * rr) as usize], fam.fibv[(3 * m + 1) as usize], p),
            mulmod(fam.fibv[(m * rr + 1) as usize], fam.fibv[(3 * m) as usize], p),
            p,
        );
        Ok((lhs, rhs))
    })
}

fn run_l0_11(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |ctx, pc, fam, m| {
        let p = pc.p;
        let lhs = addmod(
            fib_at(ctx, 5 * m * pc.k, p)?,
            fam.fibv[(3 * m) as usize],
            p,
        );
        Ok((lhs != 0).then(|| m_family_witness(m, lhs, 0, "")))
    })
}

fn run_p0_14(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |_, pc, fam, m| {
        let p = pc.p;
        let lhs = fam.fibv[(3 * m + 1) as usize];
        let rhs = addmod(fam.pow3, mulmod(2, fam.t, p), p);
        Ok((lhs != rhs).then(|| m_family_witness(m, lhs, rhs, "")))
    })
}

fn run_p0_14_cor(ctx: &RunCtx) -> Result<Outcome> {
    m_family_scan(ctx, |_, pc, fam, m| {
        let p = pc.p;
        let lhs = fam.fibv[(3 * m + 2) as usize];
        let rhs = addmod(fam.pow3, mulmod(2, fam.u, p), p);
        Ok((lhs != rhs).then(|| m_family_witness(m, lhs, rhs, "")))
    })
}

// ---------------------------------------------------------------------------
// Runners: shift, series, and divisibility families modulo 5k + 2.
// ---------------------------------------------------------------------------

/// Class-2 check walking a parameter range against precomputed residues.
fn series_scan(
    ctx: &RunCtx,
    keys: (&'static str, &'static str, &'static str),
    len_of: impl Fn(u64) -> u64,
    range_of: impl Fn(u64) -> (u64, u64),
    sides: impl FnMut(&PrimeClass, &[u64], u64) -> (u64, u64),
) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let mut sides = sides;
    let fibv = fib_residues(pc.p, len_of(pc.k) as usize);
    let (lo, hi) = range_of(pc.k);
    let outcome = RangeOutcome::sweep(lo..=hi, |x| sides(pc, &fibv, x));
    let (param, key_lo, key_hi) = keys;
    Ok(Outcome::from_range(outcome, param).with_params(&[(key_lo, lo), (key_hi, hi)]))
}

fn run_l0_9(ctx: &RunCtx) -> Result<Outcome> {
    series_scan(
        ctx,
        ("r", "r_lo", "r_hi"),
        |k| 5 * k + 3 * (5 * k + 3) + 2,
        |k| (1, 3 * (5 * k + 3)),
        |pc, fibv, rr| {
            let p = pc.p;
            let lhs = fibv[(5 * pc.k + rr) as usize];
            let rhs = submod(fibv[rr as usize], mulmod(2, fibv[(rr - 1) as usize], p), p);
            (lhs, rhs)
        },
    )
}

fn run_p3f2f(ctx: &RunCtx) -> Result<Outcome> {
    series_scan(
        ctx,
        ("r", "r_lo", "r_hi"),
        |k| 5 * k + 3 * (5 * k + 3) + 3,
        |k| (0, 3 * (5 * k + 3)),
        |pc, fibv, rr| {
            let p = pc.p;
            let lhs = fibv[(5 * pc.k + rr) as usize];
            let rhs = submod(
                mulmod(3, fibv[rr as usize], p),
                mulmod(2, fibv[(rr + 1) as usize], p),
                p,
            );
            (lhs, rhs)
        },
    )
}

fn run_shift(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let p = pc.p;
    let hi = 3 * (5 * pc.k + 3);
    let fibv = fib_residues(p, (5 * pc.k + hi + 1) as usize);
    let outcome = RangeOutcome::sweep(0..=hi, |n| {
        let lhs = fibv[(5 * pc.k + n) as usize];
        let rhs = if n >= 3 {
            (p - fibv[(n - 3) as usize]) % p
        } else {
            // Negative tail via the signed extension: -F_{n-3} = -F_{-(3-n)}.
            let neg = -fib_neg(3 - n).expect("tiny negative index");
            reduce_bigint(&neg, p)
        };
        (lhs, rhs)
    });
    Ok(Outcome::from_range(outcome, "n").with_params(&[("n_lo", 0), ("n_hi", hi)]))
}

fn run_lser_odd(ctx: &RunCtx) -> Result<Outcome> {
    series_scan(
        ctx,
        ("l", "l_lo", "l_hi"),
        |k| 5 * k + 4,
        |k| (1, (5 * k - 1) / 2),
        |pc, fibv, l| {
            (
                fibv[(5 * pc.k - (2 * l + 1)) as usize],
                fibv[(2 * (l + 2)) as usize],
            )
        },
    )
}

fn run_lser_even(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let p = pc.p;
    let (lo, hi) = (1, (5 * pc.k - 1) / 2);
    let fibv = fib_residues(p, (5 * pc.k + 4) as usize);
    let mut acc = 0u64; // running sum of F_4, F_6, ..., F_{2(l+1)}
    let outcome = RangeOutcome::sweep(lo..=hi, |l| {
        acc = addmod(acc, fibv[(2 * (l + 1)) as usize], p);
        let lhs = fibv[(5 * pc.k - 2 * l) as usize];
        let rhs = submod(5 * pc.k % p, acc, p);
        (lhs, rhs)
    });
    Ok(Outcome::from_range(outcome, "l").with_params(&[("l_lo", lo), ("l_hi", hi)]))
}

fn run_n5k3(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let (n_lo, n_hi) = (ctx.ranges.n_lo.max(1), ctx.ranges.n_hi);
    for n in n_lo..=n_hi {
        let lhs = fib_at(ctx, n * (5 * pc.k + 3), pc.p)?;
        if lhs != 0 {
            let mut out = m_family_witness(n, lhs, 0, "");
            if let Some(w) = out.witness.as_mut() {
                let v = w.remove("m").expect("witness key");
                w.insert("n".into(), v);
            }
            return Ok(out.with_params(&[("n_lo", n_lo), ("n_hi", n_hi)]));
        }
    }
    Ok(Outcome::pass().with_params(&[("n_lo", n_lo), ("n_hi", n_hi)]))
}

// ---------------------------------------------------------------------------
// Runners: periods.
// ---------------------------------------------------------------------------

fn period_outcome(ctx: &RunCtx, p: u64, ell: u64) -> Result<Outcome> {
    let holds = is_period_with(ctx.method, p, ell)?;
    let mut w = Witness::new();
    w.insert("period".into(), ell.to_string());
    Ok(Outcome {
        verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        params: BTreeMap::new(),
        witness: Some(w),
    })
}

fn run_t57(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k % 2 != 1 {
        return Ok(Outcome::skipped());
    }
    period_outcome(ctx, pc.p, 2 * (5 * pc.k + 3))
}

fn run_t68(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k % 2 != (pc.r + 1) % 2 {
        return Ok(Outcome::skipped());
    }
    period_outcome(ctx, pc.p, 2 * (pc.p + 1))
}

fn run_t69(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k % 2 != (pc.r + 1) % 2 {
        return Ok(Outcome::skipped());
    }
    period_outcome(ctx, pc.p, 2 * (pc.p - 1))
}

fn run_c610(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k % 2 != (pc.r + 1) % 2 {
        return Ok(Outcome::skipped());
    }
    // 10k + 3(1 + (-1)^r) + 2(r - 1)(1 - (-1)^r)
    let ell = if pc.r.is_multiple_of(2) {
        10 * pc.k + 6
    } else {
        10 * pc.k + 4 * (pc.r - 1)
    };
    period_outcome(ctx, pc.p, ell)
}

fn run_c611(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let ell = if matches!(pc.r, 1 | 4) {
        2 * (pc.p - 1)
    } else {
        2 * (pc.p + 1)
    };
    period_outcome(ctx, pc.p, ell)
}

fn run_c619(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let ell = if matches!(pc.r, 1 | 4) {
        pc.p - 1
    } else {
        2 * (pc.p + 1)
    };
    period_outcome(ctx, pc.p, ell)
}

fn run_p612(ctx: &RunCtx) -> Result<Outcome> {
    let holds = is_period_with(ctx.method, 5, 20)?;
    Ok(Outcome {
        verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        params: BTreeMap::new(),
        witness: None,
    })
}

fn mod5_table_scan(slot_lo: usize, slot_hi: usize) -> Outcome {
    const K_MAX: u64 = 1_000;
    let fibv = fib_residues(5, (5 * K_MAX + 5) as usize);
    for k in 0..=K_MAX {
        let table = crate::pisano::mod5_residue_table(k);
        for slot in slot_lo..=slot_hi {
            let lhs = fibv[(5 * k) as usize + slot + 1];
            let rhs = table[slot];
            if lhs != rhs {
                let mut w = Witness::new();
                w.insert("k".into(), k.to_string());
                w.insert("offset".into(), (slot + 1).to_string());
                w.insert("left".into(), lhs.to_string());
                w.insert("right".into(), rhs.to_string());
                return Outcome {
                    verdict: Verdict::Fail,
                    params: BTreeMap::new(),
                    witness: Some(w),
                }
                .with_params(&[("k_hi", K_MAX)]);
            }
        }
    }
    Outcome::pass().with_params(&[("k_hi", K_MAX)])
}

fn run_p613(_: &RunCtx) -> Result<Outcome> {
    Ok(mod5_table_scan(0, 1))
}

fn run_p614(_: &RunCtx) -> Result<Outcome> {
    Ok(mod5_table_scan(2, 3))
}

fn run_c615(_: &RunCtx) -> Result<Outcome> {
    Ok(Outcome::scalar(minimal_period(5)?, 20))
}

fn run_p615(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let (lo, hi) = (0, ctx.ranges.n_hi);
    for m in lo..=hi {
        let zero = fib_at(ctx, 5 * m * pc.k, pc.p)?;
        if zero != 0 {
            return Ok(m_family_witness(m, zero, 0, "F(5mk)")
                .with_params(&[("m_lo", lo), ("m_hi", hi)]));
        }
        let one = fib_at(ctx, 5 * m * pc.k + 1, pc.p)?;
        if one != 1 {
            return Ok(m_family_witness(m, one, 1, "F(5mk+1)")
                .with_params(&[("m_lo", lo), ("m_hi", hi)]));
        }
    }
    Ok(Outcome::pass().with_params(&[("m_lo", lo), ("m_hi", hi)]))
}

fn run_p617(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    period_outcome(ctx, pc.p, 5 * pc.k)
}

fn run_p618(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    period_outcome(ctx, pc.p, 5 * pc.k + 3)
}

fn run_period_tail(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let ell = minimal_period(pc.p)?;
    let tail = verify_period_tail(pc.p, ell)?;
    let mut w = Witness::new();
    w.insert("minimal_period".into(), ell.to_string());
    w.insert("F_ell".into(), tail.f_ell.to_string());
    w.insert("F_ell_minus_1".into(), tail.f_prev.to_string());
    w.insert("F_ell_minus_2".into(), tail.f_prev2.to_string());
    Ok(Outcome {
        verdict: if tail.holds {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        params: BTreeMap::new(),
        witness: Some(w),
    })
}

fn reflection_runner(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k == 0 {
        return Ok(Outcome::skipped());
    }
    let outcome = crate::pisano::reflection_check(pc)?;
    Ok(Outcome::from_range(outcome, "m").with_params(&[("m_lo", 0), ("m_hi", 5 * pc.k)]))
}

fn run_half_zero(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    match half_period_zero_check(pc)? {
        HalfPeriodOutcome::Skipped => Ok(Outcome::skipped()),
        HalfPeriodOutcome::Evaluated { index, residue } => {
            let mut w = Witness::new();
            w.insert("index".into(), index.to_string());
            w.insert("residue".into(), residue.to_string());
            Ok(Outcome {
                verdict: if residue == 0 {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
                params: BTreeMap::new(),
                witness: Some(w),
            })
        }
    }
}

fn run_third_period(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    match third_period_check(pc)? {
        ThirdPeriodOutcome::Skipped => Ok(Outcome::skipped()),
        ThirdPeriodOutcome::Evaluated(e) => {
            let mut w = Witness::new();
            w.insert("two_thirds".into(), e.two_thirds.to_string());
            w.insert("is_period".into(), e.is_period.to_string());
            w.insert("zero_at_third".into(), e.zero_at_third.to_string());
            w.insert("minus_one_at_third".into(), e.minus_one_at_third.to_string());
            w.insert("zero_at_full".into(), e.zero_at_full.to_string());
            w.insert("zero_at_two_thirds".into(), e.zero_at_two_thirds.to_string());
            Ok(Outcome {
                verdict: if e.holds() {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
                params: BTreeMap::new(),
                witness: Some(w),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Runners: binomial rows.
// ---------------------------------------------------------------------------

fn run_p1_5(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let outcome = verify_odd_entries(pc.p, 5 * pc.k + 1, 5 * pc.k / 2, |_| {
        (5 * pc.k + 1) % pc.p
    });
    Ok(Outcome::from_range(outcome, "l").with_params(&[("l_hi", 5 * pc.k / 2)]))
}

fn run_p1_6(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    let p = pc.p;
    let outcome = verify_odd_entries(p, 5 * pc.k, 5 * pc.k / 2, |l| (p - 2 * (l + 1) % p) % p);
    Ok(Outcome::from_range(outcome, "l").with_params(&[("l_hi", 5 * pc.k / 2)]))
}

fn run_p1_20(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.k % 2 != (pc.r + 1) % 2 {
        return Ok(Outcome::skipped());
    }
    let outcome = check_binom_odd_row(pc)?;
    Ok(Outcome::from_range(outcome, "l").with_params(&[("l_hi", (pc.p - 2) / 2)]))
}

fn run_p1_22(ctx: &RunCtx) -> Result<Outcome> {
    let pc = pc_of(ctx);
    if pc.p < 7 || pc.k % 2 != (pc.r + 1) % 2 {
        return Ok(Outcome::skipped());
    }
    let outcome = check_binom_next_row(pc)?;
    Ok(Outcome::from_range(outcome, "l").with_params(&[("l_hi", (pc.p - 3) / 2)]))
}

// ---------------------------------------------------------------------------
// Runners: exact and fixed-modulus statements.
// ---------------------------------------------------------------------------

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((v % &m) + &m) % &m;
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn big_witness(m: u64, lhs: &BigInt, rhs: &BigInt) -> Witness {
    let mut w = Witness::new();
    w.insert("m".into(), m.to_string());
    w.insert("left".into(), lhs.to_string());
    w.insert("right".into(), rhs.to_string());
    w
}

fn run_p0_1(_: &RunCtx) -> Result<Outcome> {
    const M_LO: u64 = 3;
    const M_HI: u64 = 300;
    for m in M_LO..=M_HI {
        let lhs = BigInt::from(fib_exact(3 * m + 2)?.value);
        let rhs = BigInt::from(fib_exact(3 * m - 1)?.value) * 4
            + BigInt::from(fib_exact(3 * m - 4)?.value);
        if lhs != rhs {
            return Ok(Outcome {
                verdict: Verdict::Fail,
                params: BTreeMap::new(),
                witness: Some(big_witness(m, &lhs, &rhs)),
            }
            .with_params(&[("m_lo", M_LO), ("m_hi", M_HI)]));
        }
    }
    Ok(Outcome::pass().with_params(&[("m_lo", M_LO), ("m_hi", M_HI)]))
}

fn run_p0_1_general(_: &RunCtx) -> Result<Outcome> {
    const M_LO: u64 = 3;
    const M_HI: u64 = 300;
    for m in M_LO..=M_HI {
        let lhs = BigInt::from(fib_exact(3 * m + 2)?.value);
        let mut sum = BigInt::from(0);
        for i in 2..=m {
            sum += BigInt::from(fib_exact(3 * i - 1)?.value);
        }
        let rhs = sum * 4;
        if lhs != rhs {
            return Ok(Outcome {
                verdict: Verdict::Fail,
                params: BTreeMap::new(),
                witness: Some(big_witness(m, &lhs, &rhs)),
            }
            .with_params(&[("m_lo", M_LO), ("m_hi", M_HI)]));
        }
    }
    Ok(Outcome::pass().with_params(&[("m_lo", M_LO), ("m_hi", M_HI)]))
}

fn run_parity(_: &RunCtx) -> Result<Outcome> {
    const N_HI: u64 = 10_000;
    let fibv = fib_residues(2, (N_HI + 1) as usize);
    let outcome = RangeOutcome::sweep(0..=N_HI, |n| {
        (fibv[n as usize], if n % 3 == 0 { 0 } else { 1 })
    });
    Ok(Outcome::from_range(outcome, "n").with_params(&[("n_hi", N_HI)]))
}

fn run_p33(_: &RunCtx) -> Result<Outcome> {
    const K_HI: u64 = 2_000;
    let fibv = fib_residues(5, (5 * K_HI + 1) as usize);
    let outcome = RangeOutcome::sweep(0..=K_HI, |k| (fibv[(5 * k) as usize], 0));
    Ok(Outcome::from_range(outcome, "k").with_params(&[("k_hi", K_HI)]))
}

fn run_p34(_: &RunCtx) -> Result<Outcome> {
    const N_HI: u64 = 10_000;
    let mut a = num_bigint::BigUint::from(0u32);
    let mut b = num_bigint::BigUint::from(1u32);
    for n in 0..=N_HI {
        if n >= 5 && a < num_bigint::BigUint::from(n) {
            let mut w = Witness::new();
            w.insert("n".into(), n.to_string());
            w.insert("F_n".into(), a.to_string());
            return Ok(Outcome {
                verdict: Verdict::Fail,
                params: BTreeMap::new(),
                witness: Some(w),
            }
            .with_params(&[("n_lo", 5), ("n_hi", N_HI)]));
        }
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(Outcome::pass().with_params(&[("n_lo", 5), ("n_hi", N_HI)]))
}

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

const ALL_CLASSES: &[u64] = &[1, 2, 3, 4];
const CLASS_1: &[u64] = &[1];
const CLASS_2: &[u64] = &[2];
const CLASS_3: &[u64] = &[3];
const CLASS_4: &[u64] = &[4];
const CLASSES_23: &[u64] = &[2, 3];
const CLASSES_14: &[u64] = &[1, 4];

static CHECKS: &[TheoremCheck] = &[
    // Exponent laws and binomial rows.
    TheoremCheck {
        id: "t1.4",
        statement: "5^((5k+1)/2) = 5k+1 (mod 5k+2) for primes 5k+2, k odd",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_t1_4,
    },
    TheoremCheck {
        id: "t17",
        statement: "5^((p-1)/2) = +1 (mod p) for r in {1,4}, -1 for r in {2,3}",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_t17,
    },
    TheoremCheck {
        id: "p1.5",
        statement: "C(5k+1, 2l+1) = 5k+1 (mod 5k+2) for l <= floor(5k/2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p1_5,
    },
    TheoremCheck {
        id: "p1.6",
        statement: "C(5k, 2l+1) = -2(l+1) (mod 5k+2) for l <= floor(5k/2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p1_6,
    },
    TheoremCheck {
        id: "p1.20",
        statement: "C(p-1, 2l+1) = -1 (mod p) across the row, p = 5k+r",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p1_20,
    },
    TheoremCheck {
        id: "p1.22",
        statement: "C(p-2, 2l+1) = -2(l+1) (mod p) across the row, p = 5k+r >= 7",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p1_22,
    },
    // Plain integer statements.
    TheoremCheck {
        id: "p0.1",
        statement: "F(3m+2) = 4 F(3m-1) + F(3m-4) for m >= 3",
        expected: Expectation::Holds,
        scope: Scope::Global,
        runner: run_p0_1,
    },
    TheoremCheck {
        id: "p0.1-general",
        statement: "F(3m+2) = 4 sum_{i=2..m} F(3i-1) for m >= 3 (refuted at m = 3)",
        expected: Expectation::Falsified,
        scope: Scope::Global,
        runner: run_p0_1_general,
    },
    TheoremCheck {
        id: "parity",
        statement: "F(n) even iff 3 | n",
        expected: Expectation::Holds,
        scope: Scope::FixedModulus(2),
        runner: run_parity,
    },
    TheoremCheck {
        id: "c32",
        statement: "F(p) odd for primes p = 5k+2 > 5",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_c32,
    },
    TheoremCheck {
        id: "p33",
        statement: "F(5k) = 0 (mod 5)",
        expected: Expectation::Holds,
        scope: Scope::FixedModulus(5),
        runner: run_p33,
    },
    TheoremCheck {
        id: "p34",
        statement: "F(n) >= n for n >= 5",
        expected: Expectation::Holds,
        scope: Scope::Global,
        runner: run_p34,
    },
    // Congruences modulo 5k + 2.
    TheoremCheck {
        id: "p4.1",
        statement: "F(5k+2) = 5k+1 (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p4_1,
    },
    TheoremCheck {
        id: "p4.2",
        statement: "F(5k+1) = 1 (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p4_2,
    },
    TheoremCheck {
        id: "p4.3",
        statement: "F(5k) = 5k (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p4_3,
    },
    TheoremCheck {
        id: "p0.3",
        statement: "F(3m) = 2(3^(m-1) + sum 3^(m-1-i) F(3i-1)) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p0_3,
    },
    TheoremCheck {
        id: "t0.4",
        statement: "F(5mk) = 5k S(m) and F(5mk+1) = F(3m-1) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_t0_4,
    },
    TheoremCheck {
        id: "t0.4-cor",
        statement: "F(5mk+2), F(5mk+3), F(5mk+4) in terms of F(3m-1) and 5k S(m) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_t0_4_cor,
    },
    TheoremCheck {
        id: "t0.6",
        statement: "F(m(5k+r)) = F(mr) F(3m-1) + 5k F(mr-1) S(m) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_t0_6,
    },
    TheoremCheck {
        id: "t0.6-rem",
        statement: "F(m(5k+3)) = 0 (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_t0_6_rem,
    },
    TheoremCheck {
        id: "c0.8",
        statement: "F(m(5k+r)) = F(mr) F(3m-1) - F(mr-1) F(3m) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_c0_8,
    },
    TheoremCheck {
        id: "c0.10",
        statement: "F(m(5k+r)) = F(mr) F(3m+1) - F(mr+1) F(3m) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_c0_10,
    },
    TheoremCheck {
        id: "l0.9",
        statement: "F(5k+r) = F(r) - 2 F(r-1) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_l0_9,
    },
    TheoremCheck {
        id: "l0.11",
        statement: "F(5mk) + F(3m) = 0 (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_l0_11,
    },
    TheoremCheck {
        id: "p3F2F",
        statement: "F(5k+r) = 3 F(r) - 2 F(r+1) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p3f2f,
    },
    TheoremCheck {
        id: "p0.14",
        statement: "F(3m+1) = 3^m + 2 sum 3^(m-1-i) F(3i) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p0_14,
    },
    TheoremCheck {
        id: "p0.14-cor",
        statement: "F(3m+2) = 3^m + 2(3^(m-1) + sum 3^(m-1-i) F(3i+1)) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_p0_14_cor,
    },
    // Congruences modulo 5k + r.
    TheoremCheck {
        id: "p51",
        statement: "F(p) = 5^((p-1)/2) = +1 or -1 by class (mod p)",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p51,
    },
    TheoremCheck {
        id: "c52",
        statement: "F(p) = 1 (mod p) if p = 1,4 (mod 5); p-1 if p = 2,3 (mod 5)",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_c52,
    },
    TheoremCheck {
        id: "p52",
        statement: "F(p-1) = 0 (r in {1,4}) or 1 (r in {2,3}) (mod p)",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p52,
    },
    TheoremCheck {
        id: "p53",
        statement: "F(p-2) = 1 (r in {1,4}) or -2 (r in {2,3}) (mod p)",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p53,
    },
    TheoremCheck {
        id: "p54",
        statement: "F(p+1) = 1 (r in {1,4}) or 0 (r in {2,3}) (mod p)",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p54,
    },
    TheoremCheck {
        id: "p55",
        statement: "F(p+2) = 2 (r in {1,4}) or -1 (r in {2,3}) (mod p)",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_p55,
    },
    // Periods.
    TheoremCheck {
        id: "t57",
        statement: "2(5k+3) is a period mod 5k+2, k odd",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_t57,
    },
    TheoremCheck {
        id: "t68",
        statement: "2(p+1) is a period mod p for r in {2,3}",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASSES_23),
        runner: run_t68,
    },
    TheoremCheck {
        id: "t69",
        statement: "2(p-1) is a period mod p for r in {1,4}",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASSES_14),
        runner: run_t69,
    },
    TheoremCheck {
        id: "c610",
        statement: "10k + 3(1+(-1)^r) + 2(r-1)(1-(-1)^r) is a period mod 5k+r",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_c610,
    },
    TheoremCheck {
        id: "c611",
        statement: "2(p-1) resp. 2(p+1) is a period mod p by class",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_c611,
    },
    TheoremCheck {
        id: "c619",
        statement: "p-1 (r in {1,4}) resp. 2(p+1) (r in {2,3}) is a period mod p",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_c619,
    },
    TheoremCheck {
        id: "p612",
        statement: "20 is a period mod 5",
        expected: Expectation::Holds,
        scope: Scope::FixedModulus(5),
        runner: run_p612,
    },
    TheoremCheck {
        id: "p613",
        statement: "F(5k+1) = F(5k+2) (mod 5) follow the k mod 4 table",
        expected: Expectation::Holds,
        scope: Scope::FixedModulus(5),
        runner: run_p613,
    },
    TheoremCheck {
        id: "p614",
        statement: "F(5k+3), F(5k+4) (mod 5) follow the k mod 4 table",
        expected: Expectation::Holds,
        scope: Scope::FixedModulus(5),
        runner: run_p614,
    },
    TheoremCheck {
        id: "c615",
        statement: "the minimal period mod 5 is 20",
        expected: Expectation::Holds,
        scope: Scope::FixedModulus(5),
        runner: run_c615,
    },
    TheoremCheck {
        id: "p615",
        statement: "F(5mk) = 0 and F(5mk+1) = 1 (mod 5k+1)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_1),
        runner: run_p615,
    },
    TheoremCheck {
        id: "p617",
        statement: "5k is a period mod 5k+1",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_1),
        runner: run_p617,
    },
    TheoremCheck {
        id: "p618",
        statement: "5k+3 is a period mod 5k+4",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_4),
        runner: run_p618,
    },
    TheoremCheck {
        id: "period.tail",
        statement: "F(ell) = 0, F(ell-1) = 1, F(ell-2) = m-1 at the minimal period",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_period_tail,
    },
    // Reflections and the shift family.
    TheoremCheck {
        id: "p620",
        statement: "F(5k-m) = (-1)^(m+1) F(m) (mod 5k+1)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_1),
        runner: reflection_runner,
    },
    TheoremCheck {
        id: "p629",
        statement: "F(5k-m) = (-1)^(m+1) F(m+3) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: reflection_runner,
    },
    TheoremCheck {
        id: "p632",
        statement: "F(5k-m) = (-1)^m F(m+4) (mod 5k+3)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_3),
        runner: reflection_runner,
    },
    TheoremCheck {
        id: "p633",
        statement: "F(5k-m) = (-1)^m F(m+3) (mod 5k+4)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_4),
        runner: reflection_runner,
    },
    TheoremCheck {
        id: "half.zero",
        statement: "F at the class half index = 0 (mod p) under the k mod 4 hypothesis",
        expected: Expectation::Holds,
        scope: Scope::Classes(ALL_CLASSES),
        runner: run_half_zero,
    },
    TheoremCheck {
        id: "third.period",
        statement: "2(p+1)/3 period structure: given F((p+1)/3) = 0, period iff F((p-2)/3) = -1",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASSES_23),
        runner: run_third_period,
    },
    TheoremCheck {
        id: "lser.odd",
        statement: "F(5k-(2l+1)) = F(2(l+2)) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_lser_odd,
    },
    TheoremCheck {
        id: "lser.even",
        statement: "F(5k-2l) = 5k - sum_{i<l} F(2(i+2)) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_lser_even,
    },
    TheoremCheck {
        id: "shift",
        statement: "F(5k+n) = -F(n-3) (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_shift,
    },
    TheoremCheck {
        id: "n5k3",
        statement: "F(n(5k+3)) = 0 (mod 5k+2)",
        expected: Expectation::Holds,
        scope: Scope::Classes(CLASS_2),
        runner: run_n5k3,
    },
];

/// The complete check catalog, in registry order.
pub fn registry_contents() -> &'static [TheoremCheck] {
    CHECKS
}

fn find_check(id: &str) -> Result<&'static TheoremCheck> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

fn execute(
    check: &TheoremCheck,
    pc: Option<&PrimeClass>,
    modulus: u64,
    ranges: &AuxRanges,
    method: FibMethod,
) -> Result<CheckResult> {
    let ctx = RunCtx {
        pc,
        ranges,
        method,
    };
    let outcome = (check.runner)(&ctx)?;
    Ok(CheckResult {
        check: check.id.to_string(),
        modulus,
        params: outcome.params,
        verdict: outcome.verdict,
        witness: outcome.witness,
    })
}

fn skipped_result(check: &TheoremCheck, modulus: u64) -> CheckResult {
    CheckResult {
        check: check.id.to_string(),
        modulus,
        params: BTreeMap::new(),
        verdict: Verdict::Skipped,
        witness: None,
    }
}

fn validate_ranges(ranges: &AuxRanges) -> Result<()> {
    if ranges.m_hi > AUX_M_MAX || ranges.m_lo > ranges.m_hi {
        return Err(Error::IndexRange {
            what: "auxiliary m range",
            index: ranges.m_hi,
            max: AUX_M_MAX,
        });
    }
    if ranges.r_hi > AUX_M_MAX || ranges.r_lo > ranges.r_hi {
        return Err(Error::IndexRange {
            what: "auxiliary r range",
            index: ranges.r_hi,
            max: AUX_M_MAX,
        });
    }
    if ranges.n_hi > 10_000 || ranges.n_lo > ranges.n_hi {
        return Err(Error::IndexRange {
            what: "auxiliary n range",
            index: ranges.n_hi,
            max: 10_000,
        });
    }
    Ok(())
}

/// Runs a single check against one target.
///
/// `modulus` supplies the prime for prime-swept checks and is ignored by
/// fixed-modulus and global checks, which always run at their own target.
pub fn run_check(
    id: &str,
    modulus: Option<u64>,
    ranges: Option<AuxRanges>,
) -> Result<Vec<CheckResult>> {
    let check = find_check(id)?;
    let ranges = ranges.unwrap_or_default();
    validate_ranges(&ranges)?;
    let method = FibMethod::Doubling;
    let result = match check.scope {
        Scope::Global => execute(check, None, 0, &ranges, method)?,
        Scope::FixedModulus(m) => execute(check, None, m, &ranges, method)?,
        Scope::Classes(classes) => {
            let p = modulus.ok_or_else(|| Error::MissingPrimeTarget(id.to_string()))?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            match classify_prime(p) {
                Ok(pc) if classes.contains(&pc.r) => {
                    execute(check, Some(&pc), p, &ranges, method)?
                }
                // p = 5, or a prime outside the check's classes.
                _ => skipped_result(check, p),
            }
        }
    };
    Ok(vec![result])
}

/// Sweep configuration. `jobs` > 1 fans (check, target) tasks across
/// threads; the merged report is identical regardless of the job count.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub bound: u64,
    /// Check ids to run; `None` means all.
    pub filter: Option<BTreeSet<String>>,
    pub ranges: AuxRanges,
    pub jobs: usize,
    pub method: FibMethod,
}

impl SweepConfig {
    pub fn new(bound: u64) -> Self {
        Self {
            bound,
            filter: None,
            ranges: AuxRanges::default(),
            jobs: 1,
            method: FibMethod::Doubling,
        }
    }
}

enum Target {
    Prime(PrimeClass),
    Fixed(u64),
    Global,
}

/// Runs every selected check over every qualifying target up to the bound.
pub fn run_sweep(config: &SweepConfig) -> Result<Report> {
    if config.bound < 2 || config.bound > SWEEP_MAX_BOUND {
        return Err(Error::SweepBound(config.bound));
    }
    validate_ranges(&config.ranges)?;
    if config.jobs == 0 {
        return Err(Error::IndexRange {
            what: "job count",
            index: 0,
            max: 1 << 16,
        });
    }

    let selected: Vec<&'static TheoremCheck> = match &config.filter {
        None => CHECKS.iter().collect(),
        Some(ids) => {
            for id in ids {
                find_check(id)?;
            }
            CHECKS.iter().filter(|c| ids.contains(c.id)).collect()
        }
    };

    let classes: Vec<PrimeClass> = primes_up_to(config.bound)
        .into_iter()
        .filter(|&p| p != 5)
        .map(|p| PrimeClass {
            p,
            k: p / 5,
            r: p % 5,
        })
        .collect();

    let mut tasks: Vec<(&'static TheoremCheck, Target)> = Vec::new();
    for check in &selected {
        match check.scope {
            Scope::Global => tasks.push((check, Target::Global)),
            Scope::FixedModulus(m) => {
                if m <= config.bound {
                    tasks.push((check, Target::Fixed(m)));
                }
            }
            Scope::Classes(rs) => {
                for pc in classes.iter().filter(|pc| rs.contains(&pc.r)) {
                    tasks.push((check, Target::Prime(*pc)));
                }
            }
        }
    }

    let run_task = |(check, target): &(&'static TheoremCheck, Target)| -> Result<CheckResult> {
        match target {
            Target::Global => execute(check, None, 0, &config.ranges, config.method),
            Target::Fixed(m) => execute(check, None, *m, &config.ranges, config.method),
            Target::Prime(pc) => execute(check, Some(pc), pc.p, &config.ranges, config.method),
        }
    };

    let mut results: Vec<CheckResult> = if config.jobs == 1 {
        tasks.iter().map(run_task).collect::<Result<Vec<_>>>()?
    } else {
        let cursor = AtomicUsize::new(0);
        let collected: Mutex<Vec<Result<CheckResult>>> = Mutex::new(Vec::with_capacity(tasks.len()));
        std::thread::scope(|scope| {
            for _ in 0..config.jobs.min(tasks.len().max(1)) {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = cursor.fetch_add(1, Ordering::Relaxed);
                        if i >= tasks.len() {
                            break;
                        }
                        local.push(run_task(&tasks[i]));
                    }
                    collected.lock().expect("worker panicked").extend(local);
                });
            }
        });
        collected
            .into_inner()
            .expect("worker panicked")
            .into_iter()
            .collect::<Result<Vec<_>>>()?
    };

    results.sort_by(|a, b| {
        (&a.check, a.modulus, &a.params).cmp(&(&b.check, b.modulus, &b.params))
    });

    let mut summary: BTreeMap<String, Tally> = BTreeMap::new();
    for r in &results {
        let tally = summary.entry(r.check.clone()).or_default();
        match r.verdict {
            Verdict::Pass => tally.pass += 1,
            Verdict::Fail => tally.fail += 1,
            Verdict::Skipped => tally.skipped += 1,
        }
    }

    let expected_of = |id: &str| -> Expectation {
        CHECKS
            .iter()
            .find(|c| c.id == id)
            .map(|c| c.expected)
            .unwrap_or(Expectation::Holds)
    };
    let anomalies: Vec<CheckResult> = results
        .iter()
        .filter(|r| {
            matches!(
                (expected_of(&r.check), r.verdict),
                (Expectation::Holds, Verdict::Fail) | (Expectation::Falsified, Verdict::Pass)
            )
        })
        .cloned()
        .collect();

    let mut filter: Vec<String> = selected.iter().map(|c| c.id.to_string()).collect();
    filter.sort();

    Ok(Report {
        schema_version: 1,
        bound: config.bound,
        filter,
        results,
        summary,
        anomalies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_well_formed() {
        let checks = registry_contents();
        assert!(checks.len() >= 35, "only {} checks registered", checks.len());
        let mut ids = BTreeSet::new();
        for c in checks {
            assert!(ids.insert(c.id), "duplicate id {}", c.id);
        }
        let falsified: Vec<&str> = checks
            .iter()
            .filter(|c| c.expected == Expectation::Falsified)
            .map(|c| c.id)
            .collect();
        assert_eq!(falsified, vec!["p0.1-general"]);
    }

    #[test]
    fn mandatory_ids_present() {
        let want = [
            "p4.1", "p4.2", "p4.3", "p0.3", "t0.4", "t0.4-cor", "t0.6", "t0.6-rem", "c0.8",
            "c0.10", "l0.9", "l0.11", "p3F2F", "p0.14", "p0.14-cor", "p51", "c52", "p52", "p53",
            "p54", "p55", "p0.1", "p0.1-general", "parity", "c32", "p33", "p34", "t1.4", "t17",
            "p1.5", "p1.6", "p1.20", "p1.22", "t57", "t68", "t69", "c610", "c611", "c619",
            "p612", "p613", "p614", "c615", "p615", "p617", "p618", "p620", "p629", "p632",
            "p633", "half.zero", "third.period", "lser.odd", "lser.even", "shift", "n5k3",
            "period.tail",
        ];
        for id in want {
            assert!(find_check(id).is_ok(), "missing id {id}");
        }
    }

    #[test]
    fn run_check_examples() {
        let r = run_check("p4.1", Some(7), None).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].verdict, Verdict::Pass);
        let w = r[0].witness.as_ref().unwrap();
        assert_eq!(w["left"], "6");

        let r = run_check("c52", Some(11), None).unwrap();
        assert_eq!(r[0].verdict, Verdict::Pass);
        assert_eq!(r[0].witness.as_ref().unwrap()["left"], "1");

        let r = run_check("p0.1-general", None, None).unwrap();
        assert_eq!(r[0].verdict, Verdict::Fail);
        let w = r[0].witness.as_ref().unwrap();
        assert_eq!(w["m"], "3");
        assert_eq!(w["left"], "89");
        assert_eq!(w["right"], "104");

        assert!(matches!(
            run_check("nope", None, None),
            Err(Error::UnknownCheck(_))
        ));
        assert!(matches!(
            run_check("p4.1", None, None),
            Err(Error::MissingPrimeTarget(_))
        ));
        let oversized = AuxRanges {
            m_hi: AUX_M_MAX + 1,
            ..AuxRanges::default()
        };
        assert!(run_check("t0.6", Some(7), Some(oversized)).is_err());
        // Out-of-class prime is reported as skipped, not an error.
        let r = run_check("p4.1", Some(11), None).unwrap();
        assert_eq!(r[0].verdict, Verdict::Skipped);
    }

    #[test]
    fn small_sweep_is_clean() {
        let report = run_sweep(&SweepConfig::new(100)).unwrap();
        assert!(report.is_clean(), "anomalies: {:?}", report.anomalies);
        // p0.1-general fails, as recorded.
        assert_eq!(report.summary["p0.1-general"].fail, 1);
        // Every result is sorted by (check, modulus).
        let mut sorted = report.results.clone();
        sorted.sort_by(|a, b| (&a.check, a.modulus, &a.params).cmp(&(&b.check, b.modulus, &b.params)));
        assert_eq!(sorted, report.results);
    }

    #[test]
    fn sweep_determinism_across_jobs() {
        let mut config = SweepConfig::new(300);
        let one = run_sweep(&config).unwrap();
        config.jobs = 8;
        let eight = run_sweep(&config).unwrap();
        assert_eq!(one.to_json(), eight.to_json());
    }

    #[test]
    fn sweep_verdicts_independent_of_fib_engine() {
        let mut config = SweepConfig::new(500);
        let doubling = run_sweep(&config).unwrap();
        config.method = FibMethod::Iterative;
        let iterative = run_sweep(&config).unwrap();
        assert_eq!(doubling, iterative);
    }

    #[test]
    fn sweep_rejects_bad_config() {
        assert!(run_sweep(&SweepConfig::new(SWEEP_MAX_BOUND + 1)).is_err());
        let mut config = SweepConfig::new(100);
        config.ranges.m_hi = AUX_M_MAX + 1;
        assert!(run_sweep(&config).is_err());
        let mut config = SweepConfig::new(100);
        config.filter = Some(BTreeSet::from(["nonexistent".to_string()]));
        assert!(matches!(run_sweep(&config), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn ranged_checks_report_nonempty_effective_spans() {
        // p = 7 (k = 1): the smallest class-2 prime with k >= 1; every
        // ranged family must sweep at least one instance there.
        let r = run_check("lser.odd", Some(7), None).unwrap();
        assert_eq!(r[0].verdict, Verdict::Pass);
        assert_eq!((r[0].params["l_lo"], r[0].params["l_hi"]), (1, 2));
        let r = run_check("shift", Some(7), None).unwrap();
        assert_eq!((r[0].params["n_lo"], r[0].params["n_hi"]), (0, 24));
        let r = run_check("p629", Some(7), None).unwrap();
        assert_eq!((r[0].params["m_lo"], r[0].params["m_hi"]), (0, 5));
        let r = run_check("t0.6", Some(7), None).unwrap();
        assert_eq!((r[0].params["m_lo"], r[0].params["m_hi"]), (2, 20));
        assert_eq!((r[0].params["r_lo"], r[0].params["r_hi"]), (1, 6));
    }

    #[test]
    fn sweep_honors_m_range_override() {
        let mut config = SweepConfig::new(50);
        config.filter = Some(BTreeSet::from(["t0.6".to_string()]));
        config.ranges.m_hi = 5;
        let report = run_sweep(&config).unwrap();
        assert!(report.is_clean());
        // Class-2 primes up to 50: 2 is skipped, 7/17/37/47 pass.
        assert_eq!(report.summary["t0.6"].pass, 4);
        assert_eq!(report.summary["t0.6"].skipped, 1);
        let at7 = report.results.iter().find(|r| r.modulus == 7).unwrap();
        assert_eq!(at7.params["m_hi"], 5);
        assert_eq!(at7.params["r_hi"], 6);
    }

    #[test]
    fn filtered_sweep_touches_only_selected_checks() {
        let mut config = SweepConfig::new(100);
        config.filter = Some(BTreeSet::from(["p4.1".to_string(), "p612".to_string()]));
        let report = run_sweep(&config).unwrap();
        assert!(report
            .results
            .iter()
            .all(|r| r.check == "p4.1" || r.check == "p612"));
        assert_eq!(report.filter, vec!["p4.1", "p612"]);
        // Class-2 primes up to 100: 2 (skipped), 7, 17, 37, 47, 67, 97.
        assert_eq!(report.summary["p4.1"].pass, 6);
        assert_eq!(report.summary["p4.1"].skipped, 1);
    }
}
