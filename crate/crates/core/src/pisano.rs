//! Periods of the Fibonacci sequence modulo an integer.
//!
//! A positive `ell` is a period modulo `m` when `F_{ell+1} = F_{ell+2} = 1
//! (mod m)`. The minimal-period scan below iterates the pair sequence
//! directly: it is the oracle everything else is judged against, so it
//! stays dumb and obviously correct. Candidate periods predicted for a
//! prime's residue class are verified with the logarithmic doubling engine.

use crate::arith::{addmod, check_modulus, PrimeClass};
use crate::error::{Error, Result};
use crate::fib::{fib_double_mod, fib_residues, FibMethod};
use crate::verdict::RangeOutcome;

/// Iteration bound for the linear period/rank scans.
pub const PISANO_MAX_MODULUS: u64 = 10_000_000;

fn check_scan_modulus(m: u64) -> Result<()> {
    check_modulus(m)?;
    if m > PISANO_MAX_MODULUS {
        return Err(Error::IndexRange {
            what: "period scan modulus",
            index: m,
            max: PISANO_MAX_MODULUS,
        });
    }
    Ok(())
}

/// Is `ell` a period of the Fibonacci sequence modulo `m`?
///
/// Zero is never a period; the definition demands a nonzero witness.
pub fn is_period(m: u64, ell: u64) -> Result<bool> {
    is_period_with(FibMethod::Doubling, m, ell)
}

pub(crate) fn is_period_with(method: FibMethod, m: u64, ell: u64) -> Result<bool> {
    check_modulus(m)?;
    if ell == 0 {
        return Ok(false);
    }
    let pair = method.pair(ell + 1, m)?;
    Ok(pair.f_n == 1 % m && pair.f_n1 == 1 % m)
}

/// Least positive period modulo `m`, by scanning the pair sequence until
/// `(F_{ell+1}, F_{ell+2})` returns to `(1, 1)`.
pub fn minimal_period(m: u64) -> Result<u64> {
    check_scan_modulus(m)?;
    let one = 1 % m;
    let (mut a, mut b) = (one, one); // (F_1, F_2)
    let mut ell = 0u64;
    loop {
        (a, b) = (b, addmod(a, b, m));
        ell += 1;
        if a == one && b == one {
            return Ok(ell);
        }
    }
}

/// Least `n >= 1` with `F_n = 0 (mod m)`.
pub fn rank_of_apparition(m: u64) -> Result<u64> {
    check_scan_modulus(m)?;
    let (mut a, mut b) = (1 % m, 1 % m); // (F_1, F_2)
    let mut n = 1u64;
    while a != 0 {
        (a, b) = (b, addmod(a, b, m));
        n += 1;
    }
    Ok(n)
}

/// Residues `(F_ell, F_{ell-1}, F_{ell-2})` behind a period's tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailCheck {
    pub f_ell: u64,
    pub f_prev: u64,
    pub f_prev2: u64,
    pub holds: bool,
}

/// At any period `ell >= 3`: `F_ell = 0`, `F_{ell-1} = 1`, and
/// `F_{ell-2} = m - 1 (mod m)`.
pub fn verify_period_tail(m: u64, ell: u64) -> Result<TailCheck> {
    if ell < 3 {
        // No smaller ell can be a period anyway: F_3 = 2 and F_4 = 3
        // cannot both be 1 modulo any m >= 2.
        return Err(Error::PeriodTooShort { m, ell });
    }
    if !is_period(m, ell)? {
        return Err(Error::NotAPeriod { m, ell });
    }
    let pair = fib_double_mod(ell - 2, m)?;
    let (f_prev2, f_prev) = (pair.f_n, pair.f_n1);
    let f_ell = addmod(f_prev2, f_prev, m);
    Ok(TailCheck {
        f_ell,
        f_prev,
        f_prev2,
        holds: f_ell == 0 && f_prev == 1 % m && f_prev2 == m - 1,
    })
}

/// A period value predicted for a prime's residue class, tagged with the
/// ids of every statement that predicts it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodCandidate {
    pub value: u64,
    pub sources: Vec<&'static str>,
    pub verified: bool,
}

/// The closed-form period candidates for `p = 5k + r`:
/// `2(p-1)` and `p-1` when `r` is 1 or 4, `2(p+1)` when `r` is 2 or 3.
/// With `verify` set, each candidate is confirmed through `is_period`.
pub fn predicted_periods(pc: &PrimeClass, verify: bool) -> Result<Vec<PeriodCandidate>> {
    let (p, k, r) = (pc.p, pc.k, pc.r);
    let mut out = match r {
        1 => vec![
            (2 * (p - 1), vec!["t69", "c610", "c611"]),
            (p - 1, vec!["p617", "c619"]),
        ],
        4 => vec![
            (2 * (p - 1), vec!["t69", "c610", "c611"]),
            (p - 1, vec!["p618", "c619"]),
        ],
        2 if k % 2 == 1 => vec![(2 * (p + 1), vec!["t57", "t68", "c610", "c611", "c619"])],
        2 => vec![(2 * (p + 1), vec!["c611", "c619"])],
        _ => vec![(2 * (p + 1), vec!["t68", "c610", "c611", "c619"])],
    };
    // Largest candidate first, matching the order the ids were derived in.
    out.sort_by_key(|c| std::cmp::Reverse(c.0));
    let mut candidates = Vec::with_capacity(out.len());
    for (value, sources) in out {
        let verified = if verify { is_period(p, value)? } else { false };
        candidates.push(PeriodCandidate {
            value,
            sources,
            verified,
        });
    }
    Ok(candidates)
}

/// Period facts for one modulus: the minimal period, the rank of
/// apparition, and (for primes other than 5, on request) the class
/// candidates with their verification status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodRecord {
    pub modulus: u64,
    pub minimal_period: u64,
    pub rank_of_apparition: u64,
    pub candidates: Vec<PeriodCandidate>,
}

pub fn period_record(m: u64, with_candidates: bool) -> Result<PeriodRecord> {
    let minimal = minimal_period(m)?;
    let rank = rank_of_apparition(m)?;
    let candidates = if with_candidates {
        match crate::arith::classify_prime(m) {
            Ok(pc) => predicted_periods(&pc, true)?,
            Err(_) => Vec::new(),
        }
    } else {
        Vec::new()
    };
    Ok(PeriodRecord {
        modulus: m,
        minimal_period: minimal,
        rank_of_apparition: rank,
        candidates,
    })
}

/// The reflection congruence for `p = 5k + r`, checked for every
/// `m` in `0..=5k`:
///
/// - `r = 1`: `F_{5k-m} = (-1)^(m+1) F_m       (mod p)`
/// - `r = 2`: `F_{5k-m} = (-1)^(m+1) F_{m+3}   (mod p)`
/// - `r = 3`: `F_{5k-m} = (-1)^m     F_{m+4}   (mod p)`
/// - `r = 4`: `F_{5k-m} = (-1)^m     F_{m+3}   (mod p)`
pub fn reflection_check(pc: &PrimeClass) -> Result<RangeOutcome> {
    let (p, k, r) = (pc.p, pc.k, pc.r);
    if k == 0 {
        return Err(Error::HypothesisNotMet {
            check: "reflection congruence",
            p,
        });
    }
    let (offset, neg_on_even) = match r {
        1 => (0u64, true),
        2 => (3, true),
        3 => (4, false),
        _ => (3, false),
    };
    let fibv = fib_residues(p, (5 * k + offset + 1) as usize);
    Ok(RangeOutcome::sweep(0..=5 * k, |m| {
        let lhs = fibv[(5 * k - m) as usize];
        let raw = fibv[(m + offset) as usize];
        let negate = (m % 2 == 0) == neg_on_even;
        let rhs = if negate { (p - raw) % p } else { raw };
        (lhs, rhs)
    }))
}

/// Outcome of a half-period zero check; skipped when the class-specific
/// congruence on `k` does not hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPeriodOutcome {
    Skipped,
    Evaluated { index: u64, residue: u64 },
}

impl HalfPeriodOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            HalfPeriodOutcome::Skipped => None,
            HalfPeriodOutcome::Evaluated { residue, .. } => Some(*residue == 0),
        }
    }
}

/// Zero of the sequence at the characteristic half index:
///
/// - `r = 1`, `k = 0 (mod 4)`: `F_{5k/2}     = 0 (mod p)`
/// - `r = 2`, `k = 3 (mod 4)`: `F_{(5k+3)/2} = 0 (mod p)`
/// - `r = 3`, `k = 2 (mod 4)`: `F_{(5k+4)/2} = 0 (mod p)`
/// - `r = 4`, `k = 1 (mod 4)`: `F_{(5k+3)/2} = 0 (mod p)`
pub fn half_period_zero_check(pc: &PrimeClass) -> Result<HalfPeriodOutcome> {
    let (p, k, r) = (pc.p, pc.k, pc.r);
    let index = match r {
        1 if k > 0 && k % 4 == 0 => 5 * k / 2,
        2 if k % 4 == 3 => (5 * k + 3) / 2,
        3 if k > 0 && k % 4 == 2 => (5 * k + 4) / 2,
        4 if k % 4 == 1 => (5 * k + 3) / 2,
        _ => return Ok(HalfPeriodOutcome::Skipped),
    };
    let residue = fib_double_mod(index, p)?.f_n;
    Ok(HalfPeriodOutcome::Evaluated { index, residue })
}

/// Everything observable about the third-period situation at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThirdPeriodEvidence {
    /// The candidate `2(p+1)/3`.
    pub two_thirds: u64,
    /// Whether `2(p+1)/3` is a period of the sequence mod `p`.
    pub is_period: bool,
    /// `F_{(p+1)/3} = 0 (mod p)`.
    pub zero_at_third: bool,
    /// `F_{(p-2)/3} = -1 (mod p)`.
    pub minus_one_at_third: bool,
    /// `F_{p+1} = 0 (mod p)`.
    pub zero_at_full: bool,
    /// `F_{2(p+1)/3} = 0 (mod p)`.
    pub zero_at_two_thirds: bool,
}

impl ThirdPeriodEvidence {
    /// The claimed structure: when `F_{(p+1)/3} = 0`, the candidate is a
    /// period exactly when `F_{(p-2)/3} = -1`; and whenever the candidate
    /// is a period, the three zero statements agree.
    pub fn holds(&self) -> bool {
        let first = !self.zero_at_third || (self.is_period == self.minus_one_at_third);
        let second = !self.is_period
            || (self.zero_at_full == self.zero_at_third
                && self.zero_at_third == self.zero_at_two_thirds);
        first && second
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThirdPeriodOutcome {
    Skipped,
    Evaluated(ThirdPeriodEvidence),
}

/// Third-period biconditional for `r = 2` with `3 | k`, and `r = 3` with
/// `k = 1 (mod 3)`; anything else is reported as skipped.
pub fn third_period_check(pc: &PrimeClass) -> Result<ThirdPeriodOutcome> {
    let (p, k, r) = (pc.p, pc.k, pc.r);
    let applicable = (r == 2 && k > 0 && k % 3 == 0) || (r == 3 && k % 3 == 1);
    if !applicable {
        return Ok(ThirdPeriodOutcome::Skipped);
    }
    debug_assert_eq!((p + 1) % 3, 0);
    let third = (p + 1) / 3;
    let two_thirds = 2 * third;
    let residue_at = |n: u64| -> Result<u64> { Ok(fib_double_mod(n, p)?.f_n) };
    Ok(ThirdPeriodOutcome::Evaluated(ThirdPeriodEvidence {
        two_thirds,
        is_period: is_period(p, two_thirds)?,
        zero_at_third: residue_at(third)? == 0,
        minus_one_at_third: residue_at((p - 2) / 3)? == p - 1,
        zero_at_full: residue_at(p + 1)? == 0,
        zero_at_two_thirds: residue_at(two_thirds)? == 0,
    }))
}

/// Predicted residues of `(F_{5k+1}, F_{5k+2}, F_{5k+3}, F_{5k+4})`
/// modulo 5, determined by `k mod 4`.
pub fn mod5_residue_table(k: u64) -> [u64; 4] {
    match k % 4 {
        0 => [1, 1, 2, 3],
        1 => [3, 3, 1, 4],
        2 => [4, 4, 3, 2],
        _ => [2, 2, 4, 1],
    }
}
