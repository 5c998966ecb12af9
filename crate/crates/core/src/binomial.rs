//! Binomial coefficients modulo a prime and the row congruences they
//! satisfy for primes `5k + r`.
//!
//! Everything here keeps the top index strictly below the modulus; that is
//! the only regime the row congruences live in, and refusing anything
//! larger is safer than silently switching to a different reduction rule.

use crate::arith::{inv_mod, is_prime, mulmod, powmod, PrimeClass};
use crate::error::{Error, Result};
use crate::verdict::RangeOutcome;

/// A single binomial evaluation request `C(n, j) mod p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomQuery {
    n: u64,
    j: u64,
    p: u64,
}

impl BinomQuery {
    pub fn new(n: u64, j: u64, p: u64) -> Result<Self> {
        if j > n {
            return Err(Error::BinomialIndex { n, j });
        }
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Self { n, j, p })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// `C(n, j) mod p` by the multiplicative formula: the partial products
/// of `(n-j+i)/i` stay integral, so numerator and denominator are
/// accumulated separately and divided once at the end.
pub fn binom_mod(q: &BinomQuery) -> Result<u64> {
    let (n, j, p) = (q.n, q.j, q.p);
    if n >= p {
        return Err(Error::BinomialRow { n, p });
    }
    let j = j.min(n - j);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..=j {
        num = mulmod(num, (n - j + i) % p, p);
        den = mulmod(den, i % p, p);
    }
    Ok(mulmod(num, inv_mod(den, p)?, p))
}

/// Factorial table for walking whole rows mod `p` in O(row) time.
/// Indices above the row length give 0, matching the usual convention.
pub(crate) struct BinomRow {
    p: u64,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl BinomRow {
    /// Table for `C(n, _) mod p` with `n < p`.
    pub(crate) fn new(n: u64, p: u64) -> Self {
        debug_assert!(n < p);
        let len = (n + 1) as usize;
        let mut fact = vec![1u64; len];
        for i in 1..len {
            fact[i] = mulmod(fact[i - 1], i as u64 % p, p);
        }
        let mut inv_fact = vec![1u64; len];
        inv_fact[len - 1] = powmod(fact[len - 1], p - 2, p);
        for i in (1..len).rev() {
            inv_fact[i - 1] = mulmod(inv_fact[i], i as u64 % p, p);
        }
        Self { p, fact, inv_fact }
    }

    pub(crate) fn binom(&self, n: u64, j: u64) -> u64 {
        if j > n {
            return 0;
        }
        let c = mulmod(self.fact[n as usize], self.inv_fact[j as usize], self.p);
        mulmod(c, self.inv_fact[(n - j) as usize], self.p)
    }
}

/// Walks `C(row, 2l+1) mod p` for `l` in `0..=l_max`, comparing against
/// `expected(l)`; reports the first mismatch.
pub(crate) fn verify_odd_entries(
    p: u64,
    row: u64,
    l_max: u64,
    expected: impl Fn(u64) -> u64,
) -> RangeOutcome {
    let table = BinomRow::new(row.min(p - 1), p);
    RangeOutcome::sweep(0..=l_max, |l| {
        (table.binom(row, 2 * l + 1), expected(l))
    })
}

/// Checks `C(p-1, 2l+1) = -1 (mod p)` across the full row, for primes
/// `p = 5k + r` with `k = r + 1 (mod 2)`.
pub fn check_binom_odd_row(pc: &PrimeClass) -> Result<RangeOutcome> {
    let (p, k, r) = (pc.p, pc.k, pc.r);
    if !is_prime(p) || k % 2 != (r + 1) % 2 {
        return Err(Error::HypothesisNotMet {
            check: "odd-entry row congruence",
            p,
        });
    }
    let l_max = (5 * k + r - 2) / 2;
    Ok(verify_odd_entries(p, p - 1, l_max, |_| p - 1))
}

/// Checks `C(p-2, 2l+1) = -2(l+1) (mod p)` across the row, for primes
/// `p = 5k + r >= 7` with `k = r + 1 (mod 2)`.
pub fn check_binom_next_row(pc: &PrimeClass) -> Result<RangeOutcome> {
    let (p, k, r) = (pc.p, pc.k, pc.r);
    if p < 7 || !is_prime(p) || k % 2 != (r + 1) % 2 {
        return Err(Error::HypothesisNotMet {
            check: "penultimate-row congruence",
            p,
        });
    }
    let l_max = (5 * k + r - 3) / 2;
    Ok(verify_odd_entries(p, p - 2, l_max, |l| p - 2 * (l + 1)))
}
