//! Legendre symbols by three independent routes.
//!
//! The Euler criterion, Gauss's counting lemma, and a reciprocity-based
//! recursion are implemented separately and never call into each other,
//! so they can cross-check one another. A fourth evaluator specializes
//! `(5/p)` to the residue class of `p` modulo 5.

use crate::arith::{addmod, is_prime, powmod, PrimeClass};
use crate::error::{Error, Result};

/// A Legendre symbol value. Inputs sharing a factor with the modulus are
/// rejected before one of these is ever constructed, so 0 has no
/// representation here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendreValue {
    Residue,
    NonResidue,
}

impl LegendreValue {
    pub fn value(self) -> i64 {
        match self {
            LegendreValue::Residue => 1,
            LegendreValue::NonResidue => -1,
        }
    }

    fn from_sign(negative: bool) -> Self {
        if negative {
            LegendreValue::NonResidue
        } else {
            LegendreValue::Residue
        }
    }
}

impl std::fmt::Display for LegendreValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// Reduces `a` into `[0, p)` and rejects multiples of `p`.
fn reduce_coprime(a: i64, p: u64) -> Result<u64> {
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return Err(Error::SharedFactor {
            a: a.unsigned_abs(),
            p,
        });
    }
    Ok(r)
}

/// Euler criterion: `(a/p) = a^((p-1)/2) (mod p)`.
///
/// A power that is neither `1` nor `p - 1` is impossible for prime `p`
/// and reported as a contradiction rather than mapped to a sign.
pub fn legendre_euler(a: i64, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    let a = reduce_coprime(a, p)?;
    let pow = powmod(a, (p - 1) / 2, p);
    if pow == 1 {
        Ok(LegendreValue::Residue)
    } else if pow == p - 1 {
        Ok(LegendreValue::NonResidue)
    } else {
        Err(Error::EulerContradiction { a, p, got: pow })
    }
}

/// Gauss's lemma: `(a/p) = (-1)^n` where `n` counts the multiples
/// `a, 2a, ..., ((p-1)/2) a` whose residue mod `p` exceeds `p/2`.
pub fn legendre_gauss(a: i64, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    let a = reduce_coprime(a, p)?;
    let mut residue = 0u64;
    let mut exceeding = 0u64;
    for _ in 0..(p - 1) / 2 {
        residue = addmod(residue, a, p);
        if 2 * residue > p {
            exceeding += 1;
        }
    }
    Ok(LegendreValue::from_sign(exceeding % 2 == 1))
}

/// Reciprocity route, using only four rules: reduction of the upper
/// argument, the `(2/p)` evaluation by `p mod 8`, multiplicativity to
/// strip factors of two, and the reciprocity flip with its sign rule.
/// Deliberately no Euler shortcut anywhere: this is the cross-check
/// target for `legendre_euler`.
pub fn legendre_reciprocity(a: i64, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    let mut a = reduce_coprime(a, p)?;
    let mut p = p;
    let mut negative = false;
    while a != 1 {
        // Strip factors of two: (2/p) = 1 iff p = ±1 (mod 8).
        while a % 2 == 0 {
            a /= 2;
            if matches!(p % 8, 3 | 5) {
                negative = !negative;
            }
        }
        if a == 1 {
            break;
        }
        // Flip (a/p) to (p mod a / a); sign changes iff both are 3 mod 4.
        if a % 4 == 3 && p % 4 == 3 {
            negative = !negative;
        }
        let next = p % a;
        p = a;
        a = next;
    }
    Ok(LegendreValue::from_sign(negative))
}

/// `(5/p)` read off the residue class: `+1` for `r` in `{1, 4}`,
/// `-1` for `r` in `{2, 3}`.
pub fn legendre_5_by_class(pc: &PrimeClass) -> LegendreValue {
    LegendreValue::from_sign(matches!(pc.r, 2 | 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{classify_prime, primes_up_to};

    #[test]
    fn euler_examples() {
        assert_eq!(legendre_euler(5, 7).unwrap().value(), -1);
        assert_eq!(legendre_euler(2, 5).unwrap().value(), -1);
        // Squares are residues.
        for a in 1..13i64 {
            assert_eq!(legendre_euler(a * a, 13).unwrap().value(), 1);
        }
    }

    #[test]
    fn gauss_examples() {
        // Multiples of 5 mod 7 are {5, 3, 1}; exactly one exceeds 7/2.
        assert_eq!(legendre_gauss(5, 7).unwrap().value(), -1);
        assert_eq!(legendre_gauss(2, 5).unwrap().value(), -1);
        for p in [3u64, 7, 11, 101] {
            assert_eq!(legendre_gauss(1, p).unwrap().value(), 1);
        }
    }

    #[test]
    fn reciprocity_examples() {
        assert_eq!(legendre_reciprocity(4, 5).unwrap().value(), 1);
        assert_eq!(
            legendre_reciprocity(3, 7).unwrap(),
            legendre_euler(3, 7).unwrap()
        );
        for pc in crate::arith::primes_in_class(2, 10_000).unwrap() {
            if pc.p == 2 {
                continue;
            }
            assert_eq!(
                legendre_reciprocity(5, pc.p).unwrap().value(),
                -1,
                "(5/{}) should be -1",
                pc.p
            );
        }
    }

    #[test]
    fn negative_upper_argument_reduces_first() {
        // (-1/p) = 1 iff p = 1 (mod 4).
        for p in primes_up_to(500) {
            if p < 3 {
                continue;
            }
            let expected = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(legendre_euler(-1, p).unwrap().value(), expected);
            assert_eq!(legendre_reciprocity(-1, p).unwrap().value(), expected);
            assert_eq!(legendre_gauss(-1, p).unwrap().value(), expected);
        }
    }

    #[test]
    fn three_routes_agree_small() {
        for p in primes_up_to(200) {
            if p < 3 {
                continue;
            }
            for a in 1..p {
                let e = legendre_euler(a as i64, p).unwrap();
                assert_eq!(e, legendre_gauss(a as i64, p).unwrap(), "gauss at ({a}/{p})");
                assert_eq!(
                    e,
                    legendre_reciprocity(a as i64, p).unwrap(),
                    "reciprocity at ({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn class_law_matches_euler() {
        for p in primes_up_to(10_000) {
            if p == 2 || p == 5 {
                continue;
            }
            let pc = classify_prime(p).unwrap();
            assert_eq!(
                legendre_5_by_class(&pc),
                legendre_euler(5, p).unwrap(),
                "class law fails at {p}"
            );
        }
    }

    #[test]
    fn exponent_law_by_class() {
        for p in primes_up_to(10_000) {
            if p == 2 || p == 5 {
                continue;
            }
            let pc = classify_prime(p).unwrap();
            let pow = crate::arith::pow_mod(5, (p - 1) / 2, p).unwrap();
            if matches!(pc.r, 1 | 4) {
                assert_eq!(pow, 1, "5^((p-1)/2) at {p}");
            } else {
                assert_eq!(pow, p - 1, "5^((p-1)/2) at {p}");
            }
        }
    }

    #[test]
    fn shared_factor_is_rejected() {
        assert_eq!(
            legendre_euler(14, 7),
            Err(Error::SharedFactor { a: 14, p: 7 })
        );
        assert_eq!(legendre_gauss(0, 5), Err(Error::SharedFactor { a: 0, p: 5 }));
        assert_eq!(
            legendre_reciprocity(-21, 7),
            Err(Error::SharedFactor { a: 21, p: 7 })
        );
        assert_eq!(legendre_euler(3, 9), Err(Error::NotOddPrime(9)));
        assert_eq!(legendre_euler(3, 2), Err(Error::NotOddPrime(2)));
    }
}
