//! Fibonacci numbers four ways.
//!
//! The linear iterator is the dumb oracle everything else is judged
//! against. Fast doubling serves the large-index modular paths. The
//! binomial-sum routes evaluate `2^(n-1) F_n = sum C(n, 2l+1) 5^l`, once
//! exactly over big integers and once modulo an odd modulus, giving an
//! algebraic route entirely independent of the recurrence-based ones.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{addmod, check_modulus, inv_mod, mulmod, powmod, submod};
use crate::error::{Error, Result};

/// Largest index the linear-time oracle will walk.
pub const FIB_ITER_MAX: u64 = 10_000_000;
/// Largest index accepted by the doubling path (full 62-bit range).
pub const FIB_DOUBLE_MAX: u64 = (1 << 62) - 1;
/// Size guard for exact big-integer values.
pub const FIB_EXACT_MAX: u64 = 100_000;
/// Cost guard for the exact binomial sum.
pub const FIB_BINOMIAL_EXACT_MAX: u64 = 3_000;
/// Cost guard for the modular binomial sum.
pub const FIB_BINOMIAL_MOD_MAX: u64 = 1_000_000;

/// Consecutive Fibonacci values `(F_n, F_{n+1})` modulo `modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FibPair {
    pub n: u64,
    pub modulus: u64,
    pub f_n: u64,
    pub f_n1: u64,
}

/// An exact Fibonacci value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFib {
    pub n: u64,
    pub value: BigUint,
}

/// Which modular pair engine to use. Sweeps default to doubling; the
/// iterative oracle is swappable in so verdicts can be shown independent
/// of the fast path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FibMethod {
    #[default]
    Doubling,
    Iterative,
}

impl FibMethod {
    pub fn pair(self, n: u64, m: u64) -> Result<FibPair> {
        match self {
            FibMethod::Doubling => fib_double_mod(n, m),
            FibMethod::Iterative => fib_iter_mod(n, m),
        }
    }
}

/// `(F_n, F_{n+1}) mod m` by direct iteration. Reference oracle.
pub fn fib_iter_mod(n: u64, m: u64) -> Result<FibPair> {
    check_modulus(m)?;
    if n > FIB_ITER_MAX {
        return Err(Error::IndexRange {
            what: "iterative Fibonacci",
            index: n,
            max: FIB_ITER_MAX,
        });
    }
    let (mut a, mut b) = (0u64, 1 % m);
    for _ in 0..n {
        (a, b) = (b, addmod(a, b, m));
    }
    Ok(FibPair {
        n,
        modulus: m,
        f_n: a,
        f_n1: b,
    })
}

/// `(F_n, F_{n+1}) mod m` by binary doubling:
/// `F_{2j} = F_j (2 F_{j+1} - F_j)` and `F_{2j+1} = F_j^2 + F_{j+1}^2`,
/// with `F_{j-1}` recovered as `F_{j+1} - F_j` so the state stays two wide.
pub fn fib_double_mod(n: u64, m: u64) -> Result<FibPair> {
    check_modulus(m)?;
    if n > FIB_DOUBLE_MAX {
        return Err(Error::IndexRange {
            what: "doubling Fibonacci",
            index: n,
            max: FIB_DOUBLE_MAX,
        });
    }
    let (mut a, mut b) = (0u64, 1 % m); // (F_0, F_1)
    for i in (0..u64::BITS - n.leading_zeros()).rev() {
        let even = mulmod(a, submod(addmod(b, b, m), a, m), m);
        let odd = addmod(mulmod(a, a, m), mulmod(b, b, m), m);
        if (n >> i) & 1 == 0 {
            (a, b) = (even, odd);
        } else {
            (a, b) = (odd, addmod(even, odd, m));
        }
    }
    Ok(FibPair {
        n,
        modulus: m,
        f_n: a,
        f_n1: b,
    })
}

/// Exact `F_n`.
pub fn fib_exact(n: u64) -> Result<BigFib> {
    if n > FIB_EXACT_MAX {
        return Err(Error::IndexRange {
            what: "exact Fibonacci",
            index: n,
            max: FIB_EXACT_MAX,
        });
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(BigFib { n, value: a })
}

/// Exact `F_n` through the binomial sum: computes
/// `S = sum_{l} C(n, 2l+1) 5^l`, asserts `2^(n-1)` divides `S`, and
/// returns the quotient. The divisibility assertion makes the formula
/// self-checking; a failure means broken arithmetic, not bad input.
pub fn fib_binomial_exact(n: u64) -> Result<BigFib> {
    if !(1..=FIB_BINOMIAL_EXACT_MAX).contains(&n) {
        return Err(Error::IndexRange {
            what: "binomial-sum Fibonacci",
            index: n,
            max: FIB_BINOMIAL_EXACT_MAX,
        });
    }
    let mut sum = BigUint::zero();
    let mut binom = BigUint::from(n); // C(n, 1)
    let mut pow5 = BigUint::one();
    let mut j = 1u64; // odd lower index
    while j <= n {
        sum += &binom * &pow5;
        if j + 2 > n {
            break;
        }
        // C(n, j+2) from C(n, j); the division is exact.
        binom = binom * ((n - j) * (n - j - 1)) / ((j + 1) * (j + 2));
        pow5 *= 5u32;
        j += 2;
    }
    let shift = n - 1;
    if sum.trailing_zeros().unwrap_or(0) < shift {
        return Err(Error::BinomialSumIndivisible { n, e: shift });
    }
    Ok(BigFib {
        n,
        value: sum >> shift,
    })
}

/// `F_n mod m` for odd `m` through the binomial sum. The even/odd column
/// sums `E = sum C(n, 2l) 5^l` and `T = sum C(n, 2l+1) 5^l` obey
/// `E' = E + 5T`, `T' = E + T` row to row, which evaluates `T mod m`
/// without any division; the final step multiplies by `2^-(n-1)`.
pub fn fib_binomial_mod(n: u64, m: u64) -> Result<u64> {
    check_modulus(m)?;
    if m.is_multiple_of(2) {
        return Err(Error::EvenModulus(m));
    }
    if n > FIB_BINOMIAL_MOD_MAX {
        return Err(Error::IndexRange {
            what: "modular binomial-sum Fibonacci",
            index: n,
            max: FIB_BINOMIAL_MOD_MAX,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let five = 5 % m;
    let (mut even, mut odd) = (1 % m, 0u64);
    for _ in 0..n {
        (even, odd) = (addmod(even, mulmod(five, odd, m), m), addmod(even, odd, m));
    }
    let halving = inv_mod(powmod(2, n - 1, m), m)?;
    Ok(mulmod(odd, halving, m))
}

/// Addition law `F_{k+l} = F_l F_{k+1} + F_{l-1} F_k` on two pairs with a
/// shared modulus, yielding the pair at index `k + l`. `F_{l-1}` comes
/// from the stored pair as `F_{l+1} - F_l`, so an index-0 pair acts as
/// the identity.
pub fn fib_combine(x: &FibPair, y: &FibPair) -> Result<FibPair> {
    if x.modulus != y.modulus {
        return Err(Error::ModulusMismatch(x.modulus, y.modulus));
    }
    let m = x.modulus;
    let n = x
        .n
        .checked_add(y.n)
        .filter(|&s| s <= FIB_DOUBLE_MAX)
        .ok_or(Error::IndexOverflow(x.n, y.n))?;
    let y_prev = submod(y.f_n1, y.f_n, m); // F_{l-1}
    let f_n = addmod(mulmod(y.f_n, x.f_n1, m), mulmod(y_prev, x.f_n, m), m);
    let f_n1 = addmod(mulmod(y.f_n1, x.f_n1, m), mulmod(y.f_n, x.f_n, m), m);
    Ok(FibPair {
        n,
        modulus: m,
        f_n,
        f_n1,
    })
}

/// `F_{-n} = (-1)^(n+1) F_n`, the unique signed extension under which the
/// recurrence `F_{j+2} = F_j + F_{j+1}` keeps holding across zero.
pub fn fib_neg(n: u64) -> Result<BigInt> {
    let f = BigInt::from(fib_exact(n)?.value);
    Ok(if n.is_multiple_of(2) { -f } else { f })
}

/// First `count` residues `F_0, ..., F_{count-1}` modulo `m`.
/// Linear scratch space for the range-style congruence checks.
pub(crate) fn fib_residues(m: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (0u64, 1 % m);
    for _ in 0..count {
        out.push(a);
        (a, b) = (b, addmod(a, b, m));
    }
    out
}
