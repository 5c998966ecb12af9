//! Exact integer and modular arithmetic.
//!
//! All congruence work in this crate funnels through the helpers here:
//! overflow-free modular multiply/power for moduli up to 2^62, extended
//! gcd with an explicit Bezout witness, the constructive splitting of a
//! congruence `m*a = n*b (mod p)` into `a = n*c`, `b = m*c`, deterministic
//! primality, and the decomposition of primes as `5k + r`.

use crate::error::{Error, Result};

/// Largest supported modulus. Products of two reduced residues fit in a
/// `u128` with room to spare; anything larger is rejected loudly.
pub const MAX_MODULUS: u64 = 1 << 62;

pub(crate) fn check_modulus(m: u64) -> Result<()> {
    if !(2..=MAX_MODULUS).contains(&m) {
        return Err(Error::ModulusRange(m));
    }
    Ok(())
}

/// `(a * b) mod m` without validation. Callers guarantee `m <= 2^62`.
#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `(a + b) mod m` for already-reduced operands.
#[inline]
pub(crate) fn addmod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// `(a - b) mod m` for already-reduced operands.
#[inline]
pub(crate) fn submod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub(crate) fn powmod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut base = b % m;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Exact `(a * b) mod m` for `2 <= m <= 2^62`.
pub fn mul_mod(a: u64, b: u64, m: u64) -> Result<u64> {
    check_modulus(m)?;
    Ok(mulmod(a % m, b % m, m))
}

/// Exact `b^e mod m` in O(log e) multiplications.
pub fn pow_mod(b: u64, e: u64, m: u64) -> Result<u64> {
    check_modulus(m)?;
    Ok(powmod(b, e, m))
}

/// A value reduced into `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `value` modulo `modulus`.
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Outcome of the extended Euclidean algorithm on `(m, n)`:
/// `u*m + v*n = g = gcd(|m|, |n|) > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutWitness {
    pub g: u64,
    pub u: i64,
    pub v: i64,
}

impl BezoutWitness {
    /// Checks `u*m + v*n == g` against the inputs it was derived from.
    pub fn verifies(&self, m: i64, n: i64) -> bool {
        let lhs = self.u as i128 * m as i128 + self.v as i128 * n as i128;
        lhs == self.g as i128
    }
}

/// Extended gcd with explicit coefficients. `g` is always positive;
/// `u`, `v` may be negative.
pub fn ext_gcd(m: i64, n: i64) -> Result<BezoutWitness> {
    if m == 0 && n == 0 {
        return Err(Error::ZeroGcdPair);
    }
    // Iterate on absolute values, then fix signs at the end.
    let (mut r0, mut r1) = (m.unsigned_abs() as i128, n.unsigned_abs() as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    let u = if m < 0 { -s0 } else { s0 };
    let v = if n < 0 { -t0 } else { t0 };
    debug_assert!(u * m as i128 + v * n as i128 == r0);
    Ok(BezoutWitness {
        g: r0 as u64,
        u: u as i64,
        v: v as i64,
    })
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn inv_mod(a: u64, m: u64) -> Result<u64> {
    check_modulus(m)?;
    let a = a % m;
    let w = ext_gcd(a as i64, m as i64)?;
    if w.g != 1 {
        return Err(Error::NotInvertible { a, m });
    }
    Ok((w.u as i128).rem_euclid(m as i128) as u64)
}

/// Given coprime `m`, `n` and a congruence `m*a = n*b (mod p)`, produces the
/// witness `c = u*b + v*a (mod p)` (where `u*m + v*n = 1`) satisfying
/// `a = n*c (mod p)` and `b = m*c (mod p)`.
pub fn split_congruence(a: u64, b: u64, m: i64, n: i64, p: u64) -> Result<u64> {
    check_modulus(p)?;
    let w = ext_gcd(m, n)?;
    if w.g != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let pp = p as i128;
    let lhs = (m as i128 * a as i128).rem_euclid(pp);
    let rhs = (n as i128 * b as i128).rem_euclid(pp);
    if lhs != rhs {
        return Err(Error::CongruenceMismatch { a, b, m, n, p });
    }
    let c = (w.u as i128 * b as i128 + w.v as i128 * a as i128).rem_euclid(pp);
    Ok(c as u64)
}

/// Deterministic Miller–Rabin witness set, exact for every `u64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Exact primality for all `n` in the supported range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime decomposed as `p = 5k + r` with `r` in `1..=4`.
///
/// For odd `p` the parity of `k` is forced: `k = r + 1 (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeClass {
    pub p: u64,
    pub k: u64,
    pub r: u64,
}

impl PrimeClass {
    /// True when the forced parity relation holds (vacuous for `p = 2`).
    pub fn parity_consistent(&self) -> bool {
        self.p == 2 || self.k % 2 == (self.r + 1) % 2
    }
}

/// Splits a prime `p != 5` as `5k + r`.
pub fn classify_prime(p: u64) -> Result<PrimeClass> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let r = p % 5;
    if r == 0 {
        return Err(Error::FiveUnclassifiable);
    }
    Ok(PrimeClass { p, k: p / 5, r })
}

/// All primes up to and including `bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All primes `p <= bound` with `p = r (mod 5)`, ascending. Includes
/// `p = 2` for `r = 2`; hypotheses on `k` are left to individual checks.
pub fn primes_in_class(r: u64, bound: u64) -> Result<Vec<PrimeClass>> {
    if !(1..=4).contains(&r) {
        return Err(Error::ResidueClassRange(r));
    }
    Ok(primes_up_to(bound)
        .into_iter()
        .filter(|&p| p % 5 == r)
        .map(|p| PrimeClass { p, k: p / 5, r })
        .collect())
}
